use crate::error::{Error, Result};
use crate::exactlin::Scalar;

use super::report::{Law, Report};

/// Coalgebra with `Delta(e_k) = sum c * e_i (x) e_j` stored as sparse triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCoalgebra<S> {
    dim: usize,
    names: Vec<String>,
    delta: Vec<Vec<(usize, usize, S)>>,
    counit: Vec<S>,
}

impl<S: Scalar> FinCoalgebra<S> {
    pub fn new(names: Vec<String>, delta: Vec<Vec<(usize, usize, S)>>, counit: Vec<S>) -> Result<FinCoalgebra<S>> {
        let dim = names.len();
        if delta.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: delta.len() });
        }
        if counit.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: counit.len() });
        }
        for terms in &delta {
            for (i, j, _) in terms {
                if *i >= dim || *j >= dim {
                    return Err(Error::InvalidStructure(format!("coproduct index ({i}, {j}) out of range")));
                }
            }
        }
        let delta = delta
            .into_iter()
            .map(|terms| {
                let mut dense = vec![S::zero(); dim * dim];
                for (i, j, c) in terms {
                    dense[i * dim + j] = dense[i * dim + j].clone() + c;
                }
                sparse(&dense, dim)
            })
            .collect();
        Ok(FinCoalgebra { dim, names, delta, counit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn counit(&self) -> &[S] {
        &self.counit
    }

    pub fn delta_terms(&self, k: usize) -> &[(usize, usize, S)] {
        &self.delta[k]
    }

    /// `Delta(x)` as a dense vector indexed by `i * dim + j`.
    pub fn delta(&self, x: &[S]) -> Vec<S> {
        let n = self.dim;
        let mut out = vec![S::zero(); n * n];
        for (k, xk) in x.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            for (i, j, c) in &self.delta[k] {
                out[i * n + j] = out[i * n + j].clone() + xk.clone() * c.clone();
            }
        }
        out
    }

    pub fn counit_of(&self, x: &[S]) -> S {
        x.iter().zip(&self.counit).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn check(&self) -> Report {
        let n = self.dim;
        let mut r = Report::default();
        for k in 0..n {
            // (Delta (x) id) Delta vs (id (x) Delta) Delta, indexed (i, j, l)
            let mut left = vec![S::zero(); n * n * n];
            let mut right = vec![S::zero(); n * n * n];
            for (a, b, c) in &self.delta[k] {
                for (i, j, d) in &self.delta[*a] {
                    let idx = (i * n + j) * n + b;
                    left[idx] = left[idx].clone() + c.clone() * d.clone();
                }
                for (j, l, d) in &self.delta[*b] {
                    let idx = (a * n + j) * n + l;
                    right[idx] = right[idx].clone() + c.clone() * d.clone();
                }
            }
            if left != right {
                r.fail(Law::Coassociativity, vec![k]);
            }
            let mut l = vec![S::zero(); n];
            let mut rr = vec![S::zero(); n];
            for (a, b, c) in &self.delta[k] {
                l[*b] = l[*b].clone() + self.counit[*a].clone() * c.clone();
                rr[*a] = rr[*a].clone() + self.counit[*b].clone() * c.clone();
            }
            let mut e = vec![S::zero(); n];
            e[k] = S::one();
            if l != e || rr != e {
                r.fail(Law::Counit, vec![k]);
            }
        }
        r
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|k| {
            let mut e = vec![S::zero(); n];
            e[k] = S::one();
            let d = self.delta(&e);
            (0..n).all(|i| (0..n).all(|j| d[i * n + j] == d[j * n + i]))
        })
    }
}

pub(crate) fn sparse<S: Scalar>(dense: &[S], n: usize) -> Vec<(usize, usize, S)> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| (idx / n, idx % n, c.clone()))
        .collect()
}
