use serde::Serialize;

use crate::exactlin::{basis_vector, char_poly, Matrix, Scalar, Subspace};

use super::hopf::FinHopf;

/// Exhaustive enumeration is used when `p^dim` is at most this.
pub const EXHAUSTIVE_LIMIT: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum GrouplikeSearch<S> {
    Complete { elements: Vec<Vec<S>> },
    /// Eigenvalue root finding could not be finished; `found` is a partial list.
    Incomplete { found: Vec<Vec<S>>, reason: String },
}

impl<S: Scalar> GrouplikeSearch<S> {
    pub fn complete(&self) -> Option<&[Vec<S>]> {
        match self {
            GrouplikeSearch::Complete { elements } => Some(elements),
            GrouplikeSearch::Incomplete { .. } => None,
        }
    }
}

impl<S: Scalar> FinHopf<S> {
    pub fn is_grouplike(&self, g: &[S]) -> bool {
        let n = self.dim();
        let gg: Vec<S> = (0..n * n).map(|p| g[p / n].clone() * g[p % n].clone()).collect();
        !crate::exactlin::is_zero_vec(g) && self.delta(g) == gg && self.coalgebra().counit_of(g) == S::one()
    }

    /// All group-like elements `Delta g = g (x) g`, `eps(g) = 1`.
    ///
    /// Over small prime fields every vector is tried. Otherwise group-likes are
    /// found as common eigenvectors of the operators `x -> (e_i* (x) id) Delta x`,
    /// splitting along eigenvalues that lie in the field.
    pub fn grouplikes(&self) -> GrouplikeSearch<S> {
        let n = self.dim();
        if let Some(elems) = S::elements() {
            let size = (elems.len() as u128).checked_pow(n as u32);
            if size.is_some_and(|s| s <= EXHAUSTIVE_LIMIT) {
                return GrouplikeSearch::Complete { elements: self.grouplikes_exhaustive(&elems) };
            }
        }
        let ops: Vec<Matrix<S>> = (0..n)
            .map(|i| {
                let cols: Vec<Vec<S>> = (0..n)
                    .map(|a| {
                        let mut col = vec![S::zero(); n];
                        for (x, y, c) in self.coalgebra().delta_terms(a) {
                            if *x == i {
                                col[*y] = col[*y].clone() + c.clone();
                            }
                        }
                        col
                    })
                    .collect();
                Matrix::from_columns(&cols, n).unwrap()
            })
            .collect();
        let mut found = Vec::new();
        let mut incomplete = None;
        split(self, &ops, Subspace::full(n), &mut found, &mut incomplete);
        sort_canonical(&mut found);
        match incomplete {
            None => GrouplikeSearch::Complete { elements: found },
            Some(reason) => GrouplikeSearch::Incomplete { found, reason },
        }
    }

    pub fn grouplikes_exhaustive(&self, elems: &[S]) -> Vec<Vec<S>> {
        let n = self.dim();
        let mut out = Vec::new();
        let mut idx = vec![0usize; n];
        loop {
            let v: Vec<S> = idx.iter().map(|&i| elems[i].clone()).collect();
            if self.is_grouplike(&v) {
                out.push(v);
            }
            let mut k = 0;
            while k < n {
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        sort_canonical(&mut out);
        out
    }

    /// Primitive elements `Delta x = x (x) 1 + 1 (x) x`.
    pub fn primitives(&self) -> Subspace<S> {
        let n = self.dim();
        let u = self.unit().to_vec();
        let cols: Vec<Vec<S>> = (0..n)
            .map(|k| {
                let e = basis_vector::<S>(n, k);
                let mut d = self.delta(&e);
                for i in 0..n {
                    d[k * n + i] = d[k * n + i].clone() - u[i].clone();
                    d[i * n + k] = d[i * n + k].clone() - u[i].clone();
                }
                d
            })
            .collect();
        Matrix::from_columns(&cols, n * n).unwrap().kernel()
    }
}

fn sort_canonical<S: Scalar>(v: &mut [Vec<S>]) {
    v.sort_by_cached_key(|g| {
        let lead = g.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX);
        (lead, g.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    });
}

/// Largest subspace of `w` invariant under every operator.
fn invariant_core<S: Scalar>(ops: &[Matrix<S>], mut w: Subspace<S>) -> Subspace<S> {
    loop {
        if w.dim() == 0 {
            return w;
        }
        let ann = w.annihilator();
        if ann.dim() == 0 {
            return w;
        }
        let f = Matrix::from_rows(ann.basis().to_vec(), w.ambient_dim()).unwrap();
        let mut rows = ann.basis().to_vec();
        for t in ops {
            rows.extend((&f * t).to_rows());
        }
        let next = Matrix::from_rows(rows, w.ambient_dim()).unwrap().kernel();
        if next.dim() == w.dim() {
            return next;
        }
        w = next;
    }
}

fn split<S: Scalar>(
    h: &FinHopf<S>,
    ops: &[Matrix<S>],
    w: Subspace<S>,
    found: &mut Vec<Vec<S>>,
    incomplete: &mut Option<String>,
) {
    let w = invariant_core(ops, w);
    let d = w.dim();
    if d == 0 {
        return;
    }
    let b = w.basis_matrix();
    // restrictions of each operator to w, in the canonical basis of w
    let restricted: Vec<Matrix<S>> = ops
        .iter()
        .map(|t| {
            let tb = t * &b;
            let cols: Vec<Vec<S>> = (0..d).map(|j| w.coordinates(&tb.column(j)).unwrap()).collect();
            Matrix::from_columns(&cols, d).unwrap()
        })
        .collect();
    let non_scalar = restricted.iter().position(|r| {
        let c = r.get(0, 0).clone();
        *r != Matrix::identity(d).scale(&c)
    });
    let Some(i) = non_scalar else {
        for v in w.basis() {
            let eps = h.coalgebra().counit_of(v);
            if let Some(inv) = eps.inv() {
                let g: Vec<S> = v.iter().map(|x| x.clone() * inv.clone()).collect();
                if h.is_grouplike(&g) && !found.contains(&g) {
                    found.push(g);
                }
            }
        }
        return;
    };
    let r = &restricted[i];
    let Some(roots) = S::polynomial_roots(&char_poly(r)) else {
        *incomplete = Some(format!("could not find the eigenvalues of a {d}x{d} block"));
        return;
    };
    for lambda in roots {
        let shifted = r - &Matrix::identity(d).scale(&lambda);
        let ker = shifted.kernel();
        let vs = ker.basis().iter().map(|c| b.mul_vec(c)).collect();
        let e = Subspace::span(w.ambient_dim(), vs).unwrap();
        split(h, ops, e, found, incomplete);
    }
}
