use crate::error::{Error, Result};
use crate::exactlin::{basis_vector, Matrix, Scalar};

use super::algebra::FinAlgebra;
use super::coalgebra::FinCoalgebra;
use super::group::FiniteGroup;
use super::report::{Law, Report};

/// Finite-dimensional Hopf algebra. Column `j` of `antipode` is `S(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinHopf<S> {
    algebra: FinAlgebra<S>,
    coalgebra: FinCoalgebra<S>,
    antipode: Matrix<S>,
}

impl<S: Scalar> FinHopf<S> {
    pub fn new(algebra: FinAlgebra<S>, coalgebra: FinCoalgebra<S>, antipode: Matrix<S>) -> Result<FinHopf<S>> {
        let n = algebra.dim();
        if coalgebra.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: coalgebra.dim() });
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::ShapeMismatch(format!("antipode must be {n}x{n}")));
        }
        if algebra.unit().is_none() {
            return Err(Error::InvalidStructure("a Hopf algebra needs a declared unit".into()));
        }
        Ok(FinHopf { algebra, coalgebra, antipode })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn names(&self) -> &[String] {
        self.algebra.names()
    }

    pub fn algebra(&self) -> &FinAlgebra<S> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &FinCoalgebra<S> {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &Matrix<S> {
        &self.antipode
    }

    pub fn unit(&self) -> &[S] {
        self.algebra.unit().unwrap()
    }

    pub fn counit(&self) -> &[S] {
        self.coalgebra.counit()
    }

    pub fn delta(&self, x: &[S]) -> Vec<S> {
        self.coalgebra.delta(x)
    }

    /// Index of the unit when it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.unit();
        (0..self.dim()).find(|&i| *u == basis_vector::<S>(self.dim(), i)[..])
    }

    /// Product in `H (x) H` of two dense tensors.
    pub fn tensor_product(&self, x: &[S], y: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out = vec![S::zero(); n * n];
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            for (q, yq) in y.iter().enumerate() {
                if yq.is_zero() {
                    continue;
                }
                let c = xp.clone() * yq.clone();
                let l = self.algebra.basis_product(p / n, q / n);
                let r = self.algebra.basis_product(p % n, q % n);
                for (a, la) in l.iter().enumerate() {
                    if la.is_zero() {
                        continue;
                    }
                    for (b, rb) in r.iter().enumerate() {
                        if !rb.is_zero() {
                            out[a * n + b] = out[a * n + b].clone() + c.clone() * la.clone() * rb.clone();
                        }
                    }
                }
            }
        }
        out
    }

    pub fn check(&self) -> Report {
        let n = self.dim();
        let mut r = self.algebra.check();
        r.merge(self.coalgebra.check());
        let e: Vec<Vec<S>> = (0..n).map(|i| basis_vector(n, i)).collect();
        let deltas: Vec<Vec<S>> = e.iter().map(|x| self.delta(x)).collect();
        let eps = self.counit();
        for i in 0..n {
            for j in 0..n {
                let prod = self.algebra.basis_product(i, j);
                if self.delta(prod) != self.tensor_product(&deltas[i], &deltas[j]) {
                    r.fail(Law::DeltaMultiplicative, vec![i, j]);
                }
                if self.coalgebra.counit_of(prod) != eps[i].clone() * eps[j].clone() {
                    r.fail(Law::CounitMultiplicative, vec![i, j]);
                }
            }
        }
        let u = self.unit().to_vec();
        let uu: Vec<S> = (0..n * n).map(|p| u[p / n].clone() * u[p % n].clone()).collect();
        if self.delta(&u) != uu {
            r.fail(Law::DeltaUnit, vec![]);
        }
        if !(self.coalgebra.counit_of(&u) - S::one()).is_zero() {
            r.fail(Law::CounitUnit, vec![]);
        }
        for k in 0..n {
            let target: Vec<S> = u.iter().map(|x| x.clone() * eps[k].clone()).collect();
            let mut left = vec![S::zero(); n];
            let mut right = vec![S::zero(); n];
            for (a, b, c) in self.coalgebra.delta_terms(k) {
                let sa = self.antipode.column(*a);
                let sb = self.antipode.column(*b);
                let l = self.algebra.product(&sa, &e[*b]);
                let rr = self.algebra.product(&e[*a], &sb);
                crate::exactlin::add_scaled(&mut left, c, &l);
                crate::exactlin::add_scaled(&mut right, c, &rr);
            }
            if left != target {
                r.fail(Law::AntipodeLeft, vec![k]);
            }
            if right != target {
                r.fail(Law::AntipodeRight, vec![k]);
            }
        }
        r
    }

    /// The dual Hopf algebra on the dual basis `e_i*`.
    pub fn dual(&self) -> FinHopf<S> {
        let n = self.dim();
        let names: Vec<String> = self.names().iter().map(|s| dual_name(s)).collect();
        let mult = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| {
                                self.coalgebra
                                    .delta_terms(k)
                                    .iter()
                                    .filter(|(a, b, _)| *a == i && *b == j)
                                    .fold(S::zero(), |acc, (_, _, c)| acc + c.clone())
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let algebra = FinAlgebra::new(names.clone(), mult, Some(self.counit().to_vec())).unwrap();
        let delta = (0..n)
            .map(|k| {
                let mut t = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        let c = self.algebra.structure_const(i, j, k);
                        if !c.is_zero() {
                            t.push((i, j, c.clone()));
                        }
                    }
                }
                t
            })
            .collect();
        let coalgebra = FinCoalgebra::new(names, delta, self.unit().to_vec()).unwrap();
        FinHopf { algebra, coalgebra, antipode: self.antipode.transpose() }
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    /// The group algebra `FG` with `Delta g = g (x) g`.
    pub fn group_algebra(g: &FiniteGroup) -> FinHopf<S> {
        let n = g.order();
        let algebra = FinAlgebra::from_fn(g.names.clone(), Some(basis_vector(n, g.identity)), |a, b| {
            basis_vector(n, g.mul(a, b))
        })
        .unwrap();
        let delta = (0..n).map(|a| vec![(a, a, S::one())]).collect();
        let coalgebra = FinCoalgebra::new(g.names.clone(), delta, vec![S::one(); n]).unwrap();
        let antipode = Matrix::from_fn(n, n, |i, j| if i == g.inverse(j) { S::one() } else { S::zero() });
        FinHopf { algebra, coalgebra, antipode }
    }

    /// `(FG)*` on the basis `h_g` of point functionals.
    pub fn dual_group_algebra(g: &FiniteGroup) -> FinHopf<S> {
        let mut h = FinHopf::group_algebra(g).dual();
        let names: Vec<String> = g.names.iter().map(|s| format!("h_{s}")).collect();
        h.algebra = FinAlgebra::new(names.clone(), h.algebra.mult_table(), h.algebra.unit().cloned()).unwrap();
        h.coalgebra = FinCoalgebra::new(
            names,
            (0..g.order()).map(|k| h.coalgebra.delta_terms(k).to_vec()).collect(),
            h.coalgebra.counit().to_vec(),
        )
        .unwrap();
        h
    }
}

fn dual_name(s: &str) -> String {
    match s.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{s}*"),
    }
}
