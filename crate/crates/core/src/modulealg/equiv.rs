use serde::Serialize;

use crate::comodule::{induced_dual_module, Coaction};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, RowReducer, Scalar, Subspace};

use super::structure::ModuleStructure;

#[derive(Clone, Debug, Serialize)]
pub struct UnitalEigenReport<S> {
    pub common_eigenvector: bool,
    /// `lambda(e_k)` with `zeta(e_k) 1 = lambda(e_k) 1`.
    pub functional: Option<Vec<S>>,
    pub matches_counit: Option<bool>,
    /// `1` is a common eigenvector but the functional differs from the counit,
    /// which cannot happen for a module algebra.
    pub contradiction: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleEquivalence<S> {
    pub equivalent: bool,
    /// For each chosen `h` in `H1` (basis index), an element of `H2` acting
    /// as `phi zeta1(h) phi^-1`; these give the isomorphism of the images.
    pub lambda: Option<Vec<(usize, Vec<S>)>>,
}

impl<S: Scalar> ModuleStructure<S> {
    pub fn check_unital_eigen(&self) -> Result<UnitalEigenReport<S>> {
        let u = self.algebra.unit().cloned().or_else(|| self.algebra.find_unit()).ok_or(Error::NotUnital)?;
        let b = u.iter().position(|x| !x.is_zero()).ok_or(Error::NotUnital)?;
        let ub_inv = u[b].inv().unwrap();
        let mut functional = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let image = m.mul_vec(&u);
            let l = image[b].clone() * ub_inv.clone();
            if image.iter().zip(&u).any(|(x, y)| *x != l.clone() * y.clone()) {
                return Ok(UnitalEigenReport {
                    common_eigenvector: false,
                    functional: None,
                    matches_counit: None,
                    contradiction: false,
                });
            }
            functional.push(l);
        }
        let matches = functional.as_slice() == self.hopf.counit();
        Ok(UnitalEigenReport {
            common_eigenvector: true,
            functional: Some(functional),
            matches_counit: Some(matches),
            contradiction: !matches,
        })
    }

    /// Support equivalence along `phi: A1 -> A2`: `phi zeta1(H1) phi^-1 = zeta2(H2)`.
    pub fn support_equivalent(&self, other: &ModuleStructure<S>, phi: &Matrix<S>) -> Result<ModuleEquivalence<S>> {
        let phi_inv = self.algebra.check_isomorphism(&other.algebra, phi)?;
        let n = other.algebra.dim();
        let conj: Vec<Matrix<S>> = self.action.iter().map(|m| m.conjugate_by(phi, &phi_inv)).collect();
        let span1 = Subspace::span_of_matrices(&conj, n, n)?;
        let span2 = other.image_span();
        if span1 != span2 {
            return Ok(ModuleEquivalence { equivalent: false, lambda: None });
        }
        let flat2: Vec<Vec<S>> = other.action.iter().map(|m| m.as_flat().to_vec()).collect();
        let solver = Matrix::from_columns(&flat2, n * n)?;
        let mut red = RowReducer::new(n * n);
        let mut lambda = Vec::new();
        for (i, m) in conj.iter().enumerate() {
            if red.insert(m.as_flat().to_vec()) {
                let h2 = solver.solve(m.as_flat())?.expect("spans are equal");
                lambda.push((i, h2));
            }
        }
        Ok(ModuleEquivalence { equivalent: true, lambda: Some(lambda) })
    }

    /// `zeta2(H2) ⊆ zeta1(H1)` on the same algebra.
    pub fn finer_than(&self, other: &ModuleStructure<S>) -> Result<bool> {
        if self.algebra != other.algebra {
            return Err(Error::Precondition("module structures are on different algebras".into()));
        }
        self.image_span().contains(&other.image_span())
    }

    /// The `H*`-comodule algebra with `rho(a) = sum_i e_i a (x) e_i*`.
    pub fn to_coaction(&self) -> Coaction<S> {
        let n = self.algebra.dim();
        let coeff = (0..n)
            .map(|b| (0..n).map(|a| self.action.iter().map(|m| m.get(b, a).clone()).collect()).collect())
            .collect();
        Coaction::new(self.algebra.clone(), self.hopf.dual(), coeff).expect("shapes agree")
    }

    pub fn from_coaction(rho: &Coaction<S>) -> ModuleStructure<S> {
        induced_dual_module(rho)
    }

    /// First basis triple `(h, a, b)` where `(h1 a)(h2 b) != (h2 a)(h1 b)`.
    pub fn cocommutativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.algebra.dim();
        for h in 0..self.hopf.dim() {
            for a in 0..n {
                for b in 0..n {
                    let (x, y) = self.obstruction_basis(h, a, b);
                    if x != y {
                        return Some((h, a, b));
                    }
                }
            }
        }
        None
    }
}
