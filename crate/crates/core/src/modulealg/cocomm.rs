use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::structconst::FinAlgebra;

use super::action::GroupAction;
use super::structure::ModuleStructure;

pub const G0_DEFAULT_BUDGET: u128 = 1_000_000;

/// Invertible automorphisms of `A` lying in `span`.
pub fn is_g0_member<S: Scalar>(algebra: &FinAlgebra<S>, span: &Subspace<S>, m: &Matrix<S>) -> bool {
    let n = algebra.dim();
    m.rows() == n && m.cols() == n && span.contains_vector(m.as_flat()) && algebra.is_automorphism(m)
}

/// Every member over a finite field, trying all `p^d` elements of `span`.
pub fn enumerate_g0<S: Scalar>(algebra: &FinAlgebra<S>, span: &Subspace<S>, budget: u128) -> Result<Vec<Matrix<S>>> {
    let elems = S::elements().ok_or_else(|| Error::Precondition("enumeration needs a finite field".into()))?;
    let p = elems.len() as u128;
    let d = span.dim() as u32;
    let total = p.checked_pow(d).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded { what: "G0 enumeration".into(), needed: total, budget });
    }
    let n = algebra.dim();
    let mut out = Vec::new();
    let mut idx = vec![0usize; d as usize];
    loop {
        let coeffs: Vec<S> = idx.iter().map(|&i| elems[i].clone()).collect();
        let flat = crate::exactlin::lin_comb(&coeffs, span.basis(), n * n);
        let m = Matrix::from_flat(n, n, flat)?;
        if algebra.is_automorphism(&m) {
            out.push(m);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

impl<S: Scalar> GroupAction<S> {
    pub fn universal_group_member(&self, candidate: &Matrix<S>) -> bool {
        is_g0_member(&self.algebra, &self.image_span(), candidate)
    }

    pub fn enumerate_universal_group(&self, budget: u128) -> Result<Vec<Matrix<S>>> {
        enumerate_g0(&self.algebra, &self.image_span(), budget)
    }
}

#[derive(Clone, Debug, Serialize)]
pub enum G0Data<S> {
    Enumerated { elements: Vec<Matrix<S>> },
    /// Over an infinite field membership is decided per matrix.
    Oracle { span_dim: usize, test: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct CocommutativeData<S> {
    pub operator_span_dim: usize,
    pub l0_basis: Vec<Matrix<S>>,
    pub g0: G0Data<S>,
    /// For each enumerated `g`, the matrix of `D -> g D g^-1` on `l0_basis`.
    pub conjugation: Vec<Matrix<S>>,
    pub presentation: String,
    /// Characteristic zero and a cocommutative input Hopf algebra.
    pub hypotheses_hold: bool,
}

impl<S: Scalar> ModuleStructure<S> {
    pub fn g0_member(&self, candidate: &Matrix<S>) -> bool {
        is_g0_member(&self.algebra, &self.image_span(), candidate)
    }

    pub fn cocommutative_data(&self, budget: u128) -> Result<CocommutativeData<S>> {
        let n = self.algebra.dim();
        let span = self.image_span();
        let l0 = self.algebra.derivations().intersection(&span)?;
        let l0_basis: Vec<Matrix<S>> =
            l0.basis().iter().map(|v| Matrix::from_flat(n, n, v.clone()).unwrap()).collect();
        let (g0, conjugation) = match S::elements() {
            Some(_) => {
                let elements = enumerate_g0(&self.algebra, &span, budget)?;
                let mut conj = Vec::new();
                for g in &elements {
                    let g_inv = g.inverse().expect("automorphisms are invertible");
                    let cols: Vec<Vec<S>> = l0_basis
                        .iter()
                        .map(|d| {
                            let c = d.conjugate_by(g, &g_inv);
                            l0.coordinates(c.as_flat()).expect("conjugation preserves L0")
                        })
                        .collect();
                    conj.push(Matrix::from_columns(&cols, l0.dim())?);
                }
                (G0Data::Enumerated { elements }, conj)
            }
            None => (
                G0Data::Oracle {
                    span_dim: span.dim(),
                    test: "invertible, multiplicative, unit-preserving, inside the operator span".into(),
                },
                Vec::new(),
            ),
        };
        let g0_size = match &g0 {
            G0Data::Enumerated { elements } => elements.len().to_string(),
            G0Data::Oracle { .. } => "G0".into(),
        };
        let presentation = format!(
            "U(L0) # F[G0] with dim L0 = {}, |G0| = {}, G0 acting on L0 by conjugation",
            l0.dim(),
            g0_size
        );
        Ok(CocommutativeData {
            operator_span_dim: span.dim(),
            l0_basis,
            g0,
            conjugation,
            presentation,
            hypotheses_hold: S::field().characteristic() == 0 && self.hopf.is_cocommutative(),
        })
    }
}
