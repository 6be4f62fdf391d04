use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};

use super::structure::ModuleStructure;

#[derive(Clone, Debug, Serialize)]
pub struct DualNumbersClass<S> {
    pub case: u8,
    /// Columns `1, x` with `x^2 = 0`.
    pub adapted_basis: Matrix<S>,
    pub alpha: Vec<S>,
    pub beta: Vec<S>,
    pub span: &'static str,
}

/// A basis `(1, x)` with `x^2 = 0`, if `A` is isomorphic to `F[x]/(x^2)`.
pub fn dual_numbers_basis<S: Scalar>(a: &crate::structconst::FinAlgebra<S>) -> Result<Matrix<S>> {
    if a.dim() != 2 {
        return Err(Error::Precondition(format!("expected a 2-dimensional algebra, found dimension {}", a.dim())));
    }
    if S::field().characteristic() == 2 {
        return Err(Error::Precondition("characteristic 2 is excluded".into()));
    }
    let u = a.unit().cloned().or_else(|| a.find_unit()).ok_or(Error::NotUnital)?;
    let i = (0..2)
        .find(|&i| Matrix::from_columns(&[u.clone(), crate::exactlin::basis_vector(2, i)], 2).unwrap().is_invertible())
        .unwrap();
    let y = crate::exactlin::basis_vector::<S>(2, i);
    // y^2 = c0 1 + c1 y; x = y - c1/2 squares to c0 + c1^2/4
    let basis = Matrix::from_columns(&[u.clone(), y.clone()], 2)?;
    let c = basis.solve(&a.product(&y, &y))?.unwrap();
    let half = S::from_i64(2).inv().unwrap();
    let shift = c[1].clone() * half;
    let x: Vec<S> = y.iter().zip(&u).map(|(yi, ui)| yi.clone() - shift.clone() * ui.clone()).collect();
    if !crate::exactlin::is_zero_vec(&a.product(&x, &x)) {
        return Err(Error::Precondition("the radical does not square to zero".into()));
    }
    Matrix::from_columns(&[u, x], 2)
}

impl<S: Scalar> ModuleStructure<S> {
    pub fn classify_dual_numbers(&self) -> Result<DualNumbersClass<S>> {
        let p = dual_numbers_basis(&self.algebra)?;
        let report = self.check();
        if !report.passed() || report.unital != Some(true) {
            return Err(Error::Precondition("expected a unital module algebra structure".into()));
        }
        let p_inv = p.inverse().unwrap();
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        for m in &self.action {
            let t = &(&p_inv * m) * &p;
            debug_assert!(t.get(1, 0).is_zero());
            beta.push(t.get(0, 1).clone());
            alpha.push(t.get(1, 1).clone());
        }
        let eps = self.hopf.counit().to_vec();
        let (case, span) = if self.image_span().dim() == 3 {
            (3, "upper-triangular")
        } else if !Subspace::span(eps.len(), vec![eps.clone()])?.contains_vector(&alpha) {
            (2, "diagonal")
        } else {
            (1, "scalars")
        };
        Ok(DualNumbersClass { case, adapted_basis: p, alpha, beta, span })
    }
}
