use crate::comodule::{finish_can, CanReport};
use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, Matrix, Scalar};
use crate::structconst::FinHopf;

use super::structure::ModuleStructure;

/// `(zeta(h) lambda)(t) = lambda(t h)` on the algebra `H*`.
pub fn regular_action_on_dual<S: Scalar>(h: &FinHopf<S>) -> ModuleStructure<S> {
    let n = h.dim();
    let alg = h.algebra();
    let action = (0..n)
        .map(|j| Matrix::from_fn(n, n, |t, k| alg.structure_const(t, j, k).clone()))
        .collect();
    ModuleStructure::new(h.dual().algebra().clone(), h.clone(), action).unwrap()
}

impl<S: Scalar> ModuleStructure<S> {
    /// `ker zeta` inside `H`.
    pub fn kernel_dim(&self) -> usize {
        let n = self.algebra.dim();
        let cols: Vec<Vec<S>> = self.action.iter().map(|m| m.as_flat().to_vec()).collect();
        Matrix::from_columns(&cols, n * n).unwrap().kernel().dim()
    }

    /// `can(a (x) b)(h) = a (h b)` on `A (x)_{A^H} A -> Hom(H, A)`, the
    /// target indexed `k * dim A + t` for `e_k* (x) a_t`.
    pub fn can_map(&self) -> Result<CanReport<S>> {
        let a = &self.algebra;
        a.unit().cloned().or_else(|| a.find_unit()).ok_or(Error::NotUnital)?;
        let n = a.dim();
        let hd = self.hopf.dim();
        let eps = self.hopf.counit();
        let mut rows = Vec::new();
        for (k, m) in self.action.iter().enumerate() {
            for r in 0..n {
                let mut row = m.row(r).to_vec();
                row[r] = row[r].clone() - eps[k].clone();
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
        let base = if rows.is_empty() {
            crate::exactlin::Subspace::full(n)
        } else {
            Matrix::from_rows(rows, n)?.kernel()
        };
        let cols: Vec<Vec<S>> = (0..n * n)
            .map(|p| {
                let (i, j) = (p / n, p % n);
                let mut v = vec![S::zero(); hd * n];
                for (k, m) in self.action.iter().enumerate() {
                    let hb = m.column(j);
                    let prod = a.product(&crate::exactlin::basis_vector(n, i), &hb);
                    v[k * n..(k + 1) * n].clone_from_slice(&prod);
                }
                v
            })
            .collect();
        let matrix = Matrix::from_columns(&cols, hd * n)?;
        finish_can(matrix, base, a)
    }
}
