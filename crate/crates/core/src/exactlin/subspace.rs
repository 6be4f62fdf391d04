use serde::Serialize;

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A subspace of `F^n`, stored as the nonzero rows of its reduced row
/// echelon form. Two subspaces are equal exactly when these bases agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace<S> {
    ambient_dim: usize,
    basis: Vec<Vec<S>>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<S>>) -> Result<Subspace<S>> {
        for v in &vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
            }
        }
        let m = Matrix::from_rows(vectors, ambient_dim)?;
        let r = m.rref();
        let basis = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Ok(Subspace { ambient_dim, basis, pivots: r.pivots })
    }

    pub fn zero(ambient_dim: usize) -> Subspace<S> {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Subspace<S> {
        let basis = (0..ambient_dim)
            .map(|i| (0..ambient_dim).map(|j| if i == j { S::one() } else { S::zero() }).collect())
            .collect();
        Subspace { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    pub fn span_of_matrices(mats: &[Matrix<S>], rows: usize, cols: usize) -> Result<Subspace<S>> {
        let mut vs = Vec::with_capacity(mats.len());
        for m in mats {
            if m.rows() != rows || m.cols() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "expected {rows}x{cols}, found {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
            vs.push(m.as_flat().to_vec());
        }
        Subspace::span(rows * cols, vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vec<S> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rest.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r = r.clone() - c.clone() * x.clone();
                }
            }
        }
        rest.iter().all(|x| x.is_zero()).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[S]) -> bool {
        self.coordinates(v).is_some()
    }

    fn same_ambient(&self, other: &Subspace<S>) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Whether `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace<S>) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Subspace<S>) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.basis == other.basis)
    }

    pub fn sum(&self, other: &Subspace<S>) -> Result<Subspace<S>> {
        self.same_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, vs)
    }

    pub fn intersection(&self, other: &Subspace<S>) -> Result<Subspace<S>> {
        self.same_ambient(other)?;
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // x = sum s_i u_i = sum t_j w_j  <=>  [U^T | -W^T] (s, t) = 0
        let n = self.ambient_dim;
        let m = Matrix::from_fn(n, a + b, |i, j| {
            if j < a { self.basis[j][i].clone() } else { -other.basis[j - a][i].clone() }
        });
        let k = m.kernel();
        let vs = k
            .basis
            .iter()
            .map(|st| {
                let mut v = vec![S::zero(); n];
                for (j, s) in st.iter().take(a).enumerate() {
                    if !s.is_zero() {
                        for (x, u) in v.iter_mut().zip(&self.basis[j]) {
                            *x = x.clone() + s.clone() * u.clone();
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::span(n, vs)
    }

    /// `{f : f . v = 0 for all v in self}`.
    pub fn annihilator(&self) -> Subspace<S> {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient_dim);
        }
        Matrix::from_rows(self.basis.clone(), self.ambient_dim).unwrap().kernel()
    }

    /// Basis vectors as columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<S> {
        Matrix::from_columns(&self.basis, self.ambient_dim).unwrap()
    }

    /// Image under a linear map given as an `m x ambient` matrix.
    pub fn image(&self, map: &Matrix<S>) -> Result<Subspace<S>> {
        if map.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: map.cols() });
        }
        let vs = self.basis.iter().map(|v| map.mul_vec(v)).collect();
        Subspace::span(map.rows(), vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, vec![v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]).unwrap();
        assert_eq!(a, b);
        assert!(a.equals(&b).unwrap());
        assert!(a.contains_vector(&v(&[3, 5, 2])));
        assert!(!a.contains_vector(&v(&[1, 0, 0])));
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(i, Subspace::span(3, vec![v(&[0, 1, 0])]).unwrap());
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(3));
        assert!(a.contains(&i).unwrap());
        let c: Subspace<Rational> = Subspace::zero(2);
        assert!(a.contains(&c).is_err());
    }

    #[test]
    fn coordinates_rebuild() {
        let a = Subspace::span(3, vec![v(&[2, 4, 0]), v(&[0, 3, 3])]).unwrap();
        let x = v(&[1, 5, 3]);
        let c = a.coordinates(&x).unwrap();
        let mut rebuilt = v(&[0, 0, 0]);
        for (ci, b) in c.iter().zip(a.basis()) {
            for (r, bi) in rebuilt.iter_mut().zip(b) {
                *r = r.clone() + ci.clone() * bi.clone();
            }
        }
        assert_eq!(rebuilt, x);
    }
}
