use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, basis_vector, is_zero_vec, Matrix, Scalar, Subspace};

use super::report::{Law, Report};

/// Finite-dimensional algebra given by structure constants
/// `a_i a_j = sum_k mult[i][j][k] a_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra<S> {
    dim: usize,
    names: Vec<String>,
    mult: Vec<S>,
    unit: Option<Vec<S>>,
}

impl<S: Scalar> FinAlgebra<S> {
    pub fn new(names: Vec<String>, mult: Vec<Vec<Vec<S>>>, unit: Option<Vec<S>>) -> Result<FinAlgebra<S>> {
        let dim = names.len();
        if mult.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: mult.len() });
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for row in mult {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            for v in row {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
                }
                flat.extend(v);
            }
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: u.len() });
            }
        }
        Ok(FinAlgebra { dim, names, mult: flat, unit })
    }

    pub fn from_fn(names: Vec<String>, unit: Option<Vec<S>>, f: impl Fn(usize, usize) -> Vec<S>) -> Result<FinAlgebra<S>> {
        let n = names.len();
        let mult = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        FinAlgebra::new(names, mult, unit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> Option<&Vec<S>> {
        self.unit.as_ref()
    }

    pub fn with_unit(mut self, unit: Option<Vec<S>>) -> FinAlgebra<S> {
        self.unit = unit;
        self
    }

    /// Coordinates of `a_i a_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[S] {
        let n = self.dim;
        &self.mult[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn structure_const(&self, i: usize, j: usize, k: usize) -> &S {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn mult_table(&self) -> Vec<Vec<Vec<S>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn product(&self, x: &[S], y: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &(xi.clone() * yj.clone()), self.basis_product(i, j));
            }
        }
        out
    }

    pub fn left_mult(&self, x: &[S]) -> Matrix<S> {
        let cols: Vec<Vec<S>> = (0..self.dim)
            .map(|j| self.product(x, &basis_vector(self.dim, j)))
            .collect();
        Matrix::from_columns(&cols, self.dim).unwrap()
    }

    /// First triple `(i, j, k)` with `(a_i a_j) a_k != a_i (a_j a_k)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            let ei = basis_vector::<S>(n, i);
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let l = self.product(&ij, &basis_vector(n, k));
                    let r = self.product(&ei, self.basis_product(j, k));
                    if l != r {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// Solves the linear system for a two-sided unit.
    pub fn find_unit(&self) -> Option<Vec<S>> {
        let n = self.dim;
        if n == 0 {
            return None;
        }
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for b in 0..n {
            for g in 0..n {
                let target = if b == g { S::one() } else { S::zero() };
                rows.push((0..n).map(|a| self.structure_const(a, b, g).clone()).collect());
                rhs.push(target.clone());
                rows.push((0..n).map(|a| self.structure_const(b, a, g).clone()).collect());
                rhs.push(target);
            }
        }
        Matrix::from_rows(rows, n).unwrap().solve(&rhs).unwrap()
    }

    /// First basis index where the declared unit fails.
    pub fn unit_witness(&self, u: &[S]) -> Option<usize> {
        (0..self.dim).find(|&b| {
            let e = basis_vector::<S>(self.dim, b);
            self.product(u, &e) != e || self.product(&e, u) != e
        })
    }

    pub fn check(&self) -> Report {
        let mut r = Report::default();
        if let Some((i, j, k)) = self.associativity_witness() {
            r.fail(Law::Associativity, vec![i, j, k]);
        }
        match &self.unit {
            Some(u) => {
                if let Some(b) = self.unit_witness(u) {
                    r.fail(Law::UnitLaw, vec![b]);
                    r.unital = Some(false);
                } else {
                    r.unital = Some(true);
                }
            }
            None => r.unital = Some(self.find_unit().is_some()),
        }
        r
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// First pair `(i, j)` with `phi(a_i a_j) != phi(a_i) phi(a_j)`, for
    /// `phi: self -> target` given by its matrix.
    pub fn multiplicativity_witness(&self, target: &FinAlgebra<S>, phi: &Matrix<S>) -> Option<(usize, usize)> {
        let cols: Vec<Vec<S>> = (0..self.dim).map(|i| phi.column(i)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let l = phi.mul_vec(self.basis_product(i, j));
                let r = target.product(&cols[i], &cols[j]);
                if l != r {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Checks that `phi` is a unit-preserving algebra isomorphism onto `target`.
    pub fn check_isomorphism(&self, target: &FinAlgebra<S>, phi: &Matrix<S>) -> Result<Matrix<S>> {
        if phi.rows() != target.dim || phi.cols() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "isomorphism must be {}x{}, found {}x{}",
                target.dim,
                self.dim,
                phi.rows(),
                phi.cols()
            )));
        }
        let inv = phi
            .inverse()
            .ok_or_else(|| Error::NotAnIsomorphism("matrix is singular".into()))?;
        if let Some((i, j)) = self.multiplicativity_witness(target, phi) {
            return Err(Error::NotAnIsomorphism(format!(
                "not multiplicative on ({}, {})",
                self.names[i], self.names[j]
            )));
        }
        if let (Some(u), Some(v)) = (self.unit.as_ref().cloned().or_else(|| self.find_unit()), target.unit.as_ref().cloned().or_else(|| target.find_unit())) {
            if phi.mul_vec(&u) != v {
                return Err(Error::NotAnIsomorphism("unit is not preserved".into()));
            }
        }
        Ok(inv)
    }

    pub fn is_automorphism(&self, m: &Matrix<S>) -> bool {
        self.check_isomorphism(self, m).is_ok()
    }

    /// `D(a_i a_j) = D(a_i) a_j + a_i D(a_j)`.
    pub fn is_derivation(&self, d: &Matrix<S>) -> bool {
        let n = self.dim;
        let cols: Vec<Vec<S>> = (0..n).map(|i| d.column(i)).collect();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let l = d.mul_vec(self.basis_product(i, j));
                let mut r = self.product(&cols[i], &basis_vector(n, j));
                let r2 = self.product(&basis_vector(n, i), &cols[j]);
                add_scaled(&mut r, &S::one(), &r2);
                l == r
            })
        })
    }

    /// All derivations, as a subspace of row-major flattened `n x n` matrices.
    pub fn derivations(&self) -> Subspace<S> {
        let n = self.dim;
        let var = |row: usize, col: usize| row * n + col;
        let mut eqs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for g in 0..n {
                    let mut e = vec![S::zero(); n * n];
                    for b in 0..n {
                        let k = self.structure_const(i, j, b);
                        if !k.is_zero() {
                            e[var(g, b)] = e[var(g, b)].clone() + k.clone();
                        }
                        // D(a_i) a_j: sum_b D[b][i] k_{b j}^g
                        let k1 = self.structure_const(b, j, g);
                        if !k1.is_zero() {
                            e[var(b, i)] = e[var(b, i)].clone() - k1.clone();
                        }
                        let k2 = self.structure_const(i, b, g);
                        if !k2.is_zero() {
                            e[var(b, j)] = e[var(b, j)].clone() - k2.clone();
                        }
                    }
                    if !is_zero_vec(&e) {
                        eqs.push(e);
                    }
                }
            }
        }
        if eqs.is_empty() {
            return Subspace::full(n * n);
        }
        Matrix::from_rows(eqs, n * n).unwrap().kernel()
    }
}
