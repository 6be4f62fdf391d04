use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, basis_vector, Matrix, Scalar, Subspace};
use crate::structconst::{FinAlgebra, FinHopf, Law, Report};

/// A left `H`-action on `A`; `action[i]` is the matrix of `zeta(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleStructure<S> {
    pub algebra: FinAlgebra<S>,
    pub hopf: FinHopf<S>,
    pub action: Vec<Matrix<S>>,
}

impl<S: Scalar> ModuleStructure<S> {
    pub fn new(algebra: FinAlgebra<S>, hopf: FinHopf<S>, action: Vec<Matrix<S>>) -> Result<ModuleStructure<S>> {
        if action.len() != hopf.dim() {
            return Err(Error::DimensionMismatch { expected: hopf.dim(), found: action.len() });
        }
        let n = algebra.dim();
        for m in &action {
            if m.rows() != n || m.cols() != n {
                return Err(Error::ShapeMismatch(format!(
                    "action matrices must be {n}x{n}, found {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(ModuleStructure { algebra, hopf, action })
    }

    /// `zeta(h)` for an arbitrary `h` given in coordinates.
    pub fn operator(&self, h: &[S]) -> Matrix<S> {
        let n = self.algebra.dim();
        let mut acc = vec![S::zero(); n * n];
        for (c, m) in h.iter().zip(&self.action) {
            add_scaled(&mut acc, c, m.as_flat());
        }
        Matrix::from_flat(n, n, acc).unwrap()
    }

    /// `zeta(H)` as a subspace of flattened `n x n` matrices.
    pub fn image_span(&self) -> Subspace<S> {
        let n = self.algebra.dim();
        Subspace::span_of_matrices(&self.action, n, n).unwrap()
    }

    pub fn check(&self) -> Report {
        let mut r = Report::default();
        let hd = self.hopf.dim();
        let n = self.algebra.dim();
        let h = self.hopf.algebra();
        for i in 0..hd {
            for j in 0..hd {
                let lhs = self.operator(h.basis_product(i, j));
                if lhs != &self.action[i] * &self.action[j] {
                    r.fail(Law::ModuleMultiplicative, vec![i, j]);
                }
            }
        }
        if self.operator(self.hopf.unit()) != Matrix::identity(n) {
            r.fail(Law::ModuleUnit, vec![]);
        }
        let cols: Vec<Vec<Vec<S>>> = self
            .action
            .iter()
            .map(|m| (0..n).map(|a| m.column(a)).collect())
            .collect();
        'outer: for k in 0..hd {
            for a in 0..n {
                for b in 0..n {
                    let lhs = self.action[k].mul_vec(self.algebra.basis_product(a, b));
                    let mut rhs = vec![S::zero(); n];
                    for (p, q, c) in self.hopf.coalgebra().delta_terms(k) {
                        let prod = self.algebra.product(&cols[*p][a], &cols[*q][b]);
                        add_scaled(&mut rhs, c, &prod);
                    }
                    if lhs != rhs {
                        r.fail(Law::ModuleAlgebraCompatibility, vec![k, a, b]);
                        continue 'outer;
                    }
                }
            }
        }
        if let Some(u) = self.algebra.unit().cloned().or_else(|| self.algebra.find_unit()) {
            let eps = self.hopf.counit();
            let mut ok = true;
            for k in 0..hd {
                let want: Vec<S> = u.iter().map(|x| x.clone() * eps[k].clone()).collect();
                if self.action[k].mul_vec(&u) != want {
                    r.fail(Law::ModuleUnital, vec![k]);
                    ok = false;
                }
            }
            r.unital = Some(ok);
        }
        r
    }

    /// The pair `(sum (h1 a)(h2 b), sum (h2 a)(h1 b))`.
    pub fn obstruction(&self, h: &[S], a: &[S], b: &[S]) -> (Vec<S>, Vec<S>) {
        let n = self.algebra.dim();
        let mut x = vec![S::zero(); n];
        let mut y = vec![S::zero(); n];
        for (k, hk) in h.iter().enumerate() {
            if hk.is_zero() {
                continue;
            }
            for (p, q, c) in self.hopf.coalgebra().delta_terms(k) {
                let c = hk.clone() * c.clone();
                let pa = self.action[*p].mul_vec(a);
                let qb = self.action[*q].mul_vec(b);
                let qa = self.action[*q].mul_vec(a);
                let pb = self.action[*p].mul_vec(b);
                add_scaled(&mut x, &c, &self.algebra.product(&pa, &qb));
                add_scaled(&mut y, &c, &self.algebra.product(&qa, &pb));
            }
        }
        (x, y)
    }

    pub fn obstruction_basis(&self, h: usize, a: usize, b: usize) -> (Vec<S>, Vec<S>) {
        self.obstruction(
            &basis_vector(self.hopf.dim(), h),
            &basis_vector(self.algebra.dim(), a),
            &basis_vector(self.algebra.dim(), b),
        )
    }
}
