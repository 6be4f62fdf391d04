use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, Scalar};
use crate::structconst::{FinAlgebra, FinHopf, Law, Report};

/// Right coaction `rho(a_alpha) = sum_beta a_beta (x) h_{beta alpha}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction<S> {
    pub algebra: FinAlgebra<S>,
    pub hopf: FinHopf<S>,
    coeff: Vec<Vec<S>>,
}

impl<S: Scalar> Coaction<S> {
    /// `coeff[beta][alpha]` holds the coordinates of `h_{beta alpha}` in `H`.
    pub fn new(algebra: FinAlgebra<S>, hopf: FinHopf<S>, coeff: Vec<Vec<Vec<S>>>) -> Result<Coaction<S>> {
        let n = algebra.dim();
        let hd = hopf.dim();
        if coeff.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: coeff.len() });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in coeff {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for h in row {
                if h.len() != hd {
                    return Err(Error::DimensionMismatch { expected: hd, found: h.len() });
                }
                flat.push(h);
            }
        }
        Ok(Coaction { algebra, hopf, coeff: flat })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `h_{beta alpha}`.
    pub fn coefficient(&self, beta: usize, alpha: usize) -> &[S] {
        &self.coeff[beta * self.dim() + alpha]
    }

    pub fn coeff_table(&self) -> Vec<Vec<Vec<S>>> {
        let n = self.dim();
        (0..n).map(|b| (0..n).map(|a| self.coefficient(b, a).to_vec()).collect()).collect()
    }

    /// `rho(a)` as a dense vector indexed by `beta * dim H + i`.
    pub fn rho(&self, a: &[S]) -> Vec<S> {
        let n = self.dim();
        let hd = self.hopf.dim();
        let mut out = vec![S::zero(); n * hd];
        for (alpha, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for beta in 0..n {
                add_scaled(&mut out[beta * hd..(beta + 1) * hd], c, self.coefficient(beta, alpha));
            }
        }
        out
    }

    /// `sum_{r,q} k^g_{rq} h_{r alpha} h_{q beta} - sum_u k^u_{alpha beta} h_{g u}`.
    pub fn multiplicativity_defect(&self, alpha: usize, beta: usize, g: usize) -> Vec<S> {
        let n = self.dim();
        let h = self.hopf.algebra();
        let mut out = vec![S::zero(); self.hopf.dim()];
        for r in 0..n {
            for q in 0..n {
                let k = self.algebra.structure_const(r, q, g);
                if k.is_zero() {
                    continue;
                }
                let p = h.product(self.coefficient(r, alpha), self.coefficient(q, beta));
                add_scaled(&mut out, k, &p);
            }
        }
        let prod = self.algebra.basis_product(alpha, beta);
        for (u, k) in prod.iter().enumerate() {
            add_scaled(&mut out, &-k.clone(), self.coefficient(g, u));
        }
        out
    }

    pub fn check(&self) -> Report {
        let n = self.dim();
        let hd = self.hopf.dim();
        let mut r = Report::default();
        for b in 0..n {
            for a in 0..n {
                let lhs = self.hopf.delta(self.coefficient(b, a));
                let mut rhs = vec![S::zero(); hd * hd];
                for g in 0..n {
                    let x = self.coefficient(b, g);
                    let y = self.coefficient(g, a);
                    for (i, xi) in x.iter().enumerate() {
                        if xi.is_zero() {
                            continue;
                        }
                        add_scaled(&mut rhs[i * hd..(i + 1) * hd], xi, y);
                    }
                }
                if lhs != rhs {
                    r.fail(Law::ComoduleCoassociativity, vec![b, a]);
                }
                let e = self.hopf.coalgebra().counit_of(self.coefficient(b, a));
                let want = if a == b { S::one() } else { S::zero() };
                if e != want {
                    r.fail(Law::ComoduleCounit, vec![b, a]);
                }
            }
        }
        'outer: for a in 0..n {
            for b in 0..n {
                for g in 0..n {
                    if !crate::exactlin::is_zero_vec(&self.multiplicativity_defect(a, b, g)) {
                        r.fail(Law::ComoduleMultiplicative, vec![a, b, g]);
                        continue 'outer;
                    }
                }
            }
        }
        if let Some(u) = self.algebra.unit().cloned().or_else(|| self.algebra.find_unit()) {
            let one = self.hopf.unit();
            let want: Vec<S> = (0..n * hd).map(|p| u[p / hd].clone() * one[p % hd].clone()).collect();
            let ok = self.rho(&u) == want;
            if !ok {
                r.fail(Law::ComoduleUnital, vec![]);
            }
            r.unital = Some(ok);
        }
        r
    }
}
