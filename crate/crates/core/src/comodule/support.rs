use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, RowReducer, Scalar, Subspace};
use crate::modulealg::ModuleStructure;
use crate::structconst::FinCoalgebra;

use super::coaction::Coaction;

/// `C(rho) = span{h_{alpha beta}}` with the basis of coefficients chosen in
/// lexicographic `(alpha, beta)` order.
#[derive(Clone, Debug)]
pub struct SupportCoalgebra<S> {
    /// `(alpha, beta)` of each chosen basis coefficient.
    pub generators: Vec<(usize, usize)>,
    /// Coordinates of every `h_{alpha beta}` in the chosen basis, indexed `alpha * n + beta`.
    pub coordinates: Vec<Vec<S>>,
    pub coalgebra: FinCoalgebra<S>,
    /// `dim H x dim C`; column `j` is the `j`-th basis element inside `H`.
    pub inclusion: Matrix<S>,
}

impl<S: Scalar> SupportCoalgebra<S> {
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn as_subspace(&self) -> Subspace<S> {
        self.inclusion.column_space()
    }
}

/// Linear dependencies among the coefficients: `{c : sum c_{ab} h_{ab} = 0}`,
/// indexed `alpha * n + beta`.
pub fn coefficient_dependencies<S: Scalar>(rho: &Coaction<S>) -> Subspace<S> {
    let n = rho.dim();
    let cols: Vec<Vec<S>> = (0..n * n).map(|p| rho.coefficient(p / n, p % n).to_vec()).collect();
    Matrix::from_columns(&cols, rho.hopf.dim()).unwrap().kernel()
}

pub fn support_coalgebra<S: Scalar>(rho: &Coaction<S>) -> Result<SupportCoalgebra<S>> {
    let n = rho.dim();
    let hd = rho.hopf.dim();
    let mut red = RowReducer::new(hd);
    let mut generators = Vec::new();
    let mut vecs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let h = rho.coefficient(a, b);
            if red.insert(h.to_vec()) {
                generators.push((a, b));
                vecs.push(h.to_vec());
            }
        }
    }
    let d = generators.len();
    let inclusion = Matrix::from_columns(&vecs, hd)?;
    let coordinates: Vec<Vec<S>> = (0..n * n)
        .map(|p| {
            if d == 0 {
                Ok(Vec::new())
            } else {
                inclusion
                    .solve(rho.coefficient(p / n, p % n))?
                    .ok_or_else(|| Error::InvalidStructure("coefficient outside its own span".into()))
            }
        })
        .collect::<Result<_>>()?;
    let mut delta = Vec::with_capacity(d);
    let mut counit = Vec::with_capacity(d);
    for &(a, b) in &generators {
        let mut dense = vec![S::zero(); d * d];
        for g in 0..n {
            let x = &coordinates[a * n + g];
            let y = &coordinates[g * n + b];
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for (j, yj) in y.iter().enumerate() {
                    if !yj.is_zero() {
                        dense[i * d + j] = dense[i * d + j].clone() + xi.clone() * yj.clone();
                    }
                }
            }
        }
        delta.push(crate::structconst::coalgebra_sparse(&dense, d));
        counit.push(rho.hopf.coalgebra().counit_of(rho.coefficient(a, b)));
    }
    let names = generators.iter().map(|(a, b)| format!("h{}{}", a + 1, b + 1)).collect();
    let coalgebra = FinCoalgebra::new(names, delta, counit)?;
    Ok(SupportCoalgebra { generators, coordinates, coalgebra, inclusion })
}

/// The `H*`-action `zeta(f) a = f(a_(1)) a_(0)`.
pub fn induced_dual_module<S: Scalar>(rho: &Coaction<S>) -> ModuleStructure<S> {
    let n = rho.dim();
    let hd = rho.hopf.dim();
    let action = (0..hd)
        .map(|i| Matrix::from_fn(n, n, |b, a| rho.coefficient(b, a)[i].clone()))
        .collect();
    ModuleStructure::new(rho.algebra.clone(), rho.hopf.dual(), action).unwrap()
}

/// A coalgebra map `C(rho1) -> C(rho2)`, given on the chosen basis of `C(rho1)`.
#[derive(Clone, Debug, Serialize)]
pub struct CoalgebraMap<S> {
    pub source_generators: Vec<(usize, usize)>,
    /// Images in `H2` coordinates, one per source generator.
    pub images: Vec<Vec<S>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComoduleEquivalence<S> {
    pub equivalent: bool,
    pub tau: Option<CoalgebraMap<S>>,
    /// A dependency `sum c_{ab} h_{ab} = 0` holding on one side only.
    pub separating_dependency: Option<Vec<S>>,
}

/// `rho2` rewritten in the basis `phi(a_alpha)`.
fn transport<S: Scalar>(rho2: &Coaction<S>, phi: &Matrix<S>, phi_inv: &Matrix<S>) -> Vec<Vec<S>> {
    let n = rho2.dim();
    let hd = rho2.hopf.dim();
    let mut out = vec![vec![S::zero(); hd]; n * n];
    for b in 0..n {
        for a in 0..n {
            let acc = &mut out[b * n + a];
            for g in 0..n {
                let l = phi_inv.get(b, g);
                if l.is_zero() {
                    continue;
                }
                for d in 0..n {
                    let r = phi.get(d, a);
                    if !r.is_zero() {
                        crate::exactlin::add_scaled(acc, &(l.clone() * r.clone()), rho2.coefficient(g, d));
                    }
                }
            }
        }
    }
    out
}

fn deps_of<S: Scalar>(coeffs: &[Vec<S>], hd: usize) -> Subspace<S> {
    Matrix::from_columns(coeffs, hd).unwrap().kernel()
}

fn tau_from<S: Scalar>(rho1: &Coaction<S>, transported: &[Vec<S>]) -> Result<CoalgebraMap<S>> {
    let sc = support_coalgebra(rho1)?;
    let n = rho1.dim();
    Ok(CoalgebraMap {
        images: sc.generators.iter().map(|&(a, b)| transported[a * n + b].clone()).collect(),
        source_generators: sc.generators,
    })
}

fn dual_span_conj<S: Scalar>(rho: &Coaction<S>, phi: &Matrix<S>, phi_inv: &Matrix<S>) -> Subspace<S> {
    let n = rho.dim();
    let m = induced_dual_module(rho);
    let conj: Vec<Matrix<S>> = m.action.iter().map(|x| x.conjugate_by(phi, phi_inv)).collect();
    Subspace::span_of_matrices(&conj, n, n).unwrap()
}

/// Equivalence along `phi: A1 -> A2`, decided by comparing linear
/// dependencies among the coefficients and cross-checked against the spans
/// of the induced dual actions.
pub fn support_equivalent<S: Scalar>(rho1: &Coaction<S>, rho2: &Coaction<S>, phi: &Matrix<S>) -> Result<ComoduleEquivalence<S>> {
    let phi_inv = rho1.algebra.check_isomorphism(&rho2.algebra, phi)?;
    let t = transport(rho2, phi, &phi_inv);
    let k1 = coefficient_dependencies(rho1);
    let k2 = deps_of(&t, rho2.hopf.dim());
    let equivalent = k1 == k2;
    let by_span = dual_span_conj(rho1, phi, &phi_inv) == induced_dual_module(rho2).image_span();
    if by_span != equivalent {
        return Err(Error::InvalidStructure("dependency and span tests disagree".into()));
    }
    let separating = if equivalent {
        None
    } else {
        k1.basis()
            .iter()
            .find(|v| !k2.contains_vector(v))
            .or_else(|| k2.basis().iter().find(|v| !k1.contains_vector(v)))
            .cloned()
    };
    Ok(ComoduleEquivalence {
        equivalent,
        tau: if equivalent { Some(tau_from(rho1, &t)?) } else { None },
        separating_dependency: separating,
    })
}

/// A coalgebra map `tau: C(rho1) -> C(rho2)` with `rho2 = (id (x) tau) rho1`,
/// when one exists (both coactions on the same algebra).
pub fn coarser_morphism<S: Scalar>(rho1: &Coaction<S>, rho2: &Coaction<S>) -> Result<Option<CoalgebraMap<S>>> {
    if rho1.algebra != rho2.algebra {
        return Err(Error::Precondition("coactions are on different algebras".into()));
    }
    let n = rho1.dim();
    let t: Vec<Vec<S>> = (0..n * n).map(|p| rho2.coefficient(p / n, p % n).to_vec()).collect();
    let k1 = coefficient_dependencies(rho1);
    let k2 = coefficient_dependencies(rho2);
    let exists = k2.contains(&k1)?;
    let by_span = induced_dual_module(rho1).image_span().contains(&induced_dual_module(rho2).image_span())?;
    if exists != by_span {
        return Err(Error::InvalidStructure("dependency and span tests disagree".into()));
    }
    if exists {
        Ok(Some(tau_from(rho1, &t)?))
    } else {
        Ok(None)
    }
}

/// Checks that `tau` is a coalgebra map into `rho2`'s Hopf algebra.
pub fn is_coalgebra_map<S: Scalar>(rho1: &Coaction<S>, rho2: &Coaction<S>, tau: &CoalgebraMap<S>) -> Result<bool> {
    let sc = support_coalgebra(rho1)?;
    let h2 = &rho2.hopf;
    for (j, img) in tau.images.iter().enumerate() {
        // Delta2(tau(c_j)) vs (tau (x) tau) Delta1(c_j)
        let lhs = h2.delta(img);
        let mut rhs = vec![S::zero(); h2.dim() * h2.dim()];
        for (p, q, c) in sc.coalgebra.delta_terms(j) {
            let (x, y) = (&tau.images[*p], &tau.images[*q]);
            for (i, xi) in x.iter().enumerate() {
                if !xi.is_zero() {
                    crate::exactlin::add_scaled(&mut rhs[i * h2.dim()..(i + 1) * h2.dim()], &(c.clone() * xi.clone()), y);
                }
            }
        }
        if lhs != rhs || h2.coalgebra().counit_of(img) != sc.coalgebra.counit()[j] {
            return Ok(false);
        }
    }
    Ok(true)
}
