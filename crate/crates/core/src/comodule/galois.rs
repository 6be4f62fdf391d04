use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, Matrix, Scalar, Subspace};
use crate::grading::{Grading, GroupPresentation};
use crate::structconst::{FinAlgebra, FinHopf, FiniteGroup, GrouplikeSearch};

use super::coaction::Coaction;
use super::support::support_coalgebra;

/// `rho(a) = sum_g pi_g(a) (x) g` over `FG`.
pub fn grading_to_coaction<S: Scalar>(g: &Grading<S>) -> Result<Coaction<S>> {
    let projs = g.projections()?;
    let n = g.algebra.dim();
    let k = g.group.order();
    let coeff = (0..n)
        .map(|b| (0..n).map(|a| (0..k).map(|t| projs[t].get(b, a).clone()).collect()).collect())
        .collect();
    Coaction::new(g.algebra.clone(), FinHopf::group_algebra(&g.group), coeff)
}

#[derive(Clone, Debug)]
pub struct DetectedGrading<S> {
    pub grading: Grading<S>,
    /// The group-likes of `H`, indexed like the elements of `grading.group`.
    pub grouplikes: Vec<Vec<S>>,
    pub universal_group: GroupPresentation,
}

/// If `C(rho)` is spanned by group-likes, the grading of `A` by the group of
/// group-likes of `H` that `rho` comes from.
pub fn detect_grading<S: Scalar>(rho: &Coaction<S>) -> Result<Option<DetectedGrading<S>>> {
    let h = &rho.hopf;
    let gl = match h.grouplikes() {
        GrouplikeSearch::Complete { elements } => elements,
        GrouplikeSearch::Incomplete { reason, .. } => return Err(Error::SearchIncomplete(reason)),
    };
    let sc = support_coalgebra(rho)?;
    let c = sc.as_subspace();
    let inside: Vec<usize> = (0..gl.len()).filter(|&i| c.contains_vector(&gl[i])).collect();
    let span = Subspace::span(h.dim(), inside.iter().map(|&i| gl[i].clone()).collect())?;
    if span != c {
        return Ok(None);
    }
    // the group of all group-likes
    let m = gl.len();
    let pos = |v: &Vec<S>| gl.iter().position(|x| x == v);
    let mut table = vec![vec![0; m]; m];
    for i in 0..m {
        for j in 0..m {
            let p = h.algebra().product(&gl[i], &gl[j]);
            table[i][j] = pos(&p).ok_or_else(|| Error::InvalidStructure("group-likes not closed".into()))?;
        }
    }
    let identity = pos(&h.unit().to_vec()).ok_or_else(|| Error::InvalidStructure("unit is not group-like".into()))?;
    let names = gl
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let nz: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
            if nz.len() == 1 && v[nz[0]] == S::one() { h.names()[nz[0]].clone() } else { format!("g{i}") }
        })
        .collect();
    let group = FiniteGroup::new(names, table, identity)?;
    // coordinates of each coefficient in the group-like basis
    let basis = Matrix::from_columns(&inside.iter().map(|&i| gl[i].clone()).collect::<Vec<_>>(), h.dim())?;
    let n = rho.dim();
    let mut proj: Vec<Matrix<S>> = vec![Matrix::zeros(n, n); m];
    for b in 0..n {
        for a in 0..n {
            let co = basis.solve(rho.coefficient(b, a))?.expect("coefficient lies in C(rho)");
            for (t, &i) in inside.iter().enumerate() {
                proj[i].set(b, a, co[t].clone());
            }
        }
    }
    let comps = (0..m)
        .filter(|&i| !proj[i].is_zero())
        .map(|i| (i, proj[i].column_space().basis().to_vec()))
        .collect();
    let grading = Grading::new(rho.algebra.clone(), group, comps)?;
    if !grading.check().passed() {
        return Err(Error::InvalidStructure("detected decomposition is not a grading".into()));
    }
    let universal_group = grading.universal_group()?;
    Ok(Some(DetectedGrading { grading, grouplikes: gl, universal_group }))
}

#[derive(Clone, Debug, Serialize)]
pub struct CanReport<S> {
    /// Dimension of the invariants or coinvariants `B`.
    pub base_dim: usize,
    /// Dimension of `A (x)_B A`.
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
    /// The map on `A (x) A` (index `i * n + j`), before passing to the quotient.
    pub matrix: Matrix<S>,
}

impl<S> CanReport<S> {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Span of `a c (x) b - a (x) c b` over basis vectors `a, b` and `c` in `base`.
pub(crate) fn balancing_relations<S: Scalar>(a: &FinAlgebra<S>, base: &Subspace<S>) -> Subspace<S> {
    let n = a.dim();
    let mut vs = Vec::new();
    for c in base.basis() {
        for i in 0..n {
            let ac = a.product(&crate::exactlin::basis_vector(n, i), c);
            for j in 0..n {
                let cb = a.product(c, &crate::exactlin::basis_vector(n, j));
                let mut v = vec![S::zero(); n * n];
                for (t, x) in ac.iter().enumerate() {
                    v[t * n + j] = v[t * n + j].clone() + x.clone();
                }
                for (t, x) in cb.iter().enumerate() {
                    v[i * n + t] = v[i * n + t].clone() - x.clone();
                }
                if !is_zero_vec(&v) {
                    vs.push(v);
                }
            }
        }
    }
    Subspace::span(n * n, vs).unwrap()
}

pub(crate) fn finish_can<S: Scalar>(matrix: Matrix<S>, base: Subspace<S>, a: &FinAlgebra<S>) -> Result<CanReport<S>> {
    let n = a.dim();
    let rel = balancing_relations(a, &base);
    if rel.basis().iter().any(|v| !is_zero_vec(&matrix.mul_vec(v))) {
        return Err(Error::InvalidStructure("canonical map does not vanish on balancing relations".into()));
    }
    let source_dim = n * n - rel.dim();
    let rank = matrix.rank();
    Ok(CanReport {
        base_dim: base.dim(),
        source_dim,
        target_dim: matrix.rows(),
        rank,
        injective: rank == source_dim,
        surjective: rank == matrix.rows(),
        matrix,
    })
}

/// `can(a (x) b) = a b_(0) (x) b_(1)` on `A (x)_{A^coH} A -> A (x) H`.
pub fn can_map<S: Scalar>(rho: &Coaction<S>) -> Result<CanReport<S>> {
    let report = rho.check();
    if !report.passed() {
        return Err(Error::InvalidStructure(format!("not a comodule algebra: {:?}", report.failures[0])));
    }
    if report.unital != Some(true) {
        return Err(Error::NotUnital);
    }
    let a = &rho.algebra;
    let n = a.dim();
    let hd = rho.hopf.dim();
    // coinvariants: rho(x) - x (x) 1 = 0
    let one = rho.hopf.unit();
    let cols: Vec<Vec<S>> = (0..n)
        .map(|alpha| {
            let mut v = rho.rho(&crate::exactlin::basis_vector(n, alpha));
            for (i, o) in one.iter().enumerate() {
                v[alpha * hd + i] = v[alpha * hd + i].clone() - o.clone();
            }
            v
        })
        .collect();
    let base = Matrix::from_columns(&cols, n * hd)?.kernel();
    let cols: Vec<Vec<S>> = (0..n * n)
        .map(|p| {
            let (i, j) = (p / n, p % n);
            let mut v = vec![S::zero(); n * hd];
            for beta in 0..n {
                let h = rho.coefficient(beta, j);
                if is_zero_vec(h) {
                    continue;
                }
                for (t, k) in a.basis_product(i, beta).iter().enumerate() {
                    if !k.is_zero() {
                        crate::exactlin::add_scaled(&mut v[t * hd..(t + 1) * hd], k, h);
                    }
                }
            }
            v
        })
        .collect();
    let matrix = Matrix::from_columns(&cols, n * hd)?;
    finish_can(matrix, base, a)
}
