use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::grading::Grading;
use crate::modulealg::ModuleStructure;

use super::codim::{check_budget, codim, factorial, unrank_perm, CodimConfig};
use super::poly::digits;

/// Graded codimension: for each assignment of degrees to the variables, the
/// rank of the `n!` orderings evaluated on homogeneous substitutions.
pub fn graded_codim_direct<S: Scalar>(g: &Grading<S>, n: usize, cfg: &CodimConfig) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidParams("degree must be at least 1".into()));
    }
    let k = g.group.order();
    let needed = factorial(n).and_then(|f| f.checked_mul((k as u128).checked_pow(n as u32)?));
    check_budget(&format!("graded codimension in degree {n}"), needed, cfg.budget)?;
    let d = g.algebra.dim();
    let comps: Vec<Vec<Vec<S>>> = (0..k).map(|t| g.component(t).basis().to_vec()).collect();
    let nf = factorial(n).unwrap();
    let total = (k as u128).pow(n as u32) as usize;
    let ranks: Vec<usize> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let degs = digits(idx, k, n);
            let bases: Vec<&Vec<Vec<S>>> = degs.iter().map(|&t| &comps[t]).collect();
            let sizes: Vec<usize> = bases.iter().map(|b| b.len()).collect();
            let tuples: usize = sizes.iter().product();
            if tuples == 0 {
                return 0;
            }
            let rows: Vec<Vec<S>> = (0..nf)
                .map(|r| {
                    let perm = unrank_perm(r, n);
                    let mut row = Vec::with_capacity(tuples * d);
                    for t in 0..tuples {
                        let mut rest = t;
                        let mut choice = vec![0; n];
                        for v in (0..n).rev() {
                            choice[v] = rest % sizes[v];
                            rest /= sizes[v];
                        }
                        let mut acc = bases[perm[0]][choice[perm[0]]].clone();
                        for &v in &perm[1..] {
                            acc = g.algebra.product(&acc, &bases[v][choice[v]]);
                        }
                        row.extend(acc);
                    }
                    row
                })
                .collect();
            Matrix::from_rows(rows, tuples * d).unwrap().rank()
        })
        .collect();
    Ok(ranks.into_iter().sum())
}

#[derive(Clone, Debug, Serialize)]
pub struct GradedCodimReport {
    pub n: usize,
    pub graded: usize,
    pub dual_action: usize,
    pub equal: bool,
}

/// Computes the graded codimension and the codimension of the dual action,
/// which must agree.
pub fn graded_codim<S: Scalar>(g: &Grading<S>, n: usize, cfg: &CodimConfig) -> Result<GradedCodimReport> {
    let graded = graded_codim_direct(g, n, cfg)?;
    let dual_action = codim(&g.dual_action()?, n, cfg)?;
    Ok(GradedCodimReport { n, graded, dual_action, equal: graded == dual_action })
}

#[derive(Clone, Debug, Serialize)]
pub struct CodimEquivReport {
    pub n: usize,
    pub first: usize,
    pub second: usize,
    pub equal: bool,
}

pub fn codim_equiv_check<S: Scalar>(
    z1: &ModuleStructure<S>,
    z2: &ModuleStructure<S>,
    phi: &Matrix<S>,
    n: usize,
    cfg: &CodimConfig,
) -> Result<CodimEquivReport> {
    if !z1.support_equivalent(z2, phi)?.equivalent {
        return Err(Error::Precondition("structures are not support-equivalent".into()));
    }
    let first = codim(z1, n, cfg)?;
    let second = codim(z2, n, cfg)?;
    Ok(CodimEquivReport { n, first, second, equal: first == second })
}
