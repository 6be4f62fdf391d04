use crate::comodule::Coaction;
use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, Scalar};
use crate::modulealg::ModuleStructure;

use super::algebra::FinAlgebra;

/// The smash product `A # H` on the basis `a_i # h_j` (index `i * dim H + j`)
/// with its right coaction `a # h -> (a # h_(1)) (x) h_(2)`.
pub fn smash_product<S: Scalar>(zeta: &ModuleStructure<S>) -> Result<(FinAlgebra<S>, Coaction<S>)> {
    let report = zeta.check();
    if !report.passed() {
        return Err(Error::NotModuleAlgebra(format!("{:?}", report.failures[0])));
    }
    let a = &zeta.algebra;
    let h = &zeta.hopf;
    let (na, nh) = (a.dim(), h.dim());
    let n = na * nh;
    let a_unit = a
        .unit()
        .cloned()
        .or_else(|| a.find_unit())
        .ok_or(Error::NotUnital)?;
    let names: Vec<String> = (0..n)
        .map(|p| format!("{}#{}", a.names()[p / nh], h.names()[p % nh]))
        .collect();
    let mut unit = vec![S::zero(); n];
    for (i, ui) in a_unit.iter().enumerate() {
        for (j, hj) in h.unit().iter().enumerate() {
            unit[i * nh + j] = ui.clone() * hj.clone();
        }
    }
    // (a # h)(b # g) = a (h_(1) b) # h_(2) g
    let alg = FinAlgebra::from_fn(names, Some(unit), |p, q| {
        let (ai, hj) = (p / nh, p % nh);
        let (bi, gj) = (q / nh, q % nh);
        let mut out = vec![S::zero(); n];
        for (x, y, c) in h.coalgebra().delta_terms(hj) {
            let hb = zeta.action[*x].column(bi);
            let left = a.product(&crate::exactlin::basis_vector(na, ai), &hb);
            let right = h.algebra().basis_product(*y, gj);
            for (s, ls) in left.iter().enumerate() {
                if ls.is_zero() {
                    continue;
                }
                add_scaled(&mut out[s * nh..(s + 1) * nh], &(c.clone() * ls.clone()), right);
            }
        }
        out
    })?;
    let mut coeff = vec![vec![vec![S::zero(); nh]; n]; n];
    for alpha in 0..n {
        let (i, j) = (alpha / nh, alpha % nh);
        for (x, y, c) in h.coalgebra().delta_terms(j) {
            let beta = i * nh + x;
            coeff[beta][alpha][*y] = coeff[beta][alpha][*y].clone() + c.clone();
        }
    }
    let co = Coaction::new(alg.clone(), h.clone(), coeff)?;
    Ok((alg, co))
}
