use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::modulealg::{dual_numbers_basis, ModuleStructure};

use super::codim::{codim, CodimConfig};

#[derive(Clone, Debug, Serialize)]
pub struct CodimReport {
    /// `c_1, c_2, ...` as far as the budget allowed.
    pub values: Vec<usize>,
    /// `c_{k+1} / c_k` as exact fractions.
    pub ratios: Vec<String>,
    pub d: Option<usize>,
    pub predicted_base: Option<i64>,
    pub requested: usize,
    /// Set when the budget stopped the series early.
    pub budget_exceeded_at: Option<usize>,
    pub config: CodimConfig,
}

impl CodimReport {
    pub fn partial(&self) -> bool {
        self.budget_exceeded_at.is_some()
    }
}

fn ratio(a: usize, b: usize) -> Option<BigRational> {
    (a != 0).then(|| BigRational::new(b.into(), a.into()))
}

pub fn codim_series<S: Scalar>(z: &ModuleStructure<S>, max_n: usize, d: Option<usize>, cfg: &CodimConfig) -> Result<CodimReport> {
    let mut values = Vec::new();
    let mut budget_exceeded_at = None;
    for n in 1..=max_n {
        match codim(z, n, cfg) {
            Ok(c) => values.push(c),
            Err(Error::BudgetExceeded { .. }) => {
                budget_exceeded_at = Some(n);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let ratios = values
        .windows(2)
        .map(|w| ratio(w[0], w[1]).map_or_else(|| "undefined".to_string(), |r| r.to_string()))
        .collect();
    Ok(CodimReport {
        values,
        ratios,
        d,
        predicted_base: d.map(|d| 2 - d as i64),
        requested: max_n,
        budget_exceeded_at,
        config: *cfg,
    })
}

/// Dimension of the largest invariant nilpotent ideal, for structures on
/// the dual numbers: `1` if the radical is stable under every operator.
pub fn dual_numbers_invariant_ideal_dim<S: Scalar>(z: &ModuleStructure<S>) -> Result<usize> {
    let p = dual_numbers_basis(&z.algebra)?;
    let x = p.column(1);
    let stable = z.action.iter().all(|m| {
        let y = m.mul_vec(&x);
        // y in span{x}
        let k = x.iter().position(|c| !c.is_zero()).unwrap();
        let s = y[k].clone() * x[k].inv().unwrap();
        y.iter().zip(&x).all(|(a, b)| *a == s.clone() * b.clone())
    });
    Ok(usize::from(stable))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GrowthWindow {
    /// The last ratio must lie in `[low * base, high * base]`.
    pub low: f64,
    pub high: f64,
    /// For base 1: `c_{k+1} - c_k <= poly_const * (k+1)^poly_degree`.
    pub poly_const: f64,
    pub poly_degree: i32,
}

impl Default for GrowthWindow {
    fn default() -> GrowthWindow {
        GrowthWindow { low: 0.5, high: 1.5, poly_const: 1.0, poly_degree: 2 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthVerdict {
    pub base: i64,
    pub last_ratio: Option<String>,
    pub window: (f64, f64),
    pub ratio_in_window: bool,
    pub polynomial_bound: Option<bool>,
    pub passed: bool,
}

pub fn growth_check(report: &CodimReport, d: usize, w: &GrowthWindow) -> Result<GrowthVerdict> {
    let base = 2 - d as i64;
    let v = &report.values;
    if v.len() < 2 {
        return Err(Error::Precondition("need at least two codimensions".into()));
    }
    let (a, b) = (v[v.len() - 2], v[v.len() - 1]);
    let r = ratio(a, b);
    let window = (w.low * base as f64, w.high * base as f64);
    let ratio_in_window = match (&r, base) {
        (_, b) if b <= 0 => v[v.len() - 1] == 0,
        (Some(r), _) => {
            // exact comparison of num/den against the window ends
            let (num, den) = (r.numer().clone(), r.denom().clone());
            let f = |x: f64| BigRational::from_float(x).unwrap();
            let q = BigRational::new(num, den);
            q >= f(window.0) && q <= f(window.1)
        }
        (None, _) => false,
    };
    let polynomial_bound = (base == 1).then(|| {
        v.windows(2).enumerate().all(|(k, w2)| {
            let bound = w.poly_const * ((k + 2) as f64).powi(w.poly_degree);
            (w2[1] as f64) <= w2[0] as f64 + bound
        })
    });
    Ok(GrowthVerdict {
        base,
        last_ratio: r.map(|r| r.to_string()),
        window,
        ratio_in_window,
        polynomial_bound,
        passed: ratio_in_window && polynomial_bound.unwrap_or(true),
    })
}
