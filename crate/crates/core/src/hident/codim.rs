use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{RowReducer, Scalar};
use crate::modulealg::ModuleStructure;

pub const DEFAULT_BUDGET: u128 = 200_000;
pub const DEFAULT_SHARD_SIZE: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodimConfig {
    /// Maximum number of monomials (rows) per degree.
    pub budget: u128,
    pub shard_size: usize,
}

impl Default for CodimConfig {
    fn default() -> CodimConfig {
        CodimConfig { budget: DEFAULT_BUDGET, shard_size: DEFAULT_SHARD_SIZE }
    }
}

impl CodimConfig {
    /// Default settings, with the budget taken from `HOPFEQ_BUDGET` if set.
    pub fn from_env() -> Result<CodimConfig> {
        let mut c = CodimConfig::default();
        if let Ok(v) = std::env::var("HOPFEQ_BUDGET") {
            c.budget = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParams(format!("HOPFEQ_BUDGET must be a nonnegative integer, got {v:?}")))?;
        }
        Ok(c)
    }
}

pub(crate) fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// `n! * dim_h^n`, the dimension of the multilinear space in degree `n`.
pub fn monomial_count(n: usize, dim_h: usize) -> Option<u128> {
    factorial(n)?.checked_mul((dim_h as u128).checked_pow(n as u32)?)
}

/// The `r`-th permutation of `0..n` in lexicographic order.
pub(crate) fn unrank_perm(mut r: u128, n: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let f = factorial(k).unwrap();
        let i = (r / f) as usize;
        r %= f;
        out.push(pool.remove(i));
    }
    out
}

pub(crate) fn check_budget(what: &str, needed: Option<u128>, budget: u128) -> Result<u128> {
    match needed {
        Some(k) if k <= budget => Ok(k),
        _ => Err(Error::BudgetExceeded { what: what.into(), needed: needed.unwrap_or(u128::MAX), budget }),
    }
}

struct Evaluator<'a, S> {
    z: &'a ModuleStructure<S>,
    n: usize,
    dim_a: usize,
    /// `act[h][i] = zeta(e_h) a_i`.
    act: Vec<Vec<Vec<S>>>,
}

impl<'a, S: Scalar> Evaluator<'a, S> {
    fn new(z: &'a ModuleStructure<S>, n: usize) -> Evaluator<'a, S> {
        let dim_a = z.algebra.dim();
        let act = z.action.iter().map(|m| (0..dim_a).map(|i| m.column(i)).collect()).collect();
        Evaluator { z, n, dim_a, act }
    }

    /// The monomial as an `n`-linear map, flattened over argument tuples
    /// (variable 0 most significant) and then output coordinates.
    fn row(&self, perm: &[usize], hs: &[usize]) -> Vec<S> {
        let d = self.dim_a;
        // prefix products indexed by the arguments of the variables seen so far, in position order
        let mut prefix: Vec<Vec<S>> = self.act[hs[0]].clone();
        for &h in &hs[1..] {
            let mut next = Vec::with_capacity(prefix.len() * d);
            for p in &prefix {
                for a in 0..d {
                    next.push(self.z.algebra.product(p, &self.act[h][a]));
                }
            }
            prefix = next;
        }
        // position order -> variable order
        let mut pos_weight = vec![0usize; self.n];
        for (k, &v) in perm.iter().enumerate() {
            pos_weight[k] = d.pow((self.n - 1 - v) as u32);
        }
        let mut row = vec![S::zero(); prefix.len() * d];
        for (j, val) in prefix.into_iter().enumerate() {
            let mut t = 0;
            let mut rest = j;
            for k in (0..self.n).rev() {
                t += (rest % d) * pos_weight[k];
                rest /= d;
            }
            row[t * d..(t + 1) * d].clone_from_slice(&val);
        }
        row
    }

    fn row_by_index(&self, idx: u128, hn: u128) -> Vec<S> {
        let perm = unrank_perm(idx / hn, self.n);
        let hs: Vec<usize> =
            super::poly::digits((idx % hn) as usize, self.z.hopf.dim(), self.n);
        self.row(&perm, &hs)
    }
}

/// Rank of the evaluation map in degree `n`, streamed in monomial order.
pub fn codim<S: Scalar>(z: &ModuleStructure<S>, n: usize, cfg: &CodimConfig) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidParams("degree must be at least 1".into()));
    }
    let hd = z.hopf.dim();
    let total = check_budget(&format!("codimension in degree {n}"), monomial_count(n, hd), cfg.budget)?;
    let d = z.algebra.dim();
    let cols = d.checked_pow(n as u32 + 1).ok_or_else(|| Error::InvalidParams("degree too large".into()))?;
    if hd == 0 || d == 0 {
        return Ok(0);
    }
    let ev = Evaluator::new(z, n);
    let hn = (hd as u128).pow(n as u32);
    let shard = cfg.shard_size.max(1) as u128;
    let mut red = RowReducer::new(cols);
    let mut seen: HashSet<Vec<S>> = HashSet::new();
    let mut start = 0u128;
    while start < total && !red.is_full() {
        let end = (start + shard).min(total);
        let rows: Vec<Vec<S>> = (start..end)
            .into_par_iter()
            .map(|i| ev.row_by_index(i, hn))
            .collect();
        // screening against the current span is read-only, so it runs in parallel
        let fresh: Vec<bool> = rows.par_iter().map(|r| !red.contains(r)).collect();
        for (r, f) in rows.into_iter().zip(fresh) {
            if f && seen.insert(r.clone()) {
                red.insert(r);
                if red.is_full() {
                    break;
                }
            }
        }
        start = end;
    }
    Ok(red.rank())
}
