//! Brute-force reference computations shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashSet;

use hopfeq::modulealg::ModuleStructure;
use hopfeq::Scalar;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn tuples(len: usize, base: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..base).map(move |d| {
                    let mut u = t.clone();
                    u.push(d);
                    u
                })
            })
            .collect();
    }
    out
}

/// Reduces `rows` to echelon form one row at a time and returns the rank.
fn incremental_rank<S: Scalar>(rows: impl IntoIterator<Item = Vec<S>>) -> usize {
    let mut basis: Vec<(usize, Vec<S>)> = Vec::new();
    for mut r in rows {
        for (p, b) in &basis {
            if !r[*p].is_zero() {
                let f = r[*p].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            let inv = r[p].inv().unwrap();
            for x in r.iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&r) {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
            }
            basis.push((p, r));
        }
    }
    basis.len()
}

/// `c_n` by evaluating every monomial on every tuple of basis elements.
///
/// A monomial is a word `x_{s(1)}^{h_1} ... x_{s(n)}^{h_n}` with the factors
/// multiplied left to right; its row lists the coordinates of the value for
/// each substitution of basis elements.
pub fn dense_codim<S: Scalar>(z: &ModuleStructure<S>, n: usize) -> usize {
    let da = z.algebra.dim();
    let dh = z.hopf.dim();
    let subs = tuples(n, da);
    let perms = permutations(n);
    let labels = tuples(n, dh);
    let mut seen: HashSet<Vec<S>> = HashSet::new();
    for p in &perms {
        for h in &labels {
            let mut row = Vec::with_capacity(subs.len() * da);
            for t in &subs {
                let mut acc: Option<Vec<S>> = None;
                for (pos, &var) in p.iter().enumerate() {
                    let factor = z.action[h[pos]].column(t[var]);
                    acc = Some(match acc {
                        None => factor,
                        Some(a) => z.algebra.product(&a, &factor),
                    });
                }
                row.extend(acc.unwrap());
            }
            seen.insert(row);
        }
    }
    incremental_rank(seen)
}
