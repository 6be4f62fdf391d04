use crate::error::{Error, Result};
use crate::structconst::FiniteGroup;

use super::presentation::GroupPresentation;

/// Default limit on the number of cosets defined during enumeration.
pub const DEFAULT_COSET_BUDGET: usize = 10_000;

/// Coset table of the trivial subgroup, i.e. the regular representation of a
/// finitely presented group, built by Todd–Coxeter (HLT strategy).
struct CosetTable {
    cols: usize,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    budget: usize,
}

fn inv(x: usize) -> usize {
    x ^ 1
}

impl CosetTable {
    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        let d = self.table.len();
        if d >= self.budget {
            return Err(Error::BudgetExceeded {
                what: "coset enumeration".into(),
                needed: d as u128 + 1,
                budget: self.budget as u128,
            });
        }
        self.table.push(vec![None; self.cols]);
        self.parent.push(d);
        self.table[c][x] = Some(d);
        self.table[d][inv(x)] = Some(c);
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let Some(f) = self.table[e][x] else { continue };
                if self.table[f][inv(x)] == Some(e) {
                    self.table[f][inv(x)] = None;
                }
                let (mu, nu) = (self.rep(e), self.rep(f));
                if let Some(t) = self.table[mu][x] {
                    self.merge(nu, t, &mut queue);
                } else if let Some(t) = self.table[nu][inv(x)] {
                    self.merge(mu, t, &mut queue);
                } else {
                    self.table[mu][x] = Some(nu);
                    self.table[nu][inv(x)] = Some(mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let mut i: isize = 0;
        let mut j: isize = w.len() as isize - 1;
        loop {
            while i <= j {
                match self.table[f][w[i as usize]] {
                    Some(n) => {
                        f = n;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                match self.table[b][inv(w[j as usize])] {
                    Some(n) => {
                        b = n;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            } else if i == j {
                let x = w[i as usize];
                self.table[f][x] = Some(b);
                self.table[b][inv(x)] = Some(f);
                return Ok(());
            } else {
                self.define(f, w[i as usize])?;
            }
        }
    }
}

/// Enumerates the group given by a presentation, provided it has at most
/// `budget` elements (more precisely, the enumeration defines at most
/// `budget` cosets). The result is the group's multiplication table, with
/// each element named by a shortest word in the generators.
pub fn enumerate_group(p: &GroupPresentation, budget: usize) -> Result<FiniteGroup> {
    let cols = 2 * p.generators.len();
    let rels: Vec<Vec<usize>> = p
        .relations
        .iter()
        .map(|w| {
            w.iter()
                .flat_map(|&(g, e)| {
                    let x = if e > 0 { 2 * g } else { 2 * g + 1 };
                    std::iter::repeat(x).take(e.unsigned_abs() as usize)
                })
                .collect()
        })
        .collect();
    let mut t = CosetTable { cols, table: vec![vec![None; cols]], parent: vec![0], budget: budget.max(1) };
    let mut c = 0;
    while c < t.table.len() {
        if t.live(c) {
            for r in &rels {
                if !t.live(c) {
                    break;
                }
                t.scan_and_fill(c, r)?;
            }
            for x in 0..cols {
                if t.live(c) && t.table[c][x].is_none() {
                    t.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    // compress live cosets, BFS from the identity coset for shortest words
    let n_all = t.table.len();
    let mut index = vec![usize::MAX; n_all];
    let mut order = vec![0usize];
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    index[0] = 0;
    let mut k = 0;
    while k < order.len() {
        let cur = order[k];
        for x in 0..cols {
            let nx = t.rep(t.table[cur][x].expect("complete coset table"));
            if index[nx] == usize::MAX {
                index[nx] = order.len();
                order.push(nx);
                let mut w = words[k].clone();
                w.push(x);
                words.push(w);
            }
        }
        k += 1;
    }
    let n = order.len();
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let mut cur = order[a];
            for &x in &words[b] {
                cur = t.rep(t.table[cur][x].unwrap());
            }
            table[a][b] = index[cur];
        }
    }
    let names = words
        .iter()
        .map(|w| {
            if w.is_empty() {
                "e".to_string()
            } else {
                w.iter()
                    .map(|&x| {
                        let g = &p.generators[x / 2];
                        if x % 2 == 0 { g.clone() } else { format!("{g}^-1") }
                    })
                    .collect::<Vec<_>>()
                    .join("")
            }
        })
        .collect();
    FiniteGroup::new(names, table, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(gens: &[&str], rels: Vec<Vec<(usize, i64)>>) -> GroupPresentation {
        GroupPresentation::new(gens.iter().map(|s| s.to_string()).collect(), rels)
    }

    #[test]
    fn cyclic_and_dihedral() {
        let z5 = pres(&["a"], vec![vec![(0, 5)]]);
        assert_eq!(enumerate_group(&z5, 100).unwrap().order(), 5);
        // D_4 = <r, s | r^4, s^2, (rs)^2>
        let d4 = pres(&["r", "s"], vec![vec![(0, 4)], vec![(1, 2)], vec![(0, 1), (1, 1), (0, 1), (1, 1)]]);
        let g = enumerate_group(&d4, 1000).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        // S_3 as <a, b | a^2, b^3, (ab)^2>
        let s3 = pres(&["a", "b"], vec![vec![(0, 2)], vec![(1, 3)], vec![(0, 1), (1, 1), (0, 1), (1, 1)]]);
        assert_eq!(enumerate_group(&s3, 1000).unwrap().order(), 6);
    }

    #[test]
    fn trivial_relations_collapse() {
        let p = pres(&["a", "b"], vec![vec![(0, 1)], vec![(0, 1), (1, 1), (0, -1)]]);
        assert_eq!(enumerate_group(&p, 100).unwrap().order(), 1);
    }

    #[test]
    fn infinite_group_exceeds_budget() {
        let free = pres(&["a"], vec![]);
        assert!(matches!(enumerate_group(&free, 50), Err(Error::BudgetExceeded { .. })));
    }
}
