use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite group given by its multiplication table: `table[g][h] = gh`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl FiniteGroup {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<FiniteGroup> {
        let g = FiniteGroup { names, table, identity };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.names.len();
        let bad = |m: String| Err(Error::InvalidStructure(m));
        if n == 0 {
            return bad("group has no elements".into());
        }
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n) {
            return bad(format!("group table must be {n}x{n}"));
        }
        if self.identity >= n {
            return bad("identity index out of range".into());
        }
        for row in &self.table {
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return bad("group table row is not a permutation".into());
                }
                seen[x] = true;
            }
        }
        for g in 0..n {
            if self.table[self.identity][g] != g || self.table[g][self.identity] != g {
                return bad(format!("identity fails at {}", self.names[g]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad(format!(
                            "not associative at ({}, {}, {})",
                            self.names[a], self.names[b], self.names[c]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == self.identity).unwrap()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|g| self.element_order(g)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup { names: vec!["e".into()], table: vec![vec![0]], identity: 0 }
    }

    /// `Z/n` with elements named `0..n-1`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n > 0);
        FiniteGroup {
            names: (0..n).map(|i| i.to_string()).collect(),
            table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            identity: 0,
        }
    }

    /// `S_3` acting on {1,2,3}; products compose right to left, so
    /// `(12)(23) = (123)`.
    pub fn symmetric3() -> FiniteGroup {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let names = ["id", "(12)", "(23)", "(13)", "(123)", "(132)"];
        let table = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let c = [perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]];
                        perms.iter().position(|p| *p == c).unwrap()
                    })
                    .collect()
            })
            .collect();
        FiniteGroup { names: names.iter().map(|s| s.to_string()).collect(), table, identity: 0 }
    }
}
