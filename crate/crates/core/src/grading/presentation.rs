use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactlin::{abelian_invariants, Matrix};

/// Finite presentation `<generators | relations>`; a relation is a word of
/// `(generator, exponent)` pairs that equals the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<Vec<(usize, i64)>>,
    /// Invariant factors of the abelianization; `0` stands for `Z`.
    pub abelianization: Vec<BigInt>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relations: Vec<Vec<(usize, i64)>>) -> GroupPresentation {
        let k = generators.len();
        let rows: Vec<Vec<BigInt>> = relations
            .iter()
            .map(|w| {
                let mut row = vec![BigInt::from(0); k];
                for &(g, e) in w {
                    row[g] += e;
                }
                row
            })
            .collect();
        let abelianization = if k == 0 {
            Vec::new()
        } else {
            abelian_invariants(&Matrix::from_rows(rows, k).unwrap())
        };
        GroupPresentation { generators, relations, abelianization }
    }

    /// Relations as signed generator indices: `+(i+1)` for `g_i`, `-(i+1)` for its inverse.
    pub fn signed_relations(&self) -> Vec<Vec<i64>> {
        self.relations
            .iter()
            .map(|w| {
                w.iter()
                    .flat_map(|&(g, e)| {
                        let s = if e > 0 { g as i64 + 1 } else { -(g as i64 + 1) };
                        std::iter::repeat(s).take(e.unsigned_abs() as usize)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn abelianization_order(&self) -> Option<BigInt> {
        if self.abelianization.iter().any(|d| *d == BigInt::from(0)) {
            None
        } else {
            Some(self.abelianization.iter().product())
        }
    }
}

impl Serialize for GroupPresentation {
    fn serialize<Z: Serializer>(&self, s: Z) -> Result<Z::Ok, Z::Error> {
        let ab: Vec<serde_json::Value> = self
            .abelianization
            .iter()
            .map(|d| match d.to_u64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(d.to_string()),
            })
            .collect();
        let mut st = s.serialize_struct("GroupPresentation", 3)?;
        st.serialize_field("generators", &self.generators)?;
        st.serialize_field("relations", &self.signed_relations())?;
        st.serialize_field("abelianization", &ab)?;
        st.end()
    }
}
