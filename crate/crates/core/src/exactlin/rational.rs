use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{eval_poly, FieldSpec, LiteralVisitor, Scalar};

/// Exact rational number. Values that fit in `i64` stay on a machine-word
/// fast path; everything else falls back to `BigRational`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Rational {
        assert!(denom != 0, "zero denominator");
        Rational::from_big(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_big(q: BigRational) -> Rational {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => {
                Rational(Repr::Small(Ratio::new_raw(n, d)))
            }
            _ => Rational(Repr::Big(q)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => BigRational::new_raw((*r.numer()).into(), (*r.denom()).into()),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_integer(),
            Repr::Big(b) => b.is_integer(),
        }
    }

    fn small(r: Ratio<i64>) -> Rational {
        if *r.numer() == i64::MIN || *r.denom() == i64::MIN {
            Rational::from_big(BigRational::new((*r.numer()).into(), (*r.denom()).into()))
        } else {
            Rational(Repr::Small(r))
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
                    if let Some(r) = a.$checked(b) {
                        return Rational::small(r);
                    }
                }
                Rational::from_big(self.to_big().$m(rhs.to_big()))
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self * rhs.inv().expect("division by zero")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(r) => Rational::small(Ratio::new_raw(-*r.numer(), *r.denom())),
            Repr::Big(b) => Rational::from_big(-b),
        }
    }
}

impl Zero for Rational {
    fn zero() -> Rational {
        Rational(Repr::Small(Ratio::new_raw(0, 1)))
    }
    fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.numer().is_zero(),
            Repr::Big(b) => b.is_zero(),
        }
    }
}

impl One for Rational {
    fn one() -> Rational {
        Rational(Repr::Small(Ratio::new_raw(1, 1)))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Rational {
        Rational::from_big(BigRational::from_integer(v.into()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Repr::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rational {
    fn serialize<Z: Serializer>(&self, s: Z) -> Result<Z::Ok, Z::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_any(LiteralVisitor).map(Rational::from_big)
    }
}

const ROOT_SEARCH_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > ROOT_SEARCH_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

impl Scalar for Rational {
    fn field() -> FieldSpec {
        FieldSpec::Q
    }

    fn inv(&self) -> Option<Rational> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(r) => Rational::small(r.recip()),
            Repr::Big(b) => Rational::from_big(b.recip()),
        })
    }

    fn from_i64(v: i64) -> Rational {
        Rational::from(v)
    }

    fn from_rational(q: &BigRational) -> Option<Rational> {
        Some(Rational::from_big(q.clone()))
    }

    fn elements() -> Option<Vec<Rational>> {
        None
    }

    fn polynomial_roots(coeffs: &[Rational]) -> Option<Vec<Rational>> {
        let mut c: Vec<BigRational> = coeffs.iter().map(|x| x.to_big()).collect();
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        if c.is_empty() {
            return None;
        }
        let mut roots = Vec::new();
        let lead = c.iter().position(|x| !x.is_zero()).unwrap();
        if lead > 0 {
            roots.push(Rational::zero());
            c.drain(..lead);
        }
        if c.len() == 1 {
            return Some(roots);
        }
        let lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = c
            .iter()
            .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let ps = divisors(&ints[0])?;
        let qs = divisors(ints.last().unwrap())?;
        if (ps.len() as u64).saturating_mul(qs.len() as u64) > 1_000_000 {
            return None;
        }
        let mut cands = std::collections::BTreeSet::new();
        for &p in &ps {
            for &q in &qs {
                let r = BigRational::new(BigInt::from(p), BigInt::from(q));
                cands.insert(r.clone());
                cands.insert(-r);
            }
        }
        let coeffs: Vec<Rational> = c.into_iter().map(Rational::from_big).collect();
        for r in cands {
            let r = Rational::from_big(r);
            if eval_poly(&coeffs, &r).is_zero() {
                roots.push(r);
            }
        }
        Some(roots)
    }

    fn approx_f64(&self) -> Option<f64> {
        match &self.0 {
            Repr::Small(r) => Some(*r.numer() as f64 / *r.denom() as f64),
            Repr::Big(b) => b.to_f64(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from(i64::MAX);
        let sq = big.clone() * big.clone();
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = sq / big.clone();
        assert!(matches!(back.0, Repr::Small(_)));
        assert_eq!(back, big);
    }

    #[test]
    fn min_value_negation() {
        let m = Rational::from(i64::MIN + 1) - Rational::one();
        assert_eq!((-m.clone()).to_string(), "9223372036854775808");
        assert_eq!(-(-m.clone()), m);
    }

    #[test]
    fn display_and_parse() {
        let h = Rational::new(-2, 4);
        assert_eq!(h.to_string(), "-1/2");
        assert_eq!(Rational::parse_literal(" -1/2 ").unwrap(), h);
        assert!(Rational::parse_literal("1/0").is_err());
        assert!(Rational::parse_literal("x").is_err());
    }

    #[test]
    fn rational_roots() {
        // 2x^2 - 3x + 1 = (2x - 1)(x - 1)
        let c: Vec<Rational> = [1, -3, 2].iter().map(|&v| Rational::from(v)).collect();
        let mut r = Rational::polynomial_roots(&c).unwrap();
        r.sort_by_key(|x| x.to_string());
        assert_eq!(r, vec![Rational::one(), Rational::new(1, 2)]);
        // x^2 + 1 has none
        let c: Vec<Rational> = [1, 0, 1].iter().map(|&v| Rational::from(v)).collect();
        assert!(Rational::polynomial_roots(&c).unwrap().is_empty());
        // x^3 - x has 0, 1, -1
        let c: Vec<Rational> = [0, -1, 0, 1].iter().map(|&v| Rational::from(v)).collect();
        assert_eq!(Rational::polynomial_roots(&c).unwrap().len(), 3);
    }
}
