use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{eval_poly, is_prime, FieldSpec, LiteralVisitor, Scalar};

/// Element of the prime field F_P. Using a non-prime `P` fails to compile.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

/// Largest field size for which root finding tries every element.
pub const FP_ROOT_SEARCH_LIMIT: u64 = 1_000_000;

impl<const P: u64> Fp<P> {
    const PRIME: () = assert!(is_prime(P), "Fp modulus must be prime");

    pub fn new(v: i64) -> Fp<P> {
        #[allow(clippy::let_unit_value)]
        let () = Self::PRIME;
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    pub fn pow(&self, mut e: u64) -> Fp<P> {
        let mut base = *self;
        let mut acc = Fp::<P>::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Fp<P>;
    fn add(self, rhs: Fp<P>) -> Fp<P> {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Fp<P>;
    fn sub(self, rhs: Fp<P>) -> Fp<P> {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Fp<P>;
    fn mul(self, rhs: Fp<P>) -> Fp<P> {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Fp<P>;
    fn div(self, rhs: Fp<P>) -> Fp<P> {
        self * rhs.inv().expect("division by zero")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Fp<P>;
    fn neg(self) -> Fp<P> {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Fp<P> {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Fp<P> {
        Fp::new(1)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Serialize for Fp<P> {
    fn serialize<Z: Serializer>(&self, s: Z) -> Result<Z::Ok, Z::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de, const P: u64> Deserialize<'de> for Fp<P> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Fp<P>, D::Error> {
        let q = d.deserialize_any(LiteralVisitor)?;
        Fp::from_rational(&q).ok_or_else(|| {
            serde::de::Error::custom(format!("denominator of {q} vanishes mod {P}"))
        })
    }
}

fn reduce<const P: u64>(n: &BigInt) -> Fp<P> {
    let r = n.mod_floor(&BigInt::from(P));
    Fp(r.to_u64().unwrap())
}

impl<const P: u64> Scalar for Fp<P> {
    fn field() -> FieldSpec {
        #[allow(clippy::let_unit_value)]
        let () = Self::PRIME;
        FieldSpec::Fp { p: P }
    }

    fn inv(&self) -> Option<Fp<P>> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(v: i64) -> Fp<P> {
        Fp::new(v)
    }

    fn from_rational(q: &BigRational) -> Option<Fp<P>> {
        let d = reduce::<P>(q.denom());
        d.inv().map(|di| reduce::<P>(q.numer()) * di)
    }

    fn elements() -> Option<Vec<Fp<P>>> {
        Some((0..P).map(Fp).collect())
    }

    fn polynomial_roots(coeffs: &[Fp<P>]) -> Option<Vec<Fp<P>>> {
        if coeffs.iter().all(|c| c.is_zero()) || P > FP_ROOT_SEARCH_LIMIT {
            return None;
        }
        Some(
            (0..P)
                .map(Fp)
                .filter(|x| eval_poly(coeffs, x).is_zero())
                .collect(),
        )
    }

    fn approx_f64(&self) -> Option<f64> {
        None
    }
}
