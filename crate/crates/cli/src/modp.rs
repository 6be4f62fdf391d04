//! A prime field whose modulus is chosen at run time.
//!
//! The command line reads the prime from `--field` or from the input files, so
//! a single instantiation of the library covers every prime. The modulus is a
//! process-wide setting and is fixed once before any element is built.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use hopfeq::exactlin::{FieldSpec, Scalar, FP_ROOT_SEARCH_LIMIT};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

static MODULUS: AtomicU64 = AtomicU64::new(0);

/// Largest prime accepted, so products fit in `u128` comfortably and
/// element enumeration stays meaningful.
pub const MAX_PRIME: u64 = 1 << 31;

pub fn set_modulus(p: u64) -> hopfeq::Result<()> {
    FieldSpec::prime(p)?;
    if p > MAX_PRIME {
        return Err(hopfeq::Error::InvalidField(format!("Fp:{p} exceeds the supported bound {MAX_PRIME}")));
    }
    MODULUS.store(p, Ordering::Relaxed);
    Ok(())
}

fn modulus() -> u64 {
    let p = MODULUS.load(Ordering::Relaxed);
    assert!(p != 0, "modulus not set");
    p
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModP(u64);

impl ModP {
    fn new(v: i64) -> ModP {
        ModP(v.rem_euclid(modulus() as i64) as u64)
    }

    fn pow(self, mut e: u64) -> ModP {
        let mut base = self;
        let mut acc = ModP::one();
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

impl Add for ModP {
    type Output = ModP;
    fn add(self, rhs: ModP) -> ModP {
        ModP((self.0 + rhs.0) % modulus())
    }
}

impl Sub for ModP {
    type Output = ModP;
    fn sub(self, rhs: ModP) -> ModP {
        ModP((self.0 + modulus() - rhs.0) % modulus())
    }
}

impl Mul for ModP {
    type Output = ModP;
    fn mul(self, rhs: ModP) -> ModP {
        ModP(((self.0 as u128 * rhs.0 as u128) % modulus() as u128) as u64)
    }
}

impl Neg for ModP {
    type Output = ModP;
    fn neg(self) -> ModP {
        ModP((modulus() - self.0) % modulus())
    }
}

impl Zero for ModP {
    fn zero() -> ModP {
        ModP(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for ModP {
    fn one() -> ModP {
        ModP(1 % modulus())
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for ModP {
    fn serialize<Z: Serializer>(&self, s: Z) -> Result<Z::Ok, Z::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for ModP {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<ModP, D::Error> {
        let text = match serde_json::Value::deserialize(d)? {
            serde_json::Value::String(s) => s,
            serde_json::Value::Number(n) => n.to_string(),
            other => return Err(serde::de::Error::custom(format!("expected a scalar, found {other}"))),
        };
        ModP::parse_literal(&text).map_err(serde::de::Error::custom)
    }
}

fn reduce(n: &BigInt) -> ModP {
    ModP(n.mod_floor(&BigInt::from(modulus())).to_u64().unwrap())
}

impl Scalar for ModP {
    fn field() -> FieldSpec {
        FieldSpec::Fp { p: modulus() }
    }

    fn inv(&self) -> Option<ModP> {
        (self.0 != 0).then(|| self.pow(modulus() - 2))
    }

    fn from_i64(v: i64) -> ModP {
        ModP::new(v)
    }

    fn from_rational(q: &BigRational) -> Option<ModP> {
        reduce(q.denom()).inv().map(|d| reduce(q.numer()) * d)
    }

    fn elements() -> Option<Vec<ModP>> {
        Some((0..modulus()).map(ModP).collect())
    }

    fn polynomial_roots(coeffs: &[ModP]) -> Option<Vec<ModP>> {
        let p = modulus();
        if coeffs.iter().all(|c| c.is_zero()) || p > FP_ROOT_SEARCH_LIMIT {
            return None;
        }
        let eval = |x: ModP| coeffs.iter().rev().fold(ModP::zero(), |acc, c| acc * x + *c);
        Some((0..p).map(ModP).filter(|x| eval(*x).is_zero()).collect())
    }

    fn approx_f64(&self) -> Option<f64> {
        None
    }
}
