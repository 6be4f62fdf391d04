use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a structure lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::Fp { p })
        } else {
            Err(Error::InvalidField(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Q => 0,
            FieldSpec::Fp { p } => *p,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Q => Ok(()),
            FieldSpec::Fp { p } => FieldSpec::prime(*p).map(|_| ()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Fp { p } => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        if s == "Q" || s == "q" {
            return Ok(FieldSpec::Q);
        }
        let rest = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("F"))
            .ok_or_else(|| Error::InvalidField(s.to_string()))?;
        let p: u64 = rest
            .parse()
            .map_err(|_| Error::InvalidField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

pub const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Implemented by [`crate::Rational`] and [`crate::Fp`].
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Serialize
    + DeserializeOwned
{
    fn field() -> FieldSpec;

    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    /// `None` when the denominator vanishes in this field.
    fn from_rational(q: &BigRational) -> Option<Self>;

    /// Every element, for finite fields.
    fn elements() -> Option<Vec<Self>>;

    /// Roots in the field of the polynomial with coefficients `coeffs`
    /// (constant term first). `None` means the search could not be completed.
    fn polynomial_roots(coeffs: &[Self]) -> Option<Vec<Self>>;

    /// Best-effort conversion to f64, used only for growth ratios in reports.
    fn approx_f64(&self) -> Option<f64>;

    fn parse_literal(s: &str) -> Result<Self> {
        let q = parse_rational(s)?;
        Self::from_rational(&q).ok_or_else(|| Error::InvalidScalar(s.to_string()))
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    BigRational::from_str(t).map_err(|_| Error::InvalidScalar(s.to_string()))
}

pub(crate) fn eval_poly<S: Scalar>(coeffs: &[S], x: &S) -> S {
    let mut acc = S::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

/// Accepts a JSON string like "-1/2" or a JSON integer.
pub(crate) struct LiteralVisitor;

impl<'de> serde::de::Visitor<'de> for LiteralVisitor {
    type Value = BigRational;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "an integer or a rational string such as \"-1/2\"")
    }

    fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<BigRational, E> {
        Ok(BigRational::from_integer(v.into()))
    }

    fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<BigRational, E> {
        Ok(BigRational::from_integer(v.into()))
    }

    fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<BigRational, E> {
        parse_rational(v).map_err(E::custom)
    }
}
