//! Exact scalar types.
//!
//! Everything numeric in this crate is exact. The linear algebra and the Gram
//! machinery are written against [`Scalar`] so they run over arbitrary precision
//! rationals ([`Rational`](crate::Rational)) as well as over fixed-width
//! rationals such as `Ratio<i128>` when the caller knows the entries stay small.
//! Floating point types deliberately do not implement the trait.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// A commutative field with exact arithmetic.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + std::ops::Neg<Output = Self> + Send + Sync
{
    fn from_i64(v: i64) -> Self;

    fn is_positive_value(&self) -> bool {
        *self > Self::zero()
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
}

impl Scalar for Ratio<i128> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational. Zero denominators and
/// anything with a decimal point are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(num).map_err(|_| format!("bad numerator in {s:?}"))?;
    let q = BigInt::from_str(den).map_err(|_| format!("bad denominator in {s:?}"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(p, q))
}

/// Canonical text form: `p/q` in lowest terms, or just `p` for integers.
pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer(p: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(p))
}

/// The value as an `i64` if it is an integer that fits.
pub fn as_i64(r: &BigRational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

pub fn is_even_integer(r: &BigRational) -> bool {
    r.is_integer() && r.to_integer().is_even()
}

pub fn is_nonneg_integer(r: &BigRational) -> bool {
    r.is_integer() && !r.is_negative()
}

pub fn from_bigint(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

pub fn one() -> BigRational {
    BigRational::one()
}
