//! Arbitrary-precision reduced fractions and their text encoding.
//!
//! Rationals travel as `"a/b"` strings (or plain `"a"` when the denominator
//! is 1) in the CLI and in JSON artifacts; they are never serialized as
//! floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// 2^n as a rational.
pub fn pow2(n: u32) -> Rational {
    Rational::from_integer(BigInt::one() << n)
}

/// 2^-n as a rational.
pub fn pow2_inv(n: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"a/b"` or a bare integer `"a"`; the result is reduced with a
/// positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// `"a"` when the denominator is 1, `"a/b"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Always `"a/b"`, even for integers (CSV exact column).
pub fn format_rational_slash(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Shortest round-trip decimal of the rational as an f64.
pub fn to_decimal(r: &Rational) -> String {
    let v = r.to_f64().unwrap_or_else(|| {
        // fall back for magnitudes outside f64 range; values here live in [0,2]
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    });
    format!("{v}")
}
