//! Arbitrary-precision rationals.
//!
//! `num_rational::BigRational` normalizes after every operation, so equality is structural.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `num / den`; panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Always `"p/q"`, including integers (`"3/1"`), so serialized forms are bit-stable.
pub fn to_fraction_string(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Accepts `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse("rational", text, "bad numerator"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse("rational", text, "bad denominator"))?;
    if den.is_zero() {
        return Err(Error::parse("rational", text, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Compact human form: `3`, `-1/2`.
pub fn display(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub(crate) fn is_negative(value: &Rational) -> bool {
    value.is_negative()
}
