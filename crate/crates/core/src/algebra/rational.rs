//! Arbitrary-precision rationals.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so this module only adds the helpers the rest of the crate
//! needs: construction from small integers, canonical text, parsing and
//! exact square roots.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{domain, usage, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Canonical `num/den` text, e.g. `-3/2`, `5/1`, `0/1`.
pub fn canonical(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `a`, `a/b` or `-a/b`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .or_else(|_| usage(format!("bad rational numerator in {text:?}")))?;
    let den: BigInt = den
        .parse()
        .or_else(|_| usage(format!("bad rational denominator in {text:?}")))?;
    if den.is_zero() {
        return usage(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(num, den))
}

/// Non-negative rational square root, if one exists.
pub fn sqrt_exact(r: &Rational) -> Result<Rational> {
    if r.is_negative() {
        return domain(format!("no rational square root of {}", canonical(r)));
    }
    let num = r.numer().magnitude().sqrt();
    let den = r.denom().magnitude().sqrt();
    if &(&num * &num) != r.numer().magnitude() || &(&den * &den) != r.denom().magnitude() {
        return domain(format!("{} is not a perfect square", canonical(r)));
    }
    Ok(Rational::new(
        BigInt::from_biguint(Sign::Plus, num),
        BigInt::from_biguint(Sign::Plus, den),
    ))
}

/// `x^e` for a half-unit exponent `e` (stored value is twice the power).
pub fn pow_half(x: &Rational, e_half: i32) -> Result<Rational> {
    if e_half == 0 {
        return Ok(Rational::one());
    }
    if x.is_zero() && e_half < 0 {
        return domain("zero raised to a negative power");
    }
    if e_half % 2 == 0 {
        Ok(num_traits::Pow::pow(x, e_half / 2))
    } else {
        let root = sqrt_exact(x)?;
        Ok(num_traits::Pow::pow(&root, e_half))
    }
}
