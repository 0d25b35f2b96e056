//! Exact rational helpers. Rationals print in lowest terms as `p/q`, or `p`
//! when the denominator is one.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses a non-negative rational literal `p/q` or `p`.
pub fn parse_nonnegative(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty value".into());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p).map_err(|_| format!("invalid numerator in `{s}`"))?;
        let q = BigInt::from_str(q).map_err(|_| format!("invalid denominator in `{s}`"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        let r = Rational::new(p, q);
        if r.is_negative() {
            return Err(format!("negative value `{s}`"));
        }
        Ok(r)
    } else {
        let p = BigInt::from_str(s).map_err(|_| format!("invalid number `{s}`"))?;
        if p.is_negative() {
            return Err(format!("negative value `{s}`"));
        }
        Ok(Rational::from_integer(p))
    }
}

/// Parses a rational literal that may be negative.
pub fn parse_signed(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    match s.strip_prefix('-') {
        Some(rest) if !rest.starts_with('-') => parse_nonnegative(rest).map(|r| -r),
        _ => parse_nonnegative(s),
    }
}

pub(crate) fn serialize<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}
