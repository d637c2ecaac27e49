//! Exact rational scalars and their `"p/q"` string form.
//!
//! Every exact channel in this crate (JSON and CLI alike) carries rationals
//! as strings, never as floats. `parse_rat` accepts `"p"` and `"p/q"`;
//! `format_rat` emits `"p"` when the denominator is one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational used throughout the crate.
pub type Rat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRatError {
    #[error("empty rational string")]
    Empty,
    #[error("invalid rational `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Build a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Build an integer-valued rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse `"p"` or `"p/q"` (optionally signed) into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRatError::Empty);
    }
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .unwrap()
        .trim()
        .parse()
        .map_err(|_| ParseRatError::Invalid(s.to_string()))?;
    let denom: BigInt = match parts.next() {
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| ParseRatError::Invalid(s.to_string()))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(ParseRatError::ZeroDenominator(s.to_string()));
    }
    Ok(Rat::new(numer, denom))
}

/// Render a rational as `"p"` or `"p/q"`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Approximate a rational as `f64`.  Exact channels never round-trip
/// through this; it exists for display and for float-mode matrix entries.
pub fn rat_to_f64(r: &Rat) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Floor of `a / b` for positive rationals.
pub fn floor_div(a: &Rat, b: &Rat) -> BigInt {
    (a / b).floor().to_integer()
}

pub fn is_positive(r: &Rat) -> bool {
    r.is_positive()
}

/// Serde adapter: a single rational as a `"p/q"` string.
pub mod rat_string {
    use super::{format_rat, parse_rat, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rat, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rat(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: a vector of rationals as `"p/q"` strings.
pub mod rat_vec_string {
    use super::{format_rat, parse_rat, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[Rat], serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(values.iter().map(format_rat))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<Rat>, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        raw.iter()
            .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["2", "3/2", "-7/3", "0", "10/4"] {
            let r = parse_rat(s).unwrap();
            let back = parse_rat(&format_rat(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(format_rat(&parse_rat("10/4").unwrap()), "5/2");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn floor_div_examples() {
        assert_eq!(floor_div(&rat(7, 2), &rat(1, 1)), BigInt::from(3));
        assert_eq!(floor_div(&rat(6, 1), &rat(2, 1)), BigInt::from(3));
    }
}
