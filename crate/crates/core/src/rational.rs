//! Exact rational scalars and their `p/q` text form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// Arbitrary-precision rational. Always normalized: positive denominator,
/// numerator and denominator coprime.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p` or `p/q`. Unreduced fractions and negative denominators are
/// accepted; the result is normalized.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let s = text.trim();
    let bad = || ParseError::Rational(text.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical text: `p/q` with `q > 0` and reduced, `p` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy conversion for display purposes only (SVG, text reports).
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// `r` as an integer when it is one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    is_integer(r).then(|| r.numer().clone())
}

pub fn floor_int(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub fn ceil_int(r: &Rational) -> BigInt {
    -(-r.numer()).div_floor(r.denom())
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// Midpoint of two rationals.
pub fn mid(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Serde adapter storing a [`Rational`] as its canonical string.
pub mod serde_str {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(d)? {
            Repr::Text(t) => parse_rational(&t).map_err(de::Error::custom),
            Repr::Int(n) => Ok(super::int(n)),
        }
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&format_rational(r)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            let t: Option<String> = Option::deserialize(d)?;
            t.map(|t| parse_rational(&t).map_err(de::Error::custom))
                .transpose()
        }
    }
}

/// Serde adapter for arbitrary-precision integers stored as decimal strings.
pub mod serde_bigint {
    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let t = String::deserialize(d)?;
        BigInt::from_str(&t).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rational("-5/4").unwrap(), frac(-5, 4));
        assert_eq!(parse_rational("6/-8").unwrap(), frac(-3, 4));
        assert_eq!(parse_rational("10/5").unwrap(), int(2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn emits_canonical_form() {
        assert_eq!(format_rational(&frac(10, -8)), "-5/4");
        assert_eq!(format_rational(&frac(4, 2)), "2");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(floor_int(&frac(-1, 2)), BigInt::from(-1));
        assert_eq!(ceil_int(&frac(-1, 2)), BigInt::from(0));
        assert_eq!(floor_int(&int(3)), BigInt::from(3));
        assert_eq!(ceil_int(&frac(7, 3)), BigInt::from(3));
    }
}
