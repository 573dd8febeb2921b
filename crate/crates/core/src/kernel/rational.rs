//! Arbitrary-precision rationals.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so it is used directly; this module adds the strict textual
//! form used by every file format (`a` or `a/b`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `-?[0-9]+(/[0-9]+)?`. No whitespace, no leading `+`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::parse("rational", format!("{msg}: {s:?}"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) {
        return Err(bad("expected integer numerator"));
    }
    let mut n: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    if neg {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| bad("bad denominator"))?,
        Some(_) => return Err(bad("expected integer denominator")),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Lowest-terms rendering: `a` when integral, otherwise `a/b`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_one_abs(q: &Rational) -> bool {
    q.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rational("0/5").unwrap(), rat(0));
        assert_eq!(format_rational(&parse_rational("-4/6").unwrap()), "-2/3");
        assert_eq!(format_rational(&parse_rational("-0").unwrap()), "0");
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "-", "1/", "/2", "1/0", "+1", " 1", "1.5", "1/-2", "--1", "a"] {
            assert!(parse_rational(s).is_err(), "{s:?} accepted");
        }
    }
}
