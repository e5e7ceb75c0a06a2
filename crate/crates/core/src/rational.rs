//! The exact scalar type and a few constructors.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator, so structural equality is value equality.
//! Its `Display` already prints `p/q`, or `p` alone when `q = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?} (expected `p` or `p/q`)")]
pub struct ParseRationalError(pub String);

/// An integer as a rational.
pub fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `num/den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `1/v` for a nonzero integer.
pub fn recip(v: &BigInt) -> Rational {
    Rational::new(BigInt::one(), v.clone())
}

/// `(-1)^k` as a rational.
pub fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Parses `p`, `-p`, `p/q` (no whitespace inside; surrounding whitespace is ignored).
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p, q),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_canonical() {
        assert_eq!(ratio(2, 4).to_string(), "1/2");
        assert_eq!(ratio(-3, 6).to_string(), "-1/2");
        assert_eq!(ratio(3, -6).to_string(), "-1/2");
        assert_eq!(ratio(6, 3).to_string(), "2");
        assert_eq!(ratio(0, 5).to_string(), "0");
    }

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_rational("-691/2730").unwrap(), ratio(-691, 2730));
        assert_eq!(parse_rational("4/8").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn sign_alternates() {
        assert_eq!(sign(0), int(1));
        assert_eq!(sign(3), int(-1));
        assert_eq!(sign(-2), int(1));
    }
}
