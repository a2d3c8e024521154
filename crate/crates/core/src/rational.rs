//! Exact rational scalars and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Scalar type used throughout the engine.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p/q` with a positive denominator, always including
/// the denominator.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Compact rendering: integers without `/1`.
pub fn format_q_short(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format_q(x)
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim().replace('\u{2212}', "-");
    let bad = || Error::MalformedRational(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn is_one(x: &Q) -> bool {
    x.is_one()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_reduces_and_keeps_denominator() {
        assert_eq!(format_q(&q_frac(4, -6)), "-2/3");
        assert_eq!(format_q(&q(5)), "5/1");
        assert_eq!(format_q_short(&q(5)), "5");
    }

    #[test]
    fn parse_accepts_unicode_minus() {
        assert_eq!(parse_q("\u{2212}1/1").unwrap(), q(-1));
        assert_eq!(parse_q("3/6").unwrap(), q_frac(1, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }
}
