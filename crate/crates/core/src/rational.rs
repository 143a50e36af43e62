//! Exact rationals and small helpers around them.
//!
//! Everything in this crate is exact; [`Rational`] is an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Least common multiple of the denominators of `qs` (1 for an empty list).
pub fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Renders `p/q` in lowest terms, omitting `/q` when `q == 1`.
pub fn format(q: &Rational) -> String {
    q.to_string()
}

pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {t:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {t:?}")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

/// Converts an integral rational to `i64` when it fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !is_integer(q) {
        return None;
    }
    i64::try_from(q.numer()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(format(&q), "-3/2");
        assert_eq!(format(&int(5)), "5");
        assert_eq!(format(&rat(4, 2)), "2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse(" -3 ").unwrap(), int(-3));
        assert_eq!(parse("4/-6").unwrap(), rat(-2, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn denominators() {
        let qs = [rat(1, 2), rat(1, 3), int(4)];
        assert_eq!(common_denominator(&qs), BigInt::from(6));
    }
}
