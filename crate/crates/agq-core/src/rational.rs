//! Exact rationals.
//!
//! [`Rational`] is always reduced with a positive denominator; its text
//! encoding is `"p/q"` (or `"p"` for integers) and parses back losslessly.

use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `"p/q"` encoding; integers are written without a denominator.
pub fn to_fraction_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_fraction(s: &str) -> Result<Rational> {
    let s = s.trim();
    let r = Rational::from_str(s).map_err(|_| Error::Parse("expected p/q"))?;
    Ok(r)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`, zero outside `0..=n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn pow(r: &Rational, e: usize) -> Rational {
    num_traits::pow(r.clone(), e)
}

/// `(-1)^n` as a sign multiplier.
pub fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(to_fraction_string(&r), "-3/2");
        assert_eq!(to_fraction_string(&int(7)), "7");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_fraction("1/0x").is_err());
        assert!(parse_fraction("").is_err());
        assert_eq!(parse_fraction(" 10/4 ").unwrap(), frac(5, 2));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(6), BigInt::from(720));
    }

    proptest::proptest! {
        #[test]
        fn fraction_string_round_trips(p in -1_000_000_000i64..1_000_000_000, q in 1i64..1_000_000_000) {
            let r = frac(p, q) * frac(p, 7) + frac(1, q);
            proptest::prop_assert_eq!(parse_fraction(&to_fraction_string(&r)).unwrap(), r);
        }
    }
}
