//! Bernoulli numbers and polynomials.
//!
//! Numbers are generated once by the recurrence
//! `sum_{k=0}^{n} C(n+1, k) B_k = 0` (with `B_1 = -1/2`) and memoized
//! process-wide. The table only ever grows; concurrent fills are serialized
//! behind a write lock so every reader sees the same values.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use spin::RwLock;

use crate::rational::{binomial, Rational};

static TABLE: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// The Bernoulli number `B_n` (convention `B_1 = -1/2`).
pub fn bernoulli_number(n: usize) -> Rational {
    {
        let table = TABLE.read();
        if let Some(b) = table.get(n) {
            return b.clone();
        }
    }
    let mut table = TABLE.write();
    while table.len() <= n {
        let k = table.len();
        let next = if k == 0 {
            Rational::one()
        } else {
            let mut acc = Rational::zero();
            for (j, b) in table.iter().enumerate() {
                acc += Rational::from_integer(binomial(k + 1, j)) * b;
            }
            -acc / Rational::from_integer(BigInt::from(k + 1))
        };
        table.push(next);
    }
    table[n].clone()
}

/// Bernoulli numbers `B_0..=B_n`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    bernoulli_number(n);
    TABLE.read()[..=n].to_vec()
}

/// `B_n(x) = sum_k C(n, k) B_k x^{n-k}`, exactly.
pub fn bernoulli_polynomial(n: usize, x: &Rational) -> Rational {
    let numbers = bernoulli_numbers(n);
    // Horner in x over the coefficients C(n, k) B_k of x^{n-k}.
    let mut acc = Rational::zero();
    for (k, b) in numbers.iter().enumerate() {
        acc = acc * x + Rational::from_integer(binomial(n, k)) * b;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    /// Independent oracle: the defining polynomial recurrence
    /// `sum_{k=0}^{n} C(n+1, k) B_k(x) = (n+1) x^n`.
    fn satisfies_recurrence(n: usize, x: &Rational) -> bool {
        let mut lhs = Rational::zero();
        for k in 0..=n {
            lhs += Rational::from_integer(binomial(n + 1, k)) * bernoulli_polynomial(k, x);
        }
        lhs == int(n as i64 + 1) * crate::rational::pow(x, n)
    }

    #[test]
    fn spec_examples() {
        assert_eq!(bernoulli_polynomial(0, &frac(7, 3)), int(1));
        assert_eq!(bernoulli_polynomial(1, &int(0)), frac(-1, 2));
        assert_eq!(bernoulli_polynomial(2, &frac(1, 2)), frac(-1, 12));
    }

    #[test]
    fn known_numbers() {
        assert_eq!(bernoulli_number(2), frac(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(4), frac(-1, 30));
        assert_eq!(bernoulli_number(12), frac(-691, 2730));
    }

    #[test]
    fn recurrence_holds() {
        for n in 0..24 {
            for x in [int(0), frac(1, 2), frac(-5, 7), int(3)] {
                assert!(satisfies_recurrence(n, &x), "n = {n}, x = {x}");
            }
        }
    }

    #[test]
    fn endpoint_difference() {
        for n in 0..30 {
            let b0 = bernoulli_polynomial(n, &int(0));
            assert_eq!(b0, bernoulli_number(n));
            let diff = bernoulli_polynomial(n, &int(1)) - b0;
            let expected = if n == 1 { int(1) } else { int(0) };
            assert_eq!(diff, expected, "n = {n}");
        }
    }

    #[test]
    fn concurrent_fill_is_consistent() {
        extern crate std;
        let handles: Vec<_> = (0..4)
            .map(|i| std::thread::spawn(move || bernoulli_number(40 + i)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, b) in got.iter().enumerate() {
            assert_eq!(b, &bernoulli_number(40 + i));
        }
        assert_eq!(bernoulli_number(41), int(0));
    }
}
