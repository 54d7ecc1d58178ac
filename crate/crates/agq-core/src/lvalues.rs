//! T-values `T_m^(a)(n)` and L-values at negative odd integers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::apcomplex::ApReal;
use crate::bernoulli::bernoulli_polynomial;
use crate::characters::{chi_general, PeriodicCharacter};
use crate::rational::{factorial, frac, int, pow, sign, Rational};
use crate::series::{Series, Var};
use crate::{check_ma, Error, Result};

/// Bernoulli route:
/// `(-1)^n 2^{4n} (2m+1)^{2n+1}/(n+1) * sum_{r=1}^{8m+4} chi(r) B_{2n+2}(r/(8m+4))`.
pub fn t_value_bernoulli(m: usize, a: usize, n: usize) -> Result<Rational> {
    let chi = chi_general(m, a)?;
    let p = chi.modulus() as i64;
    let mut sum = Rational::zero();
    for (r, v) in chi.support() {
        let b = bernoulli_polynomial(2 * n + 2, &frac(r as i64, p));
        if v > 0 { sum += b } else { sum -= b }
    }
    let scale = Rational::from_integer(BigInt::from(16u32).pow(n as u32) * BigInt::from(2 * m + 1).pow(2 * n as u32 + 1));
    Ok(sum * scale * int(sign(n))  / int(n as i64 + 1))
}

/// Taylor coefficients of `sinh(2(a+1)x) / cosh((2m+1)x)` through `x^order`.
fn genfun(m: usize, a: usize, order: usize) -> Series<Rational> {
    let (s, c) = (2 * (a as i64 + 1), 2 * m as i64 + 1);
    let mut num = Vec::with_capacity(order + 1);
    let mut den = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let f = Rational::from_integer(factorial(k));
        num.push(if k % 2 == 1 { pow(&int(s), k) / &f } else { Rational::zero() });
        den.push(if k % 2 == 0 { pow(&int(c), k) / &f } else { Rational::zero() });
    }
    let num = Series::from_coeffs(Var::X, num);
    let den = Series::from_coeffs(Var::X, den);
    num.div(&den).expect("cosh has constant term 1")
}

fn t_from_genfun(g: &Series<Rational>, n: usize) -> Rational {
    g.coeff(2 * n + 1) * Rational::from_integer(factorial(2 * n + 1)) * int(sign(n)) / int(2)
}

/// Generating-function route: `(-1)^n (2n+1)!/2 [x^{2n+1}] sinh(2(a+1)x)/cosh((2m+1)x)`.
pub fn t_value_genfun(m: usize, a: usize, n: usize) -> Result<Rational> {
    check_ma(m, a)?;
    Ok(t_from_genfun(&genfun(m, a, 2 * n + 1), n))
}

/// `T_m^(a)(0..count)` from one generating-function expansion.
pub fn t_values(m: usize, a: usize, count: usize) -> Result<Vec<Rational>> {
    check_ma(m, a)?;
    if count == 0 {
        return Ok(Vec::new());
    }
    let g = genfun(m, a, 2 * count - 1);
    Ok((0..count).map(|n| t_from_genfun(&g, n)).collect())
}

/// `L(-2n-1, chi) = -(1/(2n+2)) p^{2n+1} sum_{r=1}^{p} chi(r) B_{2n+2}(r/p)`.
pub fn l_value_negative(chi: &PeriodicCharacter, n: usize) -> Result<Rational> {
    let mean = chi.mean_sum();
    if mean != 0 {
        return Err(Error::NonzeroMean { sum: mean });
    }
    let p = chi.modulus() as i64;
    let mut sum = Rational::zero();
    for r in 1..=p {
        let v = chi.eval(r);
        if v != 0 {
            sum += bernoulli_polynomial(2 * n + 2, &frac(r, p)) * int(v);
        }
    }
    Ok(-sum * pow(&int(p), 2 * n + 1) / int(2 * n as i64 + 2))
}

/// How many terms of an asymptotic series to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Terms {
    Fixed(usize),
    /// Stop just before the smallest nonzero term.
    Optimal,
}

impl Terms {
    pub fn parse(s: &str) -> Result<Self> {
        if s == "optimal" {
            return Ok(Terms::Optimal);
        }
        s.parse().map(Terms::Fixed).map_err(|_| Error::Parse("expected an integer or \"optimal\""))
    }
}

/// Chooses the truncation point of an asymptotic series given lazily by
/// `term(k)`. Returns `(kept, omitted)` where `kept` holds the terms used and
/// `omitted` is the first dropped term.
pub(crate) fn truncate_terms<T: Clone>(
    terms: Terms,
    mut term: impl FnMut(usize) -> T,
    magnitude: impl Fn(&T) -> ApReal,
    limit: usize,
) -> (Vec<T>, T) {
    match terms {
        Terms::Fixed(n) => {
            let kept = (0..n).map(&mut term).collect();
            (kept, term(n))
        }
        Terms::Optimal => {
            let mut all: Vec<T> = Vec::new();
            let mut best: Option<(usize, ApReal)> = None;
            for k in 0..limit {
                let t = term(k);
                let mag = magnitude(&t);
                all.push(t);
                if mag.is_zero() {
                    continue;
                }
                match &best {
                    Some((_, b)) if &mag >= b => {
                        // far past the minimum: factorial growth has taken over
                        if mag > b.mul(&ApReal::pow2(20, b.bits())) {
                            break;
                        }
                    }
                    _ => best = Some((k, mag)),
                }
            }
            let k = best.map(|b| b.0).unwrap_or(all.len() - 1);
            let omitted = all[k].clone();
            all.truncate(k);
            (all, omitted)
        }
    }
}

#[derive(Clone, Debug)]
pub struct MellinReport {
    pub lhs: ApReal,
    pub rhs: ApReal,
    pub residual: ApReal,
    pub first_omitted: ApReal,
    pub terms_used: usize,
}

/// Compares `sum_n n chi(n) e^{-n^2 t0}` with `sum_k L(-2k-1, chi)(-t0)^k/k!`.
pub fn mellin_asymptotic_check(chi: &PeriodicCharacter, t0: &Rational, terms: Terms, bits: usize) -> Result<MellinReport> {
    if !t0.is_positive() {
        return Err(Error::InvalidParameter("t0 must be positive"));
    }
    if terms == Terms::Fixed(0) {
        return Err(Error::InvalidParameter("terms must be at least 1"));
    }
    if chi.mean_sum() != 0 {
        return Err(Error::NonzeroMean { sum: chi.mean_sum() });
    }
    let work = bits + 64;
    let lhs = theta_weighted_sum(chi, 0, t0, work, bits)?;

    let mut l_cache: Vec<Rational> = Vec::new();
    let term = |k: usize| {
        while l_cache.len() <= k {
            let n = l_cache.len();
            l_cache.push(l_value_negative(chi, n).expect("mean checked"));
        }
        &l_cache[k] * pow(&-t0.clone(), k) / Rational::from_integer(factorial(k))
    };
    let (kept, omitted) = truncate_terms(terms, term, |r: &Rational| ApReal::from_rational(&r.abs(), 128), 400);
    let rhs_exact: Rational = kept.iter().sum();
    let rhs = ApReal::from_rational(&rhs_exact, work);
    let residual = lhs.sub(&rhs).abs().with_bits(bits);
    Ok(MellinReport {
        lhs: lhs.with_bits(bits),
        rhs: rhs.with_bits(bits),
        residual,
        first_omitted: ApReal::from_rational(&omitted.abs(), bits),
        terms_used: kept.len(),
    })
}

/// `sum_{n>=1} n chi(n) e^{-(n^2 - c^2) t}` at `work` bits, stopping once the
/// envelope `n e^{-(n^2-c^2) t}` is past its peak and below `2^{-bits}`.
pub(crate) fn theta_weighted_sum(chi: &PeriodicCharacter, c: i64, t: &Rational, work: usize, bits: usize) -> Result<ApReal> {
    let tr = ApReal::from_rational(t, work);
    let step = tr.neg().exp();
    let step2 = step.mul(&step);
    // e^{-n^2 t} by the recurrence e^{-(n+1)^2 t} = e^{-n^2 t} e^{-(2n+1) t}
    let mut g = step.clone();
    let mut odd = step.mul(&step2);
    let shift = ApReal::from_rational(&(t * int(c * c)), work).exp();
    let tiny = ApReal::pow2(-(bits as i32) - 8, work);
    let mut acc = ApReal::zero(work);
    let mut n: i64 = 1;
    loop {
        let envelope = g.mul(&shift).mul_i64(n);
        let v = chi.eval(n);
        if v != 0 {
            acc = acc.add(&envelope.mul_i64(v));
        }
        if Rational::from_integer(BigInt::from(2 * n * n)) * t > Rational::one() && envelope < tiny {
            break;
        }
        g = g.mul(&odd);
        odd = odd.mul(&step2);
        n += 1;
        if n > 1 << 26 {
            return Err(Error::InvalidParameter("t0 too small for numeric summation"));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{chi_12, chi_20};

    #[test]
    fn glaisher_oracle() {
        let expected = [1i64, 23, 1681, 257543, 67637281];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(t_value_genfun(1, 0, n).unwrap(), int(e));
            assert_eq!(t_value_bernoulli(1, 0, n).unwrap(), int(e));
        }
        let m2 = [1i64, 71, 14641, 6242711];
        for (n, &e) in m2.iter().enumerate() {
            assert_eq!(t_value_genfun(2, 0, n).unwrap(), int(e));
        }
    }

    #[test]
    fn leading_value_is_a_plus_one() {
        for m in 1..6 {
            for a in 0..m {
                assert_eq!(t_value_genfun(m, a, 0).unwrap(), int(a as i64 + 1));
                assert_eq!(t_value_bernoulli(m, a, 0).unwrap(), int(a as i64 + 1));
            }
        }
        assert!(t_value_genfun(2, 2, 0).is_err());
        assert!(t_value_bernoulli(2, 5, 0).is_err());
    }

    #[test]
    fn l_value_examples() {
        assert_eq!(l_value_negative(&chi_12(), 0).unwrap(), int(-2));
        assert_eq!(l_value_negative(&chi_12(), 1).unwrap(), int(46));
        assert_eq!(l_value_negative(&chi_20(0).unwrap(), 0).unwrap(), int(-2));
        let bad = PeriodicCharacter::new_unchecked(alloc::vec![1, 0]);
        assert!(matches!(l_value_negative(&bad, 0), Err(Error::NonzeroMean { .. })));
    }

    #[test]
    fn routes_and_relation_agree() {
        for m in 1..=3 {
            for a in 0..m {
                let chi = chi_general(m, a).unwrap();
                let batch = t_values(m, a, 8).unwrap();
                for n in 0..8 {
                    let b = t_value_bernoulli(m, a, n).unwrap();
                    assert_eq!(b, t_value_genfun(m, a, n).unwrap());
                    assert_eq!(b, batch[n]);
                    let l = l_value_negative(&chi, n).unwrap();
                    assert_eq!(b, l * int(-sign(n)) / int(2));
                }
            }
        }
    }

    #[test]
    fn mellin_examples() {
        let t0 = frac(1, 100);
        let r = mellin_asymptotic_check(&chi_12(), &t0, Terms::Fixed(4), 128).unwrap();
        assert!(r.residual <= r.first_omitted.mul_i64(2));
        let r1 = mellin_asymptotic_check(&chi_12(), &t0, Terms::Fixed(1), 128).unwrap();
        assert_eq!(r1.rhs, ApReal::from_i64(-2, 128));
        assert!(r1.residual.to_f64() < 100.0 * 0.01);
        assert!(mellin_asymptotic_check(&chi_12(), &t0, Terms::Fixed(0), 128).is_err());
        assert!(mellin_asymptotic_check(&chi_12(), &frac(-1, 10), Terms::Fixed(3), 128).is_err());
        assert!(mellin_asymptotic_check(&chi_12(), &Rational::zero(), Terms::Fixed(3), 128).is_err());
    }

    #[test]
    fn terms_parse() {
        assert_eq!(Terms::parse("optimal").unwrap(), Terms::Optimal);
        assert_eq!(Terms::parse("7").unwrap(), Terms::Fixed(7));
        assert!(Terms::parse("x").is_err());
    }
}
