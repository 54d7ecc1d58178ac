//! The t-expansion of `X_m^(a)(e^{-t})` and its L-value form.
//!
//! ```text
//! X_m^(a)(q) = sum (q)_{k_m} q^{k_1^2+...+k_{m-1}^2 + k_{a+1}+...+k_{m-1}}
//!              prod_{i != a} [k_{i+1} over k_i] [k_{a+1}+1 over k_a]
//! X_m^(a)(e^{-t}) = e^{c^2 t/K} sum_n T_m^(a)(n)/n! (t/K)^n,  c = 2m-2a-1, K = 8(2m+1)
//! ```

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::apcomplex::ApReal;
use crate::characters::{chi_general, level, offset};
use crate::lvalues::{t_values, theta_weighted_sum, truncate_terms, Terms};
use crate::qseries::{pochhammer_q, qbinomial, QSeries};
use crate::rational::{factorial, frac, int, pow, Rational};
use crate::series::{compose_exp_neg_t, exp_scaled, Series, TSeries, Var};
use crate::{check_ma, Error, Result};

/// Inner sums `v(k) = sum_{k_1..k_{m-1}, k_{m-1}... -> k_m = k}` as exact
/// q-polynomials, for `k = 0..=cutoff`.
///
/// Chain dynamic programming: `v_1(k) = 1` and
/// `v_{i+1}(k') = sum_k q^{w_i(k)} v_i(k) [k' + s_i over k]` where `s_i = 1`
/// at `i = a` and `w_i(k) = k^2 (+ k when i > a)`.
pub fn inner_sums(m: usize, a: usize, cutoff: usize) -> Result<Vec<QSeries>> {
    check_ma(m, a)?;
    // one slack step lets a lower index reach cutoff + 1
    let len = cutoff + 2;
    let mut v: Vec<QSeries> = vec![QSeries::one(Var::Q, 0); len];
    for i in 1..m {
        let s = usize::from(i == a);
        let mut next = Vec::with_capacity(len);
        for kp in 0..len {
            let mut acc: Vec<BigInt> = Vec::new();
            for k in 0..=(kp + s).min(len - 1) {
                let w = k * k + if i > a { k } else { 0 };
                let b = qbinomial((kp + s) as i64, k as i64).series;
                let prod = crate::qseries::poly_mul(&v[k], &b);
                crate::qseries::poly_add_shifted(&mut acc, &prod, w);
            }
            if acc.is_empty() {
                acc.push(BigInt::zero());
            }
            next.push(Series::from_coeffs(Var::Q, acc));
        }
        v = next;
    }
    v.truncate(cutoff + 1);
    Ok(v)
}

/// `X_m^(a)(e^{-t})` modulo `t^{order+1}` from the multi-sum with `k_m <= cutoff`.
pub fn x_multisum_tseries_cutoff(m: usize, a: usize, order: usize, cutoff: usize) -> Result<TSeries> {
    let v = inner_sums(m, a, cutoff)?;
    let mut acc = TSeries::zero(Var::T, order);
    for (km, inner) in v.iter().enumerate() {
        let poch = pochhammer_q(km, km * (km + 1) / 2).series;
        let poly = crate::qseries::poly_mul(&poch, inner);
        acc = &acc + &compose_exp_neg_t(&poly, order);
    }
    Ok(acc)
}

/// `(e^{-t})_{k_m}` is `O(t^{k_m})`, so `k_m <= order` is exact.
pub fn x_multisum_tseries(m: usize, a: usize, order: usize) -> Result<TSeries> {
    x_multisum_tseries_cutoff(m, a, order, order)
}

/// `e^{c^2 t/K} sum_{n<=order} T(n)/n! (t/K)^n` modulo `t^{order+1}`.
pub fn x_lvalue_tseries(m: usize, a: usize, order: usize) -> Result<TSeries> {
    let t = t_values(m, a, order + 1)?;
    let (c, k) = (offset(m, a), level(m));
    let mut tail = TSeries::zero(Var::T, order);
    for (n, tn) in t.iter().enumerate() {
        *tail.coeff_mut(n) = tn / Rational::from_integer(factorial(n) * BigInt::from(k).pow(n as u32));
    }
    Ok(&exp_scaled(&frac(c * c, k), order) * &tail)
}

#[derive(Clone, Debug, PartialEq)]
pub struct XSeriesResult {
    pub m: usize,
    pub a: usize,
    pub order: usize,
    pub lhs: TSeries,
    pub rhs: TSeries,
    /// Highest `d` with agreement in every coefficient up to `t^d`; `-1`
    /// if the constant terms already differ.
    pub equal_through: i64,
    pub mismatch: Option<(usize, Rational, Rational)>,
}

impl XSeriesResult {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

pub fn verify_theorem(m: usize, a: usize, order: usize) -> Result<XSeriesResult> {
    let lhs = x_multisum_tseries(m, a, order)?;
    let rhs = x_lvalue_tseries(m, a, order)?;
    let mismatch = lhs.first_mismatch(&rhs);
    let equal_through = mismatch.as_ref().map_or(order as i64, |(d, _, _)| *d as i64 - 1);
    Ok(XSeriesResult { m, a, order, lhs, rhs, equal_through, mismatch })
}

#[derive(Clone, Debug)]
pub struct NumericReport {
    pub lhs: ApReal,
    pub rhs: ApReal,
    pub residual: ApReal,
    pub first_omitted: ApReal,
    pub terms_used: usize,
}

/// `-1/2 sum n chi(n) e^{-(n^2-c^2) t0/K}` against the truncated L-value series at `t0`.
pub fn half_derivative_numeric_check(m: usize, a: usize, t0: &Rational, terms: Terms, bits: usize) -> Result<NumericReport> {
    check_ma(m, a)?;
    if t0 <= &Rational::zero() {
        return Err(Error::InvalidParameter("t0 must be positive"));
    }
    let chi = chi_general(m, a)?;
    let (c, k) = (offset(m, a), level(m));
    let s = t0 / int(k);
    let work = bits + 64;
    let lhs = theta_weighted_sum(&chi, c, &s, work, bits)?.div_i64(-2);

    let mut cache: Vec<Rational> = Vec::new();
    let term = |n: usize| {
        if cache.len() <= n {
            cache = t_values(m, a, (2 * n).max(32)).expect("parameters checked");
        }
        &cache[n] * pow(&s, n) / Rational::from_integer(factorial(n))
    };
    let (kept, omitted) = truncate_terms(terms, term, |r: &Rational| ApReal::from_rational(&num_traits::Signed::abs(r), 128), 400);
    let prefactor = ApReal::from_rational(&(&s * int(c * c)), work).exp();
    let tail: Rational = kept.iter().sum();
    let rhs = prefactor.mul(&ApReal::from_rational(&tail, work));
    let first_omitted = prefactor.mul(&ApReal::from_rational(&num_traits::Signed::abs(&omitted), work));
    Ok(NumericReport {
        residual: lhs.sub(&rhs).abs().with_bits(bits),
        lhs: lhs.with_bits(bits),
        rhs: rhs.with_bits(bits),
        first_omitted: first_omitted.with_bits(bits),
        terms_used: kept.len(),
    })
}

/// `X_m^(a)(1) = a + 1`: at `q = 1` only `k_m = 0` survives, which forces
/// `k_{a+1} = ... = k_{m-1} = 0` and leaves `0 <= k_1 <= ... <= k_a <= 1`.
pub fn x_at_one(m: usize, a: usize) -> Result<i64> {
    check_ma(m, a)?;
    Ok(a as i64 + 1)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: &[Rational]) -> TSeries {
        Series::from_coeffs(Var::T, c.to_vec())
    }

    #[test]
    fn multisum_examples() {
        assert_eq!(x_multisum_tseries(1, 0, 0).unwrap(), t(&[int(1)]));
        assert_eq!(x_multisum_tseries(1, 0, 1).unwrap(), t(&[int(1), int(1)]));
        // the constant term is X(1) = a + 1, so (2,0) starts 1 + 2t
        assert_eq!(x_multisum_tseries(2, 0, 1).unwrap(), t(&[int(1), int(2)]));
    }

    #[test]
    fn lvalue_examples() {
        assert_eq!(x_lvalue_tseries(2, 0, 0).unwrap(), t(&[int(1)]));
        let z = x_lvalue_tseries(1, 0, 1).unwrap();
        assert_eq!(z, t(&[int(1), frac(1, 24) + frac(23, 24)]));
        let r = x_lvalue_tseries(2, 0, 1).unwrap();
        assert_eq!(r.coeff(1), &(frac(9, 40) + frac(71, 40)));
        // e^{t/40} prefactor for (2,1): T(0) = 2, T(1) from the generating function
        let r = x_lvalue_tseries(2, 1, 1).unwrap();
        let t1 = crate::lvalues::t_value_genfun(2, 1, 1).unwrap();
        assert_eq!(r.coeff(1), &(frac(2, 40) + t1 / int(40)));
    }

    #[test]
    fn constant_term_is_value_at_one() {
        for m in 1..=4 {
            for a in 0..m {
                let s = x_multisum_tseries(m, a, 2).unwrap();
                assert_eq!(s.coeff(0), &int(x_at_one(m, a).unwrap()));
            }
        }
    }

    #[test]
    fn cutoff_is_sufficient() {
        for (m, a) in [(1, 0), (2, 1), (3, 1)] {
            let base = x_multisum_tseries_cutoff(m, a, 6, 6).unwrap();
            assert_eq!(base, x_multisum_tseries_cutoff(m, a, 6, 8).unwrap());
        }
    }

    #[test]
    fn m_one_matches_direct_expansion() {
        let d = 8;
        let e = crate::series::series_exp_neg_t(d);
        let mut direct = TSeries::zero(Var::T, d);
        let mut prod = TSeries::one(Var::T, d);
        for n in 0..=d {
            direct = &direct + &prod;
            let mut f = TSeries::one(Var::T, d);
            f = &f - &crate::series::series_compose_power(&e, n + 1);
            prod = &prod * &f;
        }
        assert_eq!(x_multisum_tseries(1, 0, d).unwrap(), direct);
    }

    #[test]
    fn theorem_small() {
        for (m, a, d) in [(1, 0, 8), (2, 0, 8), (2, 1, 8), (3, 2, 6)] {
            let r = verify_theorem(m, a, d).unwrap();
            assert!(r.passed(), "({m},{a}) {:?}", r.mismatch);
            assert_eq!(r.equal_through, d as i64);
        }
        assert!(verify_theorem(2, 2, 3).is_err());
    }

    #[test]
    fn numeric_examples() {
        let t0 = frac(1, 100);
        for (m, a) in [(2, 0), (1, 0)] {
            let r = half_derivative_numeric_check(m, a, &t0, Terms::Fixed(6), 128).unwrap();
            assert!(r.residual <= r.first_omitted.mul_i64(2), "({m},{a})");
        }
        let r = half_derivative_numeric_check(2, 1, &t0, Terms::Fixed(1), 128).unwrap();
        assert!(r.residual.div(&r.rhs.abs()).to_f64() < 10.0 * 0.01);
        assert!(half_derivative_numeric_check(2, 0, &int(0), Terms::Fixed(3), 128).is_err());
    }
}
