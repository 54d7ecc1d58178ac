//! The Andrews–Gordon identity and its bracketed variant.

use alloc::format;

use num_bigint::BigInt;
use num_traits::One;

use super::{ag_product, bracket_product, chain_tuples, compare_series, div_one_minus, fit, theta_side, PochTable, QSeries};
use crate::report::CheckReport;
use crate::series::Var;
use crate::{check_ma, Error, Result};

fn isqrt(n: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn check_m2(m: usize, a: usize) -> Result<()> {
    check_ma(m, a)?;
    if m < 2 {
        return Err(Error::InvalidParameter("m must be at least 2"));
    }
    Ok(())
}

/// `sum q^{n_1^2+...+n_{m-1}^2 + n_{a+1}+...+n_{m-1}} / ((q)_{n_1-n_2} ... (q)_{n_{m-1}})`
/// over `n_1 >= ... >= n_{m-1} >= 0`, through `q^order`.
pub fn andrews_gordon_sum(m: usize, a: usize, order: usize) -> Result<QSeries> {
    check_m2(m, a)?;
    let len = m - 1;
    let table = PochTable::new(order);
    let mut acc = QSeries::zero(Var::Q, order);
    // x_j = n_{m-j} is nondecreasing in j
    let tuples = chain_tuples(len, 0, isqrt(order), |suffix| suffix.iter().map(|k| k * k).sum::<usize>() <= order);
    for x in tuples {
        let n = |i: usize| x[len - i];
        let e: usize = (1..=len).map(|i| n(i) * n(i) + if i > a { n(i) } else { 0 }).sum();
        if e > order {
            continue;
        }
        let mut term = table.inv(n(len)).clone();
        for i in 1..len {
            term = &term * table.inv(n(i) - n(i + 1));
        }
        acc = &acc + &term.shift(e);
    }
    Ok(acc)
}

/// `sum q^{k_1^2+...+k_{m-1}^2 + k_{a+1}+...+k_{m-1}} / (q)_{k_{m-1}}` times the
/// brackets `[k_{i+1} over k_i]` (`i <= m-2`, `i != a`) and `[k_{a+1}+1 over k_a]`.
///
/// For `a = m-1` the last bracket would involve the unsummed `k_m` and is
/// omitted; for `a = 0` it is 1.
pub fn variant_ag_sum(m: usize, a: usize, order: usize) -> Result<QSeries> {
    check_m2(m, a)?;
    let len = m - 1;
    let slack = if a >= 1 && a < len { a } else { 0 };
    let table = PochTable::new(order);
    let mut acc = QSeries::zero(Var::Q, order);
    let tuples = chain_tuples(len, slack, isqrt(order), |suffix| suffix.iter().map(|k| k * k).sum::<usize>() <= order);
    for ks in tuples {
        let e: usize = ks.iter().enumerate().map(|(i, k)| k * k + if i + 1 > a { *k } else { 0 }).sum();
        if e > order {
            continue;
        }
        let br = bracket_product(&ks, slack);
        let term = &fit(&br, order) * table.inv(ks[len - 1]);
        acc = &acc + &term.shift(e);
    }
    Ok(acc)
}

/// Multi-sum against `prod_{n != 0, +-(a+1) mod 2m+1} (1-q^n)^{-1}` and
/// against `(q)_inf^{-1} sum chi(n) q^{(n^2-c^2)/K}`.
pub fn verify_andrews_gordon(m: usize, a: usize, order: usize) -> Result<CheckReport> {
    let sum = andrews_gordon_sum(m, a, order)?;
    let modulus = 2 * m + 1;
    let mut product = QSeries::one(Var::Q, order);
    for n in 1..=order {
        let r = n % modulus;
        if r != 0 && r != a + 1 && r != 2 * m - a {
            div_one_minus(&mut product, n);
        }
    }
    let table = PochTable::new(order);
    let theta = &theta_side(m, a, order, |_| BigInt::one())? * table.inv_infinite();
    let mut report = CheckReport::new("andrews-gordon")
        .param("m", m)
        .param("a", a)
        .param("order", order)
        .bound(format!("n_1^2 + ... + n_(m-1)^2 <= {order}; products over factors n <= {order}"));
    compare_series(&mut report, "sum-vs-product", &sum, &product);
    compare_series(&mut report, "sum-vs-theta", &sum, &theta);
    Ok(report)
}

/// `(q^{a+1}, q^{2m-a}, q^{2m+1}; q^{2m+1})_inf / (q)_inf` against [`variant_ag_sum`].
pub fn verify_variant_ag(m: usize, a: usize, order: usize) -> Result<CheckReport> {
    let sum = variant_ag_sum(m, a, order)?;
    let table = PochTable::new(order);
    let product = &ag_product(m, a, order) * table.inv_infinite();
    let mut report = CheckReport::new("andrews-gordon-variant")
        .param("m", m)
        .param("a", a)
        .param("order", order)
        .bound(format!("k_1^2 + ... + k_(m-1)^2 <= {order}"));
    compare_series(&mut report, "product-vs-sum", &product, &sum);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn head(s: &QSeries, n: usize) -> alloc::vec::Vec<i64> {
        s.coeffs()[..n].iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn low_order_examples() {
        let s = andrews_gordon_sum(2, 0, 30).unwrap();
        assert_eq!(head(&s, 7), [1, 0, 1, 1, 1, 1, 2]);
        let s = andrews_gordon_sum(2, 1, 30).unwrap();
        assert_eq!(head(&s, 5), [1, 1, 1, 1, 2]);
        for (m, a) in [(2, 0), (3, 1), (4, 3)] {
            assert_eq!(head(&andrews_gordon_sum(m, a, 0).unwrap(), 1), [1]);
            assert_eq!(head(&variant_ag_sum(m, a, 0).unwrap(), 1), [1]);
        }
    }

    #[test]
    fn identities_hold() {
        for m in 2..=3 {
            for a in 0..m {
                let r = verify_andrews_gordon(m, a, 30).unwrap();
                assert!(r.passed(), "{:?}", r.first_failure());
                let r = verify_variant_ag(m, a, 30).unwrap();
                assert!(r.passed(), "({m},{a}) {:?}", r.first_failure());
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(verify_andrews_gordon(1, 0, 10).is_err());
        assert!(verify_variant_ag(2, 2, 10).is_err());
    }
}
