//! The x-derivative of the finite lemma at `x = 1`, equated with that of the
//! closed form:
//!
//! ```text
//! P(q) (c/2 - S_inf)
//!   + (q)_inf sum_{k_1..k_{m-1}} q^e [..] / (q)_{k_{m-1}} (E + S_{k_{m-1}})
//!   - sum_{k_1..k_m} ((q)_{k_m} - (q)_inf) q^e [..]
//!   = sum_n (n/2) chi(n) q^{(n^2-c^2)/K}
//! ```
//!
//! with `S_k = sum_{i=1}^k q^i/(1-q^i)`, `E = 2 sum k_i + k_{m-1}` and
//! `P = (q^{a+1}, q^{2m-a}, q^{2m+1}; q^{2m+1})_inf`. When `a = m-1`, `E`
//! drops by one and the left side gains `(q)_inf`.

use alloc::format;
use alloc::vec::Vec;

use super::{ag_product, bracket_product, chain_tuples, compare_series, div_one_minus, fit, theta_side, PochTable, QSeries};
use crate::characters::offset;
use crate::rational::{frac, from_bigint, Rational};
use crate::report::CheckReport;
use crate::series::{Series, TSeries, Var};
use crate::{check_ma, Result};

fn to_rational(s: &QSeries) -> TSeries {
    s.map(|c| from_bigint(c.clone()))
}

/// `S_k` for `k = 0..=order`; `S_k = S_inf` modulo `q^{order+1}` beyond that.
fn harmonic(order: usize) -> Vec<QSeries> {
    let mut out = alloc::vec![QSeries::zero(Var::Q, order)];
    for i in 1..=order {
        let mut t = QSeries::monomial(Var::Q, i, 1.into(), order);
        div_one_minus(&mut t, i);
        let next = out.last().unwrap() + &t;
        out.push(next);
    }
    out
}

pub fn verify_bridge_identity(m: usize, a: usize, order: usize) -> Result<CheckReport> {
    check_ma(m, a)?;
    let table = PochTable::new(order);
    let s = harmonic(order);
    let s_at = |k: usize| &s[k.min(order)];
    let last = a == m - 1;
    let c = offset(m, a);

    let mut half_c = TSeries::zero(Var::Q, order);
    *half_c.coeff_mut(0) = frac(c, 2);
    let block1 = &to_rational(&ag_product(m, a, order)) * &(&half_c - &to_rational(s_at(order)));

    let len = m - 1;
    let slack = if a >= 1 && a < len { a } else { 0 };
    let mut inner = QSeries::zero(Var::Q, order);
    for ks in chain_tuples(len, slack, order, |suffix| suffix.iter().map(|k| k * k).sum::<usize>() <= order) {
        let e: usize = ks.iter().enumerate().map(|(i, k)| k * k + if i + 1 > a { *k } else { 0 }).sum();
        if e > order {
            continue;
        }
        let top = ks.last().copied().unwrap_or(0);
        let big_e = 2 * ks.iter().sum::<usize>() as i64 + top as i64 - if last { 1 } else { 0 };
        let mut weight = s_at(top).clone();
        *weight.coeff_mut(0) += big_e;
        let term = &(&fit(&bracket_product(&ks, slack), order) * table.inv(top)) * &weight;
        inner = &inner + &term.shift(e);
    }
    let mut block2 = &inner * table.infinite();
    if last {
        block2 = &block2 + table.infinite();
    }

    let mut block3 = QSeries::zero(Var::Q, order);
    let tuples = chain_tuples(m, a, order.saturating_sub(1), |suffix| {
        let len = suffix.len();
        suffix[len - 1] + 1 + suffix[..len - 1].iter().map(|k| k * k).sum::<usize>() <= order
    });
    for ks in tuples {
        let km = ks[m - 1];
        let e: usize = (1..m).map(|i| ks[i - 1] * ks[i - 1] + if i > a { ks[i - 1] } else { 0 }).sum();
        if e > order {
            continue;
        }
        let diff = table.poch(km) - table.infinite();
        let term = &fit(&bracket_product(&ks, a), order) * &diff;
        block3 = &block3 + &term.shift(e);
    }

    let lhs = &(&block1 + &to_rational(&block2)) - &to_rational(&block3);
    let rhs: Series<Rational> = theta_side(m, a, order, |n| frac(n, 2))?;
    let mut report = CheckReport::new("bridge-identity")
        .param("m", m)
        .param("a", a)
        .param("order", order)
        .bound(format!("q^{order}; sums cut where the minimum q-degree exceeds {order}"));
    compare_series(&mut report, "lhs-vs-rhs", &lhs, &rhs);
    report.value("constant_term", rhs.coeff(0));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order() {
        for (m, a) in [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)] {
            let r = verify_bridge_identity(m, a, 12).unwrap();
            assert!(r.passed(), "({m},{a}) {:?}", r.first_failure());
        }
    }

    #[test]
    fn constant_term_is_half_offset() {
        let r = verify_bridge_identity(2, 0, 4).unwrap();
        assert_eq!(r.values[0].1, "3/2");
    }
}
