//! The two-variable functions `H_m^(a)(x)` and `H~_m^(a)(x)`.
//!
//! ```text
//! H_m^(a)(x) = sum_{k_1..k_m} (x)_{k_m+1} x^{k_m}
//!              prod_{i<a} q^{k_i^2} x^{2k_i} [k_{i+1} over k_i]
//!              q^{k_a^2} x^{2k_a} [k_{a+1}+1 over k_a]
//!              prod_{a<i<m} q^{k_i^2+k_i} x^{2k_i} [k_{i+1} over k_i]
//!            = sum_n chi(n) q^{(n^2-c^2)/K} x^{(n-c)/2}
//! ```

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{ag_product, bracket_product, chain_tuples, compare_series, theta_side, variant_ag_sum, PochTable};
use crate::bipoly::BiPoly;
use crate::characters::{chi_general, level, offset};
use crate::rational::{from_bigint, int, Rational};
use crate::report::CheckReport;
use crate::series::Series;
use crate::{check_ma, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HForm {
    Multisum,
    Closed,
}

/// `(x q^s; q)_n` as a bivariate polynomial.
fn x_pochhammer(s: usize, n: usize, dx: usize, dq: usize) -> BiPoly {
    let mut p = BiPoly::one(dx, dq);
    for i in 0..n {
        if s + i > dq {
            break;
        }
        p.mul_one_minus_xq(s + i);
    }
    p
}

/// Adds `x^ex q^eq * bracket * base` into `acc`.
fn add_scaled(acc: &mut BiPoly, base: &BiPoly, ex: usize, eq: usize, bracket: &super::QSeries) {
    let dq = acc.dq();
    let br = Series::with_order(crate::Var::Q, bracket.coeffs().iter().map(|c| from_bigint(c.clone())).collect(), dq);
    let term = base.mul_q(&br).shift(ex, eq);
    *acc = &*acc + &term;
}

fn weights_q(ks: &[usize], a: usize, m: usize) -> usize {
    (1..m).map(|i| ks[i - 1] * ks[i - 1] + if i > a { ks[i - 1] } else { 0 }).sum()
}

fn weights_x(ks: &[usize], m: usize) -> usize {
    2 * ks[..m - 1].iter().sum::<usize>()
}

pub fn build_h_bipoly(m: usize, a: usize, dx: usize, dq: usize, form: HForm) -> Result<BiPoly> {
    check_ma(m, a)?;
    match form {
        HForm::Closed => {
            let chi = chi_general(m, a)?;
            let (c, k) = (offset(m, a), level(m));
            let mut p = BiPoly::zero(dx, dq);
            let mut n = c;
            while (n - c) / 2 <= dx as i64 {
                let v = chi.eval(n);
                if v != 0 {
                    p.add_term(((n - c) / 2) as usize, ((n * n - c * c) / k) as usize, &int(v));
                }
                n += 1;
            }
            Ok(p)
        }
        HForm::Multisum => {
            let mut acc = BiPoly::zero(dx, dq);
            let tuples = chain_tuples(m, a, dx, |suffix| {
                // suffix = (k_i, ..., k_m); minimum degrees already forced
                let len = suffix.len();
                let km = suffix[len - 1];
                let inner = &suffix[..len - 1];
                km + 2 * inner.iter().sum::<usize>() <= dx && inner.iter().map(|k| k * k).sum::<usize>() <= dq
            });
            let mut poch_cache: Vec<Option<BiPoly>> = alloc::vec![None; dx + 1];
            for ks in tuples {
                let km = ks[m - 1];
                let ex = km + weights_x(&ks, m);
                let eq = weights_q(&ks, a, m);
                if ex > dx || eq > dq {
                    continue;
                }
                let br = bracket_product(&ks, a);
                if br.is_zero() {
                    continue;
                }
                let base = poch_cache[km].get_or_insert_with(|| x_pochhammer(0, km + 1, dx, dq));
                add_scaled(&mut acc, base, ex, eq, &br);
            }
            Ok(acc)
        }
    }
}

fn compare_bipoly(report: &mut CheckReport, name: &str, lhs: &BiPoly, rhs: &BiPoly) {
    match lhs.first_mismatch(rhs) {
        None => report.record(true, name, "", "", ""),
        Some((i, j, l, r)) => report.record(false, name, format!("x^{i} q^{j}"), r, l),
    }
}

fn h_report(name: &'static str, m: usize, a: usize, dx: usize, dq: usize) -> CheckReport {
    CheckReport::new(name)
        .param("m", m)
        .param("a", a)
        .param("dx", dx)
        .param("dq", dq)
        .bound(format!("joint truncation x^{dx} q^{dq}"))
}

pub fn verify_h_closed_form(m: usize, a: usize, dx: usize, dq: usize) -> Result<CheckReport> {
    let multi = build_h_bipoly(m, a, dx, dq, HForm::Multisum)?;
    let closed = build_h_bipoly(m, a, dx, dq, HForm::Closed)?;
    let mut report = h_report("h-closed-form", m, a, dx, dq);
    compare_bipoly(&mut report, "multisum-vs-closed", &multi, &closed);
    Ok(report)
}

/// `H(x) = 1 - q^{a+1} x^{2a+2} - q^{2m-a} x^{2m+1} H(qx)`, for both forms.
pub fn verify_h_difference_equation(m: usize, a: usize, dx: usize, dq: usize) -> Result<CheckReport> {
    let mut report = h_report("h-difference-equation", m, a, dx, dq);
    for (name, form) in [("multisum", HForm::Multisum), ("closed", HForm::Closed)] {
        let h = build_h_bipoly(m, a, dx, dq, form)?;
        let mut rhs = BiPoly::one(dx, dq);
        rhs.add_term(2 * a + 2, a + 1, &int(-1));
        let tail = h.subst_qx().shift(2 * m + 1, 2 * m - a);
        rhs = &rhs - &tail;
        compare_bipoly(&mut report, name, &h, &rhs);
    }
    Ok(report)
}

/// `H~_m^(a)(x) = x^{-1}(H_m^(a)(x, x, q^{-1/2} x) - 1)`, built termwise from
/// the multi-sum: `(x)_{k_m} x^{k_m}`, weights `q^{k_i^2-k_i} x^{2k_i}` for
/// `i <= a` and `q^{k_i^2} x^{2k_i}` for `a < i < m`.
pub fn build_htilde(m: usize, a: usize, dx: usize, dq: usize) -> Result<BiPoly> {
    check_ma(m, a)?;
    let bx = dx + 1;
    let mut acc = BiPoly::zero(bx, dq);
    let tuples = chain_tuples(m, a, bx, |suffix| {
        let len = suffix.len();
        suffix[len - 1] + 2 * suffix[..len - 1].iter().sum::<usize>() <= bx
    });
    for ks in tuples {
        let km = ks[m - 1];
        let ex = km + weights_x(&ks, m);
        let eq: usize = (1..m).map(|i| ks[i - 1] * ks[i - 1] - if i <= a { ks[i - 1] } else { 0 }).sum();
        if ex > bx || eq > dq {
            continue;
        }
        let br = bracket_product(&ks, a);
        if br.is_zero() {
            continue;
        }
        add_scaled(&mut acc, &x_pochhammer(0, km, bx, dq), ex, eq, &br);
    }
    // the x^0 row is exactly 1 (only the all-zero index has x-degree 0)
    *acc.coeff_mut(0, 0) -= Rational::one();
    debug_assert!(acc.row(0).iter().all(Zero::is_zero));
    let mut out = BiPoly::zero(dx, dq);
    for i in 1..=bx {
        for (j, c) in acc.row(i).iter().enumerate() {
            out.add_term(i - 1, j, c);
        }
    }
    Ok(out)
}

/// `H~ = 1 + x + ... + x^{2a} - q^{m-a} x^{2m} - q^{m-a+1} x^{2m+1} H~(qx)`.
pub fn verify_htilde_difference(m: usize, a: usize, dx: usize, dq: usize) -> Result<CheckReport> {
    let h = build_htilde(m, a, dx, dq)?;
    let mut rhs = BiPoly::zero(dx, dq);
    for i in 0..=2 * a {
        rhs.add_term(i, 0, &int(1));
    }
    rhs.add_term(2 * m, m - a, &int(-1));
    rhs = &rhs - &h.subst_qx().shift(2 * m + 1, m - a + 1);
    let mut report = h_report("htilde-difference-equation", m, a, dx, dq);
    compare_bipoly(&mut report, "difference-equation", &h, &rhs);
    Ok(report)
}

/// The closed form at `x = 1` against `(q^{a+1}, q^{2m-a}, q^{2m+1}; q^{2m+1})_inf`,
/// and for `m >= 2` the first block of the finite lemma at `x = 1`
/// (`(q)_inf` times the bracketed Andrews–Gordon sum) against the same product.
pub fn verify_h_unity(m: usize, a: usize, order: usize) -> Result<CheckReport> {
    check_ma(m, a)?;
    let product = ag_product(m, a, order).map(|c| from_bigint(c.clone()));
    let closed = theta_side(m, a, order, |_| Rational::one())?;
    let mut report = CheckReport::new("h-at-x-one").param("m", m).param("a", a).param("order", order).bound(format!("q^{order}"));
    compare_series(&mut report, "closed-vs-product", &closed, &product);
    if m >= 2 {
        let table = PochTable::new(order);
        let block = (&variant_ag_sum(m, a, order)? * table.infinite()).map(|c| from_bigint(c.clone()));
        compare_series(&mut report, "lemma-vs-product", &block, &product);
    }
    Ok(report)
}

/// Right-hand side of the finite lemma: the `(qx)_inf` block plus
/// `(1-x) sum ((qx)_{k_m} - (qx)_inf) x^{k_m} (...)`.
///
/// For `a = m-1` the `k_m`-sum of the first block is taken against
/// `[k_m+1 over k_{m-1}]`, which shifts its x-exponent by `-1` and adds
/// `(qx)_inf` for the all-zero index.
pub fn h_finite_lemma(m: usize, a: usize, dx: usize, dq: usize) -> Result<BiPoly> {
    check_ma(m, a)?;
    let qx_inf = x_pochhammer(1, dq, dx, dq);
    let last = a == m - 1;
    let len = m - 1;
    let slack = if a >= 1 && a < len { a } else { 0 };

    let mut block1 = BiPoly::zero(dx, dq);
    if last {
        block1.add_term(0, 0, &int(1));
    }
    let tuples = chain_tuples(len, slack, dx, |suffix| {
        suffix.iter().map(|k| k * k).sum::<usize>() <= dq && 2 * suffix.iter().sum::<usize>() <= dx + 1
    });
    for ks in tuples {
        let eq: usize = ks.iter().enumerate().map(|(i, k)| k * k + if i + 1 > a { *k } else { 0 }).sum();
        let top = ks.last().copied().unwrap_or(0);
        let ex = 2 * ks.iter().sum::<usize>() + top;
        if last && ex == 0 {
            continue;
        }
        let ex = if last { ex - 1 } else { ex };
        if ex > dx || eq > dq {
            continue;
        }
        let br = bracket_product(&ks, slack);
        let mut base = BiPoly::one(dx, dq);
        for i in 1..=top {
            base.div_one_minus_xq(i);
        }
        add_scaled(&mut block1, &base, ex, eq, &br);
    }
    let block1 = &block1 * &qx_inf;

    let mut block2 = BiPoly::zero(dx, dq);
    let tuples = chain_tuples(m, a, dq, |suffix| {
        let len = suffix.len();
        let inner = &suffix[..len - 1];
        suffix[len - 1] + 1 + 2 * inner.iter().sum::<usize>() <= dx
            && suffix[len - 1] + 1 + inner.iter().map(|k| k * k).sum::<usize>() <= dq
    });
    for ks in tuples {
        let km = ks[m - 1];
        let ex = km + weights_x(&ks, m);
        let eq = weights_q(&ks, a, m);
        let br = bracket_product(&ks, a);
        if br.is_zero() {
            continue;
        }
        let diff = &x_pochhammer(1, km, dx, dq) - &qx_inf;
        add_scaled(&mut block2, &diff, ex, eq, &br);
    }
    let mut one_minus_x = BiPoly::one(dx, dq);
    one_minus_x.add_term(1, 0, &int(-1));
    Ok(&block1 + &(&block2 * &one_minus_x))
}

pub fn verify_h_finite_lemma(m: usize, a: usize, dx: usize, dq: usize) -> Result<CheckReport> {
    let lemma = h_finite_lemma(m, a, dx, dq)?;
    let multi = build_h_bipoly(m, a, dx, dq, HForm::Multisum)?;
    let mut report = h_report("h-finite-lemma", m, a, dx, dq);
    compare_bipoly(&mut report, "lemma-vs-multisum", &lemma, &multi);
    Ok(report)
}
