//! q-Pochhammer symbols, q-binomials and the finite q-series identities.
//!
//! Univariate q-series are [`Series`] over [`BigInt`] (or [`Rational`] where
//! halves appear). Half-integer powers of `q` are avoided globally by
//! writing `q = Q^2`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::characters::{chi_general, level, offset};
use crate::report::CheckReport;
use crate::series::{Series, Var};
use crate::Result;

mod andrews_gordon;
mod bailey;
mod bridge;
mod hfun;
mod jacobi;

pub use andrews_gordon::{andrews_gordon_sum, variant_ag_sum, verify_andrews_gordon, verify_variant_ag};
pub use bailey::{verify_bailey_machinery, verify_bc_lemma, verify_delta_identity, verify_mid_relate, BaileyPair, DEFAULT_SEED};
pub use bridge::verify_bridge_identity;
pub use hfun::{
    build_h_bipoly, build_htilde, h_finite_lemma, verify_h_closed_form, verify_h_difference_equation,
    verify_h_finite_lemma, verify_h_unity, verify_htilde_difference, HForm,
};
pub use jacobi::verify_jacobi_triple;

pub type QSeries = Series<BigInt>;

/// A q-series that is either a genuine polynomial (`exact`) or a truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct QPolynomial {
    pub series: QSeries,
    pub exact: bool,
}

impl QPolynomial {
    pub fn coeffs(&self) -> &[BigInt] {
        self.series.coeffs()
    }

    pub fn is_zero(&self) -> bool {
        self.series.is_zero()
    }
}

/// `(q)_n = prod_{i=1}^n (1 - q^i)` modulo `q^{order+1}`.
pub fn pochhammer_q(n: usize, order: usize) -> QPolynomial {
    let mut s = QSeries::one(Var::Q, order);
    for i in 1..=n.min(order) {
        mul_one_minus(&mut s, i);
    }
    QPolynomial { series: s, exact: n * (n + 1) / 2 <= order }
}

/// In place `s *= (1 - q^i)`.
pub(crate) fn mul_one_minus<C: crate::series::Coeff>(s: &mut Series<C>, i: usize) {
    for d in (i..=s.order()).rev() {
        let v = s.coeff(d - i).clone();
        s.coeff_mut(d).sub_ref(&v);
    }
}

/// In place `s /= (1 - q^i)`.
pub(crate) fn div_one_minus<C: crate::series::Coeff>(s: &mut Series<C>, i: usize) {
    for d in i..=s.order() {
        let v = s.coeff(d - i).clone();
        s.coeff_mut(d).add_ref(&v);
    }
}

/// The Gaussian binomial `[n over c]` as an exact polynomial; zero unless
/// `0 <= c <= n`.
pub fn qbinomial(n: i64, c: i64) -> QPolynomial {
    if c < 0 || c > n {
        return QPolynomial { series: QSeries::zero(Var::Q, 0), exact: true };
    }
    let (n, c) = (n as usize, c.min(n - c) as usize);
    let deg = c * (n - c);
    let mut s = QSeries::one(Var::Q, deg);
    for i in 1..=c {
        // partial products are themselves Gaussian binomials, so each
        // division is exact
        mul_one_minus(&mut s, n - c + i);
        div_one_minus(&mut s, i);
    }
    QPolynomial { series: s, exact: true }
}

/// Full product of two polynomials, no truncation.
pub(crate) fn poly_mul(a: &QSeries, b: &QSeries) -> QSeries {
    let (da, db) = (a.degree(), b.degree());
    let (Some(da), Some(db)) = (da, db) else {
        return QSeries::zero(Var::Q, 0);
    };
    let mut out = vec![BigInt::zero(); da + db + 1];
    for (i, x) in a.coeffs()[..=da].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs()[..=db].iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    QSeries::from_coeffs(Var::Q, out)
}

/// Polynomial sum; the result has the larger length.
pub(crate) fn poly_add_shifted(acc: &mut Vec<BigInt>, p: &QSeries, shift: usize) {
    let need = shift + p.order() + 1;
    if acc.len() < need {
        acc.resize(need, BigInt::zero());
    }
    for (d, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc[shift + d] += c;
        }
    }
}

/// `prod (1 - q^n)` over `n >= 1` with `n mod modulus` in `residues`.
pub fn residue_product(modulus: usize, residues: &[usize], order: usize) -> QSeries {
    let mut s = QSeries::one(Var::Q, order);
    for n in 1..=order {
        if residues.contains(&(n % modulus)) {
            mul_one_minus(&mut s, n);
        }
    }
    s
}

/// `(q^{a+1}, q^{2m-a}, q^{2m+1}; q^{2m+1})_inf`.
pub fn ag_product(m: usize, a: usize, order: usize) -> QSeries {
    let modulus = 2 * m + 1;
    residue_product(modulus, &[(a + 1) % modulus, (2 * m - a) % modulus, 0], order)
}

/// `sum_{n>=0} w(n) chi(n) q^{(n^2 - c^2)/K}` through `q^order`.
///
/// Every support point has `n >= c` and the exponent is an integer.
pub(crate) fn theta_side<C: crate::series::Coeff>(m: usize, a: usize, order: usize, w: impl Fn(i64) -> C) -> Result<Series<C>> {
    let chi = chi_general(m, a)?;
    let (c, k) = (offset(m, a), level(m));
    let mut s = Series::zero(Var::Q, order);
    let mut n = c;
    while (n * n - c * c) / k <= order as i64 {
        let v = chi.eval(n);
        if v != 0 {
            let e = ((n * n - c * c) / k) as usize;
            let term = if v > 0 { w(n) } else { -w(n) };
            s.add_term(e, &term);
        }
        n += 1;
    }
    Ok(s)
}

/// Precomputed `(q)_k` and `1/(q)_k` for `k <= order` at a fixed order.
pub(crate) struct PochTable {
    pub poch: Vec<QSeries>,
    pub inv: Vec<QSeries>,
}

impl PochTable {
    pub fn new(order: usize) -> Self {
        let mut poch = vec![QSeries::one(Var::Q, order)];
        let mut inv = vec![QSeries::one(Var::Q, order)];
        for k in 1..=order + 1 {
            let mut p = poch[k - 1].clone();
            mul_one_minus(&mut p, k);
            poch.push(p);
            let mut i = inv[k - 1].clone();
            div_one_minus(&mut i, k);
            inv.push(i);
        }
        PochTable { poch, inv }
    }

    /// `(q)_k`, equal to `(q)_inf` modulo `q^{order+1}` once `k > order`.
    pub fn poch(&self, k: usize) -> &QSeries {
        &self.poch[k.min(self.poch.len() - 1)]
    }

    pub fn inv(&self, k: usize) -> &QSeries {
        &self.inv[k.min(self.inv.len() - 1)]
    }

    pub fn infinite(&self) -> &QSeries {
        self.poch.last().unwrap()
    }

    pub fn inv_infinite(&self) -> &QSeries {
        self.inv.last().unwrap()
    }
}

/// Records a univariate comparison into `report`.
pub(crate) fn compare_series<C: crate::series::Coeff + core::fmt::Display>(
    report: &mut CheckReport,
    name: &str,
    lhs: &Series<C>,
    rhs: &Series<C>,
) {
    match lhs.first_mismatch(rhs) {
        None => report.record(true, name, "", "", ""),
        Some((d, l, r)) => report.record(false, name, alloc::format!("q^{d}"), r, l),
    }
}

pub fn verify_qbinomial_recurrences(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("qbinomial-recurrences")
        .param("n_max", n_max)
        .bound("exact polynomials, 0 <= c <= n+1 <= n_max");
    for n in 0..n_max as i64 {
        for c in 0..=n + 1 {
            let lhs = qbinomial(n + 1, c).series;
            let b = qbinomial(n, c).series;
            let b1 = qbinomial(n, c - 1).series;
            let mut r1 = Vec::new();
            poly_add_shifted(&mut r1, &b, c as usize);
            poly_add_shifted(&mut r1, &b1, 0);
            let mut r2 = Vec::new();
            poly_add_shifted(&mut r2, &b, 0);
            poly_add_shifted(&mut r2, &b1, (n + 1 - c) as usize);
            for (name, rhs) in [("first-recurrence", r1), ("second-recurrence", r2)] {
                let rhs = trim(rhs);
                let ok = trim(lhs.coeffs().to_vec()) == rhs;
                report.record(ok, name, alloc::format!("n={n}, c={c}"), alloc::format!("{rhs:?}"), alloc::format!("{:?}", lhs.coeffs()));
            }
        }
    }
    report
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// Enumerates `(k_1, ..., k_len)` with `k_i <= k_{i+1}` except
/// `k_slack <= k_{slack+1} + 1` (1-based; `slack = 0` means none), the last
/// index at most `last_max`, pruned by `keep` on every prefix.
pub(crate) fn chain_tuples(len: usize, slack: usize, last_max: usize, mut keep: impl FnMut(&[usize]) -> bool) -> Vec<Vec<usize>> {
    // build from the top index downward so upper bounds are known
    let mut out = Vec::new();
    let mut cur = vec![0usize; len];
    fn rec(
        i: usize,
        slack: usize,
        upper: usize,
        cur: &mut Vec<usize>,
        keep: &mut dyn FnMut(&[usize]) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        // i is 1-based index being chosen, going downward
        for k in 0..=upper {
            cur[i - 1] = k;
            if !keep(&cur[i - 1..]) {
                continue;
            }
            if i == 1 {
                out.push(cur.clone());
            } else {
                let up = if i - 1 == slack { k + 1 } else { k };
                rec(i - 1, slack, up, cur, keep, out);
            }
        }
    }
    if len == 0 {
        return vec![Vec::new()];
    }
    rec(len, slack, last_max, &mut cur, &mut keep, &mut out);
    out
}

/// `prod_{i=1}^{len-1} [k_{i+1} over k_i]` with `[k_{a+1}+1 over k_a]` at
/// `i = a` (1-based; `a = 0` or `a >= len` means no modified bracket).
pub(crate) fn bracket_product(ks: &[usize], a: usize) -> QSeries {
    let mut acc = QSeries::one(Var::Q, 0);
    for i in 1..ks.len() {
        let top = ks[i] as i64 + if i == a { 1 } else { 0 };
        let b = qbinomial(top, ks[i - 1] as i64).series;
        acc = poly_mul(&acc, &b);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Polynomial truncated (or zero-padded) to `order`.
pub(crate) fn fit(p: &QSeries, order: usize) -> QSeries {
    Series::with_order(Var::Q, p.coeffs().to_vec(), order)
}
