//! Bailey-lemma machinery, checked exactly at random rational points, and
//! the auxiliary finite identities used with it.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{compare_series, div_one_minus, qbinomial, PochTable, QSeries};
use crate::rational::{frac, pow, Rational};
use crate::report::CheckReport;
use crate::series::Var;
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5EED_2024;

/// `(x; q)_n = prod_{i<n} (1 - x q^i)`.
fn poch(x: &Rational, q: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut qi = Rational::one();
    for _ in 0..n {
        acc *= Rational::one() - x * &qi;
        qi *= q;
    }
    acc
}

/// `1/(x; q)_n` with `1/(x; q)_n = 0` for `n < 0`; `None` if the symbol vanishes.
fn rpoch(x: &Rational, q: &Rational, n: i64) -> Option<Rational> {
    if n < 0 {
        return Some(Rational::zero());
    }
    let p = poch(x, q, n as usize);
    (!p.is_zero()).then(|| p.recip())
}

fn qpow(q: &Rational, e: i64) -> Rational {
    if e >= 0 {
        pow(q, e as usize)
    } else {
        pow(&q.recip(), (-e) as usize)
    }
}

/// A pair `(alpha, beta)` with `beta_n = sum_{r<=n} alpha_r / ((q)_{n-r} (xq)_{n+r})`
/// at a rational point.
#[derive(Clone, Debug, PartialEq)]
pub struct BaileyPair {
    pub n_max: usize,
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
    pub x: Rational,
    pub q: Rational,
}

impl BaileyPair {
    /// Completes `alpha` to a pair; `None` when a denominator vanishes.
    pub fn from_alpha(alpha: Vec<Rational>, x: Rational, q: Rational) -> Option<Self> {
        let n_max = alpha.len().checked_sub(1)?;
        let xq = &x * &q;
        let mut beta = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max as i64 {
            let mut b = Rational::zero();
            for r in 0..=n {
                b += &alpha[r as usize] * rpoch(&q, &q, n - r)? * rpoch(&xq, &q, n + r)?;
            }
            beta.push(b);
        }
        Some(BaileyPair { n_max, alpha, beta, x, q })
    }

    pub fn holds(&self) -> bool {
        Self::from_alpha(self.alpha.clone(), self.x.clone(), self.q.clone()).is_some_and(|p| p.beta == self.beta)
    }

    /// The transformed pair `(alpha', beta')` with parameters `rho1`, `rho2`,
    /// with `beta'` from its defining sum over `beta`.
    pub fn transform(&self, rho1: &Rational, rho2: &Rational) -> Option<(Vec<Rational>, Vec<Rational>)> {
        let (x, q) = (&self.x, &self.q);
        let xq = x * q;
        let cc = &xq / (rho1 * rho2);
        let (xq1, xq2) = (&xq / rho1, &xq / rho2);
        let mut alpha = Vec::new();
        for r in 0..=self.n_max {
            let num = poch(rho1, q, r) * poch(rho2, q, r) * pow(&cc, r);
            let den = poch(&xq1, q, r) * poch(&xq2, q, r);
            if den.is_zero() {
                return None;
            }
            alpha.push(num / den * &self.alpha[r]);
        }
        let mut beta = Vec::new();
        for n in 0..=self.n_max {
            let den_n = poch(&xq1, q, n) * poch(&xq2, q, n);
            if den_n.is_zero() {
                return None;
            }
            let mut b = Rational::zero();
            for j in 0..=n {
                let t = poch(rho1, q, j) * poch(rho2, q, j) * poch(&cc, q, n - j) * pow(&cc, j) * &self.beta[j];
                b += t * rpoch(q, q, (n - j) as i64)?;
            }
            beta.push(b / den_n);
        }
        Some((alpha, beta))
    }
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p: i64 = rng.gen_range(-9..=9);
    let p = if p == 0 { 1 } else { p };
    frac(p, rng.gen_range(2..=13))
}

fn point_q(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(1..=6), rng.gen_range(7..=15))
}

/// Finite form of the limiting corollary:
/// `sum_k a_k x^k/((q)_{n-k}(xq)_{n+k}) = sum_j q^{j^2} x^j/(q)_{n-j} sum_k a_k q^{-k^2}/((q)_{j-k}(xq)_{j+k})`.
fn corollary_sides(a: &[Rational], x: &Rational, q: &Rational, n: i64) -> Option<(Rational, Rational)> {
    let xq = x * q;
    let mut lhs = Rational::zero();
    for k in 0..=n {
        lhs += &a[k as usize] * pow(x, k as usize) * rpoch(q, q, n - k)? * rpoch(&xq, q, n + k)?;
    }
    let mut rhs = Rational::zero();
    for j in 0..=n {
        let mut inner = Rational::zero();
        for k in 0..=j {
            inner += &a[k as usize] * qpow(q, -k * k) * rpoch(q, q, j - k)? * rpoch(&xq, q, j + k)?;
        }
        rhs += qpow(q, j * j) * pow(x, j as usize) * rpoch(q, q, n - j)? * inner;
    }
    Some((lhs, rhs))
}

/// Both symmetrized corollaries; `shift = 0` for the first, `1` for the
/// second (denominator `(q)_{n+k-1}` and exponents `k^2 - k`).
fn symmetric_sides(c: &[(i64, Rational)], q: &Rational, n: i64, shift: i64) -> Option<(Rational, Rational)> {
    let mut lhs = Rational::zero();
    for (k, ck) in c {
        lhs += ck * rpoch(q, q, n - k)? * rpoch(q, q, n + k - shift)?;
    }
    let mut rhs = Rational::zero();
    for j in 0..=n {
        let mut inner = Rational::zero();
        for (k, ck) in c {
            inner += ck * qpow(q, -(k * k - shift * k)) * rpoch(q, q, j - k)? * rpoch(q, q, j + k - shift)?;
        }
        rhs += qpow(q, j * j - shift * j) * rpoch(q, q, n - j)? * inner;
    }
    Some((lhs, rhs))
}

/// Checks the Bailey lemma, its limiting corollary and both symmetrized
/// corollaries on `samples` random instances each. Instances hitting a
/// vanishing denominator are redrawn; the count is reported.
pub fn verify_bailey_machinery(n_max: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    if n_max < 1 {
        return Err(Error::InvalidParameter("n_max must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport::new("bailey-machinery")
        .param("n_max", n_max)
        .param("samples", samples)
        .param("seed", seed)
        .bound("exact rational evaluation; all sums finite");
    let mut redrawn = 0usize;
    for s in 0..samples {
        loop {
            let q = point_q(&mut rng);
            let x = small_rational(&mut rng);
            let (rho1, rho2) = (small_rational(&mut rng), small_rational(&mut rng));
            let n = rng.gen_range(0..=n_max);
            let alpha: Vec<Rational> = (0..=n).map(|_| small_rational(&mut rng)).collect();
            let a: Vec<Rational> = (0..=n).map(|_| small_rational(&mut rng)).collect();
            let c: Vec<(i64, Rational)> = (-(n as i64) - 1..=n as i64 + 1).map(|k| (k, small_rational(&mut rng))).collect();

            let Some(pair) = BaileyPair::from_alpha(alpha, x.clone(), q.clone()) else {
                redrawn += 1;
                continue;
            };
            let Some((alpha2, beta2)) = pair.transform(&rho1, &rho2) else {
                redrawn += 1;
                continue;
            };
            let Some(image) = BaileyPair::from_alpha(alpha2, x.clone(), q.clone()) else {
                redrawn += 1;
                continue;
            };
            let Some(cor) = corollary_sides(&a, &x, &q, n as i64) else {
                redrawn += 1;
                continue;
            };
            let s1 = symmetric_sides(&c, &q, n as i64, 0).expect("(q)_k never vanishes for 0 < q < 1");
            let s2 = symmetric_sides(&c, &q, n as i64, 1).expect("(q)_k never vanishes for 0 < q < 1");
            let loc = format!("sample {s}: n={n}, q={q}, x={x}, rho1={rho1}, rho2={rho2}");
            report.record(image.beta == beta2, "bailey-lemma", &loc, format!("{:?}", image.beta), format!("{beta2:?}"));
            report.record(cor.0 == cor.1, "bailey-corollary", &loc, &cor.0, &cor.1);
            report.record(s1.0 == s1.1, "bailey-symmetric-1", &loc, &s1.0, &s1.1);
            report.record(s2.0 == s2.1, "bailey-symmetric-2", &loc, &s2.0, &s2.1);
            break;
        }
    }
    report.value("seed", seed);
    report.value("redrawn", redrawn);
    Ok(report)
}

/// `sum_{b=c}^{a} (-1)^{b+c} q^{(b^2+b+c^2+c)/2}/((q)_{a-b}(q)_{b-c}) = q^{c^2+c} [a over c]`.
pub fn verify_bc_lemma(a_max: usize, order: usize) -> CheckReport {
    let table = PochTable::new(order);
    let mut report = CheckReport::new("bc-lemma")
        .param("a_max", a_max)
        .param("order", order)
        .bound(format!("q^{order}"));
    for a in 0..=a_max {
        for c in 0..=a {
            let mut lhs = QSeries::zero(Var::Q, order);
            for b in c..=a {
                let e = (b * b + b + c * c + c) / 2;
                let mut t = (table.inv(a - b) * table.inv(b - c)).shift(e);
                if (b + c) % 2 == 1 {
                    t = -&t;
                }
                lhs = &lhs + &t;
            }
            let rhs = super::fit(&qbinomial(a as i64, c as i64).series, order).shift(c * c + c);
            let mut sub = CheckReport::new("bc-lemma");
            compare_series(&mut sub, &format!("a={a}, c={c}"), &lhs, &rhs);
            report.absorb(sub);
        }
    }
    report
}

/// `1/(q;q)_j` with `q = Q^2`, through `Q^order`; zero for `j < 0`.
fn inv_poch_q2(j: i64, order: usize) -> QSeries {
    let mut s = QSeries::one(Var::Q, order);
    if j < 0 {
        return QSeries::zero(Var::Q, order);
    }
    for i in 1..=j as usize {
        if 2 * i > order {
            break;
        }
        div_one_minus(&mut s, 2 * i);
    }
    s
}

/// `sum_k (-1)^k Q^{e(k)} / ((q)_{n-k} (q)_{n+k-shift})` with `q = Q^2`.
fn signed_sum(n: i64, shift: i64, order: usize, e: impl Fn(i64) -> i64) -> QSeries {
    let mut acc = QSeries::zero(Var::Q, order);
    for k in -n..=n {
        let ex = e(k);
        debug_assert!(ex >= 0);
        if ex as usize > order {
            continue;
        }
        let mut t = (&inv_poch_q2(n - k, order) * &inv_poch_q2(n + k - shift, order)).shift(ex as usize);
        if k % 2 != 0 {
            t = -&t;
        }
        acc = &acc + &t;
    }
    acc
}

/// `sum_k (-1)^k q^{(k^2-k)/2} / ((q)_{n-k} (q)_{n+k}) = delta_{n,0}`, with `q = Q^2`.
pub fn verify_delta_identity(n_max: usize, order: usize) -> CheckReport {
    let mut report = CheckReport::new("delta-identity")
        .param("n_max", n_max)
        .param("order", order)
        .bound(format!("q = Q^2, Q^{order}"));
    for n in 0..=n_max as i64 {
        let lhs = signed_sum(n, 0, order, |k| k * k - k);
        let rhs = if n == 0 { QSeries::one(Var::Q, order) } else { QSeries::zero(Var::Q, order) };
        let mut sub = CheckReport::new("delta-identity");
        compare_series(&mut sub, &format!("n={n}"), &lhs, &rhs);
        report.absorb(sub);
    }
    report
}

/// `sum_k (-1)^k q^{ck^2-k/2}/((q)_{n-k}(q)_{n+k-1}) = (1-q^n) sum_k (-1)^k q^{ck^2-k/2}/((q)_{n-k}(q)_{n+k})`
/// for each `c = two_c/2`, with `q = Q^2` (Q-exponent `two_c k^2 - k`).
pub fn verify_mid_relate(n_max: usize, order: usize, two_c: &[i64]) -> Result<CheckReport> {
    if two_c.iter().any(|&c| c < 1) {
        return Err(Error::InvalidParameter("c must be positive"));
    }
    let mut report = CheckReport::new("mid-relate")
        .param("n_max", n_max)
        .param("order", order)
        .param("c", format!("{two_c:?}/2"))
        .bound(format!("q = Q^2, Q^{order}"));
    for &tc in two_c {
        for n in 0..=n_max as i64 {
            let e = |k: i64| tc * k * k - k;
            let lhs = signed_sum(n, 1, order, e);
            let mut rhs = signed_sum(n, 0, order, e);
            let factor = {
                let mut f = QSeries::one(Var::Q, order);
                if (2 * n) as usize <= order {
                    *f.coeff_mut(2 * n as usize) -= 1;
                }
                f
            };
            rhs = &rhs * &factor;
            let mut sub = CheckReport::new("mid-relate");
            compare_series(&mut sub, &format!("c={tc}/2, n={n}"), &lhs, &rhs);
            report.absorb(sub);
        }
    }
    Ok(report)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn reciprocal_convention() {
        let q = frac(1, 3);
        assert_eq!(rpoch(&q, &q, -1), Some(Rational::zero()));
        assert_eq!(rpoch(&q, &q, 0), Some(Rational::one()));
        assert_eq!(rpoch(&int(1), &q, 1), None);
    }

    #[test]
    fn corollary_with_delta_sequence() {
        let (q, x) = (frac(1, 3), frac(1, 5));
        for n in 0..5 {
            let mut a = alloc::vec![Rational::zero(); n + 1];
            a[0] = Rational::one();
            let (l, r) = corollary_sides(&a, &x, &q, n as i64).unwrap();
            let direct = rpoch(&q, &q, n as i64).unwrap() * rpoch(&(&x * &q), &q, n as i64).unwrap();
            assert_eq!(l, direct);
            assert_eq!(r, direct);
        }
    }

    #[test]
    fn symmetric_boundary_terms_vanish() {
        // only k = +-n survive the first reciprocal at the boundary
        let q = frac(2, 7);
        let c = alloc::vec![(3i64, int(1)), (-3, int(1))];
        let (l, r) = symmetric_sides(&c, &q, 2, 0).unwrap();
        assert!(l.is_zero() && r.is_zero());
    }

    #[test]
    fn machinery() {
        let r = verify_bailey_machinery(5, 20, DEFAULT_SEED).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert!(verify_bailey_machinery(0, 1, 1).is_err());
    }

    #[test]
    fn pair_invariant() {
        let p = BaileyPair::from_alpha(alloc::vec![int(1), frac(2, 3), int(-1)], frac(1, 2), frac(1, 4)).unwrap();
        assert!(p.holds());
        let mut bad = p.clone();
        bad.beta[1] += int(1);
        assert!(!bad.holds());
    }

    #[test]
    fn formal_identities() {
        let r = verify_bc_lemma(4, 20);
        assert!(r.passed(), "{:?}", r.first_failure());
        let r = verify_delta_identity(4, 20);
        assert!(r.passed(), "{:?}", r.first_failure());
        let r = verify_mid_relate(4, 20, &[1, 2, 3, 5]).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
    }

    #[test]
    fn delta_small_cases() {
        assert_eq!(signed_sum(0, 0, 6, |k| k * k - k), QSeries::one(Var::Q, 6));
        assert!(signed_sum(1, 0, 6, |k| k * k - k).is_zero());
    }
}
