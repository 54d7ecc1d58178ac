//! `X_m^(a)` at roots of unity, its asymptotics, and the theta functions
//! `Phi_m^(a)` with their modular behaviour.
//!
//! Vectors indexed by `a` are ordered `a = m-1, ..., 1, 0`, matching the rows
//! of [`ModularMatrix`].

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;


use crate::apcomplex::{ApComplex, ApReal};
use crate::characters::{chi_general, level, offset};
use crate::lvalues::{t_values, truncate_terms, Terms};
use crate::rational::{factorial, frac, Rational};
use crate::report::CheckReport;
use crate::{check_ma, Error, Result};

/// Extra bits carried through root-of-unity sums, whose terms grow like
/// `e^{cN}` before cancelling down to `O(N^{3/2})`.
fn guard_bits(n: usize) -> usize {
    64 + n
}

/// `e^{i pi r}` with `r` reduced exactly modulo 2 first.
pub fn cis_pi(r: &Rational, bits: usize) -> ApComplex {
    let two = BigInt::from(2);
    let num = r.numer().mod_floor(&(r.denom() * &two));
    let reduced = Rational::new(num, r.denom().clone());
    ApComplex::cis(&ApReal::pi(bits).mul(&ApReal::from_rational(&reduced, bits)))
}

/// `omega^j` and `(omega)_k` for `omega = e^{2 pi i/N}`, `0 <= j, k < N`.
pub struct OmegaTable {
    pub n: usize,
    pub bits: usize,
    pub powers: Vec<ApComplex>,
    pub poch: Vec<ApComplex>,
    inv_poch: Vec<ApComplex>,
}

impl OmegaTable {
    pub fn new(n: usize, bits: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("N must be positive"));
        }
        let powers: Vec<ApComplex> = (0..n).map(|j| cis_pi(&frac(2 * j as i64, n as i64), bits)).collect();
        let mut poch = Vec::with_capacity(n);
        poch.push(ApComplex::one(bits));
        for k in 1..n {
            let f = ApComplex::one(bits).sub(&powers[k]);
            let next = poch[k - 1].mul(&f);
            poch.push(next);
        }
        let one = ApComplex::one(bits);
        let inv_poch = poch.iter().map(|p| one.div(p)).collect();
        Ok(OmegaTable { n, bits, powers, poch, inv_poch })
    }

    pub fn omega_pow(&self, e: i64) -> &ApComplex {
        &self.powers[e.rem_euclid(self.n as i64) as usize]
    }

    /// `[n over c]` at `omega` for `0 <= n <= N`.
    pub fn bracket(&self, n: usize, c: usize) -> ApComplex {
        if c > n {
            return ApComplex::zero(self.bits);
        }
        if n == self.n {
            // (omega)_N = 0 kills every interior coefficient
            return if c == 0 || c == n { ApComplex::one(self.bits) } else { ApComplex::zero(self.bits) };
        }
        self.poch[n].mul(&self.inv_poch[c]).mul(&self.inv_poch[n - c])
    }
}

/// `X_m^(a)(e^{2 pi i/N})` from the multi-sum, which is finite since
/// `(omega)_{k_m} = 0` for `k_m >= N`. Uses the same chain recursion as the
/// exact t-expansion.
pub fn eval_x_unity(m: usize, a: usize, n: usize, bits: usize) -> Result<ApComplex> {
    check_ma(m, a)?;
    let work = bits + guard_bits(n);
    let tab = OmegaTable::new(n, work)?;
    Ok(eval_with_table(m, a, &tab).with_bits(bits))
}

fn eval_with_table(m: usize, a: usize, tab: &OmegaTable) -> ApComplex {
    let n = tab.n;
    let len = n + 1;
    let bits = tab.bits;
    let mut v: Vec<ApComplex> = (0..len).map(|_| ApComplex::one(bits)).collect();
    for i in 1..m {
        let s = usize::from(i == a);
        let weighted: Vec<ApComplex> = (0..len)
            .map(|k| {
                let w = (k * k + if i > a { k } else { 0 }) as i64;
                v[k].mul(tab.omega_pow(w))
            })
            .collect();
        v = (0..len)
            .map(|kp| {
                let top = (kp + s).min(n);
                let mut acc = ApComplex::zero(bits);
                if kp + s <= n {
                    for (k, wk) in weighted.iter().enumerate().take(top + 1) {
                        acc = acc.add(&wk.mul(&tab.bracket(top, k)));
                    }
                }
                acc
            })
            .collect();
    }
    tab.poch.iter().zip(&v).fold(ApComplex::zero(bits), |acc, (p, x)| acc.add(&p.mul(x)))
}

impl ApComplex {
    fn with_bits(self, bits: usize) -> Self {
        ApComplex::new(self.re.with_bits(bits), self.im.with_bits(bits))
    }
}

/// `sum_{a,b >= 0, a+b <= N-1} (omega)_{a+b} omega^{-ab}`.
pub fn kashaev_double_sum(n: usize, bits: usize) -> Result<ApComplex> {
    let work = bits + guard_bits(n);
    let tab = OmegaTable::new(n, work)?;
    let mut acc = ApComplex::zero(work);
    for s in 0..n {
        let mut inner = ApComplex::zero(work);
        for x in 0..=s {
            inner = inner.add(tab.omega_pow(-((x * (s - x)) as i64)));
        }
        acc = acc.add(&tab.poch[s].mul(&inner));
    }
    Ok(acc.with_bits(bits))
}

/// `(omega)_{N-1} = N`, `conj((omega)_a) (omega)_{N-1-a} = N` and
/// `sum_{b=a}^{N-1} (omega)_b/(omega)_{b-a} = N`.
pub fn verify_omega_identities(n: usize, bits: usize) -> Result<CheckReport> {
    let work = bits + guard_bits(n);
    let tab = OmegaTable::new(n, work)?;
    let target = ApComplex::from_i64(n as i64, work);
    let tol = ApReal::pow2(-(bits as i32) + 8, work).mul_i64(n as i64);
    let mut report = CheckReport::new("omega-identities")
        .param("N", n)
        .param("precision", bits)
        .bound(format!("|lhs - N| < N 2^-{}", bits - 8));
    let mut check = |name: &str, idx: usize, value: ApComplex| {
        let err = value.sub(&target).max_abs();
        report.record(err < tol, name, format!("a={idx}"), n, value.re.to_dec_digits(20));
    };
    check("pochhammer-top", n - 1, tab.poch[n - 1].clone());
    for a in 0..n {
        check("conjugate-product", a, tab.poch[a].conj().mul(&tab.poch[n - 1 - a]));
        let mut s = ApComplex::zero(work);
        for b in a..n {
            s = s.add(&tab.poch[b].div(&tab.poch[b - a]));
        }
        check("ratio-sum", a, s);
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct AsymptoticResult {
    pub value: ApComplex,
    pub geometric: ApComplex,
    pub tail: ApComplex,
    /// Magnitude of the first tail term left out.
    pub first_omitted: ApReal,
    pub terms_used: usize,
}

/// Terms `T(n)/n! (pi/(4(2m+1) N i))^n` of the tail series (without prefactor).
fn tail_terms(m: usize, a: usize, n: usize, tail: Terms, bits: usize) -> Result<(ApComplex, ApReal, usize)> {
    let x = ApReal::pi(bits).div_i64(4 * (2 * m as i64 + 1) * n as i64);
    let mut cache: Vec<Rational> = Vec::new();
    let term = |k: usize| -> ApComplex {
        if cache.len() <= k {
            cache = t_values(m, a, (2 * k).max(32)).expect("parameters checked");
        }
        let coeff = ApReal::from_rational(&(&cache[k] / Rational::from_integer(factorial(k))), bits);
        let mag = coeff.mul(&x.powi(k));
        // (1/i)^k = (-i)^k
        match k % 4 {
            0 => ApComplex::from_real(mag),
            1 => ApComplex::new(ApReal::zero(bits), mag.neg()),
            2 => ApComplex::from_real(mag.neg()),
            _ => ApComplex::new(ApReal::zero(bits), mag),
        }
    };
    let (kept, omitted) = truncate_terms(tail, term, |z: &ApComplex| z.max_abs(), 400);
    let mut sum = ApComplex::zero(bits);
    for t in &kept {
        sum = sum.add(t);
    }
    Ok((sum, omitted.max_abs(), kept.len()))
}

/// Geometric block plus tail of the asymptotic expansion of `X_m^(a)(omega)`.
pub fn asymptotic_rhs(m: usize, a: usize, n: usize, bits: usize, tail: Terms) -> Result<AsymptoticResult> {
    check_ma(m, a)?;
    if n == 0 {
        return Err(Error::InvalidParameter("N must be positive"));
    }
    let work = bits + 32;
    let mm = 2 * m as i64 + 1;
    let c = offset(m, a);
    let nn = n as i64;
    let sqrt_n = ApReal::from_i64(nn, work).sqrt();
    let scale = ApReal::from_i64(2, work).div(&ApReal::from_i64(mm, work).sqrt()).mul(&sqrt_n).mul_i64(nn);
    // e^{i pi/4 - (i pi/N) c^2/(4(2m+1))}
    let pre_geo = cis_pi(&(frac(1, 4) - frac(c * c, 4 * mm * nn)), work);
    let pi = ApReal::pi(work);
    let mut sum = ApComplex::zero(work);
    for k in 0..m as i64 {
        let s = pi.mul_i64((a as i64 + 1) * (2 * k + 1)).div_i64(mm).sin();
        let coeff = s.mul_i64(if k % 2 == 0 { 1 } else { -1 } * (m as i64 - k));
        let phase = cis_pi(&frac(-nn * (2 * k + 1) * (2 * k + 1), 4 * mm), work);
        sum = sum.add(&phase.scale(&coeff));
    }
    let geometric = pre_geo.mul(&sum).scale(&scale);
    let (series, first_omitted, terms_used) = tail_terms(m, a, n, tail, work)?;
    let tail_value = cis_pi(&frac(-c * c, 4 * mm * nn), work).mul(&series);
    Ok(AsymptoticResult {
        value: geometric.add(&tail_value).with_bits(bits),
        geometric: geometric.with_bits(bits),
        tail: tail_value.with_bits(bits),
        first_omitted: first_omitted.with_bits(bits),
        terms_used,
    })
}

/// The symmetric `m x m` matrix `(2/sqrt(2m+1)) cos((2a-1)(2b-1) pi/(2(2m+1)))`.
#[derive(Clone, Debug)]
pub struct ModularMatrix {
    pub m: usize,
    pub entries: Vec<Vec<ApReal>>,
}

impl ModularMatrix {
    pub fn apply(&self, v: &[ApComplex]) -> Vec<ApComplex> {
        self.entries
            .iter()
            .map(|row| {
                let bits = v[0].bits();
                row.iter().zip(v).fold(ApComplex::zero(bits), |acc, (r, x)| acc.add(&x.scale(r)))
            })
            .collect()
    }

    /// `max |M^2 - I|` over entries.
    pub fn square_residual(&self) -> ApReal {
        let m = self.m;
        let bits = self.entries[0][0].bits();
        let mut worst = ApReal::zero(bits);
        for i in 0..m {
            for j in 0..m {
                let mut s = ApReal::from_i64(if i == j { -1 } else { 0 }, bits);
                for k in 0..m {
                    s = s.add(&self.entries[i][k].mul(&self.entries[k][j]));
                }
                let s = s.abs();
                if s > worst {
                    worst = s;
                }
            }
        }
        worst
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.m).all(|i| (0..self.m).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

pub fn modular_matrix(m: usize, bits: usize) -> Result<ModularMatrix> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1"));
    }
    let mm = 2 * m as i64 + 1;
    let scale = ApReal::from_i64(2, bits).div(&ApReal::from_i64(mm, bits).sqrt());
    let pi = ApReal::pi(bits);
    let entries = (1..=m as i64)
        .map(|a| {
            (1..=m as i64)
                .map(|b| {
                    // cos is even, so (2a-1)(2b-1) is reduced exactly mod 4(2m+1)
                    let k = ((2 * a - 1) * (2 * b - 1)).rem_euclid(4 * mm);
                    scale.mul(&pi.mul_i64(k).div_i64(2 * mm).cos())
                })
                .collect()
        })
        .collect();
    Ok(ModularMatrix { m, entries })
}

/// `Phi_m^(a)(tau) = sum_{n>=0} chi(n) e^{2 pi i tau n^2/K}`.
pub fn theta_phi(m: usize, a: usize, tau: &ApComplex, bits: usize) -> Result<ApComplex> {
    check_ma(m, a)?;
    if tau.im.sign() != core::cmp::Ordering::Greater {
        return Err(Error::InvalidParameter("tau must lie in the upper half-plane"));
    }
    let chi = chi_general(m, a)?;
    let work = bits + 32;
    let k = level(m);
    let two_pi_i = ApComplex::i(work).scale(&ApReal::pi(work).mul_i64(2));
    let z = two_pi_i.mul(tau).scale(&ApReal::from_i64(1, work).div_i64(k)).exp();
    let z2 = z.mul(&z);
    let decay = z.abs();
    let tiny = ApReal::pow2(-(bits as i32) - 16, work);
    // z^{n^2} by z^{(n+1)^2} = z^{n^2} z^{2n+1}
    let mut g = ApComplex::one(work);
    let mut odd = z.clone();
    let mut acc = ApComplex::zero(work);
    let mut mag = ApReal::from_i64(1, work);
    let mut mag_odd = decay.clone();
    let decay2 = decay.mul(&decay);
    let mut n: i64 = 0;
    loop {
        let v = chi.eval(n);
        if v != 0 {
            acc = if v > 0 { acc.add(&g) } else { acc.sub(&g) };
        }
        if n > chi.modulus() as i64 && mag < tiny {
            break;
        }
        g = g.mul(&odd);
        odd = odd.mul(&z2);
        mag = mag.mul(&mag_odd);
        mag_odd = mag_odd.mul(&decay2);
        n += 1;
    }
    Ok(acc.with_bits(bits))
}

/// The vector `(Phi^(m-1), ..., Phi^(0))`.
pub fn theta_vector(m: usize, tau: &ApComplex, bits: usize) -> Result<Vec<ApComplex>> {
    (0..m).rev().map(|a| theta_phi(m, a, tau, bits)).collect()
}

/// `||Phi_m(tau) - sqrt(i/tau) M Phi_m(-1/tau)||_inf`, principal square root.
pub fn verify_poisson_modularity(m: usize, tau: &ApComplex, bits: usize) -> Result<CheckReport> {
    let work = bits + 32;
    let lhs = theta_vector(m, tau, work)?;
    let minus_inv = ApComplex::from_i64(-1, work).div(tau);
    let rhs_raw = modular_matrix(m, work)?.apply(&theta_vector(m, &minus_inv, work)?);
    let factor = ApComplex::i(work).div(tau).sqrt();
    let tol_exp = bits as i32 - 76;
    let tol = ApReal::pow2(-tol_exp, work);
    let mut report = CheckReport::new("poisson-modularity")
        .param("m", m)
        .param("tau", format!("{} + {} i", tau.re.to_dec_digits(12), tau.im.to_dec_digits(12)))
        .param("precision", bits)
        .bound(format!("residual < 2^-{tol_exp}"));
    let mut worst = ApReal::zero(work);
    for (j, (l, r)) in lhs.iter().zip(&rhs_raw).enumerate() {
        let err = l.sub(&factor.mul(r)).max_abs();
        report.record(err < tol, "component", format!("a={}", m - 1 - j), format!("< 2^-{tol_exp}"), err.to_dec_digits(6));
        if err > worst {
            worst = err;
        }
    }
    report.value("residual", worst.to_dec_digits(6));
    report.value("residual_log2", worst.exponent().map_or(i32::MIN, |e| e - 1));
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct NearlyModularComponent {
    pub a: usize,
    pub lhs: ApComplex,
    pub rhs: ApComplex,
    pub residual: ApReal,
    pub first_omitted: ApReal,
    pub terms_used: usize,
}

/// `Phi~(1/N) + (-iN)^{3/2} M Phi~(-N)` against `sum_n T_m(n)/n! (pi/(4(2m+1) i N))^n`.
///
/// `Phi~^(a)(-N) = e^{-i pi N c^2/(4(2m+1))} X_m^(a)(1)` with `X_m^(a)(1) = a + 1`.
pub fn nearly_modular_components(m: usize, n: usize, bits: usize, tail: Terms) -> Result<Vec<NearlyModularComponent>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("m and N must be positive"));
    }
    let work = bits + 32;
    let mm = 2 * m as i64 + 1;
    let nn = n as i64;
    let tab = OmegaTable::new(n, work + guard_bits(n))?;
    let order: Vec<usize> = (0..m).rev().collect();
    let mut at_inv_n = Vec::new();
    let mut at_minus_n = Vec::new();
    for &a in &order {
        let c = offset(m, a);
        let x = eval_with_table(m, a, &tab).with_bits(work);
        at_inv_n.push(cis_pi(&frac(c * c, 4 * nn * mm), work).mul(&x));
        let x_one = crate::halfderiv::x_at_one(m, a)?;
        at_minus_n.push(cis_pi(&frac(-nn * c * c, 4 * mm), work).scale_i64(x_one));
    }
    let mat = modular_matrix(m, work)?;
    let minus_i_n = ApComplex::new(ApReal::zero(work), ApReal::from_i64(-nn, work));
    let factor = minus_i_n.powr(&ApReal::from_rational(&frac(3, 2), work));
    let image = mat.apply(&at_minus_n);
    let mut out = Vec::new();
    for (j, &a) in order.iter().enumerate() {
        let lhs = at_inv_n[j].add(&factor.mul(&image[j]));
        let (rhs, first_omitted, terms_used) = tail_terms(m, a, n, tail, work)?;
        let residual = lhs.sub(&rhs).abs();
        out.push(NearlyModularComponent {
            a,
            lhs: lhs.with_bits(bits),
            rhs: rhs.with_bits(bits),
            residual: residual.with_bits(bits),
            first_omitted: first_omitted.with_bits(bits),
            terms_used,
        });
    }
    Ok(out)
}

/// Passes when each component's residual is at most twice its first omitted term.
pub fn verify_nearly_modular(m: usize, n: usize, bits: usize, tail: Terms) -> Result<CheckReport> {
    let comps = nearly_modular_components(m, n, bits, tail)?;
    let mut report = CheckReport::new("nearly-modular")
        .param("m", m)
        .param("N", n)
        .param("precision", bits)
        .param("tail", match tail {
            Terms::Optimal => "optimal".into(),
            Terms::Fixed(k) => format!("{k}"),
        })
        .bound("residual <= 2 x first omitted tail term");
    for c in comps {
        let bound = c.first_omitted.mul_i64(2);
        report.record(c.residual <= bound, "component", format!("a={}", c.a), format!("<= {}", bound.to_dec_digits(6)), c.residual.to_dec_digits(6));
        report.value(&format!("terms_a{}", c.a), c.terms_used);
    }
    Ok(report)
}

/// `|asymptotic_rhs - X| / |X|` together with the first omitted tail term.
pub fn asymptotic_error(m: usize, a: usize, n: usize, bits: usize, tail: Terms) -> Result<(ApReal, ApReal, ApReal)> {
    let x = eval_x_unity(m, a, n, bits)?;
    let r = asymptotic_rhs(m, a, n, bits, tail)?;
    let abs_err = r.value.sub(&x).abs();
    Ok((abs_err.div(&x.abs()), abs_err, r.first_omitted))
}


#[cfg(test)]
mod tests {
    use super::*;

    const B: usize = 128;

    fn close(z: &ApComplex, re: f64, im: f64, tol: f64) -> bool {
        (z.re.to_f64() - re).abs() < tol && (z.im.to_f64() - im).abs() < tol
    }

    #[test]
    fn unity_examples() {
        assert!(close(&eval_x_unity(1, 0, 1, B).unwrap(), 1.0, 0.0, 1e-14));
        assert!(close(&eval_x_unity(1, 0, 2, B).unwrap(), 3.0, 0.0, 1e-14));
        let s3 = 3f64.sqrt();
        assert!(close(&eval_x_unity(1, 0, 3, B).unwrap(), 5.5, -s3 / 2.0, 1e-14));
        assert!(eval_x_unity(1, 0, 0, B).is_err());
    }

    #[test]
    fn kashaev_examples() {
        assert!(close(&kashaev_double_sum(1, B).unwrap(), 1.0, 0.0, 1e-14));
        assert!(close(&kashaev_double_sum(2, B).unwrap(), 5.0, 0.0, 1e-14));
        for n in [3, 7, 12] {
            let d = kashaev_double_sum(n, B).unwrap().sub(&eval_x_unity(2, 0, n, B).unwrap());
            assert!(d.abs() < ApReal::pow2(-100, B));
        }
    }

    #[test]
    fn omega_identities() {
        for n in [1, 3, 10] {
            let r = verify_omega_identities(n, B).unwrap();
            assert!(r.passed(), "{:?}", r.first_failure());
        }
        let tab = OmegaTable::new(3, B).unwrap();
        assert!(close(&tab.poch[2], 3.0, 0.0, 1e-14));
        assert!(tab.bracket(3, 1).max_abs().is_zero());
    }

    #[test]
    fn matrix() {
        let m1 = modular_matrix(1, 256).unwrap();
        assert!(m1.entries[0][0].sub(&ApReal::from_i64(1, 256)).abs() < ApReal::pow2(-250, 256));
        for m in 1..=6 {
            let mm = modular_matrix(m, 256).unwrap();
            assert!(mm.is_symmetric());
            assert!(mm.square_residual() < ApReal::pow2(-248, 256).mul_i64((m * m) as i64));
        }
    }

    #[test]
    fn theta_against_product() {
        // Phi_2^(0)(i) = q^{9/40} (q, q^4, q^5; q^5)_inf at q = e^{-2 pi}
        let bits = 256;
        let tau = ApComplex::i(bits);
        let phi = theta_phi(2, 0, &tau, bits).unwrap();
        let q = ApReal::pi(bits).mul_i64(-2).exp();
        let mut prod = q.mul(&ApReal::from_rational(&frac(9, 40), bits).mul(&ApReal::pi(bits).mul_i64(-2)).exp().div(&q));
        let mut qn = ApReal::from_i64(1, bits);
        for n in 1..120 {
            qn = qn.mul(&q);
            if n % 5 == 0 || n % 5 == 1 || n % 5 == 4 {
                prod = prod.mul(&ApReal::from_i64(1, bits).sub(&qn));
            }
        }
        assert!(phi.re.sub(&prod).abs() < ApReal::pow2(-200, bits));
        assert!(phi.im.abs() < ApReal::pow2(-200, bits));
    }

    #[test]
    fn theta_period_phase() {
        let bits = 192;
        for (m, a) in [(1, 0), (2, 1), (3, 0)] {
            let tau = ApComplex::new(ApReal::from_rational(&frac(1, 3), bits), ApReal::from_i64(1, bits));
            let shifted = tau.add(&ApComplex::one(bits));
            let ratio = theta_phi(m, a, &shifted, bits).unwrap().div(&theta_phi(m, a, &tau, bits).unwrap());
            let c = offset(m, a);
            let expected = cis_pi(&frac(c * c, 4 * (2 * m as i64 + 1)), bits);
            assert!(ratio.sub(&expected).max_abs() < ApReal::pow2(-150, bits));
        }
        assert!(theta_phi(1, 0, &ApComplex::one(B), B).is_err());
    }

    #[test]
    fn poisson_small() {
        let tau = ApComplex::i(256);
        for m in 1..=2 {
            let r = verify_poisson_modularity(m, &tau, 256).unwrap();
            assert!(r.passed(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn asymptotic_zero_tail_is_geometric() {
        let r = asymptotic_rhs(2, 0, 20, B, Terms::Fixed(0)).unwrap();
        assert!(r.tail.max_abs().is_zero());
        assert_eq!(r.value, r.geometric);
        let one = asymptotic_rhs(1, 0, 20, B, Terms::Fixed(1)).unwrap();
        // T(0) = 1 times the unit-modulus prefactor
        assert!(one.tail.abs().sub(&ApReal::from_i64(1, B)).abs() < ApReal::pow2(-100, B));
    }

    #[test]
    fn nearly_modular_small() {
        let r = verify_nearly_modular(1, 50, 256, Terms::Optimal).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
    }
}
