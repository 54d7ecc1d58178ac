//! Named checks and the cells they run as.

use agq_core::characters::chi_general;
use agq_core::halfderiv::{half_derivative_numeric_check, verify_theorem};
use agq_core::lvalues::{l_value_negative, mellin_asymptotic_check, t_value_bernoulli, t_value_genfun, t_values, Terms};
use agq_core::qseries::*;
use agq_core::rational::{frac, int, sign};
use agq_core::unity::*;
use agq_core::{ApComplex, ApReal, CheckReport, Rational, Result};
use serde_json::Value;

use crate::json;

/// Check name, what it compares.
pub const REGISTRY: &[(&str, &str)] = &[
    ("t-expansion", "X_m^(a)(e^-t) = e^{c^2 t/K} sum_n T_m^(a)(n)/n! (t/K)^n, c = 2m-2a-1, K = 8(2m+1)"),
    ("t-value-routes", "T_m^(a)(n) from Bernoulli polynomials = from sinh(2(a+1)x)/cosh((2m+1)x) = (-1)^{n+1} L(-2n-1, chi)/2"),
    ("glaisher-specialization", "T_1^(0)(n) are the Glaisher numbers 1, 23, 1681, 257543, 67637281"),
    ("andrews-gordon", "Andrews-Gordon multi-sum = (q^{a+1}, q^{2m-a}, q^{2m+1}; q^{2m+1})_inf/(q)_inf = theta side"),
    ("andrews-gordon-variant", "bracketed Andrews-Gordon sum with [k_{a+1}+1 over k_a] = same product"),
    ("jacobi-triple-product", "sum_j (-1)^j x^j q^{j(j-1)/2} = (x, q/x, q; q)_inf"),
    ("qbinomial-recurrences", "both Pascal recurrences, symmetry and q = 1 value of [n over c]"),
    ("h-closed-form", "H_m^(a)(x) multi-sum = sum_n chi(n) q^{(n^2-c^2)/K} x^{(n-c)/2}"),
    ("h-difference-equation", "H(x) = 1 - q^{a+1} x^{2a+2} - q^{2m-a} x^{2m+1} H(qx)"),
    ("htilde-difference-equation", "H~(x) = sum_{i<=2a} x^i - q^{m-a} x^{2m} - q^{m-a+1} x^{2m+1} H~(qx)"),
    ("h-at-x-one", "H_m^(a)(1) = (q^{a+1}, q^{2m-a}, q^{2m+1}; q^{2m+1})_inf"),
    ("h-finite-lemma", "H_m^(a)(x) = (qx)_inf-block + (x)_{k_m+1}-block decomposition"),
    ("bridge-identity", "d/dx H at x = 1 split into three blocks = sum_n (n/2) chi(n) q^{(n^2-c^2)/K}"),
    ("bc-lemma", "finite q-sum lemma used to build Bailey pairs"),
    ("bailey-machinery", "Bailey lemma, corollary and both symmetric corollaries on random rational pairs"),
    ("delta-identity", "finite sum collapsing to delta_{n,0}"),
    ("mid-relate", "intermediate Bailey-pair relation, q = Q^2"),
    ("half-derivative-numeric", "-1/2 sum n chi(n) e^{-(n^2-c^2)t/K} against the truncated T-series"),
    ("mellin-asymptotic", "sum n chi(n) e^{-n^2 t} ~ sum_k L(-2k-1, chi) (-t)^k/k!"),
    ("omega-identities", "(w)_{N-1} = N, conj((w)_a)(w)_{N-1-a} = N, sum_{b>=a} (w)_b/(w)_{b-a} = N"),
    ("kashaev-equivalence", "X_2^(0)(w) = sum_{a+b<N} (w)_{a+b} w^{-ab}"),
    ("asymptotic-expansion", "X_m^(a)(e^{2 pi i/N}) ~ geometric N^{3/2} block + e^{-pi i c^2/(4(2m+1)N)} T-series"),
    ("modular-matrix", "M = (2/sqrt(2m+1)) cos((2a-1)(2b-1) pi/(2(2m+1))) is symmetric with M^2 = I"),
    ("poisson-modularity", "Phi_m(tau) = sqrt(i/tau) M Phi_m(-1/tau)"),
    ("nearly-modular", "Phi~(1/N) + (-iN)^{3/2} M Phi~(-N) ~ sum T_m(n)/n! (pi/(4(2m+1) i N))^n"),
];

pub fn identity(check: &str) -> &'static str {
    REGISTRY.iter().find(|(c, _)| *c == check).map_or("", |(_, d)| d)
}

/// Names accepted by `verify`.
pub const VERIFY_NAMES: &[&str] = &[
    "theorem",
    "t-values",
    "glaisher",
    "andrews-gordon",
    "variant-ag",
    "jacobi",
    "qbinomial",
    "h-closed-form",
    "h-difference",
    "htilde-difference",
    "h-at-one",
    "h-finite-lemma",
    "bridge",
    "bc-lemma",
    "bailey",
    "delta",
    "mid-relate",
    "half-derivative",
    "mellin",
    "omega",
    "kashaev-equivalence",
    "asymptotic",
    "modular-matrix",
    "poisson",
    "nearly-modular",
];

#[derive(Clone, Debug)]
pub struct Params {
    pub m: Option<usize>,
    pub a: Option<usize>,
    pub order: Option<usize>,
    pub n: Option<usize>,
    pub precision: usize,
    pub tail: Terms,
    pub seed: u64,
    pub t0: Rational,
    pub tau: (Rational, Rational),
}

impl Default for Params {
    fn default() -> Self {
        Params {
            m: None,
            a: None,
            order: None,
            n: None,
            precision: 256,
            tail: Terms::Optimal,
            seed: DEFAULT_SEED,
            t0: frac(1, 100),
            tau: (int(0), int(1)),
        }
    }
}

pub fn tail_name(t: Terms) -> String {
    match t {
        Terms::Optimal => "optimal".into(),
        Terms::Fixed(k) => k.to_string(),
    }
}

#[derive(Default)]
pub struct CellOutput {
    pub reports: Vec<CheckReport>,
    pub values: Vec<(String, Value)>,
}

impl CellOutput {
    fn one(r: CheckReport) -> Self {
        CellOutput { reports: vec![r], values: Vec::new() }
    }
}

/// A unit of scheduled work. Cells are independent and run in any order;
/// reports are assembled by position.
pub struct Cell {
    pub key: String,
    pub run: Box<dyn Fn() -> Result<CellOutput> + Send + Sync>,
}

impl Cell {
    pub fn new(key: impl Into<String>, run: impl Fn() -> Result<CellOutput> + Send + Sync + 'static) -> Self {
        Cell { key: key.into(), run: Box::new(run) }
    }
}

/// Whether `verify <name>` reads `--seed` / `--precision`.
pub fn uses_seed(name: &str) -> bool {
    name == "bailey"
}

pub fn is_numeric(name: &str) -> bool {
    matches!(
        name,
        "half-derivative" | "mellin" | "omega" | "kashaev-equivalence" | "asymptotic" | "modular-matrix" | "poisson" | "nearly-modular"
    )
}

/// The single cell run by `verify <name>`. `None` for an unknown name.
pub fn verify_cell(name: &str, p: &Params) -> Option<Cell> {
    let m = p.m.unwrap_or(2);
    let a = p.a.unwrap_or(0);
    let bits = p.precision;
    let tail = p.tail;
    let order = p.order;
    let key = format!("m={m} a={a}");
    let cell = match name {
        "theorem" => Cell::new(key, move || theorem(m, a, order.unwrap_or(12)).map(CellOutput::one)),
        "t-values" => Cell::new(key, move || t_value_routes(m, a, order.unwrap_or(20)).map(CellOutput::one)),
        "glaisher" => Cell::new("m=1 a=0", || Ok(CellOutput::one(glaisher()))),
        "andrews-gordon" => Cell::new(key, move || verify_andrews_gordon(m, a, order.unwrap_or(60)).map(CellOutput::one)),
        "variant-ag" => Cell::new(key, move || verify_variant_ag(m, a, order.unwrap_or(60)).map(CellOutput::one)),
        "jacobi" => {
            let x_range = p.n.unwrap_or(20);
            Cell::new(format!("x_range={x_range}"), move || Ok(CellOutput::one(verify_jacobi_triple(order.unwrap_or(40), x_range))))
        }
        "qbinomial" => Cell::new("qbinomial", move || Ok(CellOutput::one(verify_qbinomial_recurrences(order.unwrap_or(12))))),
        "h-closed-form" => Cell::new(key, move || {
            let d = order.unwrap_or(12);
            verify_h_closed_form(m, a, d, d).map(CellOutput::one)
        }),
        "h-difference" => Cell::new(key, move || {
            let d = order.unwrap_or(12);
            verify_h_difference_equation(m, a, d, d).map(CellOutput::one)
        }),
        "htilde-difference" => Cell::new(key, move || {
            let d = order.unwrap_or(12);
            verify_htilde_difference(m, a, d, d).map(CellOutput::one)
        }),
        "h-at-one" => Cell::new(key, move || verify_h_unity(m, a, order.unwrap_or(30)).map(CellOutput::one)),
        "h-finite-lemma" => Cell::new(key, move || {
            let d = order.unwrap_or(10);
            verify_h_finite_lemma(m, a, d, d).map(CellOutput::one)
        }),
        "bridge" => Cell::new(key, move || verify_bridge_identity(m, a, order.unwrap_or(25)).map(CellOutput::one)),
        "bc-lemma" => {
            let a_max = p.a.unwrap_or(8);
            Cell::new(format!("a_max={a_max}"), move || Ok(CellOutput::one(verify_bc_lemma(a_max, order.unwrap_or(40)))))
        }
        "bailey" => {
            let (n_max, seed) = (p.n.unwrap_or(6), p.seed);
            let samples = order.unwrap_or(100);
            Cell::new(format!("n_max={n_max}"), move || verify_bailey_machinery(n_max, samples, seed).map(CellOutput::one))
        }
        "delta" => {
            let n_max = p.n.unwrap_or(6);
            Cell::new(format!("n_max={n_max}"), move || Ok(CellOutput::one(verify_delta_identity(n_max, order.unwrap_or(30)))))
        }
        "mid-relate" => {
            let n_max = p.n.unwrap_or(6);
            Cell::new(format!("n_max={n_max}"), move || verify_mid_relate(n_max, order.unwrap_or(30), &[1, 2, 3, 5]).map(CellOutput::one))
        }
        "half-derivative" => {
            let t0 = p.t0.clone();
            Cell::new(key, move || half_derivative(m, a, &t0, tail, bits))
        }
        "mellin" => {
            let t0 = p.t0.clone();
            Cell::new(key, move || mellin(m, a, std::slice::from_ref(&t0), tail, bits))
        }
        "omega" => {
            let n = p.n.unwrap_or(10);
            Cell::new(format!("N={n}"), move || verify_omega_identities(n, bits).map(CellOutput::one))
        }
        "kashaev-equivalence" => {
            let n = p.n.unwrap_or(10);
            Cell::new(format!("N={n}"), move || kashaev_equivalence(n, bits).map(CellOutput::one))
        }
        "asymptotic" => {
            let ns: Vec<usize> = p.n.map_or(vec![25, 50, 100, 200], |n| vec![n]);
            Cell::new(key, move || asymptotic(m, a, &ns, bits, tail))
        }
        "modular-matrix" => Cell::new(format!("m={m}"), move || modular(m, bits).map(CellOutput::one)),
        "poisson" => {
            let tau = p.tau.clone();
            Cell::new(format!("m={m}"), move || {
                let t = tau_value(&tau, bits);
                verify_poisson_modularity(m, &t, bits).map(CellOutput::one)
            })
        }
        "nearly-modular" => {
            let n = p.n.unwrap_or(50);
            Cell::new(format!("m={m} N={n}"), move || verify_nearly_modular(m, n, bits, tail).map(CellOutput::one))
        }
        _ => return None,
    };
    Some(cell)
}

pub fn tau_value(tau: &(Rational, Rational), bits: usize) -> ApComplex {
    ApComplex::new(ApReal::from_rational(&tau.0, bits + 32), ApReal::from_rational(&tau.1, bits + 32))
}

pub fn theorem(m: usize, a: usize, order: usize) -> Result<CheckReport> {
    let r = verify_theorem(m, a, order)?;
    let mut report = CheckReport::new("t-expansion")
        .param("m", m)
        .param("a", a)
        .param("order", order)
        .bound(format!("coefficients of t^0..t^{order}, exact"));
    match &r.mismatch {
        None => report.record(true, "", "", "", ""),
        Some((d, lhs, rhs)) => report.record(false, "coefficient", format!("t^{d}"), rhs, lhs),
    }
    report.value("equal_through", r.equal_through);
    report.value("constant_term", r.lhs.coeff(0));
    Ok(report)
}

pub fn t_value_routes(m: usize, a: usize, n_max: usize) -> Result<CheckReport> {
    let all = t_values(m, a, n_max + 1)?;
    let chi = chi_general(m, a)?;
    let mut report = CheckReport::new("t-value-routes")
        .param("m", m)
        .param("a", a)
        .param("n_max", n_max)
        .bound("exact");
    for (n, t) in all.iter().enumerate() {
        let b = t_value_bernoulli(m, a, n)?;
        let g = t_value_genfun(m, a, n)?;
        let l = l_value_negative(&chi, n)? * int(-sign(n)) / int(2);
        report.record(&b == t && &g == t && &l == t, "", format!("n={n}"), &b, t);
    }
    if let Some(t) = all.get(1) {
        report.value("t1", t);
    }
    Ok(report)
}

pub fn glaisher() -> CheckReport {
    let expected = [1i64, 23, 1681, 257543, 67637281];
    let got = t_values(1, 0, expected.len()).expect("m = 1 is valid");
    let mut report = CheckReport::new("glaisher-specialization").param("m", 1).param("a", 0).bound("exact");
    for (n, (e, g)) in expected.iter().zip(&got).enumerate() {
        report.record(&int(*e) == g, "", format!("n={n}"), e, g);
    }
    report
}

pub fn half_derivative(m: usize, a: usize, t0: &Rational, tail: Terms, bits: usize) -> Result<CellOutput> {
    let r = half_derivative_numeric_check(m, a, t0, tail, bits)?;
    let mut report = CheckReport::new("half-derivative-numeric")
        .param("m", m)
        .param("a", a)
        .param("t0", t0)
        .param("tail", tail_name(tail))
        .param("precision", bits)
        .bound("residual <= 2 x first omitted term");
    let bound = r.first_omitted.mul_i64(2);
    report.record(r.residual <= bound, "", format!("t0={t0}"), format!("<= {}", bound.to_dec_digits(6)), r.residual.to_dec_digits(6));
    report.value("terms_used", r.terms_used);
    let values = vec![
        ("lhs".into(), json::real(&r.lhs)),
        ("rhs".into(), json::real(&r.rhs)),
        ("residual".into(), json::real(&r.residual)),
        ("first_omitted".into(), json::real(&r.first_omitted)),
    ];
    Ok(CellOutput { reports: vec![report], values })
}

/// Residual bound at the first `t0`; residuals must shrink along the rest.
pub fn mellin(m: usize, a: usize, t0s: &[Rational], tail: Terms, bits: usize) -> Result<CellOutput> {
    let chi = chi_general(m, a)?;
    let mut report = CheckReport::new("mellin-asymptotic")
        .param("modulus", chi.modulus())
        .param("a", a)
        .param("tail", tail_name(tail))
        .param("precision", bits)
        .bound("residual <= 2 x first omitted term at the first t0; residual decreasing along t0");
    let mut values = Vec::new();
    let mut prev: Option<ApReal> = None;
    for (i, t0) in t0s.iter().enumerate() {
        let r = mellin_asymptotic_check(&chi, t0, tail, bits)?;
        if i == 0 {
            let bound = r.first_omitted.mul_i64(2);
            report.record(r.residual <= bound, "bound", format!("t0={t0}"), format!("<= {}", bound.to_dec_digits(6)), r.residual.to_dec_digits(6));
        }
        if let Some(p) = &prev {
            report.record(r.residual < *p, "decrease", format!("t0={t0}"), format!("< {}", p.to_dec_digits(6)), r.residual.to_dec_digits(6));
        }
        values.push((format!("residual t0={t0}"), json::real(&r.residual)));
        values.push((format!("first_omitted t0={t0}"), json::real(&r.first_omitted)));
        prev = Some(r.residual);
    }
    Ok(CellOutput { reports: vec![report], values })
}

pub fn kashaev_equivalence(n: usize, bits: usize) -> Result<CheckReport> {
    let x = eval_x_unity(2, 0, n, bits)?;
    let k = kashaev_double_sum(n, bits)?;
    let rel = x.sub(&k).abs().div(&k.abs());
    let tol_exp = bits / 2;
    let mut report = CheckReport::new("kashaev-equivalence")
        .param("N", n)
        .param("precision", bits)
        .bound(format!("relative difference < 2^-{tol_exp}"));
    report.record(rel < ApReal::pow2(-(tol_exp as i32), bits), "", format!("N={n}"), format!("< 2^-{tol_exp}"), rel.to_dec_digits(6));
    Ok(report)
}

/// Relative error strictly decreasing along `ns`; residual within twice the
/// first omitted term at the last `N`.
pub fn asymptotic(m: usize, a: usize, ns: &[usize], bits: usize, tail: Terms) -> Result<CellOutput> {
    let mut report = CheckReport::new("asymptotic-expansion")
        .param("m", m)
        .param("a", a)
        .param("N", ns.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(","))
        .param("tail", tail_name(tail))
        .param("precision", bits)
        .bound("relative error decreasing in N; residual <= 2 x first omitted term at the largest N");
    let mut values = Vec::new();
    let mut prev: Option<ApReal> = None;
    for (i, &n) in ns.iter().enumerate() {
        let (rel, abs, omitted) = asymptotic_error(m, a, n, bits, tail)?;
        if let Some(p) = &prev {
            report.record(rel < *p, "decrease", format!("N={n}"), format!("< {}", p.to_dec_digits(6)), rel.to_dec_digits(6));
        }
        if i + 1 == ns.len() {
            let bound = omitted.mul_i64(2);
            report.record(abs <= bound, "bound", format!("N={n}"), format!("<= {}", bound.to_dec_digits(6)), abs.to_dec_digits(6));
        }
        values.push((format!("relative_error N={n}"), json::real(&rel)));
        prev = Some(rel);
    }
    Ok(CellOutput { reports: vec![report], values })
}

pub fn modular(m: usize, bits: usize) -> Result<CheckReport> {
    let mat = modular_matrix(m, bits)?;
    let tol = ApReal::pow2(8 - bits as i32, bits).mul_i64((m * m) as i64);
    let mut report = CheckReport::new("modular-matrix")
        .param("m", m)
        .param("precision", bits)
        .bound(format!("|M^2 - I| < m^2 2^-{}", bits - 8));
    report.record(mat.is_symmetric(), "symmetric", "", true, mat.is_symmetric());
    let res = mat.square_residual();
    report.record(res < tol, "square", "", format!("< {}", tol.to_dec_digits(4)), res.to_dec_digits(4));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_verify_name_has_a_cell_with_a_registered_identity() {
        let p = Params { m: Some(1), n: Some(3), order: Some(4), ..Params::default() };
        for name in VERIFY_NAMES {
            let cell = verify_cell(name, &p).expect(name);
            if matches!(*name, "asymptotic" | "nearly-modular" | "poisson" | "kashaev-equivalence" | "half-derivative" | "mellin") {
                continue;
            }
            if let Ok(out) = (cell.run)() {
                for r in out.reports {
                    assert!(!identity(r.check).is_empty(), "{}", r.check);
                }
            }
        }
        assert!(verify_cell("nope", &p).is_none());
    }

    #[test]
    fn registry_names_are_unique() {
        let mut names: Vec<_> = REGISTRY.iter().map(|(n, _)| n).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), REGISTRY.len());
    }
}
