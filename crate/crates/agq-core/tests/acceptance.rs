//! Acceptance matrix. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use agq_core::apcomplex::{ApComplex, ApReal};
use agq_core::characters::{chi_12, chi_20};
use agq_core::halfderiv::verify_theorem;
use agq_core::lvalues::{mellin_asymptotic_check, t_value_bernoulli, t_value_genfun, t_values, Terms};
use agq_core::qseries::*;
use agq_core::rational::{frac, int};
use agq_core::unity::*;
use agq_core::CheckReport;

const BITS: usize = 256;

struct Outcome {
    ok: bool,
    note: String,
}

fn from_reports(reports: &[CheckReport]) -> Outcome {
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    match reports.iter().find_map(|r| r.first_failure().map(|f| (r.check, f.clone()))) {
        None => Outcome { ok: true, note: format!("{} reports, {checked} comparisons", reports.len()) },
        Some((name, f)) => Outcome {
            ok: false,
            note: format!("{name}: {} at {} expected {} got {}", f.check, f.location, f.expected, f.actual),
        },
    }
}

fn fail(note: impl Into<String>) -> Outcome {
    Outcome { ok: false, note: note.into() }
}

fn c1_theorem() -> Outcome {
    for m in 1..=4 {
        for a in 0..m {
            let r = verify_theorem(m, a, 12).unwrap();
            if !r.passed() {
                return fail(format!("m={m} a={a} equal through t^{}", r.equal_through));
            }
        }
    }
    Outcome { ok: true, note: "10 cells through t^12".into() }
}

fn c2_m_one() -> Outcome {
    let t = t_values(1, 0, 5).unwrap();
    let glaisher = [1, 23, 1681, 257543, 67637281];
    if t != glaisher.iter().map(|&g| int(g)).collect::<Vec<_>>() {
        return fail(format!("T values {t:?}"));
    }
    let r = verify_theorem(1, 0, 12).unwrap();
    if !r.passed() {
        return fail(format!("equal through t^{}", r.equal_through));
    }
    Outcome { ok: true, note: "T(0)=1 T(1)=23, series through t^12".into() }
}

fn c3_routes() -> Outcome {
    let mut n_checked = 0;
    for m in 1..=5 {
        for a in 0..m {
            let all = t_values(m, a, 21).unwrap();
            for n in 0..=20 {
                let b = t_value_bernoulli(m, a, n).unwrap();
                if b != t_value_genfun(m, a, n).unwrap() || b != all[n] {
                    return fail(format!("m={m} a={a} n={n}"));
                }
                n_checked += 1;
            }
        }
    }
    Outcome { ok: true, note: format!("{n_checked} values") }
}

fn c4_andrews_gordon() -> Outcome {
    let mut reports = Vec::new();
    for m in 2..=4 {
        for a in 0..m {
            reports.push(verify_andrews_gordon(m, a, 60).unwrap());
            reports.push(verify_variant_ag(m, a, 60).unwrap());
        }
    }
    from_reports(&reports)
}

fn c5_jacobi() -> Outcome {
    from_reports(&[verify_jacobi_triple(40, 20)])
}

fn c6_h_functions() -> Outcome {
    let mut reports = Vec::new();
    for m in 1..=3 {
        for a in 0..m {
            reports.push(verify_h_closed_form(m, a, 12, 12).unwrap());
            reports.push(verify_h_difference_equation(m, a, 12, 12).unwrap());
            reports.push(verify_htilde_difference(m, a, 12, 12).unwrap());
        }
    }
    from_reports(&reports)
}

fn c7_bridge() -> Outcome {
    let mut reports = Vec::new();
    for m in 1..=3 {
        for a in 0..m {
            reports.push(verify_bridge_identity(m, a, 25).unwrap());
        }
    }
    from_reports(&reports)
}

fn c8_bailey() -> Outcome {
    let reports = [
        verify_bc_lemma(8, 40),
        verify_bailey_machinery(6, 100, DEFAULT_SEED).unwrap(),
        verify_delta_identity(6, 30),
        verify_mid_relate(6, 30, &[1, 2, 3, 5]).unwrap(),
    ];
    let mut o = from_reports(&reports);
    o.note = format!("{} (seed {DEFAULT_SEED:#x})", o.note);
    o
}

fn c9_kashaev() -> Outcome {
    let tol = ApReal::pow2(-128, BITS);
    for n in 1..=60 {
        let x = eval_x_unity(2, 0, n, BITS).unwrap();
        let k = kashaev_double_sum(n, BITS).unwrap();
        let rel = x.sub(&k).abs().div(&k.abs());
        if !(rel < tol) {
            return fail(format!("N={n} relative {}", rel.to_dec_digits(6)));
        }
    }
    let reports: Vec<_> = (1..=50).map(|n| verify_omega_identities(n, BITS).unwrap()).collect();
    let o = from_reports(&reports);
    if o.ok {
        Outcome { ok: true, note: format!("N<=60 below 2^-128; omega identities {}", o.note) }
    } else {
        o
    }
}

fn c10_asymptotics() -> Outcome {
    let mut notes = Vec::new();
    for (m, a) in [(1, 0), (2, 0), (2, 1)] {
        let mut prev: Option<ApReal> = None;
        for n in [25, 50, 100, 200] {
            let (rel, abs, omitted) = asymptotic_error(m, a, n, BITS, Terms::Optimal).unwrap();
            if let Some(p) = &prev {
                if !(rel < *p) {
                    return fail(format!("m={m} a={a} N={n}: relative error {} not below {}", rel.to_dec_digits(4), p.to_dec_digits(4)));
                }
            }
            if n == 200 {
                if !(abs <= omitted.mul_i64(2)) {
                    return fail(format!("m={m} a={a} N=200: residual {} vs omitted {}", abs.to_dec_digits(4), omitted.to_dec_digits(4)));
                }
                notes.push(format!("({m},{a}) rel {}", rel.to_dec_digits(3)));
            }
            prev = Some(rel);
        }
    }
    Outcome { ok: true, note: notes.join(", ") }
}

fn c11_poisson() -> Outcome {
    let taus = [
        ApComplex::i(BITS),
        ApComplex::new(ApReal::from_rational(&frac(1, 2), BITS), ApReal::from_i64(1, BITS)),
        ApComplex::new(ApReal::zero(BITS), ApReal::from_i64(2, BITS)),
    ];
    let mut reports = Vec::new();
    for m in 1..=4 {
        for tau in &taus {
            // tolerance at 256 bits is 2^-180
            reports.push(verify_poisson_modularity(m, tau, BITS).unwrap());
        }
        let mat = modular_matrix(m, BITS).unwrap();
        let sq_tol = ApReal::pow2(-248, BITS).mul_i64((m * m) as i64);
        if !mat.is_symmetric() || !(mat.square_residual() < sq_tol) {
            return fail(format!("m={m}: M^2 residual {}", mat.square_residual().to_dec_digits(4)));
        }
    }
    let worst = reports
        .iter()
        .flat_map(|r| r.values.iter().filter(|(k, _)| k == "residual_log2"))
        .filter_map(|(_, v)| v.parse::<i32>().ok())
        .max()
        .unwrap_or(i32::MIN);
    let mut o = from_reports(&reports);
    o.note = format!("{}, worst residual < 2^{}", o.note, worst + 1);
    o
}

fn c12_nearly_modular() -> Outcome {
    let mut reports = Vec::new();
    for m in 1..=2 {
        for n in [50, 100, 200] {
            reports.push(verify_nearly_modular(m, n, BITS, Terms::Optimal).unwrap());
        }
    }
    from_reports(&reports)
}

fn c13_mellin() -> Outcome {
    let mut chars = vec![("chi_12", chi_12())];
    for a in 0..2 {
        chars.push((if a == 0 { "chi_20^(0)" } else { "chi_20^(1)" }, chi_20(a).unwrap()));
    }
    let mut notes = Vec::new();
    for (name, chi) in &chars {
        let r100 = mellin_asymptotic_check(chi, &frac(1, 100), Terms::Optimal, BITS).unwrap();
        let r200 = mellin_asymptotic_check(chi, &frac(1, 200), Terms::Optimal, BITS).unwrap();
        if !(r100.residual <= r100.first_omitted.mul_i64(2)) {
            return fail(format!("{name}: residual {} vs omitted {}", r100.residual.to_dec_digits(4), r100.first_omitted.to_dec_digits(4)));
        }
        if !(r200.residual < r100.residual) {
            return fail(format!("{name}: residual at 1/200 {} not below 1/100 {}", r200.residual.to_dec_digits(4), r100.residual.to_dec_digits(4)));
        }
        notes.push(format!("{name} {}", r100.residual.to_dec_digits(3)));
    }
    Outcome { ok: true, note: notes.join(", ") }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("t-expansion theorem, m<=4, through t^12", c1_theorem),
        ("m=1 specialization", c2_m_one),
        ("T-value routes agree, m<=5, n<=20", c3_routes),
        ("Andrews-Gordon and variant through q^60", c4_andrews_gordon),
        ("Jacobi triple product", c5_jacobi),
        ("H closed form and difference equations", c6_h_functions),
        ("bridge identities through q^25", c7_bridge),
        ("Bailey machinery", c8_bailey),
        ("Kashaev sum and omega identities", c9_kashaev),
        ("asymptotics at roots of unity", c10_asymptotics),
        ("Poisson modularity", c11_poisson),
        ("nearly modular relation", c12_nearly_modular),
        ("Mellin asymptotics", c13_mellin),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(i + 1)) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        let status = if o.ok { "PASS" } else { "FAIL" };
        println!("{status} {:>2} {name} [{:.1}s] {}", i + 1, start.elapsed().as_secs_f64(), o.note);
        failed += usize::from(!o.ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
