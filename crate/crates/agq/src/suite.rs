//! The acceptance matrix as schedulable cells.

use agq_core::lvalues::Terms;
use agq_core::qseries::*;
use agq_core::rational::{frac, int};
use agq_core::unity::{verify_nearly_modular, verify_omega_identities, verify_poisson_modularity};
use agq_core::Rational;

use crate::checks::{self, tau_value, Cell, CellOutput};
use crate::config::SuiteConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SuiteName {
    Formal,
    Numeric,
    All,
}

fn one(r: agq_core::CheckReport) -> CellOutput {
    CellOutput { reports: vec![r], values: Vec::new() }
}

pub fn formal_cells(cfg: &SuiteConfig) -> Vec<Cell> {
    let f = cfg.formal.clone();
    let mut cells = Vec::new();
    for m in 1..=f.theorem_m_max {
        for a in 0..m {
            let d = f.theorem_order;
            cells.push(Cell::new(format!("theorem m={m} a={a}"), move || checks::theorem(m, a, d).map(one)));
        }
    }
    cells.push(Cell::new("glaisher", || Ok(one(checks::glaisher()))));
    for m in 1..=f.t_value_m_max {
        for a in 0..m {
            let n = f.t_value_n_max;
            cells.push(Cell::new(format!("t-values m={m} a={a}"), move || checks::t_value_routes(m, a, n).map(one)));
        }
    }
    for m in 2..=f.ag_m_max {
        for a in 0..m {
            let d = f.ag_order;
            cells.push(Cell::new(format!("andrews-gordon m={m} a={a}"), move || {
                Ok(CellOutput { reports: vec![verify_andrews_gordon(m, a, d)?, verify_variant_ag(m, a, d)?], values: Vec::new() })
            }));
        }
    }
    let (jo, jx) = (f.jacobi_order, f.jacobi_x_range);
    cells.push(Cell::new("jacobi", move || Ok(one(verify_jacobi_triple(jo, jx)))));
    cells.push(Cell::new("qbinomial", || Ok(one(verify_qbinomial_recurrences(12)))));
    for m in 1..=f.h_m_max {
        for a in 0..m {
            let d = f.h_order;
            cells.push(Cell::new(format!("h m={m} a={a}"), move || {
                let mut reports = vec![
                    verify_h_closed_form(m, a, d, d)?,
                    verify_h_difference_equation(m, a, d, d)?,
                    verify_htilde_difference(m, a, d, d)?,
                    verify_h_unity(m, a, 2 * d)?,
                ];
                if m == 2 {
                    reports.push(verify_h_finite_lemma(m, a, d, d)?);
                }
                Ok(CellOutput { reports, values: Vec::new() })
            }));
        }
    }
    for m in 1..=f.bridge_m_max {
        for a in 0..m {
            let d = f.bridge_order;
            cells.push(Cell::new(format!("bridge m={m} a={a}"), move || verify_bridge_identity(m, a, d).map(one)));
        }
    }
    let (ba, bo) = (f.bc_a_max, f.bc_order);
    cells.push(Cell::new("bc-lemma", move || Ok(one(verify_bc_lemma(ba, bo)))));
    let (bn, bs, seed) = (f.bailey_n_max, f.bailey_samples, cfg.seed);
    cells.push(Cell::new("bailey", move || verify_bailey_machinery(bn, bs, seed).map(one)));
    let (dn, dd) = (f.delta_n_max, f.delta_order);
    cells.push(Cell::new("delta", move || Ok(one(verify_delta_identity(dn, dd)))));
    cells.push(Cell::new("mid-relate", move || verify_mid_relate(dn, dd, &[1, 2, 3, 5]).map(one)));
    cells
}

pub fn numeric_cells(cfg: &SuiteConfig) -> Vec<Cell> {
    let n = cfg.numeric.clone();
    let bits = cfg.precision;
    let mut cells = Vec::new();
    for k in 1..=n.kashaev_n_max {
        cells.push(Cell::new(format!("kashaev N={k}"), move || checks::kashaev_equivalence(k, bits).map(one)));
    }
    for k in 1..=n.omega_n_max {
        cells.push(Cell::new(format!("omega N={k}"), move || verify_omega_identities(k, bits).map(one)));
    }
    for (m, a) in [(1, 0), (2, 0), (2, 1)] {
        let ns = n.asymptotic_n.clone();
        cells.push(Cell::new(format!("asymptotic m={m} a={a}"), move || checks::asymptotic(m, a, &ns, bits, Terms::Optimal)));
    }
    let taus: [(Rational, Rational); 3] = [(int(0), int(1)), (frac(1, 2), int(1)), (int(0), int(2))];
    for m in 1..=n.poisson_m_max {
        for tau in &taus {
            let tau = tau.clone();
            cells.push(Cell::new(format!("poisson m={m} tau={}+{}i", tau.0, tau.1), move || {
                verify_poisson_modularity(m, &tau_value(&tau, bits), bits).map(one)
            }));
        }
    }
    for m in 1..=n.matrix_m_max {
        cells.push(Cell::new(format!("matrix m={m}"), move || checks::modular(m, bits).map(one)));
    }
    for m in 1..=n.nearly_modular_m_max {
        for &k in &n.nearly_modular_n {
            cells.push(Cell::new(format!("nearly-modular m={m} N={k}"), move || verify_nearly_modular(m, k, bits, Terms::Optimal).map(one)));
        }
    }
    let t0s: Vec<Rational> = n.mellin_t0_denominators.iter().map(|&d| frac(1, d)).collect();
    for (m, a) in [(1, 0), (2, 0), (2, 1)] {
        let t0s = t0s.clone();
        cells.push(Cell::new(format!("mellin m={m} a={a}"), move || checks::mellin(m, a, &t0s, Terms::Optimal, bits)));
    }
    cells
}

pub fn cells(name: SuiteName, cfg: &SuiteConfig) -> Vec<Cell> {
    match name {
        SuiteName::Formal => formal_cells(cfg),
        SuiteName::Numeric => numeric_cells(cfg),
        SuiteName::All => {
            let mut c = formal_cells(cfg);
            c.extend(numeric_cells(cfg));
            c
        }
    }
}
