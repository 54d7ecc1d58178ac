//! Command-line driver for `agq-core`: named checks, the acceptance suites,
//! JSON reports and TOML suite configuration.

pub mod checks;
pub mod cli;
pub mod config;
pub mod json;
pub mod suite;

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use checks::{Cell, CellOutput};
use json::VerificationReport;

/// Worker pool sized by `AGQ_THREADS` (unset or 0 lets rayon choose).
pub fn thread_pool() -> rayon::ThreadPool {
    let n = std::env::var("AGQ_THREADS").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(0);
    rayon::ThreadPoolBuilder::new().num_threads(n).build().expect("thread pool")
}

/// Runs every cell and appends its reports in cell order. Stops at the
/// first parameter error, again in cell order.
pub fn run_cells(cells: Vec<Cell>, report: &mut VerificationReport, progress: bool) -> agq_core::Result<()> {
    let total = cells.len();
    let done = AtomicUsize::new(0);
    let outputs: Vec<(String, agq_core::Result<CellOutput>)> = thread_pool().install(|| {
        cells
            .into_par_iter()
            .map(|cell| {
                let start = std::time::Instant::now();
                let out = (cell.run)();
                if progress {
                    let k = done.fetch_add(1, Ordering::Relaxed) + 1;
                    let mark = match &out {
                        Ok(o) if o.reports.iter().all(|r| r.passed()) => "ok",
                        Ok(_) => "FAIL",
                        Err(_) => "error",
                    };
                    eprintln!("[{k}/{total}] {} {mark} ({} ms)", cell.key, start.elapsed().as_millis());
                }
                (cell.key, out)
            })
            .collect()
    });
    for (key, out) in outputs {
        let out = out?;
        for r in out.reports {
            report.push(&key, r);
        }
        for (name, v) in out.values {
            let name = if total > 1 { format!("{key}: {name}") } else { name };
            report.values.insert(name, v);
        }
    }
    Ok(())
}
