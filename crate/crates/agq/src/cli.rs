//! Argument parsing and dispatch. Exit codes: 0 pass, 1 verification
//! failure, 2 usage or parameter error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use agq_core::lvalues::Terms;
use agq_core::rational::parse_fraction;
use agq_core::unity::{eval_x_unity, kashaev_double_sum};
use agq_core::Rational;
use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand};

use crate::checks::{self, tail_name, Params, REGISTRY, VERIFY_NAMES};
use crate::config::SuiteConfig;
use crate::json::{self, Status, VerificationReport};
use crate::suite::{self, SuiteName};

#[derive(Parser, Debug)]
#[command(name = "agq", version, about = "Exact and high-precision checks of the q-series X_m^(a)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one named check (see `agq list`)
    Verify {
        #[arg(value_parser = PossibleValuesParser::new(VERIFY_NAMES))]
        check: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Evaluate X_m^(a) at q = e^(2 pi i/N)
    Kashaev {
        #[command(flatten)]
        opts: Opts,
    },
    /// Run the formal, numeric or full acceptance matrix
    Suite {
        name: SuiteName,
        /// TOML file overriding suite sizes; a missing file means defaults
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        opts: Opts,
    },
    /// List check names and what each compares
    List,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    /// Truncation order (q-order, t-order, or sample count for `bailey`)
    #[arg(long)]
    pub order: Option<usize>,
    /// Root of unity order, or n_max / x_range for the Bailey and Jacobi checks
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// Working precision in bits
    #[arg(long, value_parser = clap::value_parser!(u32).range(64..=1 << 16))]
    pub precision: Option<u32>,
    /// Tail terms: an integer or `optimal`
    #[arg(long, value_parser = parse_terms)]
    pub tail: Option<Terms>,
    #[arg(long, value_parser = parse_seed)]
    pub seed: Option<u64>,
    /// Positive rational such as 1/100
    #[arg(long, value_parser = parse_rational)]
    pub t0: Option<Rational>,
    /// `RE,IM` with rational parts, e.g. `1/2,1`
    #[arg(long, value_parser = parse_tau)]
    pub tau: Option<(Rational, Rational)>,
    /// Print the JSON report instead of text
    #[arg(long)]
    pub json: bool,
    /// Write the report to FILE instead of standard output
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

fn parse_terms(s: &str) -> Result<Terms, String> {
    Terms::parse(s).map_err(|e| e.to_string())
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.replace('_', "").parse(),
    };
    r.map_err(|e| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    parse_fraction(s).map_err(|e| e.to_string())
}

fn parse_tau(s: &str) -> Result<(Rational, Rational), String> {
    let (re, im) = s.split_once(',').ok_or("expected RE,IM")?;
    Ok((parse_rational(re.trim())?, parse_rational(im.trim())?))
}

impl Opts {
    fn params(&self) -> Params {
        let d = Params::default();
        Params {
            m: self.m,
            a: self.a,
            order: self.order,
            n: self.n,
            precision: self.precision.map_or(d.precision, |p| p as usize),
            tail: self.tail.unwrap_or(d.tail),
            seed: self.seed.unwrap_or(d.seed),
            t0: self.t0.clone().unwrap_or(d.t0),
            tau: self.tau.clone().unwrap_or(d.tau),
        }
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    ExitCode::from(run(cli))
}

/// Executes a parsed command line and returns the exit code.
pub fn run(cli: Cli) -> u8 {
    let start = Instant::now();
    let (mut report, opts) = match cli.command {
        Command::List => {
            for (name, what) in REGISTRY {
                println!("{name:<28} {what}");
            }
            println!("\nverify accepts: {}", VERIFY_NAMES.join(", "));
            return 0;
        }
        Command::Verify { check, opts } => (verify(&check, &opts.params()), opts),
        Command::Kashaev { opts } => (kashaev(&opts.params()), opts),
        Command::Suite { name, config, opts } => match SuiteConfig::load(config.as_deref()) {
            Ok(mut cfg) => {
                if let Some(p) = opts.precision {
                    cfg.precision = p as usize;
                }
                if let Some(s) = opts.seed {
                    cfg.seed = s;
                }
                (run_suite(name, &cfg), opts)
            }
            Err(e) => {
                eprintln!("error: malformed config: {e}");
                return 2;
            }
        },
    };
    report.timing_ms = start.elapsed().as_millis() as u64;
    let text = if opts.json { report.to_json() + "\n" } else { report.to_text() };
    match &opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    match report.status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Error => {
            if let (Some(e), true) = (&report.error, opts.json || opts.out.is_some()) {
                eprintln!("error: {e}");
            }
            2
        }
    }
}

fn parameters(p: &Params, keys: &[&str]) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    for &k in keys {
        let v = match k {
            "m" => p.m.map(|v| v.to_string()),
            "a" => p.a.map(|v| v.to_string()),
            "order" => p.order.map(|v| v.to_string()),
            "N" => p.n.map(|v| v.to_string()),
            "precision" => Some(p.precision.to_string()),
            "tail" => Some(tail_name(p.tail)),
            "seed" => Some(p.seed.to_string()),
            "t0" => Some(p.t0.to_string()),
            "tau" => Some(format!("{},{}", p.tau.0, p.tau.1)),
            _ => None,
        };
        if let Some(v) = v {
            out.insert(k.to_string(), v);
        }
    }
    out
}

fn verify(name: &str, p: &Params) -> VerificationReport {
    let numeric = checks::is_numeric(name);
    let mut keys = vec!["m", "a", "order", "N"];
    if numeric {
        keys.extend(["precision", "tail", "t0", "tau"]);
    }
    if checks::uses_seed(name) {
        keys.push("seed");
    }
    let mut report = VerificationReport::new(format!("verify {name}"), parameters(p, &keys));
    if numeric {
        report.precision_bits = Some(p.precision);
    }
    if checks::uses_seed(name) {
        report.seed = Some(p.seed);
    }
    let cell = checks::verify_cell(name, p).expect("clap restricts check names");
    if let Err(e) = crate::run_cells(vec![cell], &mut report, false) {
        report.fail_with(e.to_string());
    }
    report
}

fn kashaev(p: &Params) -> VerificationReport {
    let (m, a) = (p.m.unwrap_or(1), p.a.unwrap_or(0));
    let mut params = parameters(p, &["N", "precision"]);
    params.insert("m".into(), m.to_string());
    params.insert("a".into(), a.to_string());
    let mut report = VerificationReport::new("kashaev", params);
    report.precision_bits = Some(p.precision);
    let Some(n) = p.n else {
        report.fail_with("kashaev needs --N".into());
        return report;
    };
    match eval_x_unity(m, a, n, p.precision) {
        Ok(x) => {
            report.values.insert("value".into(), json::complex(&x));
            if (m, a) == (2, 0) {
                if let Ok(k) = kashaev_double_sum(n, p.precision) {
                    report.values.insert("double_sum".into(), json::complex(&k));
                }
            }
        }
        Err(e) => report.fail_with(e.to_string()),
    }
    report
}

fn run_suite(name: SuiteName, cfg: &SuiteConfig) -> VerificationReport {
    let label = match name {
        SuiteName::Formal => "formal",
        SuiteName::Numeric => "numeric",
        SuiteName::All => "all",
    };
    let mut params = BTreeMap::new();
    params.insert("precision".into(), cfg.precision.to_string());
    params.insert("seed".into(), cfg.seed.to_string());
    let mut report = VerificationReport::new(format!("suite {label}"), params);
    report.seed = Some(cfg.seed);
    if name != SuiteName::Formal {
        report.precision_bits = Some(cfg.precision);
    }
    if let Err(e) = crate::run_cells(suite::cells(name, cfg), &mut report, true) {
        report.fail_with(e.to_string());
    }
    report
}
