//! `wright`: point evaluation, figure sweeps, and verification suites for
//! the Wright / Mittag-Leffler function family.
//!
//! Exit codes follow the subcommand contracts:
//!   eval    0 ok / 2 domain error / 3 non-convergence
//!   sweep   0 ok / 2 malformed manifest / 4 some curves failed
//!   verify  0 all checks pass / 1 any check failed / 2 execution error
//! Argument-parse failures exit 2 (clap's default).
//!
//! WRIGHT_THREADS caps the worker pool for sweeps and suite runs; it only
//! changes wall time, never results (outputs are merged in input order).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use wright_core::quad::QuadratureSpec;
use wright_core::{
    builtin_pairs, curve_csv, load_pair_manifest, load_sweep_manifest, run_identities,
    run_laplace, run_limits, run_sweep, CurvePoint, SweepSpec, TransformPair,
    VerificationReport, WrightError, OPERATIONS,
};

#[derive(Parser)]
#[command(
    name = "wright",
    version,
    about = "Wright and Mittag-Leffler special functions: evaluation, sweeps, verification",
    after_help = function_table()
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point (prints value, terms_used, converged)
    #[command(after_help = function_table())]
    Eval {
        /// function name, e.g. wright or dW/dalpha (see table below)
        function: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<f64>,
    },
    /// Run every curve in a sweep manifest, one CSV file per curve
    Sweep {
        /// plain-text manifest of [curve] blocks
        manifest: PathBuf,
        /// directory the CSV files are written into
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Run a verification suite; the report CSV is written pass or fail
    Verify {
        suite: Suite,
        /// report destination
        #[arg(long, default_value = "verification_report.csv")]
        report: PathBuf,
        /// transform-pair manifest; the compiled-in catalog when omitted
        #[arg(long)]
        pairs: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Suite {
    Identities,
    Laplace,
    Limits,
    All,
}

fn function_table() -> String {
    let mut s = String::from("Functions (eval FUNCTION, parameters as flags):\n");
    for op in OPERATIONS {
        let flags: Vec<String> = op.params.iter().map(|p| format!("--{p}")).collect();
        s.push_str(&format!(
            "  {:<15} {:<22} {}\n",
            op.name,
            flags.join(" "),
            op.domain
        ));
    }
    s
}

fn main() -> ExitCode {
    if let Ok(width) = std::env::var("WRIGHT_THREADS") {
        if let Ok(n) = width.parse::<usize>() {
            // wall-clock knob only; all outputs are merged in input order
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Eval {
            function,
            alpha,
            beta,
            sigma,
            t,
        } => cmd_eval(&function, &[("alpha", alpha), ("beta", beta), ("sigma", sigma), ("t", t)]),
        Command::Sweep { manifest, out_dir } => cmd_sweep(&manifest, &out_dir),
        Command::Verify {
            suite,
            report,
            pairs,
        } => cmd_verify(suite, &report, pairs.as_deref()),
    };
    ExitCode::from(code)
}

fn cmd_eval(function: &str, flags: &[(&str, Option<f64>)]) -> u8 {
    let params: Vec<(String, f64)> = flags
        .iter()
        .filter_map(|&(k, v)| v.map(|v| (k.to_string(), v)))
        .collect();
    match wright_core::evaluate(function, &params) {
        Ok(ev) => {
            println!("value = {:.16e}", ev.value);
            println!("terms_used = {}", ev.terms_used);
            println!("converged = {}", ev.converged);
            if ev.converged {
                0
            } else {
                eprintln!("series did not converge to tolerance");
                3
            }
        }
        Err(e @ WrightError::NonConvergence(_)) => {
            eprintln!("{e}");
            3
        }
        Err(e) => {
            eprintln!("{e}");
            2
        }
    }
}

fn cmd_sweep(manifest: &Path, out_dir: &Path) -> u8 {
    let specs = match load_sweep_manifest(manifest) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    if !specs.is_empty() {
        if let Err(e) = std::fs::create_dir_all(out_dir) {
            eprintln!("cannot create {}: {e}", out_dir.display());
            return 2;
        }
    }
    let results: Vec<Result<Vec<CurvePoint>, WrightError>> =
        specs.par_iter().map(run_sweep).collect();
    println!(
        "{:<24} {:<14} {:>6} {:>9}  status",
        "output", "target", "points", "converged"
    );
    let mut failed = 0usize;
    for (spec, result) in specs.iter().zip(results) {
        match result.and_then(|points| write_curve(out_dir, spec, &points).map(|()| points)) {
            Ok(points) => {
                let converged = points.iter().filter(|p| p.converged).count();
                println!(
                    "{:<24} {:<14} {:>6} {:>9}  ok",
                    spec.output,
                    spec.target,
                    points.len(),
                    converged
                );
            }
            Err(e) => {
                failed += 1;
                println!(
                    "{:<24} {:<14} {:>6} {:>9}  failed: {e}",
                    spec.output, spec.target, "-", "-"
                );
            }
        }
    }
    if failed > 0 {
        4
    } else {
        0
    }
}

fn write_curve(out_dir: &Path, spec: &SweepSpec, points: &[CurvePoint]) -> Result<(), WrightError> {
    let path = out_dir.join(&spec.output);
    std::fs::write(&path, curve_csv(&spec.sweep_var, points))
        .map_err(|e| WrightError::Io(format!("{}: {e}", path.display())))
}

/// Per-pair reports computed in parallel but merged in catalog order, so the
/// report is identical at any worker count.
fn run_pairs_ordered<F>(pairs: &[TransformPair], runner: F) -> (VerificationReport, Option<WrightError>)
where
    F: Fn(&TransformPair) -> Result<VerificationReport, WrightError> + Sync,
{
    let results: Vec<_> = pairs
        .par_iter()
        .map(|p| runner(p))
        .collect();
    let mut merged = VerificationReport::new();
    let mut first_error = None;
    for r in results {
        match r {
            Ok(rep) => merged.merge(rep),
            Err(e) => {
                if first_error.is_none() {
                    first_error = Some(e);
                }
            }
        }
    }
    (merged, first_error)
}

fn cmd_verify(suite: Suite, report_path: &Path, pairs_path: Option<&Path>) -> u8 {
    let pairs = match pairs_path {
        Some(p) => match load_pair_manifest(p) {
            Ok(v) => v,
            Err(e) => {
                eprintln!("{e}");
                return 2;
            }
        },
        None => builtin_pairs(),
    };
    let quad = QuadratureSpec::default();
    let mut report = VerificationReport::new();
    let mut exec_error: Option<WrightError> = None;
    let mut summarize = |label: &str, rep: &VerificationReport, from: usize| {
        let rows = &rep.rows[from..];
        let failed = rows.iter().filter(|r| !r.pass).count();
        println!("suite {label}: {} checks, {failed} failed", rows.len());
    };

    if matches!(suite, Suite::Identities | Suite::All) {
        let before = report.rows.len();
        report.merge(run_identities());
        summarize("identities", &report, before);
    }
    if matches!(suite, Suite::Laplace | Suite::All) {
        let before = report.rows.len();
        let (rep, err) = run_pairs_ordered(&pairs, |p| {
            run_laplace(std::slice::from_ref(p), &quad)
        });
        report.merge(rep);
        summarize("laplace", &report, before);
        exec_error = exec_error.or(err);
    }
    if matches!(suite, Suite::Limits | Suite::All) {
        let before = report.rows.len();
        let (rep, err) = run_pairs_ordered(&pairs, |p| {
            run_limits(std::slice::from_ref(p), &quad)
        });
        report.merge(rep);
        summarize("limits", &report, before);
        exec_error = exec_error.or(err);
    }

    for row in report.rows.iter().filter(|r| !r.pass) {
        println!(
            "FAIL {} [{}] lhs = {:.16e}, rhs = {:.16e}, rel_err = {:.3e}",
            row.name, row.params, row.lhs, row.rhs, row.rel_err
        );
    }
    if let Err(e) = report.write_csv(report_path) {
        eprintln!("cannot write report: {e}");
        return 2;
    }
    println!("report written to {}", report_path.display());
    if let Some(e) = exec_error {
        eprintln!("{e}");
        return 2;
    }
    if report.all_pass() {
        0
    } else {
        1
    }
}
