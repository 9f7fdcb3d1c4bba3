//! `gegentropy`: exact entropies of Gegenbauer polynomials from the shell.
//!
//! Data goes to stdout and diagnostics to stderr. Exit status is 0 on
//! success, 1 when a verification check fails and 2 for usage errors.

mod record;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gegentropy::verify::{locate_integral_mismatch, verify_cell, CellReport, Fault};
use gegentropy::{
    entropy_exact, integrals, normalized_entropy_exact, Error, ExactEntropy, GegenbauerSpec,
    Precision, QuadratureConfig, Route,
};
use rayon::prelude::*;

use record::{write_csv, OutputRecord};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "gegentropy",
    version,
    about = "Exact Shannon entropies of Gegenbauer polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct PrecisionArg {
    /// Working precision in decimal digits for numeric evaluation.
    #[arg(
        long,
        env = "GEGENTROPY_PRECISION",
        default_value_t = 64,
        value_parser = clap::value_parser!(u32).range(50..=10_000)
    )]
    precision: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Entropy of a single polynomial.
    Entropy {
        #[arg(long)]
        lambda: u32,
        #[arg(long)]
        n: u32,
        /// Entropy of the orthonormal polynomial under the probability weight.
        #[arg(long)]
        normalized: bool,
        #[command(flatten)]
        precision: PrecisionArg,
        /// Fractional digits in the decimal rendering.
        #[arg(long, default_value_t = 20)]
        places: u32,
        #[arg(long, value_enum, default_value_t = EntropyFormat::Exact)]
        format: EntropyFormat,
    },
    /// Exact and numeric entropies for n = 1..=n-max.
    Table {
        #[arg(long)]
        lambda: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long)]
        normalized: bool,
        #[command(flatten)]
        precision: PrecisionArg,
        #[arg(long, default_value_t = 3)]
        places: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Cross-checks exact routes and the quadrature oracle over a grid.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        lambda_max: u32,
        #[arg(long)]
        n_max: u32,
        /// Largest accepted |exact − quadrature|.
        #[arg(long, default_value_t = 1e-8, value_parser = positive_f64)]
        tol: f64,
        #[arg(long)]
        normalized: bool,
        /// Quadrature working precision in decimal digits.
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(50..=1000))]
        working_precision: u32,
        /// Corrupts one assembly coefficient, given as LAMBDA,N,M.
        #[arg(long, hide = true, value_parser = parse_fault)]
        inject_beta_fault: Option<Fault>,
    },
    /// The integrals I_m = ∫_0^π cos(2mθ) log C(cos θ)² dθ for m = 0..=n+λ.
    Integrals {
        #[arg(long)]
        lambda: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "series-log", value_parser = parse_route)]
        route: Route,
        #[command(flatten)]
        precision: PrecisionArg,
        #[arg(long, default_value_t = 20)]
        places: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum EntropyFormat {
    Exact,
    Decimal,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_fault(s: &str) -> Result<Fault, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [l, n, m] = parts.as_slice() else {
        return Err("expected LAMBDA,N,M".into());
    };
    let bad = |e: std::num::ParseIntError| e.to_string();
    Ok(Fault {
        lambda: l.parse().map_err(bad)?,
        n: n.parse().map_err(bad)?,
        m: m.parse().map_err(bad)?,
    })
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) | Error::Unsupported(_) => EXIT_USAGE,
            _ => EXIT_VERIFY,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_VERIFY,
            message: format!("write failed: {e}"),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure {
            code: EXIT_VERIFY,
            message: format!("write failed: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Entropy {
            lambda,
            n,
            normalized,
            precision,
            places,
            format,
        } => cmd_entropy(
            lambda,
            n,
            normalized,
            Precision::digits(precision.precision),
            places,
            format,
        ),
        Command::Table {
            lambda,
            n_max,
            normalized,
            precision,
            places,
            format,
        } => cmd_table(
            lambda,
            n_max,
            normalized,
            Precision::digits(precision.precision),
            places,
            format,
        ),
        Command::Verify {
            lambda_max,
            n_max,
            tol,
            normalized,
            working_precision,
            inject_beta_fault,
        } => cmd_verify(
            lambda_max,
            n_max,
            tol,
            normalized,
            working_precision,
            inject_beta_fault,
        ),
        Command::Integrals {
            lambda,
            n,
            route,
            precision,
            places,
            format,
        } => cmd_integrals(
            lambda,
            n,
            route,
            Precision::digits(precision.precision),
            places,
            format,
        ),
    }
}

fn compute(lambda: u32, n: u32, normalized: bool) -> Result<(ExactEntropy, &'static str), Failure> {
    let spec = GegenbauerSpec::new(lambda, n);
    if lambda == 0 {
        if !normalized {
            return Err(Failure::usage(
                "lambda = 0 has a vanishing weight prefactor; pass --normalized",
            ));
        }
        return Ok((normalized_entropy_exact(spec)?, "chebyshev-t"));
    }
    let value = if normalized {
        normalized_entropy_exact(spec)?
    } else {
        entropy_exact(spec)?
    };
    Ok((value, Route::SeriesLog.name()))
}

fn record(
    lambda: u32,
    n: u32,
    normalized: bool,
    prec: Precision,
    places: u32,
) -> Result<OutputRecord, Failure> {
    let (value, route) = compute(lambda, n, normalized)?;
    Ok(OutputRecord::new(
        lambda, n, normalized, &value, route, prec, places,
    ))
}

fn csv_row(r: &OutputRecord) -> Vec<String> {
    vec![
        r.lambda.to_string(),
        r.n.to_string(),
        r.exact_text().unwrap_or_default(),
        r.decimal.clone(),
    ]
}

const ENTROPY_HEADER: [&str; 4] = ["lambda", "n", "exact", "decimal"];

fn cmd_entropy(
    lambda: u32,
    n: u32,
    normalized: bool,
    prec: Precision,
    places: u32,
    format: EntropyFormat,
) -> Result<(), Failure> {
    let rec = record(lambda, n, normalized, prec, places)?;
    let mut out = io::stdout().lock();
    match format {
        EntropyFormat::Exact => writeln!(out, "{}", rec.exact_text().unwrap_or_default())?,
        EntropyFormat::Decimal => writeln!(out, "{}", rec.decimal)?,
        EntropyFormat::Json => writeln!(out, "{}", rec.to_json())?,
        EntropyFormat::Csv => write_csv(out, &ENTROPY_HEADER, &[csv_row(&rec)])?,
    }
    Ok(())
}

fn cmd_table(
    lambda: u32,
    n_max: u32,
    normalized: bool,
    prec: Precision,
    places: u32,
    format: TableFormat,
) -> Result<(), Failure> {
    let rows = (1..=n_max)
        .into_par_iter()
        .map(|n| record(lambda, n, normalized, prec, places))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = io::stdout().lock();
    match format {
        TableFormat::Text => {
            for r in &rows {
                writeln!(
                    out,
                    "{}\t{}\t{}",
                    r.n,
                    r.exact_text().unwrap_or_default(),
                    r.decimal
                )?;
            }
        }
        TableFormat::Json => {
            for r in &rows {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        TableFormat::Csv => {
            let body: Vec<Vec<String>> = rows.iter().map(csv_row).collect();
            write_csv(out, &ENTROPY_HEADER, &body)?;
        }
    }
    Ok(())
}

fn cmd_verify(
    lambda_max: u32,
    n_max: u32,
    tol: f64,
    normalized: bool,
    working_precision: u32,
    fault: Option<Fault>,
) -> Result<(), Failure> {
    // The oracle integrates well below the acceptance threshold so that a
    // failure reflects the exact value, not quadrature noise.
    let cfg = QuadratureConfig {
        working_precision,
        ..QuadratureConfig::with_tolerance((tol * 1e-2).min(1e-10))
    };
    let cells: Vec<GegenbauerSpec> = (1..=lambda_max)
        .flat_map(|l| (0..=n_max).map(move |n| GegenbauerSpec::new(l, n)))
        .collect();
    let reports = cells
        .par_iter()
        .map(|&spec| -> Result<(CellReport, Option<usize>), Error> {
            let report = verify_cell(spec, normalized, tol, &cfg, fault)?;
            let m = match report.offending_m() {
                Some(m) => Some(m),
                None if !report.passed() => locate_integral_mismatch(spec, tol, &cfg)?,
                None => None,
            };
            Ok((report, m))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut out = io::stdout().lock();
    let mut failures = Vec::new();
    for (r, m) in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let routes = match r.route_mismatch {
            None => "ok".to_string(),
            Some((route, m)) => format!("{route}@{m}"),
        };
        let beta = r
            .beta_mismatch
            .map_or("ok".to_string(), |m| format!("m={m}"));
        writeln!(
            out,
            "lambda={} n={} routes={routes} beta={beta} diff={:.3e} {status}",
            r.spec.lambda, r.spec.n, r.abs_diff
        )?;
        if !r.passed() {
            failures.push((r.spec, *m));
        }
    }
    out.flush()?;
    if failures.is_empty() {
        eprintln!("all {} cells passed", reports.len());
        return Ok(());
    }
    for (spec, m) in &failures {
        let m = m.map_or("?".to_string(), |m| m.to_string());
        eprintln!(
            "failed: (lambda, n, m) = ({}, {}, {m})",
            spec.lambda, spec.n
        );
    }
    Err(Failure {
        code: EXIT_VERIFY,
        message: format!("{} of {} cells failed", failures.len(), reports.len()),
    })
}

fn cmd_integrals(
    lambda: u32,
    n: u32,
    route: Route,
    prec: Precision,
    places: u32,
    format: TableFormat,
) -> Result<(), Failure> {
    let spec = GegenbauerSpec::new(lambda, n);
    let table = integrals(spec, route)?;
    let rows: Vec<(usize, ExactEntropy)> = table
        .values
        .iter()
        .enumerate()
        .map(|(m, v)| (m, ExactEntropy::from_pi_part(v.clone())))
        .collect();
    let mut out = io::stdout().lock();
    match format {
        TableFormat::Text => {
            for (m, v) in &rows {
                writeln!(out, "{m}\t{v}\t{}\t{route}", v.decimal(prec, places))?;
            }
        }
        TableFormat::Json => {
            for (m, v) in &rows {
                let line = serde_json::json!({
                    "lambda": lambda,
                    "n": n,
                    "m": m,
                    "exact": v.to_json_value(prec, places),
                    "route": route.name(),
                });
                writeln!(out, "{line}")?;
            }
        }
        TableFormat::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(m, v)| {
                    vec![
                        m.to_string(),
                        v.to_string(),
                        v.decimal(prec, places),
                        route.to_string(),
                    ]
                })
                .collect();
            write_csv(out, &["m", "exact", "decimal", "route"], &body)?;
        }
    }
    Ok(())
}
