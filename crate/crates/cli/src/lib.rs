//! Command-line front end for the `evenzeta` library.
//!
//! Flags take `n`; printed weights are `2n`.

pub mod record;
pub mod suites;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use evenzeta::arith::{DEFAULT_PI_DIGITS, MAX_PI_DIGITS};
use evenzeta::closed_form::{e_row_sum, e_sum_theorem1, e_sum_theorem3};
use evenzeta::oracle::{Oracle, DEFAULT_LIMIT};
use evenzeta::series::e_sum_series;
use evenzeta::symfunc::{n_nk, zt, DEFAULT_WEIGHT_CAP};
use evenzeta::{EvenZetaSum, PiValue};

pub use record::{Method, OutputRecord};
pub use suites::Suite;

pub const PI_DIGITS_ENV: &str = "EVENZETA_PI_DIGITS";

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "evenzeta",
    version,
    about = "Sums E(2n,k) of multiple zeta values with even arguments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print E(2n,k), the sum of all MZVs with even arguments, weight 2n and depth k.
    Value {
        /// Half the weight.
        #[arg(long)]
        n: u32,
        /// Depth, 1 <= k <= n.
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Method::Theorem1)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[command(flatten)]
        opts: EvalOpts,
    },
    /// Print E(2n,k) for all 1 <= k <= n <= max, with row sums.
    Table {
        /// Largest n (weight 2n).
        #[arg(long)]
        max: u32,
        #[arg(long, value_enum, default_value_t = Method::Theorem1)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[command(flatten)]
        opts: EvalOpts,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Bound for the suite (n, weight or order, depending on the suite).
        #[arg(long)]
        max: Option<u32>,
        #[command(flatten)]
        opts: EvalOpts,
    },
}

#[derive(Debug, Clone, Args)]
pub struct EvalOpts {
    /// Weight cap for symmetric-function computations.
    #[arg(long, default_value_t = DEFAULT_WEIGHT_CAP)]
    pub max_weight: usize,
    /// Summation limit L for the numerical oracle.
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    pub limit: usize,
    /// Disable the two-point 1/L extrapolation of the oracle.
    #[arg(long)]
    pub no_extrapolate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug)]
pub struct UsageError(pub String);

/// Significant digits for decimal output, from `EVENZETA_PI_DIGITS`.
pub fn pi_digits() -> Result<usize, UsageError> {
    match std::env::var(PI_DIGITS_ENV) {
        Err(_) => Ok(DEFAULT_PI_DIGITS),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(d) if (1..=MAX_PI_DIGITS).contains(&d) => Ok(d),
            _ => Err(UsageError(format!(
                "{PI_DIGITS_ENV} must be an integer in 1..={MAX_PI_DIGITS}, got {s:?}"
            ))),
        },
    }
}

/// Exact route for `E(2n,k)`.
pub fn exact_value(
    n: u32,
    k: u32,
    method: Method,
    opts: &EvalOpts,
) -> Result<EvenZetaSum, UsageError> {
    let usage = |e: evenzeta::Error| UsageError(e.to_string());
    match method {
        Method::Theorem1 => e_sum_theorem1(n, k).map_err(usage),
        Method::Theorem3 => e_sum_theorem3(n, k).map_err(usage),
        Method::Series => e_sum_series(n, k).map_err(usage),
        Method::Symfunc => {
            if k < 1 || k > n {
                return Err(usage(evenzeta::Error::DepthOutOfRange { n, k }));
            }
            let sym = n_nk(n as usize, k as usize, opts.max_weight).map_err(usage)?;
            let value = zt(&sym).map_err(usage)?;
            EvenZetaSum::new(n, k, value).map_err(usage)
        }
        Method::Oracle | Method::Corollary => {
            Err(UsageError(format!("{method:?} is not an exact route")))
        }
    }
}

/// Build the output record for one `(n,k)` cell.
pub fn value_record(
    n: u32,
    k: u32,
    method: Method,
    opts: &EvalOpts,
    oracle: &mut Option<Oracle>,
    digits: usize,
) -> Result<OutputRecord, UsageError> {
    if method == Method::Oracle {
        if k < 1 || k > n {
            return Err(UsageError(
                evenzeta::Error::DepthOutOfRange { n, k }.to_string(),
            ));
        }
        let oracle =
            oracle.get_or_insert_with(|| Oracle::new(opts.limit.max(1), !opts.no_extrapolate));
        let est = oracle.e_sum(n, k);
        return Ok(OutputRecord::numeric(n, k, est));
    }
    let value = exact_value(n, k, method, opts)?;
    Ok(OutputRecord::exact(n, k, value.value(), method, digits))
}

fn emit(out: &mut impl Write, records: &[OutputRecord], format: Format) -> std::io::Result<()> {
    match format {
        Format::Human => {
            for r in records {
                writeln!(out, "{}", r.human())?;
            }
        }
        Format::Json => {
            if records.len() == 1 {
                serde_json::to_writer_pretty(&mut *out, &records[0])?;
            } else {
                serde_json::to_writer_pretty(&mut *out, records)?;
            }
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Run a parsed command, writing to `out`; returns the process exit code.
pub fn run(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> u8 {
    let digits = match pi_digits() {
        Ok(d) => d,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Value {
            n,
            k,
            method,
            format,
            opts,
        } => {
            let mut oracle = None;
            match value_record(n, k, method, &opts, &mut oracle, digits) {
                Ok(r) if format == Format::Human => r.human_single(),
                Ok(r) => {
                    let mut buf = Vec::new();
                    emit(&mut buf, &[r], format).expect("in-memory write");
                    String::from_utf8(buf).expect("utf-8 output")
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {}", e.0);
                    return EXIT_USAGE;
                }
            }
        }
        Command::Table {
            max,
            method,
            format,
            opts,
        } => {
            if max < 1 {
                let _ = writeln!(err, "error: --max must be at least 1");
                return EXIT_USAGE;
            }
            let mut oracle = None;
            let mut records = Vec::new();
            for n in 1..=max {
                for k in 1..=n {
                    match value_record(n, k, method, &opts, &mut oracle, digits) {
                        Ok(r) => records.push(r),
                        Err(e) => {
                            let _ = writeln!(err, "error: {}", e.0);
                            return EXIT_USAGE;
                        }
                    }
                }
                let row: PiValue = e_row_sum(n).expect("n >= 1");
                records.push(OutputRecord::exact(n, 0, &row, Method::Corollary, digits));
            }
            let mut buf = Vec::new();
            emit(&mut buf, &records, format).expect("in-memory write");
            String::from_utf8(buf).expect("utf-8 output")
        }
        Command::Verify { suite, max, opts } => {
            let outcome = match suites::run_suite(suite, max, &opts) {
                Ok(reports) => reports,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            let mut text = String::new();
            let mut failed = 0;
            for r in &outcome {
                text.push_str(&r.to_string());
                text.push('\n');
                failed += r.failures().count();
            }
            let total: usize = outcome.iter().map(|r| r.checks.len()).sum();
            text.push_str(&format!(
                "{}: {total} checks, {failed} failed\n",
                if failed == 0 { "PASS" } else { "FAIL" }
            ));
            let _ = out.write_all(text.as_bytes());
            return if failed == 0 {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
        }
    };
    let _ = out.write_all(result.as_bytes());
    EXIT_OK
}
