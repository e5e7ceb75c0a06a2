//! `eulerian2`: tables, Nörlund polynomials, sequence export and identity
//! verification from the command line.
//!
//! Data goes to stdout and diagnostics to stderr. Exit status is 0 when
//! everything holds, 1 when `verify` sees an unexpected result and 2 on any
//! usage error.

mod format;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eulerian2::eulerian::{
    descent_histogram, enumerate_stirling_perms, eulerian_row, DEFAULT_ENUMERATION_CAP,
};
use eulerian2::identities::{run_suite, IdentityError, IdentityId, SignMode, SuiteConfig};
use eulerian2::norlund::{norlund_via_egf, norlund_via_eulerian, norlund_via_interpolation};
use eulerian2::numbers::{bernoulli, cauchy2, harmonic, stirling1_signed, stirling2};
use eulerian2::rational::parse_rational;
use eulerian2::Rational;
use num_bigint::BigInt;
use thiserror::Error;

use format::Format;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<IdentityError> for CliError {
    fn from(e: IdentityError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "eulerian2",
    version,
    about = "Second-order Eulerian numbers, Nörlund polynomials and exact identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print row n of the second-order Eulerian triangle, C(n,1)..C(n,n).
    Row {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        header: bool,
    },
    /// Print a number family for indices 0..=n_max.
    Seq {
        #[arg(value_enum)]
        name: SeqName,
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        header: bool,
    },
    /// Print the Nörlund polynomial B_n^(z), or its value at a rational point.
    Norlund {
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Egf)]
        method: Method,
        /// Evaluate at this rational (`p` or `p/q`) instead of printing coefficients.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        eval: Option<Rational>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check identities exactly and report each (identity, parameters) pair.
    Verify {
        /// Run every identity (the default when no --identity is given).
        #[arg(long, conflicts_with = "identity")]
        all: bool,
        /// Identity to run; repeatable. `derivatives` selects all derivative checks.
        #[arg(long, value_parser = parse_filter)]
        identity: Vec<Vec<IdentityId>>,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, default_value_t = 7)]
        enumeration_cap: usize,
        #[arg(long, value_enum, default_value_t = SignArg::Corrected)]
        sign_mode: SignArg,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        header: bool,
    },
    /// List the Stirling permutations of order n, or their descent histogram.
    Enumerate {
        n: usize,
        #[arg(long)]
        histogram: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeqName {
    Bernoulli,
    Cauchy2,
    Harmonic,
    Stirling2,
    Stirling1,
    Eulerian,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Egf,
    Theorem1,
    Interp,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SignArg {
    Corrected,
    AsPrinted,
}

impl From<SignArg> for SignMode {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Corrected => SignMode::Corrected,
            SignArg::AsPrinted => SignMode::AsPrinted,
        }
    }
}

fn parse_point(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_filter(s: &str) -> Result<Vec<IdentityId>, String> {
    IdentityId::resolve_filter(s).ok_or_else(|| {
        let known: Vec<&str> = IdentityId::ALL.iter().map(|id| id.as_str()).collect();
        format!(
            "unknown identity {s:?}; expected derivatives or one of {}",
            known.join(", ")
        )
    })
}

/// What a command produced: text for stdout plus the exit status.
struct Outcome {
    stdout: String,
    code: u8,
}

impl From<String> for Outcome {
    fn from(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Row { n, format, header } => {
            let row = eulerian_row(n).map_err(|e| CliError::Usage(e.to_string()))?;
            format::sequence(row.entries(), 1, format, header, " ", true).map(Into::into)
        }
        Command::Seq {
            name,
            n_max,
            format,
            header,
        } => seq(name, n_max, format, header).map(Into::into),
        Command::Norlund {
            n,
            method,
            eval,
            format,
        } => {
            let b = match method {
                Method::Egf => norlund_via_egf(n),
                Method::Theorem1 => {
                    norlund_via_eulerian(n).map_err(|e| CliError::Usage(e.to_string()))?
                }
                Method::Interp => norlund_via_interpolation(n),
            };
            match eval {
                Some(z) => format::scalar(&b.eval(&z), format),
                None => format::polynomial(b.poly(), format),
            }
            .map(Into::into)
        }
        Command::Verify {
            all: _,
            identity,
            n_max,
            enumeration_cap,
            sign_mode,
            format,
            header,
        } => {
            let config = SuiteConfig {
                n_max,
                enumeration_cap,
                filter: identity.into_iter().flatten().collect(),
                sign_mode: sign_mode.into(),
            };
            let reports = run_suite(&config)?;
            let unexpected = reports.iter().filter(|r| r.is_unexpected()).count();
            let expected_failures = reports
                .iter()
                .filter(|r| !r.holds && !r.is_unexpected())
                .count();
            eprintln!(
                "{} checks, {} unexpected, {} documented exceptions",
                reports.len(),
                unexpected,
                expected_failures
            );
            Ok(Outcome {
                stdout: format::reports(&reports, format, header)?,
                code: u8::from(unexpected > 0),
            })
        }
        Command::Enumerate { n, histogram, cap } => {
            let usage = |e: eulerian2::eulerian::EulerianError| CliError::Usage(e.to_string());
            if histogram {
                let hist = descent_histogram(n, cap).map_err(usage)?;
                let row = eulerian_row(n).map_err(usage)?;
                let counts: Vec<String> = hist
                    .entries()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("k={}:{c}", i + 1))
                    .collect();
                let verdict = if hist == row { "MATCH" } else { "MISMATCH" };
                Ok(Outcome {
                    stdout: format!("{} (recurrence: {row}) {verdict}\n", counts.join(" ")),
                    code: u8::from(hist != row),
                })
            } else {
                let words = enumerate_stirling_perms(n, cap).map_err(usage)?;
                Ok(words.map(|w| format!("{w}\n")).collect::<String>().into())
            }
        }
    }
}

fn seq(name: SeqName, n_max: usize, format: Format, header: bool) -> Result<String, CliError> {
    let rational = |f: fn(usize) -> Rational| -> Vec<Rational> { (0..=n_max).map(f).collect() };
    match name {
        SeqName::Bernoulli => {
            format::sequence(&rational(bernoulli), 0, format, header, ", ", false)
        }
        SeqName::Cauchy2 => format::sequence(&rational(cauchy2), 0, format, header, ", ", false),
        SeqName::Harmonic => format::sequence(&rational(harmonic), 0, format, header, ", ", false),
        SeqName::Stirling2 | SeqName::Stirling1 => {
            let f = if matches!(name, SeqName::Stirling2) {
                stirling2
            } else {
                stirling1_signed
            };
            let rows: Vec<Vec<BigInt>> = (0..=n_max)
                .map(|n| (0..=n).map(|k| f(n, k)).collect())
                .collect();
            Ok(format::triangle(&rows, 0, format, header))
        }
        SeqName::Eulerian => {
            let rows: Vec<Vec<BigInt>> = (1..=n_max)
                .map(|n| eulerian_row(n).map(|r| r.entries().to_vec()))
                .collect::<Result<_, _>>()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(format::triangle(&rows, 1, format, header))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut stdout = io::stdout().lock();
    match stdout
        .write_all(outcome.stdout.as_bytes())
        .and_then(|()| stdout.flush())
    {
        Ok(()) => ExitCode::from(outcome.code),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::from(outcome.code),
        Err(e) => {
            eprintln!("error: {}", CliError::from(e));
            ExitCode::from(2)
        }
    }
}
