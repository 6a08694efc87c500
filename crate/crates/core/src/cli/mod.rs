//! Command-line front end. `main.rs` only forwards `std::env::args` to
//! [`main_with_args`].
//!
//! Exit codes: 0 success, 1 usage error, 2 failed verification or table
//! mismatch, 3 internal error.

mod record;
mod scan;

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use record::{analyze, verification_reports, Analysis, AnalysisRecord, PibSummary, VerificationSummary};
pub use scan::{run_scan, text_header, text_row, ScanOptions, ScanSummary, CHUNK, CSV_HEADER};

use crate::monogenity::CaseLabel;
use crate::verify::{render_case_c_list, render_rows, reproduce_table1, reproduce_table2, Fixtures};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Environment variable read for the default `--jobs`.
pub const JOBS_ENV: &str = "SIMPLEST_CUBIC_JOBS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub(crate) fn io(e: impl std::fmt::Display) -> Self {
        CliError::Internal(e.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Verification(_) => EXIT_VERIFY,
            CliError::Internal(_) | CliError::Io(_) => EXIT_INTERNAL,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::ParamOutOfRange(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    /// Conductor ideal is principal.
    Principal,
    /// Conductor ideal is not principal.
    Nonprincipal,
    /// `Z[θ]` is not the full ring of integers.
    Nontrivial,
}

impl Filter {
    pub fn accepts(self, r: &AnalysisRecord) -> bool {
        match self {
            Filter::Principal => r.ck_principal,
            Filter::Nonprincipal => !r.ck_principal,
            Filter::Nontrivial => !r.is_trivial(),
        }
    }
}

fn parse_case(s: &str) -> Result<CaseLabel, String> {
    CaseLabel::parse(s).ok_or_else(|| format!("unknown case {s:?}, expected a, b, c or trivial"))
}

#[derive(Debug, Parser)]
#[command(name = "simplest-cubic", version, about = "Monogenity of Shanks' simplest cubic fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a single field K_t.
    #[command(allow_negative_numbers = true)]
    Analyze {
        t: i64,
        /// Run the independent checks.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Analyze every t in lo..=hi.
    #[command(allow_negative_numbers = true)]
    Scan {
        lo: i64,
        hi: i64,
        /// Comma-separated cases to keep; `a` includes trivial.
        #[arg(long, value_delimiter = ',', value_parser = parse_case)]
        cases: Vec<CaseLabel>,
        /// Keep only rows matching every filter.
        #[arg(long, value_enum, value_delimiter = ',')]
        filter: Vec<Filter>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Worker threads.
        #[arg(long, env = JOBS_ENV, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: Option<u16>,
        #[arg(long)]
        verify: bool,
    },
    /// Regenerate a reference table and compare it with the fixtures.
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        /// Directory holding the fixture files instead of the built-in copy.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    match run(cli.command, stdout.lock()) {
        Ok(()) => EXIT_OK,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run<W: Write>(command: Command, mut out: W) -> Result<(), CliError> {
    match command {
        Command::Analyze { t, verify, format } => {
            let a = analyze(t, verify)?;
            match format {
                Format::Text => out.write_all(render_analysis(&a).as_bytes())?,
                Format::Json => {
                    serde_json::to_writer_pretty(&mut out, &a.record).map_err(CliError::io)?;
                    writeln!(out)?;
                }
                Format::Csv => {
                    let mut opts = ScanOptions::new(a.record.t, a.record.t);
                    opts.format = Format::Csv;
                    opts.verify = verify;
                    run_scan(&opts, &mut out)?;
                }
            }
            out.flush()?;
            if a.record.verification_failed() {
                return Err(CliError::Verification(format!("verification failed for t = {t}")));
            }
            Ok(())
        }
        Command::Scan { lo, hi, cases, filter, format, jobs, verify } => {
            let opts = ScanOptions {
                lo,
                hi,
                cases,
                filters: filter,
                format,
                jobs: jobs.map(usize::from),
                verify,
            };
            let summary = run_scan(&opts, &mut out)?;
            if summary.verification_failures > 0 {
                return Err(CliError::Verification(format!(
                    "{} of {} parameters failed verification",
                    summary.verification_failures, summary.scanned
                )));
            }
            Ok(())
        }
        Command::Tables { which, fixtures } => {
            let fixtures = match fixtures {
                Some(dir) => Fixtures::load_dir(&dir).map_err(CliError::Usage)?,
                None => Fixtures::embedded(),
            };
            let report = if which == 1 {
                let (rows, list, report) = reproduce_table1(&fixtures);
                writeln!(out, "{}", render_rows(&rows))?;
                writeln!(out, "case (c), -1 <= t <= 2000 ({} values):", list.len())?;
                writeln!(out, "{}", render_case_c_list(&list))?;
                report
            } else {
                let (rows, report) = reproduce_table2(&fixtures);
                writeln!(out, "{}", render_rows(&rows))?;
                report
            };
            writeln!(out)?;
            write!(out, "{report}")?;
            out.flush()?;
            if report.overall() {
                Ok(())
            } else {
                Err(CliError::Verification(format!(
                    "table {which}: {} check(s) failed",
                    report.failures().count()
                )))
            }
        }
    }
}

/// Human-readable report for `analyze`.
pub fn render_analysis(a: &Analysis) -> String {
    let r = &a.record;
    let v = &a.verdict;
    let mut s = String::new();
    let _ = writeln!(s, "t                  {}", r.t);
    if r.normalized_t != r.t {
        let _ = writeln!(s, "normalized t       {}", r.normalized_t);
    }
    let _ = writeln!(s, "polynomial         {}", crate::field::SimplestCubicField::shanks_polynomial(v.t));
    let _ = writeln!(s, "delta              {} = {}", r.delta, v.data.delta);
    let _ = writeln!(s, "conductor          {} = {}", r.conductor, v.data.conductor);
    let _ = writeln!(s, "3-adic case        {}", r.three_case.as_str());
    let _ = writeln!(s, "same field as      {:?}", v.class.others(v.t));
    let _ = writeln!(s, "Z[theta] = O_K     {}", r.is_trivial());
    let _ = writeln!(s, "c_K principal      {}", r.ck_principal);
    let _ = writeln!(s, "monogenic at t     {}", v.parameter_monogenic);
    let _ = writeln!(s, "field monogenic    {}", r.field_monogenic);
    let _ = writeln!(s, "case               {}", r.case.as_str());
    if let Some(cert) = &v.certificate {
        let _ = writeln!(s, "witness t          {}", cert.witness_t);
        let _ = writeln!(s, "generator          {}", cert.gamma);
        let _ = writeln!(s, "  m, a             {}, {}", cert.m, cert.a);
        let _ = writeln!(s, "  minimal poly     {}", cert.min_poly);
        let _ = writeln!(s, "  discriminant     {}", cert.disc);
    }
    for report in &a.reports {
        let _ = writeln!(s);
        let _ = write!(s, "{report}");
    }
    if let Some(sum) = &r.verification {
        let _ = writeln!(s);
        let verdict = if sum.overall { "PASSED" } else { "FAILED" };
        let _ = writeln!(s, "verification {verdict}: {} passed, {} failed", sum.passed, sum.failed);
    }
    s
}
