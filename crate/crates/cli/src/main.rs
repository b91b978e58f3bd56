use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use scf_cli::{
    classify, examples_report, parse_n, parse_range, render_certificate, render_counts,
    render_profile, render_table, write_csv, write_json_lines, Format, OutputRecord,
};
use scf_core::scan::{certify_n, scan_entries, ScanEntry};

/// Generators of rings of integers of simplest cubic fields over their
/// associated orders, with exact verification.
#[derive(Parser)]
#[command(name = "scf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Jobs {
    /// Worker threads for range computations
    #[arg(long, env = "SCF_JOBS", default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Ramification data of L_n
    Classify {
        #[arg(value_parser = parse_n, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// The generator α of L_n
    Alpha {
        #[arg(value_parser = parse_n, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Construct and certify α for one n or an inclusive range a..b
    Verify {
        #[arg(
            value_parser = parse_n,
            allow_negative_numbers = true,
            required_unless_present = "range",
            conflicts_with = "range"
        )]
        n: Option<i64>,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        range: Option<(i64, i64)>,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Certify every n in the inclusive range a..b and print one row each
    Scan {
        #[arg(value_parser = parse_range, allow_hyphen_values = true)]
        range: (i64, i64),
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Reproduce the worked wild-case tables
    Examples,
}

fn emit(records: &[OutputRecord], format: Format, human: impl FnOnce() -> String) -> io::Result<()> {
    let mut out = io::stdout().lock();
    match format {
        Format::Human => out.write_all(human().as_bytes()),
        Format::Json => write_json_lines(&mut out, records),
        Format::Csv => write_csv(&mut out, records).map_err(io::Error::other),
    }
}

fn records(entries: &[ScanEntry]) -> Result<Vec<OutputRecord>, String> {
    entries
        .iter()
        .map(|e| match &e.outcome {
            Ok(cert) => OutputRecord::from_certificate(cert),
            Err(err) => Err(format!("n = {}: {err}", e.n)),
        })
        .collect()
}

fn run(cli: Cli) -> Result<bool, String> {
    let io_err = |e: io::Error| e.to_string();
    match cli.command {
        Command::Classify { n, format } => {
            let (record, p) = classify(n)?;
            emit(&[record], format, || render_profile(&p)).map_err(io_err)?;
            Ok(true)
        }
        Command::Alpha { n, format } => {
            let cert = certify_n(n).map_err(|e| e.to_string())?;
            let record = OutputRecord::from_certificate(&cert)?;
            emit(&[record], format, || render_certificate(&cert, false)).map_err(io_err)?;
            Ok(true)
        }
        Command::Verify { n: Some(n), .. } => {
            let cert = certify_n(n).map_err(|e| e.to_string())?;
            print!("{}", render_certificate(&cert, true));
            Ok(cert.all_passed())
        }
        Command::Verify { range, jobs, .. } => {
            let (from, to) = range.expect("clap requires n or --range");
            let entries = scan_entries(from, to, jobs.jobs).map_err(|e| e.to_string())?;
            let failed: Vec<ScanEntry> = entries.iter().filter(|e| !e.passed()).cloned().collect();
            if !failed.is_empty() {
                print!("{}", render_table(&failed));
            }
            print!("{}", render_counts(&entries));
            Ok(failed.is_empty())
        }
        Command::Scan { range: (from, to), format, jobs } => {
            let entries = scan_entries(from, to, jobs.jobs).map_err(|e| e.to_string())?;
            let all_passed = entries.iter().all(ScanEntry::passed);
            let recs = if format == Format::Human { Vec::new() } else { records(&entries)? };
            emit(&recs, format, || render_table(&entries)).map_err(io_err)?;
            Ok(all_passed)
        }
        Command::Examples => {
            let (text, ok) = examples_report()?;
            print!("{text}");
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
