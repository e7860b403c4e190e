use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use torsion_cli::{cmd_classify, cmd_oracle, cmd_sample, cmd_sweep, cmd_verify, CliError, Format};
use torsion_core::{CaseTag, Int};

/// Rational torsion of y^2 = x(x + M)(x + N), M, N = m +- n sqrt(D).
#[derive(Parser)]
#[command(name = "torsion", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Output {
    /// Defaults to text for classify and oracle, records for sweep and sample.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct Triple {
    #[arg(allow_negative_numbers = true)]
    m: Int,
    #[arg(allow_negative_numbers = true)]
    n: Int,
    #[arg(allow_negative_numbers = true)]
    d: Int,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize and classify one curve.
    Classify {
        #[command(flatten)]
        t: Triple,
        /// Also run the brute-force oracle and compare.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        o: Output,
    },
    /// Print the brute-force torsion group of one curve.
    Oracle {
        #[command(flatten)]
        t: Triple,
        #[command(flatten)]
        o: Output,
    },
    /// Classify every normalized curve in a box against the oracle.
    Sweep {
        m_max: u64,
        n_max: u64,
        d_max: u64,
        #[command(flatten)]
        o: Output,
    },
    /// Emit curves built from one case's parametrization.
    Sample {
        case: CaseTag,
        bound: u32,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        o: Output,
    },
    /// Recompute every record of a corpus file.
    Verify { path: PathBuf },
}

fn open_out(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { t, oracle, o } => {
            let mut out = open_out(&o.out)?;
            let res = cmd_classify(
                t.m,
                t.n,
                t.d,
                oracle,
                o.format.unwrap_or(Format::Text),
                &mut out,
            );
            out.flush()?;
            res
        }
        Command::Oracle { t, o } => {
            let mut out = open_out(&o.out)?;
            cmd_oracle(t.m, t.n, t.d, o.format.unwrap_or(Format::Text), &mut out)?;
            out.flush()?;
            Ok(())
        }
        Command::Sweep {
            m_max,
            n_max,
            d_max,
            o,
        } => {
            let mut out = open_out(&o.out)?;
            let summary = cmd_sweep(
                m_max,
                n_max,
                d_max,
                o.format.unwrap_or(Format::Records),
                &mut out,
            )?;
            out.flush()?;
            eprintln!("{}", summary.line());
            if summary.disagreements > 0 {
                return Err(CliError::Inconsistency(format!(
                    "{} disagreements",
                    summary.disagreements
                )));
            }
            Ok(())
        }
        Command::Sample {
            case,
            bound,
            oracle,
            o,
        } => {
            let mut out = open_out(&o.out)?;
            let summary = cmd_sample(
                case,
                bound,
                oracle,
                o.format.unwrap_or(Format::Records),
                &mut out,
            )?;
            out.flush()?;
            eprintln!("{}", summary.line());
            if summary.disagreements > 0 {
                return Err(CliError::Inconsistency(format!(
                    "{} samples contradict their prediction",
                    summary.disagreements
                )));
            }
            Ok(())
        }
        Command::Verify { path } => {
            let file = File::open(&path)
                .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
            let report = cmd_verify(&mut BufReader::new(file))?;
            for (line, why) in &report.mismatches {
                println!("line {line}: {why}");
            }
            println!(
                "{} records checked, {} mismatches",
                report.checked,
                report.mismatches.len()
            );
            if !report.mismatches.is_empty() {
                return Err(CliError::Inconsistency(format!(
                    "{} records do not reproduce",
                    report.mismatches.len()
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("torsion: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
