//! `cfrechet`: decide and estimate the Fréchet distance between closed
//! curves stored as JSON files, render free-space diagrams, benchmark, and
//! generate test curves.
//!
//! Exit status: 0 for a true decision (and every other successful command),
//! 1 for a false decision, 2 for any error. Data goes to stdout, diagnostics
//! to stderr.

mod bench;
mod generate;
mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use closed_frechet::curve_file::{load_curve, save_curve, CurveFile};
use closed_frechet::decision::analyze;
use closed_frechet::{decide, distance};
use serde::Serialize;

use crate::bench::{BenchFormat, Size};
use crate::generate::Kind;

#[derive(Parser)]
#[command(
    name = "cfrechet",
    version,
    about = "Fréchet distance between closed polygonal curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the distance is at most --eps.
    Decide {
        curve_a: PathBuf,
        curve_b: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        eps: f64,
    },
    /// Estimate the distance by bisection.
    Distance {
        curve_a: PathBuf,
        curve_b: PathBuf,
        #[arg(long, default_value_t = 1e-6, allow_hyphen_values = true)]
        tol: f64,
    },
    /// Render the free-space diagram at --eps as SVG.
    Diagram {
        curve_a: PathBuf,
        curve_b: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        eps: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time random instances and check the instrumentation bounds.
    Bench {
        /// Comma-separated sizes, each `M` or `MxN`.
        #[arg(long, value_delimiter = ',', default_value = "64,128")]
        sizes: Vec<Size>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = BenchFormat::Text)]
        format: BenchFormat,
        /// Include wall time in CSV and JSON output (never byte-reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a synthetic closed curve.
    Gen {
        #[arg(value_enum)]
        kind: Kind,
        /// Number of vertices.
        #[arg(short, long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct DecideOutput {
    answer: bool,
    witness_u: Option<f64>,
    m: usize,
    n: usize,
    eps: f64,
    pushes: u64,
    pops: u64,
    cells: u64,
    wall_time_ms: f64,
}

#[derive(Serialize)]
struct DistanceOutput {
    distance: f64,
    lower: f64,
    iterations: u32,
    wall_time_ms: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Decide {
            curve_a,
            curve_b,
            eps,
        } => {
            let (x, y) = (load(&curve_a)?, load(&curve_b)?);
            let start = Instant::now();
            let report = decide(&x, &y, eps)?;
            let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
            print_json(&DecideOutput {
                answer: report.answer,
                witness_u: report.witness_u,
                m: report.m,
                n: report.n,
                eps,
                pushes: report.pushes(),
                pops: report.pops(),
                cells: report.cells(),
                wall_time_ms,
            })?;
            Ok(if report.answer {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Distance {
            curve_a,
            curve_b,
            tol,
        } => {
            let (x, y) = (load(&curve_a)?, load(&curve_b)?);
            let start = Instant::now();
            let d = distance(&x, &y, tol)?;
            print_json(&DistanceOutput {
                distance: d.distance,
                lower: d.lower,
                iterations: d.iterations,
                wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Diagram {
            curve_a,
            curve_b,
            eps,
            out,
        } => {
            let (x, y) = (load(&curve_a)?, load(&curve_b)?);
            let cells = 2 * x.len() * y.len();
            if cells > svg::MAX_CELLS {
                bail!(
                    "diagram has {cells} cells; at most {} are rendered",
                    svg::MAX_CELLS
                );
            }
            let analysis = analyze(&x, &y, eps)?;
            std::fs::write(&out, svg::render(&analysis))
                .with_context(|| format!("writing {}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            sizes,
            trials,
            seed,
            format,
            timing,
            out,
        } => {
            let rows = bench::run(&sizes, trials, seed);
            let text = bench::format(&rows, format, timing)?;
            write_output(out.as_deref(), text.as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { kind, m, seed, out } => {
            let curve = generate::generate(kind, m, seed)?;
            match out {
                Some(path) => save_curve(&path, &curve)?,
                None => {
                    let mut text = CurveFile::render(&curve);
                    text.push('\n');
                    write_output(None, text.as_bytes())?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load(path: &Path) -> Result<closed_frechet::ClosedCurve> {
    Ok(load_curve(path)?)
}

fn print_json(value: &impl Serialize) -> Result<()> {
    let mut text = serde_json::to_string(value)?;
    text.push('\n');
    write_output(None, text.as_bytes())
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(path) => {
            std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}
