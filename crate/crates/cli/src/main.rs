use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use convexseq_cli::input::Format;
use convexseq_cli::verify::{run_verify, FuzzConfig, Mode};
use convexseq_cli::{classify_report, plot_instance, sequence_report, CliError};

/// Exact convex-polygon detection for x-sorted point sequences.
#[derive(Parser)]
#[command(name = "convexseq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Shared {
    /// Input format; inferred from the file extension when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Allow x_1 = x_2 and x_{n-1} = x_n (vertical first/last edge).
    #[arg(long)]
    relax_endpoints: bool,
    /// Write output here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a point file as a convex polygon below/above its chord.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        shared: Shared,
        /// Use the orientation oracle instead of the slope test.
        #[arg(long)]
        oracle: bool,
    },
    /// Report convexity and monotonicity of a value sequence.
    Sequence {
        file: PathBuf,
        #[command(flatten)]
        shared: Shared,
        /// Also report the smallest pivot index (convex sequences only).
        #[arg(long)]
        pivot: bool,
    },
    /// Compare the classifier with the oracles on generated instances.
    Verify {
        #[command(flatten)]
        shared: Shared,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        instances: usize,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 50)]
        coord_range: i64,
        /// mixed, convex-only, or hypothesis:Thm15|Thm16|Thm17
        #[arg(long, default_value = "mixed")]
        mode: Mode,
    },
    /// Render a point file as SVG.
    Plot {
        file: PathBuf,
        #[command(flatten)]
        shared: Shared,
        /// SVG destination (falls back to --output, then standard output).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Input(format!("cannot write to standard output: {e}"))),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { file, shared, oracle } => {
            let report = classify_report(&file, shared.format, shared.relax_endpoints, oracle)?;
            emit(&report, shared.output.as_deref())
        }
        Command::Sequence { file, shared, pivot } => {
            let report = sequence_report(&file, shared.format, pivot)?;
            emit(&report, shared.output.as_deref())
        }
        Command::Verify {
            shared,
            seed,
            instances,
            n_min,
            n_max,
            coord_range,
            mode,
        } => {
            let cfg = FuzzConfig {
                seed,
                instances,
                n_min,
                n_max,
                coord_range,
                mode,
                relax_endpoints: shared.relax_endpoints,
            };
            let summary = run_verify(&cfg).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut text = serde_json::to_string(&summary).expect("serializable");
            text.push('\n');
            emit(&text, shared.output.as_deref())?;
            match summary.first_disagreement {
                None => Ok(()),
                Some(d) => {
                    eprintln!("first disagreement at instance {}: {}", d.index, d.reason);
                    eprintln!("{}", d.instance_json());
                    Err(CliError::Disagreement(summary.disagreements))
                }
            }
        }
        Command::Plot { file, shared, svg } => {
            let rendered = plot_instance(&file, shared.format, shared.relax_endpoints)?;
            emit(&rendered, svg.as_deref().or(shared.output.as_deref()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Disagreement(_)) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
