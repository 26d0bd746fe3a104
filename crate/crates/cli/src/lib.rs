//! Library side of the `convexseq` command-line tool: instance file parsing,
//! JSON reports, seeded verification runs and SVG plots.

pub mod commands;
pub mod input;
pub mod plot;
pub mod verify;

pub use commands::{classify_report, plot_instance, sequence_report, CliError};
