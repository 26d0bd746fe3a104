//! Command implementations returning their output text, so the binary only
//! handles arguments, files and exit codes.

use std::path::Path;

use convexseq::{
    analyze_sequence, classify, find_pivot, oracle_classify, slope_profile, PointSeq, PolygonVerdict, RealSeq,
};
use serde::Serialize;
use thiserror::Error;

use crate::input::{read_point_file, read_sequence_file, Format, InputError};
use crate::plot::render_svg;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
    #[error("verification found {0} disagreement(s)")]
    Disagreement(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Disagreement(_) => 1,
            CliError::Input(_) | CliError::Usage(_) => 2,
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Serialize)]
struct ClassifyOutput {
    kind: &'static str,
    strict: bool,
    witness: Option<usize>,
    slopes: Vec<String>,
}

#[derive(Serialize)]
struct ViolationsOutput {
    convex: Option<usize>,
    concave: Option<usize>,
    increasing: Option<usize>,
    strictly_increasing: Option<usize>,
    decreasing: Option<usize>,
    strictly_decreasing: Option<usize>,
}

#[derive(Serialize)]
struct SequenceOutput {
    is_convex: bool,
    is_concave: bool,
    is_increasing: bool,
    is_strictly_increasing: bool,
    is_decreasing: bool,
    is_strictly_decreasing: bool,
    first_violation_index: Option<usize>,
    violations: ViolationsOutput,
    #[serde(skip_serializing_if = "Option::is_none")]
    pivot: Option<usize>,
}

fn load_points(path: &Path, format: Option<Format>, relax: bool) -> Result<PointSeq, CliError> {
    let file = read_point_file(path, format)?;
    PointSeq::new(file.points, relax || file.relax_endpoints).map_err(|e| CliError::Input(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

/// The `classify` report for a point file. With `use_oracle` the verdict
/// comes from the orientation oracle instead of the slope test.
pub fn classify_report(path: &Path, format: Option<Format>, relax: bool, use_oracle: bool) -> Result<String, CliError> {
    let seq = load_points(path, format, relax)?;
    let verdict: PolygonVerdict = if use_oracle {
        oracle_classify(&seq).map_err(|e| CliError::Input(e.to_string()))?
    } else {
        classify(&seq)
    };
    Ok(to_json(&ClassifyOutput {
        kind: verdict.kind.as_str(),
        strict: verdict.strict,
        witness: verdict.witness,
        slopes: slope_profile(&seq).slopes.iter().map(ToString::to_string).collect(),
    }))
}

pub fn sequence_report(path: &Path, format: Option<Format>, pivot: bool) -> Result<String, CliError> {
    let file = read_sequence_file(path, format)?;
    let seq = RealSeq::new(file.values).map_err(|e| CliError::Input(e.to_string()))?;
    let r = analyze_sequence(&seq);
    let pivot = if pivot {
        Some(find_pivot(&seq).map_err(|e| CliError::Input(format!("--pivot: {e}")))?)
    } else {
        None
    };
    let v = r.violations;
    Ok(to_json(&SequenceOutput {
        is_convex: r.is_convex,
        is_concave: r.is_concave,
        is_increasing: r.is_increasing,
        is_strictly_increasing: r.is_strictly_increasing,
        is_decreasing: r.is_decreasing,
        is_strictly_decreasing: r.is_strictly_decreasing,
        first_violation_index: r.first_violation_index,
        violations: ViolationsOutput {
            convex: v.convex,
            concave: v.concave,
            increasing: v.increasing,
            strictly_increasing: v.strictly_increasing,
            decreasing: v.decreasing,
            strictly_decreasing: v.strictly_decreasing,
        },
        pivot,
    }))
}

pub fn plot_instance(path: &Path, format: Option<Format>, relax: bool) -> Result<String, CliError> {
    let seq = load_points(path, format, relax)?;
    Ok(render_svg(&seq, &classify(&seq)))
}
