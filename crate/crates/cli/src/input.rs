//! Instance files.
//!
//! CSV point files hold one `x,y` pair per line; CSV sequence files hold
//! values separated by commas and/or newlines. JSON files look like
//! `{"points": [["0", "1/2"], ...], "relax_endpoints": false}` or
//! `{"values": ["0", "2.5", ...]}`. Values are strings in the exact scalar
//! syntax; bare JSON numbers are accepted and read as exact decimals.
//! A leading header record made only of names (`x,y`) is skipped.

use std::fmt;
use std::path::{Path, PathBuf};

use convexseq::{parse_scalar, Point, Scalar};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Infers the format from the file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "csv" | "txt" => Some(Format::Csv),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct InputError {
    pub location: Option<Location>,
    pub message: String,
}

impl InputError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        InputError {
            location: Some(Location { line, column }),
            message: message.into(),
        }
    }

    fn general(message: impl Into<String>) -> Self {
        InputError {
            location: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.location {
            Some(Location { line, column }) => write!(f, "line {line}, column {column}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

/// A parsed point file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointFile {
    pub source: Option<PathBuf>,
    pub points: Vec<Point>,
    /// Declared in the file (JSON only); combined with the command-line flag.
    pub relax_endpoints: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFile {
    pub source: Option<PathBuf>,
    pub values: Vec<Scalar>,
}

struct CsvField {
    text: String,
    line: usize,
    column: usize,
}

/// Reads CSV records as (line, fields), dropping a leading header of names.
/// Columns are 1-based field positions.
fn csv_records(text: &str) -> Result<Vec<Vec<CsvField>>, InputError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    for result in reader.records() {
        let record = result.map_err(|e| {
            let line = e.position().map(|p| p.line() as usize).unwrap_or(0);
            InputError::at(line, 1, e.to_string())
        })?;
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        if record.iter().all(str::is_empty) {
            continue;
        }
        records.push(
            record
                .iter()
                .enumerate()
                .map(|(i, f)| CsvField {
                    text: f.to_owned(),
                    line,
                    column: i + 1,
                })
                .collect::<Vec<_>>(),
        );
    }
    let is_header = |r: &[CsvField]| {
        r.iter()
            .all(|f| !f.text.is_empty() && f.text.chars().all(|c| c.is_ascii_alphabetic() || c == '_'))
    };
    if records.first().is_some_and(|r| is_header(r)) {
        records.remove(0);
    }
    Ok(records)
}

fn field_scalar(field: &CsvField) -> Result<Scalar, InputError> {
    parse_scalar(&field.text).map_err(|e| InputError::at(field.line, field.column, e.to_string()))
}

pub fn parse_points_csv(text: &str) -> Result<Vec<Point>, InputError> {
    csv_records(text)?
        .iter()
        .map(|r| {
            if r.len() != 2 {
                return Err(InputError::at(
                    r[0].line,
                    1,
                    format!("expected 2 fields \"x,y\", found {}", r.len()),
                ));
            }
            Ok(Point::new(field_scalar(&r[0])?, field_scalar(&r[1])?))
        })
        .collect()
}

pub fn parse_sequence_csv(text: &str) -> Result<Vec<Scalar>, InputError> {
    csv_records(text)?
        .iter()
        .flat_map(|r| r.iter())
        .filter(|f| !f.text.is_empty())
        .map(field_scalar)
        .collect()
}

/// A scalar in JSON: a string in scalar syntax or a bare number.
struct JsonScalar(Scalar);

impl<'de> Deserialize<'de> for JsonScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = match serde_json::Value::deserialize(d)? {
            serde_json::Value::String(s) => s,
            // arbitrary_precision keeps the literal digits
            serde_json::Value::Number(n) => n.to_string(),
            other => {
                return Err(D::Error::custom(format!(
                    "expected a number or numeric string, found {other}"
                )))
            }
        };
        parse_scalar(&text).map(JsonScalar).map_err(D::Error::custom)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonPoints {
    points: Vec<(JsonScalar, JsonScalar)>,
    #[serde(default)]
    relax_endpoints: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonValues {
    values: Vec<JsonScalar>,
}

fn json_error(e: serde_json::Error) -> InputError {
    if e.line() == 0 {
        InputError::general(e.to_string())
    } else {
        // serde_json appends its own " at line L column C"
        let msg = e.to_string();
        let msg = msg.split(" at line ").next().unwrap_or(&msg).to_owned();
        InputError::at(e.line(), e.column(), msg)
    }
}

pub fn parse_points_json(text: &str) -> Result<(Vec<Point>, bool), InputError> {
    let parsed: JsonPoints = serde_json::from_str(text).map_err(json_error)?;
    let points = parsed.points.into_iter().map(|(x, y)| Point::new(x.0, y.0)).collect();
    Ok((points, parsed.relax_endpoints))
}

pub fn parse_sequence_json(text: &str) -> Result<Vec<Scalar>, InputError> {
    let parsed: JsonValues = serde_json::from_str(text).map_err(json_error)?;
    Ok(parsed.values.into_iter().map(|v| v.0).collect())
}

fn resolve_format(path: &Path, format: Option<Format>) -> Result<Format, InputError> {
    format.or_else(|| Format::from_path(path)).ok_or_else(|| {
        InputError::general(format!(
            "cannot infer the format of {}; pass --format csv|json",
            path.display()
        ))
    })
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::general(format!("cannot read {}: {e}", path.display())))
}

pub fn read_point_file(path: &Path, format: Option<Format>) -> Result<PointFile, InputError> {
    let format = resolve_format(path, format)?;
    let text = read(path)?;
    let (points, relax_endpoints) = match format {
        Format::Csv => (parse_points_csv(&text)?, false),
        Format::Json => parse_points_json(&text)?,
    };
    Ok(PointFile {
        source: Some(path.to_owned()),
        points,
        relax_endpoints,
    })
}

pub fn read_sequence_file(path: &Path, format: Option<Format>) -> Result<SequenceFile, InputError> {
    let format = resolve_format(path, format)?;
    let text = read(path)?;
    let values = match format {
        Format::Csv => parse_sequence_csv(&text)?,
        Format::Json => parse_sequence_json(&text)?,
    };
    Ok(SequenceFile {
        source: Some(path.to_owned()),
        values,
    })
}

#[derive(Serialize)]
struct JsonPointsOut {
    points: Vec<[String; 2]>,
    relax_endpoints: bool,
}

/// Renders points as a JSON instance file that [`parse_points_json`] reads
/// back exactly.
pub fn points_to_json(points: &[Point], relax_endpoints: bool) -> String {
    let out = JsonPointsOut {
        points: points.iter().map(|p| [p.x.to_string(), p.y.to_string()]).collect(),
        relax_endpoints,
    };
    serde_json::to_string(&out).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &str, y: &str) -> Point {
        Point::new(parse_scalar(x).unwrap(), parse_scalar(y).unwrap())
    }

    #[test]
    fn csv_points_with_header_comments_and_blank_lines() {
        let text = "x,y\n# triangle\n0,0\n\n 2.5 , 4/6\n3,-1\n";
        let pts = parse_points_csv(text).unwrap();
        assert_eq!(pts, vec![p("0", "0"), p("5/2", "2/3"), p("3", "-1")]);
    }

    #[test]
    fn csv_errors_carry_line_and_column() {
        let err = parse_points_csv("0,0\n1,abc\n").unwrap_err();
        assert_eq!(err.location, Some(Location { line: 2, column: 2 }));
        assert!(err.to_string().starts_with("line 2, column 2:"));

        let err = parse_points_csv("0,0\n1,2,3\n").unwrap_err();
        assert_eq!(err.location.unwrap().line, 2);

        let err = parse_points_csv("0,0\n1/0,2\n").unwrap_err();
        assert!(err.message.contains("zero denominator"));
    }

    #[test]
    fn csv_sequences_flatten_rows() {
        let vals = parse_sequence_csv("3,1\n0\n2,5\n").unwrap();
        let expected: Vec<Scalar> = [3, 1, 0, 2, 5].iter().map(|&v| Scalar::from_integer(v)).collect();
        assert_eq!(vals, expected);
        assert_eq!(parse_sequence_csv("value\n1\n2\n").unwrap().len(), 2);
    }

    #[test]
    fn json_points_accept_strings_and_numbers() {
        let (pts, relax) =
            parse_points_json(r#"{"points": [["0", "0"], [0.1, 2], ["-1/3", -4]], "relax_endpoints": true}"#).unwrap();
        assert!(relax);
        assert_eq!(pts, vec![p("0", "0"), p("1/10", "2"), p("-1/3", "-4")]);
    }

    #[test]
    fn json_numbers_are_exact() {
        let (pts, relax) = parse_points_json(r#"{"points": [[0.1, 0.3], ["2", 12345678901234567890.5]]}"#).unwrap();
        assert!(!relax);
        assert_eq!(pts, vec![p("1/10", "3/10"), p("2", "24691357802469135781/2")]);
    }

    #[test]
    fn json_errors_carry_line_and_column() {
        let err = parse_points_json("{\"points\": [\n  [\"0\", \"x\"]\n]}").unwrap_err();
        let loc = err.location.unwrap();
        assert_eq!(loc.line, 2);
        assert!(err.message.contains("malformed number"));

        let err = parse_points_json(r#"{"pts": []}"#).unwrap_err();
        assert!(err.message.contains("unknown field"));

        assert!(parse_points_json(r#"{"points": [[1e3, 0]]}"#).is_err());
        assert!(parse_points_json(r#"{"points": [[true, 0]]}"#).is_err());
    }

    #[test]
    fn json_sequences() {
        let vals = parse_sequence_json(r#"{"values": ["0", 2, "1/2"]}"#).unwrap();
        assert_eq!(vals.len(), 3);
        assert_eq!(vals[2], Scalar::from_ratio(1, 2).unwrap());
    }

    #[test]
    fn dump_round_trips() {
        let pts = vec![p("0", "-1/3"), p("1", "2"), p("5/2", "7")];
        let text = points_to_json(&pts, true);
        assert_eq!(parse_points_json(&text).unwrap(), (pts, true));
    }

    #[test]
    fn format_inference() {
        assert_eq!(Format::from_path(Path::new("a/b.CSV")), Some(Format::Csv));
        assert_eq!(Format::from_path(Path::new("a.json")), Some(Format::Json));
        assert_eq!(Format::from_path(Path::new("a.dat")), None);
        assert!(resolve_format(Path::new("a.dat"), None).is_err());
    }
}
