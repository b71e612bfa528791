//! Curve files: JSON (`{"format":"jordan-curve/1","vertices":[[x,y],...]}`)
//! and CSV (one `x,y` pair per line, optional header).

use std::fs;
use std::path::Path;

use rhombic_core::curve::JordanCurve;
use rhombic_core::Point;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::json::{point, to_canonical_string};

pub const CURVE_FORMAT: &str = "jordan-curve/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveFormat {
    Json,
    Csv,
}

impl CurveFormat {
    /// Guesses the format from the file extension; JSON unless it ends in `.csv`.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => CurveFormat::Csv,
            _ => CurveFormat::Json,
        }
    }
}

/// Parses curve text. `context` names the source in error messages.
pub fn parse_curve(text: &str, format: CurveFormat, context: &str) -> Result<JordanCurve, Error> {
    let points = match format {
        CurveFormat::Json => parse_json_points(text, context)?,
        CurveFormat::Csv => parse_csv_points(text, context)?,
    };
    Ok(JordanCurve::new(points)?)
}

/// Reads and validates a curve file.
pub fn load_curve(path: &Path, format: Option<CurveFormat>) -> Result<JordanCurve, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let format = format.unwrap_or_else(|| CurveFormat::from_path(path));
    parse_curve(&text, format, &path.display().to_string())
}

fn parse_json_points(text: &str, context: &str) -> Result<Vec<Point>, Error> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::parse(context, e))?;
    match root.get("format").and_then(Value::as_str) {
        Some(CURVE_FORMAT) => {}
        Some(other) => return Err(Error::parse(context, format!("unsupported format {other:?}"))),
        None => return Err(Error::parse(context, "missing \"format\" field")),
    }
    let vertices = root
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse(context, "missing \"vertices\" array"))?;
    vertices
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let pair = v.as_array().filter(|a| a.len() == 2);
            match pair.map(|a| (a[0].as_f64(), a[1].as_f64())) {
                Some((Some(x), Some(y))) => Ok(Point::new(x, y)),
                _ => Err(Error::parse(context, format!("vertex {i} is not an [x, y] pair of numbers"))),
            }
        })
        .collect()
}

fn parse_csv_points(text: &str, context: &str) -> Result<Vec<Point>, Error> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut points = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::parse(context, e))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed = match (record.len(), record.get(0), record.get(1)) {
            (2, Some(x), Some(y)) => x.parse::<f64>().ok().zip(y.parse::<f64>().ok()),
            _ => None,
        };
        match parsed {
            Some((x, y)) => points.push(Point::new(x, y)),
            // A non-numeric first row is a header.
            None if line == 0 => {}
            None => return Err(Error::parse(context, format!("line {}: expected \"x,y\"", line + 1))),
        }
    }
    Ok(points)
}

pub fn curve_to_json(curve: &JordanCurve) -> Value {
    json!({
        "format": CURVE_FORMAT,
        "vertices": curve.vertices().iter().map(|&p| point(p)).collect::<Vec<_>>(),
    })
}

/// Canonical JSON text of a curve.
pub fn emit_curve(curve: &JordanCurve) -> String {
    to_canonical_string(&curve_to_json(curve))
}

pub fn write_curve(curve: &JordanCurve, path: &Path) -> Result<(), Error> {
    write_text(path, &emit_curve(curve))
}

/// SHA-256 of the canonical curve JSON, as lowercase hex.
pub fn curve_digest(curve: &JordanCurve) -> String {
    hex::encode(Sha256::digest(emit_curve(curve).as_bytes()))
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<(), Error> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::write(path, text).map_err(|e| Error::io(path, e))
}
