//! Curve file format.
//!
//! Plain text: one vertex per line as two whitespace-separated numbers; blank
//! lines and lines starting with `#` are ignored. Alternatively a JSON object
//! `{"vertices": [[x, y], ...]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::geometry::{CurveError, Point2, PolyCurve};

#[derive(Serialize, Deserialize)]
struct JsonCurve {
    vertices: Vec<[f64; 2]>,
}

/// Parses a curve in either the text or the JSON format.
pub fn parse_curve(text: &str) -> Result<PolyCurve, CurveError> {
    if text.trim_start().starts_with('{') {
        return parse_json(text);
    }
    let mut vertices = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| CurveError::Parse { line: idx + 1, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected 2 numbers, found {}", fields.len())));
        }
        let mut coords = [0.0; 2];
        for (slot, field) in coords.iter_mut().zip(&fields) {
            *slot = field
                .parse::<f64>()
                .map_err(|e| err(format!("{field:?}: {e}")))?;
        }
        vertices.push(Point2::new(coords[0], coords[1]));
    }
    PolyCurve::new(vertices)
}

fn parse_json(text: &str) -> Result<PolyCurve, CurveError> {
    let parsed: JsonCurve =
        serde_json::from_str(text).map_err(|e| CurveError::Json(e.to_string()))?;
    PolyCurve::new(
        parsed
            .vertices
            .into_iter()
            .map(|[x, y]| Point2::new(x, y))
            .collect(),
    )
}

/// Text format, one vertex per line. Uses the shortest representation that
/// parses back to the same `f64`.
pub fn curve_to_text(curve: &PolyCurve) -> String {
    let mut out = String::new();
    for v in curve.vertices() {
        let _ = writeln!(out, "{} {}", v.x, v.y);
    }
    out
}

pub fn curve_to_json(curve: &PolyCurve) -> String {
    let json = JsonCurve {
        vertices: curve.vertices().iter().map(|v| [v.x, v.y]).collect(),
    };
    serde_json::to_string(&json).expect("curve serializes")
}
