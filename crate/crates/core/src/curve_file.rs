//! JSON curve files: `{"closed": true, "dimension": k, "points": [[...], ...]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{FrechetError, Result};
use crate::geometry::{ClosedCurve, Point};

/// On-disk form of a closed curve. The closing edge is implicit; the first
/// point is not repeated at the end.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub closed: bool,
    pub dimension: usize,
    pub points: Vec<Vec<f64>>,
}

impl CurveFile {
    pub fn from_curve(curve: &ClosedCurve) -> Self {
        Self {
            closed: true,
            dimension: curve.dim(),
            points: curve
                .vertices()
                .iter()
                .map(|p| p.coords().to_vec())
                .collect(),
        }
    }

    pub fn to_curve(&self) -> Result<ClosedCurve> {
        if !self.closed {
            return Err(FrechetError::CurveFile(
                "\"closed\" is false; only closed curves are supported".into(),
            ));
        }
        if self.points.is_empty() {
            return Err(FrechetError::CurveFile("no points".into()));
        }
        let vertices = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if p.len() != self.dimension {
                    return Err(FrechetError::CurveFile(format!(
                        "point {i} has {} coordinates, expected {}",
                        p.len(),
                        self.dimension
                    )));
                }
                Point::new(p.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        ClosedCurve::new(vertices)
    }

    pub fn parse(text: &str) -> Result<ClosedCurve> {
        let file: CurveFile =
            serde_json::from_str(text).map_err(|e| FrechetError::CurveFile(e.to_string()))?;
        file.to_curve()
    }

    /// Pretty JSON with one point per line.
    pub fn render(curve: &ClosedCurve) -> String {
        let points: Vec<String> = curve
            .vertices()
            .iter()
            .map(|p| serde_json::to_string(p.coords()).expect("finite coordinates serialize"))
            .collect();
        format!(
            "{{\n  \"closed\": true,\n  \"dimension\": {},\n  \"points\": [\n    {}\n  ]\n}}",
            curve.dim(),
            points.join(",\n    ")
        )
    }
}

pub fn load_curve(path: impl AsRef<Path>) -> Result<ClosedCurve> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| FrechetError::CurveFile(format!("{}: {e}", path.display())))?;
    CurveFile::parse(&text).map_err(|e| match e {
        FrechetError::CurveFile(msg) => {
            FrechetError::CurveFile(format!("{}: {msg}", path.display()))
        }
        other => other,
    })
}

pub fn save_curve(path: impl AsRef<Path>, curve: &ClosedCurve) -> Result<()> {
    let path = path.as_ref();
    let mut text = CurveFile::render(curve);
    text.push('\n');
    std::fs::write(path, text)
        .map_err(|e| FrechetError::CurveFile(format!("{}: {e}", path.display())))
}
