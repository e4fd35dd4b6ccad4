//! Point files and the JSON result document.
//!
//! A point file holds one `x,y` pair per line. Blank lines and lines starting
//! with `#` are skipped. The result document is a single JSON object; the
//! grammar is in `docs/result-format.md`.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::contours::{Classification, ContourShape, LevelSet};
use crate::depth::Layer;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::triangulation::PointSet;
use crate::verify::Check;

pub const FORMAT: &str = "strata-result/1";

/// A parsed point file. `text[i]` is the input line of point `i`, trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct PointFile {
    pub set: PointSet,
    pub text: Vec<String>,
    pub lines: Vec<usize>,
    pub checksum: String,
}

pub fn parse_points(input: &str) -> Result<PointFile> {
    let mut coords = Vec::new();
    let mut text = Vec::new();
    let mut lines = Vec::new();
    for (k, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p = parse_pair(line).map_err(|message| Error::Parse { line: k + 1, message })?;
        coords.push(p);
        text.push(line.to_string());
        lines.push(k + 1);
    }
    let set = PointSet::new(coords).map_err(|e| match e {
        Error::DuplicatePoint { first, second } => Error::Parse {
            line: lines[second],
            message: format!("duplicate of the point on line {}", lines[first]),
        },
        other => other,
    })?;
    Ok(PointFile {
        set,
        text,
        lines,
        checksum: checksum(input.as_bytes()),
    })
}

/// Parses `x,y` into a finite point.
pub fn parse_pair(s: &str) -> std::result::Result<Point, String> {
    let mut it = s.split(',');
    let (Some(x), Some(y), None) = (it.next(), it.next(), it.next()) else {
        return Err(format!("expected \"x,y\", found {s:?}"));
    };
    let num = |f: &str| {
        let v: f64 = f.trim().parse().map_err(|_| format!("not a number: {:?}", f.trim()))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("not finite: {:?}", f.trim()))
        }
    };
    Ok(Point::new(num(x)?, num(y)?))
}

pub fn checksum(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub format: String,
    pub command: String,
    pub checksum: String,
    /// Input coordinates as written in the point file.
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depths: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set_depth: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layers: Option<Vec<LayerDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contours: Option<Vec<ContourDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub medians: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query: Option<QueryDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Vec<CompareRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<Check>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerDoc {
    pub index: u32,
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub components: Vec<Vec<usize>>,
    pub cycles: Vec<Vec<usize>>,
}

impl From<&Layer> for LayerDoc {
    fn from(l: &Layer) -> Self {
        LayerDoc {
            index: l.index,
            vertices: l.vertices.clone(),
            edges: l.edges.iter().map(|&(a, b)| [a, b]).collect(),
            components: l.components.clone(),
            cycles: l.all_cycles().cloned().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContourDoc {
    pub level: u32,
    /// Hull vertex indices, set for level 1 only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polygon: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub curves: Vec<Vec<ArcDoc>>,
}

/// Counterclockwise arc from `start` to `end` (radians) on a circle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArcDoc {
    pub center: [f64; 2],
    pub radius: f64,
    pub start: f64,
    pub end: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryDoc {
    pub point: String,
    pub via: String,
    /// Set unless the point lies on a contour.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
    /// Both candidate levels of a point on a contour.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<[u32; 2]>,
}

impl QueryDoc {
    pub fn new(point: &str, via: &str, c: Classification) -> Self {
        let (level, boundary) = match c {
            Classification::Level(l) => (Some(l), None),
            Classification::Boundary { outer, inner } => (None, Some([outer, inner])),
        };
        QueryDoc {
            point: point.to_string(),
            via: via.to_string(),
            level,
            boundary,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareRow {
    pub index: usize,
    pub delaunay: u32,
    pub convex: u32,
    pub tukey: u32,
}

impl ResultDocument {
    pub fn new(command: &str, file: &PointFile) -> Self {
        ResultDocument {
            format: FORMAT.to_string(),
            command: command.to_string(),
            checksum: file.checksum.clone(),
            points: file.text.clone(),
            method: None,
            depths: None,
            set_depth: None,
            layers: None,
            contours: None,
            medians: None,
            query: None,
            comparison: None,
            checks: None,
        }
    }

    pub fn with_level_set(mut self, ls: &LevelSet) -> Self {
        self.contours = Some(ls.contours.iter().map(contour_doc).collect());
        self.medians = Some(ls.medians().iter().map(|p| [round12(p.x), round12(p.y)]).collect());
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: ResultDocument = serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        if doc.format != FORMAT {
            return Err(Error::Parse {
                line: 1,
                message: format!("unknown format {:?}", doc.format),
            });
        }
        Ok(doc)
    }
}

fn contour_doc(c: &crate::contours::DepthContour) -> ContourDoc {
    match &c.shape {
        ContourShape::Polygon { vertices, .. } => ContourDoc {
            level: c.level,
            polygon: Some(vertices.clone()),
            curves: Vec::new(),
        },
        ContourShape::Curves { curves } => ContourDoc {
            level: c.level,
            polygon: None,
            curves: curves
                .iter()
                .map(|cu| {
                    cu.arcs
                        .iter()
                        .map(|a| ArcDoc {
                            center: [round12(a.circle.center.x), round12(a.circle.center.y)],
                            radius: round12(a.circle.radius),
                            start: round12(a.start_angle),
                            end: round12(a.end_angle),
                            triangle: a.circle.defining_triple,
                        })
                        .collect()
                })
                .collect(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_blanks_and_spacing() {
        let f = parse_points("# square\n0,0\n\n4, 0\n 4,4 \n0,4\n2.0,2\n").unwrap();
        assert_eq!(f.set.len(), 5);
        assert_eq!(f.text, vec!["0,0", "4, 0", "4,4", "0,4", "2.0,2"]);
        assert_eq!(f.lines, vec![2, 4, 5, 6, 7]);
        assert!(f.checksum.starts_with("sha256:"));
        assert_eq!(f.checksum.len(), 7 + 64);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = |s: &str| match parse_points(s) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(err("0,0\n1,x\n"), 2);
        assert_eq!(err("# c\n0,0\n1\n"), 3);
        assert_eq!(err("0,0\n1,2,3\n"), 2);
        assert_eq!(err("0,0\n\ninf,1\n"), 3);
        assert_eq!(err("0,0\n1,1\n#\n0.0,0\n"), 4);
    }

    #[test]
    fn checksum_of_empty_input() {
        assert_eq!(
            checksum(b""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn round12_keeps_twelve_digits() {
        assert_eq!(round12(std::f64::consts::PI), 3.14159265359);
        assert_eq!(round12(-1.0e-20 / 3.0), -3.33333333333e-21);
        assert_eq!(round12(0.0), 0.0);
    }

    #[test]
    fn document_round_trip() {
        let f = parse_points("0,0\n4,0\n4,4\n0,4\n2,2\n1,3\n").unwrap();
        let ls = crate::contours::level_set_of(&f.set).unwrap();
        let mut doc = ResultDocument::new("contours", &f).with_level_set(&ls);
        doc.depths = Some(vec![1, 1, 1, 1, 2, 2]);
        let text = doc.to_json();
        let back = ResultDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), text);
        assert!(ResultDocument::from_json("{").is_err());
    }
}
