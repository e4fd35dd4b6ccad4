//! Static SVG drawing of a point set, its layers and its depth contours.

use std::fmt::Write;

use crate::contours::{Arc, ContourShape, LevelSet};
use crate::depth::{DepthLabels, Layer};
use crate::geom::Point;
use crate::triangulation::PointSet;

const SIZE: f64 = 800.0;
const PAD: f64 = 20.0;
const PALETTE: [&str; 8] = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

#[derive(Debug, Clone, Copy, Default)]
pub struct RenderOptions {
    pub layers: bool,
    pub levels: bool,
}

/// Maps data coordinates to the drawing, y up.
struct Frame {
    min: Point,
    max_y: f64,
    scale: f64,
}

impl Frame {
    fn new(s: &PointSet) -> Self {
        let (min, max) = s.bounding_box();
        let span = (max.x - min.x).max(max.y - min.y);
        let scale = if span > 0.0 { (SIZE - 2.0 * PAD) / span } else { 1.0 };
        Frame {
            min,
            max_y: max.y,
            scale,
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (
            PAD + (p.x - self.min.x) * self.scale,
            PAD + (self.max_y - p.y) * self.scale,
        )
    }
}

fn color(depth: u32) -> &'static str {
    PALETTE[(depth.max(1) as usize - 1) % PALETTE.len()]
}

/// Same inputs give the same bytes.
pub fn render(s: &PointSet, d: &DepthLabels, layers: &[Layer], ls: Option<&LevelSet>, opts: RenderOptions) -> String {
    let f = Frame::new(s);
    let pts = s.points();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    if opts.levels {
        if let Some(ls) = ls {
            let _ = writeln!(out, r#"<g id="contours" fill="none" stroke-width="1.5">"#);
            for c in &ls.contours {
                let mut path = String::new();
                match &c.shape {
                    ContourShape::Polygon { points, .. } => {
                        for (k, p) in points.iter().enumerate() {
                            let (x, y) = f.map(*p);
                            let _ = write!(path, "{}{x:.3} {y:.3} ", if k == 0 { "M" } else { "L" });
                        }
                        path.push('Z');
                    }
                    ContourShape::Curves { curves } => {
                        for cu in curves {
                            for (k, a) in cu.arcs.iter().enumerate() {
                                if k == 0 {
                                    let (x, y) = f.map(a.start_point());
                                    let _ = write!(path, "M{x:.3} {y:.3} ");
                                }
                                arc_path(&mut path, &f, a);
                            }
                            path.push_str("Z ");
                        }
                    }
                }
                let _ = writeln!(
                    out,
                    r#"<path class="level-{}" stroke="{}" d="{}"/>"#,
                    c.level,
                    color(c.level),
                    path.trim_end()
                );
            }
            let _ = writeln!(out, "</g>");
        }
    }

    if opts.layers {
        let _ = writeln!(out, r#"<g id="layers" stroke-width="1">"#);
        for l in layers {
            for &(a, b) in &l.edges {
                let (x1, y1) = f.map(pts[a]);
                let (x2, y2) = f.map(pts[b]);
                let _ = writeln!(
                    out,
                    r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{}"/>"#,
                    color(l.index)
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }

    let _ = writeln!(out, r#"<g id="points">"#);
    for (i, p) in pts.iter().enumerate() {
        let (x, y) = f.map(*p);
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="{}"><title>{i}: depth {}</title></circle>"#,
            color(d.depth[i]),
            d.depth[i]
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}

/// Appends an arc from the current point. A full circle is drawn in two halves.
fn arc_path(path: &mut String, f: &Frame, a: &Arc) {
    let r = a.circle.radius * f.scale;
    let sweep = a.sweep();
    let pieces = if sweep > std::f64::consts::PI { 2 } else { 1 };
    // Counterclockwise with y up is sweep flag 0 once y points down.
    let flag = if a.ccw { 0 } else { 1 };
    for k in 1..=pieces {
        let t = k as f64 / pieces as f64;
        let (x, y) = f.map(a.at(t));
        let _ = write!(path, "A{r:.3} {r:.3} 0 0 {flag} {x:.3} {y:.3} ");
    }
}
