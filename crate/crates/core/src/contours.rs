//! Depth contours: the boundaries between consecutive Delaunay levels.
//!
//! Contour 1 is the convex hull, separating level 1 (outside) from level 2.
//! For `j >= 2`, contour `j` separates level `j` from level `j + 1` and is made
//! of the holes in the union of circumdisks of Delaunay triangles whose vertex
//! depths are `{j, j, j - 1}`. The innermost contour may enclose level `f + 1`,
//! one more than the depth of the set.

mod union;

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

pub use union::union_hole_boundary;

use crate::depth::{depths_of_set, DepthLabels};
use crate::error::{Error, Result};
use crate::geom::{circumcircle, normalize_angle, orient, polygon_centroid, segment_distance, Circle, Point, Sign};
use crate::triangulation::{PointSet, Probe, Triangulation};

/// A circular arc from `start_angle` to `end_angle` (radians in `[0, 2π)`).
/// Equal angles denote the full circle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    pub circle: Circle,
    pub start_angle: f64,
    pub end_angle: f64,
    pub ccw: bool,
}

impl Arc {
    pub fn sweep(&self) -> f64 {
        let s = if self.ccw {
            normalize_angle(self.end_angle - self.start_angle)
        } else {
            normalize_angle(self.start_angle - self.end_angle)
        };
        if s == 0.0 {
            TAU
        } else {
            s
        }
    }

    /// Point at parameter `t` in `[0, 1]` along the arc.
    pub fn at(&self, t: f64) -> Point {
        let dir = if self.ccw { 1.0 } else { -1.0 };
        self.circle.point_at(self.start_angle + dir * t * self.sweep())
    }

    pub fn start_point(&self) -> Point {
        self.circle.point_at(self.start_angle)
    }

    pub fn end_point(&self) -> Point {
        self.circle.point_at(self.end_angle)
    }

    fn spans(&self, theta: f64) -> bool {
        let off = if self.ccw {
            normalize_angle(theta - self.start_angle)
        } else {
            normalize_angle(self.start_angle - theta)
        };
        off <= self.sweep()
    }

    pub fn distance(&self, p: Point) -> f64 {
        let c = self.circle.center;
        if p != c && self.spans(self.circle.angle_of(p)) {
            (c.dist(&p) - self.circle.radius).abs()
        } else {
            p.dist(&self.start_point()).min(p.dist(&self.end_point()))
        }
    }

    /// Contribution to the signed area enclosed by a curve (Green's theorem).
    fn area_term(&self) -> f64 {
        let (c, r) = (self.circle.center, self.circle.radius);
        let dir = if self.ccw { 1.0 } else { -1.0 };
        let (t1, t2) = (self.start_angle, self.start_angle + dir * self.sweep());
        0.5 * (dir * r * r * self.sweep() + r * c.x * (t2.sin() - t1.sin()) - r * c.y * (t2.cos() - t1.cos()))
    }
}

/// A closed curve of arcs, each starting where the previous one ends.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Curve {
    pub arcs: Vec<Arc>,
}

impl Curve {
    /// Positive when the curve turns counterclockwise around its interior.
    pub fn signed_area(&self) -> f64 {
        self.arcs.iter().map(Arc::area_term).sum()
    }

    /// Even-odd containment: the chord polygon, corrected by the circular
    /// segment between each arc and its chord.
    pub fn contains(&self, p: Point) -> bool {
        let chord: Vec<Point> = self.arcs.iter().map(Arc::start_point).collect();
        let mut inside = polygon_contains(&chord, p);
        for a in &self.arcs {
            if a.circle.center.dist(&p) >= a.circle.radius {
                continue;
            }
            let (s, e, m) = (a.start_point(), a.end_point(), a.at(0.5));
            let side = |q: Point| (e.x - s.x) * (q.y - s.y) - (e.y - s.y) * (q.x - s.x);
            let in_segment = if s.dist(&e) <= 1e-12 * a.circle.radius {
                a.sweep() > std::f64::consts::PI
            } else {
                side(p) * side(m) > 0.0
            };
            if in_segment {
                inside = !inside;
            }
        }
        inside
    }

    pub fn distance(&self, p: Point) -> f64 {
        self.arcs.iter().map(|a| a.distance(p)).fold(f64::INFINITY, f64::min)
    }

    /// Polygonal approximation with `per_arc` segments on every arc.
    pub fn polygon(&self, per_arc: usize) -> Vec<Point> {
        self.arcs
            .iter()
            .flat_map(|a| (0..per_arc).map(move |k| a.at(k as f64 / per_arc as f64)))
            .collect()
    }

    /// A point just off the middle of the longest arc, on its right-hand side.
    pub(crate) fn interior_probe(&self) -> Point {
        let a = self
            .arcs
            .iter()
            .max_by(|x, y| (x.sweep() * x.circle.radius).total_cmp(&(y.sweep() * y.circle.radius)))
            .expect("nonempty curve");
        let m = a.at(0.5);
        let c = a.circle.center;
        let k = if a.ccw { 1.0 + 1e-7 } else { 1.0 - 1e-7 };
        Point::new(c.x + (m.x - c.x) * k, c.y + (m.y - c.y) * k)
    }
}

pub(crate) fn polygon_contains(poly: &[Point], p: Point) -> bool {
    let n = poly.len();
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x {
                inside = !inside;
            }
        }
    }
    inside
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ContourShape {
    /// Hull polygon, counterclockwise, with the indices of its vertices.
    Polygon { vertices: Vec<usize>, points: Vec<Point> },
    /// Disjoint closed curves; the enclosed regions are the deeper level.
    Curves { curves: Vec<Curve> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DepthContour {
    /// The contour separates level `level` (outside) from `level + 1` (inside).
    pub level: u32,
    pub shape: ContourShape,
}

impl DepthContour {
    pub fn curves(&self) -> &[Curve] {
        match &self.shape {
            ContourShape::Curves { curves } => curves,
            ContourShape::Polygon { .. } => &[],
        }
    }

    fn distance(&self, p: Point) -> f64 {
        match &self.shape {
            ContourShape::Polygon { points, .. } => polygon_distance(points, p),
            ContourShape::Curves { curves } => curves.iter().map(|c| c.distance(p)).fold(f64::INFINITY, f64::min),
        }
    }
}

fn polygon_distance(points: &[Point], p: Point) -> f64 {
    let n = points.len();
    if n == 1 {
        return p.dist(&points[0]);
    }
    (0..n)
        .map(|i| segment_distance(p, points[i], points[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min)
}

/// Nested contours, outermost first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelSet {
    pub contours: Vec<DepthContour>,
    pub depth_of_set: u32,
    /// Distance under which a point is reported as lying on a contour.
    pub tolerance: f64,
}

/// Level of a point, or both candidates when it lies on a contour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Level(u32),
    Boundary { outer: u32, inner: u32 },
}

impl Classification {
    pub fn level(self) -> Option<u32> {
        match self {
            Classification::Level(l) => Some(l),
            Classification::Boundary { .. } => None,
        }
    }
}

/// Circumcircles of the triangles whose vertex depths are exactly `{j, j, j - 1}`.
pub fn boundary_circles(t: &Triangulation, d: &DepthLabels, j: u32) -> Result<Vec<Circle>> {
    if j < 2 || j > d.set_depth {
        return Err(Error::LevelOutOfRange {
            level: j,
            max: d.set_depth,
        });
    }
    let pts = t.points();
    let mut out = Vec::new();
    for tri in t.triangles() {
        let mut ds = tri.map(|v| d.depth[v]);
        ds.sort_unstable();
        if ds == [j - 1, j, j] {
            let mut c = circumcircle(pts[tri[0]], pts[tri[1]], pts[tri[2]])?;
            c.defining_triple = Some(*tri);
            out.push(c);
        }
    }
    Ok(out)
}

/// Circumcircles of the triangles whose smallest vertex depth is `m`.
pub fn min_depth_circles(t: &Triangulation, d: &DepthLabels, m: u32) -> Result<Vec<Circle>> {
    let pts = t.points();
    let mut out = Vec::new();
    for tri in t.triangles() {
        if tri.iter().map(|&v| d.depth[v]).min() == Some(m) {
            let mut c = circumcircle(pts[tri[0]], pts[tri[1]], pts[tri[2]])?;
            c.defining_triple = Some(*tri);
            out.push(c);
        }
    }
    Ok(out)
}

/// Builds every contour of the triangulated set.
///
/// Contour `j` bounds the points of insertion depth above `j`, which are the
/// hull points outside every circumdisk of minimum depth below `j`. Disks of
/// minimum depth `j - 1` plus the disks carrying contour `j - 1` suffice: the
/// shallower disks never reach inside contour `j - 1`.
pub fn depth_contours(t: &Triangulation, d: &DepthLabels) -> Result<LevelSet> {
    let hull = t.hull().to_vec();
    let points: Vec<Point> = hull.iter().map(|&v| t.points()[v]).collect();
    let mut contours = vec![DepthContour {
        level: 1,
        shape: ContourShape::Polygon { vertices: hull, points },
    }];
    let mut carried: Vec<Circle> = Vec::new();
    for j in 2..=d.set_depth {
        let mut circles = min_depth_circles(t, d, j - 1)?;
        if circles.is_empty() {
            break;
        }
        circles.append(&mut carried);
        let mut curves = union::union_hole_boundary_with(&circles, t.points());
        // Keep the holes whose interior really is deeper than level j.
        curves.retain(|c| {
            let hint = c.arcs[0].circle.defining_triple.map(|tr| tr[0]);
            match t.probe(c.interior_probe(), hint) {
                Probe::Inside(vs) => vs.iter().map(|&v| d.depth[v]).min().unwrap_or(0) >= j,
                _ => false,
            }
        });
        if curves.is_empty() {
            break;
        }
        for c in &curves {
            for a in &c.arcs {
                if !carried.iter().any(|k| k.defining_triple == a.circle.defining_triple) {
                    carried.push(a.circle);
                }
            }
        }
        contours.push(DepthContour {
            level: j,
            shape: ContourShape::Curves { curves },
        });
    }
    Ok(LevelSet {
        contours,
        depth_of_set: d.set_depth,
        tolerance: scale_tolerance(t.points()),
    })
}

fn scale_tolerance(points: &[Point]) -> f64 {
    let scale = points.iter().map(|p| p.x.abs().max(p.y.abs())).fold(0.0, f64::max);
    1e-9 * (1.0 + scale)
}

/// Level set of any point set; degenerate sets have only their hull.
pub fn level_set_of(s: &PointSet) -> Result<LevelSet> {
    match depths_of_set(s) {
        (Some(t), d) => depth_contours(&t, &d),
        (None, d) => {
            let vertices = crate::triangulation::convex_hull(s);
            let points = vertices.iter().map(|&v| s.get(v)).collect();
            Ok(LevelSet {
                contours: vec![DepthContour {
                    level: 1,
                    shape: ContourShape::Polygon { vertices, points },
                }],
                depth_of_set: d.set_depth,
                tolerance: scale_tolerance(s.points()),
            })
        }
    }
}

impl LevelSet {
    pub fn hull(&self) -> &[Point] {
        match &self.contours[0].shape {
            ContourShape::Polygon { points, .. } => points,
            ContourShape::Curves { .. } => &[],
        }
    }

    /// Level of `p`, scanning contours from the outside in.
    pub fn classify(&self, p: Point) -> Classification {
        let hull = self.hull();
        let n = hull.len();
        if n < 3 {
            return Classification::Level(1);
        }
        let mut strictly_inside = true;
        for i in 0..n {
            match orient(hull[i], hull[(i + 1) % n], p) {
                Sign::Negative => strictly_inside = false,
                Sign::Zero => {
                    if segment_distance(p, hull[i], hull[(i + 1) % n]) == 0.0 {
                        return Classification::Level(1);
                    }
                    strictly_inside = false;
                }
                Sign::Positive => {}
            }
        }
        if self.contours[0].distance(p) <= self.tolerance {
            return Classification::Boundary { outer: 1, inner: 2 };
        }
        if !strictly_inside {
            return Classification::Level(1);
        }
        let mut level = 2;
        for c in &self.contours[1..] {
            if c.distance(p) <= self.tolerance {
                return Classification::Boundary {
                    outer: c.level,
                    inner: c.level + 1,
                };
            }
            if c.curves().iter().any(|k| k.contains(p)) {
                level = c.level + 1;
            } else {
                break;
            }
        }
        Classification::Level(level)
    }

    /// Distance from `p` to the nearest contour.
    pub fn boundary_distance(&self, p: Point) -> f64 {
        self.contours
            .iter()
            .map(|c| c.distance(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// Centroids of the regions of the deepest level.
    pub fn medians(&self) -> Vec<Point> {
        let last = self.contours.last().expect("hull contour");
        match &last.shape {
            ContourShape::Polygon { points, .. } => {
                if points.is_empty() {
                    Vec::new()
                } else {
                    vec![polygon_centroid(points)]
                }
            }
            ContourShape::Curves { curves } => curves.iter().map(|c| polygon_centroid(&c.polygon(64))).collect(),
        }
    }

    /// Number of levels with nonempty interior.
    pub fn level_count(&self) -> usize {
        if self.hull().len() < 3 {
            1
        } else {
            self.contours.len() + 1
        }
    }
}
