//! Planar primitives: points, circles and exactly-decided predicates.
//!
//! `orient` and `in_circle` return signs that are correct as if evaluated in
//! infinite precision (adaptive floating-point filter with exact fallback).
//! Continuous outputs such as circumcenters are plain floating point.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn dist2(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    fn coord(self) -> robust::Coord<f64> {
        robust::Coord { x: self.x, y: self.y }
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: f64) -> Sign {
        if value > 0.0 {
            Sign::Positive
        } else if value < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Sign of the turn a→b→c: `Positive` when `c` is strictly left of the directed line a→b.
pub fn orient(a: Point, b: Point, c: Point) -> Sign {
    Sign::of(robust::orient2d(a.coord(), b.coord(), c.coord()))
}

/// Twice the signed area of (a, b, c). The sign is exact, the magnitude approximate.
pub(crate) fn orient_det(a: Point, b: Point, c: Point) -> f64 {
    robust::orient2d(a.coord(), b.coord(), c.coord())
}

/// `Positive` when `d` lies strictly inside the circle through the counterclockwise triple (a, b, c).
pub fn in_circle(a: Point, b: Point, c: Point, d: Point) -> Result<Sign> {
    if orient(a, b, c) != Sign::Positive {
        return Err(Error::NotCounterclockwise);
    }
    Ok(in_circle_unchecked(a, b, c, d))
}

pub(crate) fn in_circle_unchecked(a: Point, b: Point, c: Point, d: Point) -> Sign {
    Sign::of(robust::incircle(a.coord(), b.coord(), c.coord(), d.coord()))
}

/// A circle, optionally remembering the three data points (by index) it was built from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
    pub defining_triple: Option<[usize; 3]>,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Self {
        Circle {
            center,
            radius,
            defining_triple: None,
        }
    }

    pub fn point_at(&self, angle: f64) -> Point {
        Point::new(
            self.center.x + self.radius * angle.cos(),
            self.center.y + self.radius * angle.sin(),
        )
    }

    pub fn angle_of(&self, p: Point) -> f64 {
        normalize_angle((p.y - self.center.y).atan2(p.x - self.center.x))
    }

    /// Strict containment of `p` in the open disk.
    pub fn contains(&self, p: Point) -> bool {
        self.center.dist(&p) < self.radius
    }
}

/// Circle through three non-collinear points.
pub fn circumcircle(a: Point, b: Point, c: Point) -> Result<Circle> {
    let det = orient_det(a, b, c);
    if det == 0.0 {
        return Err(Error::DegenerateTriple);
    }
    let (bx, by) = (b.x - a.x, b.y - a.y);
    let (cx, cy) = (c.x - a.x, c.y - a.y);
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let d = 2.0 * det;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    let center = Point::new(a.x + ux, a.y + uy);
    // Average the three distances; each is the radius up to rounding.
    let radius = (center.dist(&a) + center.dist(&b) + center.dist(&c)) / 3.0;
    Ok(Circle::new(center, radius))
}

/// Default boundary tolerance for a circle of the given radius.
pub fn default_tolerance(radius: f64) -> f64 {
    1e-9 * (1.0 + radius)
}

/// `Positive` inside (beyond tolerance), `Zero` within tolerance of the boundary, `Negative` outside.
pub fn point_vs_circle(circle: &Circle, p: Point, tolerance: f64) -> Sign {
    let d = circle.center.dist(&p);
    if d < circle.radius - tolerance {
        Sign::Positive
    } else if d <= circle.radius + tolerance {
        Sign::Zero
    } else {
        Sign::Negative
    }
}

pub(crate) fn normalize_angle(a: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let mut r = a % tau;
    if r < 0.0 {
        r += tau;
    }
    if r >= tau {
        r -= tau;
    }
    r
}

/// Exact test that `p`, known to be collinear with `a` and `b`, lies strictly between them.
pub(crate) fn strictly_between(a: Point, b: Point, p: Point) -> bool {
    if a.x != b.x {
        (a.x < p.x && p.x < b.x) || (b.x < p.x && p.x < a.x)
    } else {
        (a.y < p.y && p.y < b.y) || (b.y < p.y && p.y < a.y)
    }
}

/// Signed area of a polygon (positive when counterclockwise).
pub(crate) fn polygon_area(poly: &[Point]) -> f64 {
    let n = poly.len();
    let mut s = 0.0;
    for i in 0..n {
        let p = poly[i];
        let q = poly[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    0.5 * s
}

pub(crate) fn polygon_centroid(poly: &[Point]) -> Point {
    let n = poly.len();
    let mut a = 0.0;
    let (mut cx, mut cy) = (0.0, 0.0);
    for i in 0..n {
        let p = poly[i];
        let q = poly[(i + 1) % n];
        let cross = p.x * q.y - q.x * p.y;
        a += cross;
        cx += (p.x + q.x) * cross;
        cy += (p.y + q.y) * cross;
    }
    if a.abs() < f64::MIN_POSITIVE {
        let sx: f64 = poly.iter().map(|p| p.x).sum();
        let sy: f64 = poly.iter().map(|p| p.y).sum();
        return Point::new(sx / n as f64, sy / n as f64);
    }
    Point::new(cx / (3.0 * a), cy / (3.0 * a))
}

pub(crate) fn segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return p.dist(&a);
    }
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    p.dist(&Point::new(a.x + t * dx, a.y + t * dy))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(p(0., 0.), p(1., 0.), p(0., 1.)), Sign::Positive);
        assert_eq!(orient(p(0., 0.), p(1., 0.), p(2., 0.)), Sign::Zero);
        assert_eq!(orient(p(0., 0.), p(1., 0.), p(0., -1.)), Sign::Negative);
    }

    #[test]
    fn orient_is_exact_near_degeneracy() {
        // Classic failure case for naive evaluation: points nearly on y = x.
        let a = p(0.5, 0.5);
        let b = p(12.0, 12.0);
        let c = p(24.0, 24.0);
        assert_eq!(orient(a, b, c), Sign::Zero);
        let c2 = p(24.0, 24.0 + f64::EPSILON * 16.0);
        assert_eq!(orient(a, b, c2), Sign::Positive);
    }

    #[test]
    fn in_circle_examples() {
        let (a, b, c) = (p(0., 0.), p(2., 0.), p(0., 2.));
        assert_eq!(in_circle(a, b, c, p(0.5, 0.5)).unwrap(), Sign::Positive);
        assert_eq!(in_circle(a, b, c, p(2., 2.)).unwrap(), Sign::Zero);
        assert_eq!(in_circle(a, b, c, p(5., 5.)).unwrap(), Sign::Negative);
    }

    #[test]
    fn in_circle_rejects_clockwise_triple() {
        let (a, b, c) = (p(0., 0.), p(0., 2.), p(2., 0.));
        assert_eq!(in_circle(a, b, c, p(0.5, 0.5)), Err(Error::NotCounterclockwise));
    }

    #[test]
    fn circumcircle_examples() {
        let c = circumcircle(p(0., 0.), p(2., 0.), p(0., 2.)).unwrap();
        assert!((c.center.x - 1.0).abs() < 1e-12 && (c.center.y - 1.0).abs() < 1e-12);
        assert!((c.radius - 2f64.sqrt()).abs() < 1e-12);

        // Perpendicular bisectors x = 2 and x + y = 2 meet at (2, 0).
        let c = circumcircle(p(0., 0.), p(4., 0.), p(2., 2.)).unwrap();
        assert!((c.center.x - 2.0).abs() < 1e-12 && c.center.y.abs() < 1e-12);
        assert!((c.radius - 2.0).abs() < 1e-12);

        assert_eq!(
            circumcircle(p(0., 0.), p(1., 0.), p(2., 0.)),
            Err(Error::DegenerateTriple)
        );
    }

    #[test]
    fn point_vs_circle_examples() {
        let c = Circle::new(p(0., 0.), 1.0);
        assert_eq!(point_vs_circle(&c, p(0., 0.), 1e-9), Sign::Positive);
        assert_eq!(point_vs_circle(&c, p(1., 0.), 1e-9), Sign::Zero);
        assert_eq!(point_vs_circle(&c, p(3., 0.), 1e-9), Sign::Negative);
    }

    #[test]
    fn angles_normalize_into_range() {
        let tau = std::f64::consts::TAU;
        for a in [-7.0, -tau, -0.0, 0.0, 1.0, tau, 13.0] {
            let r = normalize_angle(a);
            assert!((0.0..tau).contains(&r), "{a} -> {r}");
        }
    }
}
