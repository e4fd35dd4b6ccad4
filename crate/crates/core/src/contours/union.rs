//! Boundary of a union of disks, and its holes.
//!
//! Quadratic in the number of overlapping pairs: each circle collects the
//! angular intervals covered by its neighbors, the uncovered gaps become arcs,
//! and arcs are chained end to start into closed curves. Curves enclosing a
//! bounded region of the complement are the holes.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};

use super::{Arc, Curve};
use crate::geom::{normalize_angle, Circle, Point};

/// Angular interval of a circle covered by another disk, counterclockwise
/// from `s` over `len` radians, with the exact endpoint positions.
#[derive(Debug, Clone, Copy)]
struct Cover {
    s: f64,
    len: f64,
    ps: Point,
    pe: Point,
}

#[derive(Debug, Clone, Copy)]
struct RawArc {
    circle: usize,
    s: f64,
    e: f64,
    ps: Point,
    pe: Point,
}

/// Scale-aware tolerance of decisions on one circle.
fn tolerance(c: &Circle) -> f64 {
    1e-9 * (1.0 + c.center.x.abs() + c.center.y.abs() + c.radius)
}

/// Pairs of disks whose bounding boxes overlap, found by a sweep over x.
fn candidate_pairs(disks: &[Circle], tol: f64) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..disks.len()).collect();
    let left = |i: usize| disks[i].center.x - disks[i].radius;
    order.sort_by(|&a, &b| left(a).total_cmp(&left(b)));
    let mut pairs = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        let ci = disks[i];
        let right = ci.center.x + ci.radius + tol;
        for &j in &order[k + 1..] {
            if left(j) > right {
                break;
            }
            let cj = disks[j];
            if (ci.center.y - cj.center.y).abs() <= ci.radius + cj.radius + tol {
                pairs.push((i.min(j), i.max(j)));
            }
        }
    }
    pairs
}

fn shared_vertices(a: &Circle, b: &Circle) -> Vec<usize> {
    match (a.defining_triple, b.defining_triple) {
        (Some(x), Some(y)) => x.iter().copied().filter(|v| y.contains(v)).collect(),
        _ => Vec::new(),
    }
}

/// Holes of the union of `disks`: the closed boundaries of the bounded
/// components of the complement. Arcs run counterclockwise on their circles,
/// so each hole lies to the right of its curve.
pub fn union_hole_boundary(disks: &[Circle]) -> Vec<Curve> {
    union_hole_boundary_with(disks, &[])
}

/// As [`union_hole_boundary`], with `points` resolving the circles' defining
/// triples: crossings of circles through a common point are placed on it exactly.
pub(crate) fn union_hole_boundary_with(disks: &[Circle], points: &[Point]) -> Vec<Curve> {
    if disks.is_empty() {
        return Vec::new();
    }
    let slack = disks.iter().map(tolerance).fold(0.0, f64::max);
    let pairs = candidate_pairs(disks, slack);

    // Drop repeated and covered disks; they contribute no boundary.
    let mut gone = vec![false; disks.len()];
    for &(i, j) in &pairs {
        let (a, b) = (&disks[i], &disks[j]);
        let tol = tolerance(a).max(tolerance(b));
        let d = a.center.dist(&b.center);
        if d <= tol && (a.radius - b.radius).abs() <= tol {
            gone[j] = true;
        } else if d + a.radius <= b.radius + tol {
            gone[i] = true;
        } else if d + b.radius <= a.radius + tol {
            gone[j] = true;
        }
    }

    let mut covers: Vec<Vec<Cover>> = vec![Vec::new(); disks.len()];
    for &(i, j) in &pairs {
        if gone[i] || gone[j] {
            continue;
        }
        let (a, b) = (&disks[i], &disks[j]);
        let tol = tolerance(a).max(tolerance(b));
        let d = a.center.dist(&b.center);
        if d >= a.radius + b.radius - tol {
            continue;
        }
        let Some((lo, hi)) = crossing(a, b, d, points) else {
            continue;
        };
        // On circle i the covered arc runs lo -> hi, on circle j hi -> lo.
        let ai = (b.center.y - a.center.y).atan2(b.center.x - a.center.x);
        let (lo, hi) = orient_pair(a, ai, lo, hi);
        covers[i].push(cover(a, lo, hi));
        covers[j].push(cover(b, hi, lo));
    }

    let mut arcs: Vec<RawArc> = Vec::new();
    for (i, c) in disks.iter().enumerate() {
        if gone[i] {
            continue;
        }
        gaps(i, c, &covers[i], &mut arcs);
    }

    let curves = stitch(disks, &arcs);
    let mut holes = Vec::new();
    for curve in curves {
        if curve.signed_area() >= 0.0 {
            continue;
        }
        let probe = curve.interior_probe();
        if disks
            .iter()
            .zip(&gone)
            .all(|(c, &g)| g || c.center.dist(&probe) >= c.radius)
        {
            holes.push(curve);
        }
    }
    holes
}

/// The two intersection points of properly crossing circles, unordered.
fn crossing(a: &Circle, b: &Circle, d: f64, points: &[Point]) -> Option<(Point, Point)> {
    let shared = if points.is_empty() {
        Vec::new()
    } else {
        shared_vertices(a, b)
    };
    let ex = (b.center.x - a.center.x) / d;
    let ey = (b.center.y - a.center.y) / d;
    match shared.as_slice() {
        [u, v, ..] => Some((points[*u], points[*v])),
        [u] => {
            // The second crossing mirrors the first across the line of centers.
            let u = points[*u];
            let (rx, ry) = (u.x - a.center.x, u.y - a.center.y);
            let along = rx * ex + ry * ey;
            let mirror = Point::new(a.center.x + 2.0 * along * ex - rx, a.center.y + 2.0 * along * ey - ry);
            Some((u, mirror))
        }
        _ => {
            let x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
            let h2 = a.radius * a.radius - x * x;
            if h2 <= 0.0 {
                return None;
            }
            let h = h2.sqrt();
            let base = Point::new(a.center.x + x * ex, a.center.y + x * ey);
            Some((
                Point::new(base.x + h * ey, base.y - h * ex),
                Point::new(base.x - h * ey, base.y + h * ex),
            ))
        }
    }
}

/// Orders the crossing points so that the counterclockwise arc of `a` from the
/// first to the second passes through direction `toward`.
fn orient_pair(a: &Circle, toward: f64, p: Point, q: Point) -> (Point, Point) {
    let sp = a.angle_of(p);
    let sq = a.angle_of(q);
    if normalize_angle(toward - sp) < normalize_angle(sq - sp) {
        (p, q)
    } else {
        (q, p)
    }
}

fn cover(c: &Circle, from: Point, to: Point) -> Cover {
    let s = c.angle_of(from);
    let e = c.angle_of(to);
    Cover {
        s,
        len: normalize_angle(e - s),
        ps: from,
        pe: to,
    }
}

/// Uncovered arcs of circle `i`, appended to `out`.
fn gaps(i: usize, c: &Circle, covers: &[Cover], out: &mut Vec<RawArc>) {
    if covers.is_empty() {
        let p = c.point_at(0.0);
        out.push(RawArc {
            circle: i,
            s: 0.0,
            e: 0.0,
            ps: p,
            pe: p,
        });
        return;
    }
    let ang_tol = tolerance(c) / c.radius.max(f64::MIN_POSITIVE);
    let inside = |theta: f64, k: usize| {
        covers.iter().enumerate().any(|(l, cv)| {
            l != k && {
                let off = normalize_angle(theta - cv.s);
                off > ang_tol && off < cv.len - ang_tol
            }
        })
    };
    if covers.iter().any(|cv| cv.len >= TAU - ang_tol) {
        return;
    }
    let mut found: Vec<RawArc> = Vec::new();
    for (k, cv) in covers.iter().enumerate() {
        let end = normalize_angle(cv.s + cv.len);
        if inside(end, k) {
            continue;
        }
        // The gap runs to the nearest interval start counterclockwise.
        let (span, n) = covers
            .iter()
            .map(|n| {
                let off = normalize_angle(n.s - end);
                (if off > TAU - ang_tol { 0.0 } else { off }, n)
            })
            .min_by(|a, b| a.0.total_cmp(&b.0))
            .expect("nonempty covers");
        if span <= ang_tol {
            continue;
        }
        if found
            .iter()
            .any(|g| normalize_angle(g.s - end).min(normalize_angle(end - g.s)) <= ang_tol)
        {
            continue;
        }
        found.push(RawArc {
            circle: i,
            s: end,
            e: n.s,
            ps: cv.pe,
            pe: n.ps,
        });
    }
    out.extend(found);
}

/// Direction of travel along a counterclockwise arc at angle `theta`.
fn tangent(theta: f64) -> f64 {
    normalize_angle(theta + PI / 2.0)
}

fn stitch(disks: &[Circle], arcs: &[RawArc]) -> Vec<Curve> {
    // Matching endpoints are mostly the same crossing point; the cell only
    // absorbs rounding at the scale of the coordinates.
    let scale = arcs.iter().map(|a| a.pe.x.abs() + a.pe.y.abs()).fold(0.0, f64::max);
    let cell = 16e-9 * (1.0 + scale);
    let key = |p: Point| ((p.x / cell).floor() as i64, (p.y / cell).floor() as i64);
    let mut starts: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (k, a) in arcs.iter().enumerate() {
        starts.entry(key(a.ps)).or_default().push(k);
    }
    let mut used = vec![false; arcs.len()];
    let mut curves = Vec::new();
    for first in 0..arcs.len() {
        if used[first] {
            continue;
        }
        let mut chain = vec![first];
        used[first] = true;
        let mut cur = first;
        let mut closed = true;
        loop {
            let a = arcs[cur];
            if a.s == a.e && a.ps == a.pe {
                break;
            }
            let (kx, ky) = key(a.pe);
            let mut best: Option<(f64, usize)> = None;
            let back = normalize_angle(tangent(a.e) + PI);
            for dx in -1..=1 {
                for dy in -1..=1 {
                    let Some(list) = starts.get(&(kx + dx, ky + dy)) else {
                        continue;
                    };
                    for &k in list {
                        if arcs[k].ps.dist(&a.pe) > cell {
                            continue;
                        }
                        if used[k] && k != first {
                            continue;
                        }
                        let out = tangent(arcs[k].s);
                        let mut turn = normalize_angle(out - back);
                        if turn == 0.0 {
                            turn = TAU;
                        }
                        if best.is_none_or(|(t, _)| turn < t) {
                            best = Some((turn, k));
                        }
                    }
                }
            }
            match best {
                Some((_, k)) if k == first => break,
                Some((_, k)) => {
                    used[k] = true;
                    chain.push(k);
                    cur = k;
                }
                // Rounding near nearly coincident circles can leave a chain
                // open; it bounds nothing and is dropped.
                None => {
                    closed = false;
                    break;
                }
            }
        }
        if !closed {
            continue;
        }
        curves.push(Curve {
            arcs: chain
                .iter()
                .map(|&k| {
                    let a = arcs[k];
                    Arc {
                        circle: disks[a.circle],
                        start_angle: a.s,
                        end_angle: a.e,
                        ccw: true,
                    }
                })
                .collect(),
        });
    }
    curves
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk(x: f64, y: f64, r: f64) -> Circle {
        Circle::new(Point::new(x, y), r)
    }

    #[test]
    fn single_and_overlapping_disks_have_no_hole() {
        assert!(union_hole_boundary(&[disk(0., 0., 1.)]).is_empty());
        let two = [disk(0., 0., 1.), disk(1., 0., 1.)];
        assert!(union_hole_boundary(&two).is_empty());
        let nested = [disk(0., 0., 2.), disk(0.5, 0., 1.)];
        assert!(union_hole_boundary(&nested).is_empty());
    }

    #[test]
    fn three_disks_cover_their_triangle_when_radius_exceeds_circumradius() {
        // Circumradius of the centers is 2/sqrt(3) ~ 1.1547.
        let disks = [disk(0., 0., 1.2), disk(2., 0., 1.2), disk(1., 1.732, 1.2)];
        assert!(union_hole_boundary(&disks).is_empty());
    }

    #[test]
    fn three_disks_enclose_a_curvilinear_triangle() {
        let disks = [disk(0., 0., 1.1), disk(2., 0., 1.1), disk(1., 1.732, 1.1)];
        let holes = union_hole_boundary(&disks);
        assert_eq!(holes.len(), 1);
        let h = &holes[0];
        assert_eq!(h.arcs.len(), 3);
        assert!(h.signed_area() < 0.0);
        let centroid = Point::new(1.0, 1.732 / 3.0);
        assert!(h.contains(centroid));
        assert!(!h.contains(Point::new(0., 0.)));
        // Each arc starts where the previous one ends.
        for k in 0..3 {
            let a = &h.arcs[k];
            let b = &h.arcs[(k + 1) % 3];
            assert!(a.end_point().dist(&b.start_point()) < 1e-9);
        }
    }

    #[test]
    fn ring_of_disks_has_one_hole() {
        let disks: Vec<Circle> = (0..12)
            .map(|k| {
                let t = k as f64 * TAU / 12.0;
                disk(5.0 * t.cos(), 5.0 * t.sin(), 1.6)
            })
            .collect();
        let holes = union_hole_boundary(&disks);
        assert_eq!(holes.len(), 1);
        assert_eq!(holes[0].arcs.len(), 12);
        assert!(holes[0].contains(Point::new(0., 0.)));
        assert!(!holes[0].contains(Point::new(5., 0.)));
        assert!(!holes[0].contains(Point::new(9., 0.)));
    }

    #[test]
    fn duplicate_disks_are_merged() {
        let disks = [
            disk(0., 0., 1.1),
            disk(2., 0., 1.1),
            disk(2., 0., 1.1),
            disk(1., 1.732, 1.1),
        ];
        let holes = union_hole_boundary(&disks);
        assert_eq!(holes.len(), 1);
        assert_eq!(holes[0].arcs.len(), 3);
    }
}
