//! Brute-force references and the extremal point configurations.
//!
//! Everything here favors being obviously correct over being fast.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{in_circle_unchecked, orient, Point, Sign};
use crate::query::query_depth_in;
use crate::triangulation::{delaunay, PointSet, Triangulation};

/// Delaunay triangulation straight from the empty-circle definition, O(n⁴).
/// Undefined (and reported as an error) when four points are cocircular on an
/// empty circle.
pub fn naive_delaunay(s: &PointSet) -> Result<Triangulation> {
    let n = s.len();
    if n < 3 {
        return Err(Error::TooFewPoints(n));
    }
    if s.is_collinear() {
        return Err(Error::Collinear);
    }
    let pts = s.points();
    let mut tris = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let tri = match orient(pts[a], pts[b], pts[c]) {
                    Sign::Positive => [a, b, c],
                    Sign::Negative => [a, c, b],
                    Sign::Zero => continue,
                };
                let [p, q, r] = tri.map(|i| pts[i]);
                let mut empty = true;
                let mut on_circle = None;
                for (d, &x) in pts.iter().enumerate() {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    match in_circle_unchecked(p, q, r, x) {
                        Sign::Positive => empty = false,
                        Sign::Zero => on_circle = Some(d),
                        Sign::Negative => {}
                    }
                }
                // A cocircular point only matters when the circle is otherwise empty.
                if empty {
                    if let Some(d) = on_circle {
                        return Err(Error::Cocircular([a, b, c, d]));
                    }
                    tris.push(tri);
                }
            }
        }
    }
    Ok(Triangulation::from_triangles(s.clone(), &tris))
}

/// True when point `i` lies on the boundary of the hull of `subset`: some line
/// through it leaves no point of the subset strictly on one side.
pub fn on_hull_boundary(pts: &[Point], subset: &[usize], i: usize) -> bool {
    let p = pts[i];
    let others: Vec<Point> = subset.iter().filter(|&&j| j != i).map(|&j| pts[j]).collect();
    strict_side_minimum(p, &others) == 0
}

/// Fewest points strictly on one side over the lines through `p` and each
/// point, plus one line through no point at all.
fn strict_side_minimum(p: Point, others: &[Point]) -> usize {
    let count = |a: Point, b: Point| {
        let mut left = 0;
        let mut right = 0;
        for &q in others {
            match orient(a, b, q) {
                Sign::Positive => left += 1,
                Sign::Negative => right += 1,
                Sign::Zero => {}
            }
        }
        left.min(right)
    };
    let generic = Point::new(p.x + 1.0, p.y + std::f64::consts::SQRT_2);
    let mut best = count(p, generic);
    for &q in others {
        if q != p {
            best = best.min(count(p, q));
        }
    }
    best
}

/// Location depth by enumerating candidate lines, O(n²).
pub fn tukey_depth_brute(s: &PointSet, p: Point) -> u32 {
    let others: Vec<Point> = s.points().iter().copied().filter(|&q| q != p).collect();
    strict_side_minimum(p, &others) as u32 + 1
}

/// Convex depth by recursive peeling with the brute-force boundary test.
pub fn peeling_depths(s: &PointSet) -> Vec<u32> {
    fn peel(pts: &[Point], remaining: &[usize], round: u32, depth: &mut [u32]) {
        if remaining.is_empty() {
            return;
        }
        let (outer, inner): (Vec<usize>, Vec<usize>) =
            remaining.iter().partition(|&&i| on_hull_boundary(pts, remaining, i));
        for &i in &outer {
            depth[i] = round;
        }
        peel(pts, &inner, round + 1, depth);
    }
    let mut depth = vec![0; s.len()];
    let all: Vec<usize> = (0..s.len()).collect();
    peel(s.points(), &all, 1, &mut depth);
    depth
}

/// Delaunay depth from all-pairs shortest paths (Floyd–Warshall) on the
/// triangulation graph, seeded by the brute-force hull boundary.
pub fn shortest_path_depths(t: &Triangulation) -> Vec<u32> {
    let n = t.len();
    let inf = u32::MAX / 4;
    let mut dist = vec![vec![inf; n]; n];
    for (u, row) in dist.iter_mut().enumerate() {
        row[u] = 0;
        for &v in t.neighbors(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = dist[i][k] + dist[k][j];
                if through < dist[i][j] {
                    dist[i][j] = through;
                }
            }
        }
    }
    let all: Vec<usize> = (0..n).collect();
    let hull: Vec<usize> = (0..n).filter(|&i| on_hull_boundary(t.points(), &all, i)).collect();
    (0..n)
        .map(|v| 1 + hull.iter().map(|&h| dist[v][h]).min().unwrap_or(inf))
        .collect()
}

/// Regular sampling grid over the bounding box of a set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub nx: usize,
    pub ny: usize,
    /// Extra room around the bounding box, as a fraction of its larger side.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelField {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    /// `levels[row][col]` is the depth of `(xs[col], ys[row])`.
    pub levels: Vec<Vec<u32>>,
}

impl GridSpec {
    pub fn cells(&self, s: &PointSet) -> (Vec<f64>, Vec<f64>) {
        let (lo, hi) = s.bounding_box();
        let pad = self.margin * (hi.x - lo.x).max(hi.y - lo.y).max(1.0);
        let axis = |a: f64, b: f64, k: usize| -> Vec<f64> {
            let (a, b) = (a - pad, b + pad);
            (0..k).map(|i| a + (b - a) * (i as f64 + 0.5) / k as f64).collect()
        };
        (axis(lo.x, hi.x, self.nx), axis(lo.y, hi.y, self.ny))
    }
}

/// Depth of every grid cell center by insertion into the triangulation.
pub fn sampled_level_field(s: &PointSet, grid: GridSpec) -> Result<LevelField> {
    let (xs, ys) = grid.cells(s);
    let t = if s.len() >= 3 && !s.is_collinear() {
        Some(delaunay(s)?)
    } else {
        None
    };
    let mut levels = Vec::with_capacity(ys.len());
    for &y in &ys {
        let mut row = Vec::with_capacity(xs.len());
        for &x in &xs {
            let p = Point::new(x, y);
            row.push(match &t {
                Some(t) => query_depth_in(t, p)?,
                None => crate::query::query_depth(s, p)?,
            });
        }
        levels.push(row);
    }
    Ok(LevelField { xs, ys, levels })
}

/// One of the extremal configurations, with its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GadgetSpec {
    ElementUniqueness { values: Vec<f64> },
    NestedTriangle { k: usize },
    ComponentExtremal { k: usize },
}

impl GadgetSpec {
    /// The point set, and the query point that goes with it when there is one.
    pub fn build(&self) -> Result<(PointSet, Option<Point>)> {
        match self {
            GadgetSpec::ElementUniqueness { values } => {
                Ok((element_uniqueness_gadget(values)?, Some(Point::new(0.0, 0.0))))
            }
            GadgetSpec::NestedTriangle { k } => {
                let (s, p) = nested_triangle_gadget(*k)?;
                Ok((s, Some(p)))
            }
            GadgetSpec::ComponentExtremal { k } => Ok((component_extremal_gadget(*k)?, None)),
        }
    }
}

/// Cross of points `(±x, 0)`, `(0, ±x)` for every distinct value `x`. The
/// origin then has depth (number of distinct values) + 1.
pub fn element_uniqueness_gadget(values: &[f64]) -> Result<PointSet> {
    let mut distinct: Vec<f64> = Vec::new();
    for &x in values {
        if !(x.is_finite() && x > 0.0) {
            return Err(Error::Domain(x));
        }
        if !distinct.contains(&x) {
            distinct.push(x);
        }
    }
    let pts = distinct
        .iter()
        .flat_map(|&x| [(x, 0.0), (-x, 0.0), (0.0, x), (0.0, -x)])
        .map(Point::from)
        .collect();
    PointSet::new(pts)
}

/// Two homothetic equilateral triangles (circumradius 1 and 3/4) with `k`
/// points spaced evenly on each segment joining matching corners, so that
/// the set has depth `k`. The returned point lies outside the hull but inside
/// the inner circumcircle; inserting it makes the set shallow.
pub fn nested_triangle_gadget(k: usize) -> Result<(PointSet, Point)> {
    if k < 2 {
        return Err(Error::Range {
            name: "k",
            value: k,
            min: 2,
        });
    }
    let inner = 0.75;
    let mut pts = Vec::with_capacity(3 * k);
    for m in 0..k {
        let rho = 1.0 - m as f64 * (1.0 - inner) / (k - 1) as f64;
        for deg in [90.0f64, 210.0, 330.0] {
            let a = deg.to_radians();
            pts.push(Point::new(rho * a.cos(), rho * a.sin()));
        }
    }
    Ok((PointSet::new(pts)?, Point::new(0.0, -0.625)))
}

/// `2k + 2` points whose layers have `k + 1` connected components: an apex
/// over a shallow convex chain of `k + 1` points, with one point tucked just
/// above the middle of each chain edge.
pub fn component_extremal_gadget(k: usize) -> Result<PointSet> {
    if k < 1 {
        return Err(Error::Range {
            name: "k",
            value: k,
            min: 1,
        });
    }
    let c = 0.05 / k as f64;
    let lift = 0.05 / k as f64;
    let chain: Vec<Point> = (0..=k)
        .map(|i| {
            let x = i as f64 - k as f64 / 2.0;
            Point::new(x, c * x * x)
        })
        .collect();
    let mut pts = vec![Point::new(0.0, k as f64 + 1.0)];
    pts.extend(&chain);
    for w in chain.windows(2) {
        pts.push(Point::new(0.5 * (w[0].x + w[1].x), 0.5 * (w[0].y + w[1].y) + lift));
    }
    PointSet::new(pts)
}

/// `n` points uniform in the unit square.
pub fn uniform_points(n: usize, seed: u64) -> Result<PointSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = (0..n).map(|_| Point::new(rng.gen(), rng.gen())).collect();
    PointSet::new(pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depth::{component_count, delaunay_depths, layers};

    #[test]
    fn naive_examples() {
        let s = PointSet::from_xy(&[(0., 0.), (4., 0.), (4., 4.), (0., 4.), (2., 2.)]);
        let t = naive_delaunay(&s.unwrap()).unwrap();
        assert_eq!(t.triangles().len(), 4);
        assert_eq!(t.hull(), &[0, 1, 2, 3]);
        let tri = PointSet::from_xy(&[(0., 0.), (2., 0.), (1., 2.)]).unwrap();
        assert_eq!(naive_delaunay(&tri).unwrap().triangles(), &[[0, 1, 2]]);
        let sq = PointSet::from_xy(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]).unwrap();
        assert!(matches!(naive_delaunay(&sq), Err(Error::Cocircular(_))));
    }

    #[test]
    fn element_uniqueness_examples() {
        assert_eq!(element_uniqueness_gadget(&[1., 2., 3.]).unwrap().len(), 12);
        assert_eq!(element_uniqueness_gadget(&[1., 1.]).unwrap().len(), 4);
        assert_eq!(element_uniqueness_gadget(&[1., -2.]), Err(Error::Domain(-2.)));
    }

    #[test]
    fn nested_triangle_set_depth() {
        for k in [2, 4, 10] {
            let (s, _) = nested_triangle_gadget(k).unwrap();
            assert_eq!(s.len(), 3 * k);
            let d = delaunay_depths(&delaunay(&s).unwrap());
            assert_eq!(d.set_depth, k as u32, "k = {k}");
        }
        assert!(matches!(nested_triangle_gadget(1), Err(Error::Range { .. })));
    }

    #[test]
    fn component_gadget_examples() {
        for (k, want) in [(1, 2), (3, 4), (5, 6)] {
            let s = component_extremal_gadget(k).unwrap();
            assert_eq!(s.len(), 2 * k + 2);
            let t = delaunay(&s).unwrap();
            let d = delaunay_depths(&t);
            assert_eq!(component_count(&layers(&t, &d)), want, "k = {k}");
        }
    }

    #[test]
    fn peeling_and_tukey_brute_examples() {
        let s = PointSet::from_xy(&[(0., 0.), (4., 0.), (4., 4.), (0., 4.), (2., 2.)]).unwrap();
        assert_eq!(peeling_depths(&s), vec![1, 1, 1, 1, 2]);
        assert_eq!(tukey_depth_brute(&s, Point::new(2., 2.)), 2);
        assert_eq!(tukey_depth_brute(&s, Point::new(1., 2.)), 2);
    }

    #[test]
    fn level_field_of_square() {
        let s = PointSet::from_xy(&[(0., 0.), (4., 0.), (4., 4.), (0., 4.), (2., 2.)]).unwrap();
        let grid = GridSpec {
            nx: 10,
            ny: 10,
            margin: 0.25,
        };
        let f = sampled_level_field(&s, grid).unwrap();
        for (r, &y) in f.ys.iter().enumerate() {
            for (c, &x) in f.xs.iter().enumerate() {
                let inside = x > 0.0 && x < 4.0 && y > 0.0 && y < 4.0;
                assert_eq!(f.levels[r][c], if inside { 2 } else { 1 });
            }
        }
    }
}
