//! Depth of a query point, and how inserting it changes the depths of the set.

use serde::{Deserialize, Serialize};

use crate::depth::{delaunay_depths, depths_of_set};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::triangulation::{delaunay, insert_point, PointSet, Triangulation};

/// Delaunay depth of `p` with respect to `s`: its depth in DT(S ∪ {p}).
/// A point of `s` gets its own depth.
pub fn query_depth(s: &PointSet, p: Point) -> Result<u32> {
    if !p.is_finite() {
        return Err(Error::NonFinite { index: s.len() });
    }
    if let Some(i) = s.index_of(p) {
        return Ok(depths_of_set(s).1.depth[i]);
    }
    if s.len() < 3 || s.is_collinear() {
        let (_, d) = depths_of_set(&s.with_point(p)?);
        return Ok(d.depth[s.len()]);
    }
    query_depth_in(&delaunay(s)?, p)
}

/// As [`query_depth`], reusing an existing triangulation of the set.
pub fn query_depth_in(t: &Triangulation, p: Point) -> Result<u32> {
    if let Some(i) = t.point_set().index_of(p) {
        return Ok(delaunay_depths(t).depth[i]);
    }
    let t2 = insert_point(t, p)?;
    Ok(delaunay_depths(&t2).depth[t.len()])
}

/// Depths of the points of S before and after inserting a query point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthDelta {
    /// `(old, new)` for every point of S, by index.
    pub point_deltas: Vec<(u32, u32)>,
    pub set_depth_before: u32,
    /// Maximum new depth over the points of S (the query point excluded).
    pub set_depth_after: u32,
    pub query_depth: u32,
}

impl DepthDelta {
    pub fn max_point_change(&self) -> u32 {
        self.point_deltas.iter().map(|&(a, b)| a.abs_diff(b)).max().unwrap_or(0)
    }

    pub fn set_depth_change(&self) -> u32 {
        self.set_depth_before.abs_diff(self.set_depth_after)
    }
}

pub fn depth_change_report(s: &PointSet, p: Point) -> Result<DepthDelta> {
    if !p.is_finite() {
        return Err(Error::NonFinite { index: s.len() });
    }
    let (_, before) = depths_of_set(s);
    if let Some(i) = s.index_of(p) {
        return Ok(DepthDelta {
            point_deltas: before.depth.iter().map(|&d| (d, d)).collect(),
            set_depth_before: before.set_depth,
            set_depth_after: before.set_depth,
            query_depth: before.depth[i],
        });
    }
    let (_, after) = depths_of_set(&s.with_point(p)?);
    let n = s.len();
    Ok(DepthDelta {
        point_deltas: before
            .depth
            .iter()
            .zip(&after.depth[..n])
            .map(|(&a, &b)| (a, b))
            .collect(),
        set_depth_before: before.set_depth,
        set_depth_after: after.depth[..n].iter().copied().max().unwrap_or(1),
        query_depth: after.depth[n],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> PointSet {
        PointSet::from_xy(&[(0., 0.), (4., 0.), (4., 4.), (0., 4.)]).unwrap()
    }

    #[test]
    fn query_examples() {
        assert_eq!(query_depth(&square(), Point::new(10., 10.)).unwrap(), 1);
        assert_eq!(query_depth(&square(), Point::new(2., 1.)).unwrap(), 2);
        assert_eq!(query_depth(&square(), Point::new(4., 4.)).unwrap(), 1);
        assert_eq!(query_depth(&square(), Point::new(2., 0.)).unwrap(), 1);
    }

    #[test]
    fn degenerate_sets() {
        let line = PointSet::from_xy(&[(0., 0.), (1., 1.), (2., 2.)]).unwrap();
        assert_eq!(query_depth(&line, Point::new(3., 3.)).unwrap(), 1);
        assert_eq!(query_depth(&line, Point::new(1., 0.)).unwrap(), 1);
        let one = PointSet::from_xy(&[(0., 0.)]).unwrap();
        assert_eq!(query_depth(&one, Point::new(1., 0.)).unwrap(), 1);
        // A degenerate set can gain an interior point once p is added.
        let three = PointSet::from_xy(&[(0., 0.), (4., 0.), (8., 0.)]).unwrap();
        assert_eq!(query_depth(&three, Point::new(4., 3.)).unwrap(), 1);
        assert!(query_depth(&three, Point::new(f64::NAN, 0.)).is_err());
    }

    #[test]
    fn far_point_changes_nothing() {
        let s = PointSet::from_xy(&[(0., 0.), (4., 0.), (4., 4.), (0., 4.), (2., 2.)]).unwrap();
        // Far below the square: every corner stays on the hull.
        let r = depth_change_report(&s, Point::new(2., -50.)).unwrap();
        assert_eq!(r.max_point_change(), 0);
        assert_eq!(r.set_depth_before, 2);
        assert_eq!(r.set_depth_after, 2);
        assert_eq!(r.query_depth, 1);

        let tri = PointSet::from_xy(&[(0., 0.), (2., 0.), (1., 2.)]).unwrap();
        let r = depth_change_report(&tri, Point::new(1., 0.5)).unwrap();
        assert_eq!(r.point_deltas, vec![(1, 1); 3]);
        assert_eq!(r.query_depth, 2);
    }
}
