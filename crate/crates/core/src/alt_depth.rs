//! Convex (onion peeling) depth and location (Tukey) depth.

use serde::{Deserialize, Serialize};

use crate::depth::angular_cmp;
use crate::geom::{orient, Point, Sign};
use crate::triangulation::{hull_of, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexDepthLabels {
    pub depth: Vec<u32>,
    /// Strict hull of each peeling round, counterclockwise, outermost first.
    pub layers: Vec<Vec<usize>>,
}

/// Peels the hull repeatedly. Every point on the hull boundary, including
/// points interior to a hull edge, leaves in the same round.
pub fn convex_depths(s: &PointSet) -> ConvexDepthLabels {
    let pts = s.points();
    let mut depth = vec![0u32; s.len()];
    let mut layers = Vec::new();
    let mut remaining: Vec<usize> = (0..s.len()).collect();
    let mut round = 0;
    while !remaining.is_empty() {
        round += 1;
        let peel = hull_of(pts, &remaining, true);
        for &v in &peel {
            depth[v] = round;
        }
        layers.push(hull_of(pts, &remaining, false));
        remaining.retain(|&v| depth[v] == 0);
    }
    ConvexDepthLabels { depth, layers }
}

/// Location depth with its witness half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TukeyDepth {
    pub depth: u32,
    /// Unit normal `u` such that the open half-plane `{x : u·(x - p) > 0}`
    /// holds exactly `depth - 1` points.
    pub witness: (f64, f64),
}

/// One plus the fewest points strictly on one side of a line through `p`.
/// Points on the line (including a copy of `p`) count on neither side.
///
/// Angular sort around `p` followed by a rotating sweep, O(n log n).
pub fn tukey_depth(s: &PointSet, p: Point) -> TukeyDepth {
    let mut others: Vec<Point> = s.points().iter().copied().filter(|&q| q != p).collect();
    if others.is_empty() {
        return TukeyDepth {
            depth: 1,
            witness: (1.0, 0.0),
        };
    }
    others.sort_by(|a, b| angular_cmp(p, *a, *b));
    // Group points that share a direction from p.
    let mut reps: Vec<Point> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for q in others {
        match reps.last() {
            Some(&r) if angular_cmp(p, r, q).is_eq() => *counts.last_mut().unwrap() += 1,
            _ => {
                reps.push(q);
                counts.push(1);
            }
        }
    }
    let m = reps.len();
    let total: usize = counts.iter().sum();
    let mut prefix = vec![0usize; 2 * m + 1];
    for i in 0..2 * m {
        prefix[i + 1] = prefix[i] + counts[i % m];
    }
    let mut best = (usize::MAX, (1.0, 0.0));
    let mut end = 0;
    for g in 0..m {
        end = end.max(g + 1);
        while end < g + m && orient(p, reps[g], reps[end % m]) == Sign::Positive {
            end += 1;
        }
        let left = prefix[end] - prefix[g + 1];
        let opposite = if end < g + m && orient(p, reps[g], reps[end % m]) == Sign::Zero {
            counts[end % m]
        } else {
            0
        };
        let right = total - left - counts[g] - opposite;
        let (ux, uy) = (reps[g].x - p.x, reps[g].y - p.y);
        let len = ux.hypot(uy);
        let normal = (-uy / len, ux / len);
        if left < best.0 {
            best = (left, normal);
        }
        if right < best.0 {
            best = (right, (-normal.0, -normal.1));
        }
    }
    TukeyDepth {
        depth: best.0 as u32 + 1,
        witness: best.1,
    }
}
