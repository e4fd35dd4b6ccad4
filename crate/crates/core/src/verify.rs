//! Invariant and oracle-agreement checks on one point set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::contours::{depth_contours, Classification, ContourShape, LevelSet};
use crate::depth::{component_count, cycle_contains, delaunay_depths, layers, DepthLabels, Layer};
use crate::error::Result;
use crate::geom::Point;
use crate::oracle::{naive_delaunay, shortest_path_depths};
use crate::query::query_depth_in;
use crate::triangulation::{delaunay, PointSet, Triangulation};

/// Largest set for which the brute-force oracles are run.
pub const NAIVE_DT_LIMIT: usize = 60;
pub const SHORTEST_PATH_LIMIT: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, violations: usize, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed: violations == 0,
            detail,
        }
    }
}

/// Runs every check; `samples` random points test the contours against insertion.
pub fn verify_set(s: &PointSet, samples: usize, seed: u64) -> Result<Vec<Check>> {
    let t = delaunay(s)?;
    let d = delaunay_depths(&t);
    let l = layers(&t, &d);
    let ls = depth_contours(&t, &d)?;
    let mut out = vec![check_delaunay(&t)];
    if s.len() <= SHORTEST_PATH_LIMIT {
        let sp = shortest_path_depths(&t);
        let bad = sp.iter().zip(&d.depth).filter(|(a, b)| a != b).count();
        out.push(Check::new(
            "depth-shortest-path",
            bad,
            format!("{bad} of {} labels differ", s.len()),
        ));
    }
    out.push(check_contour_samples(&t, &ls, samples, seed)?);
    out.push(check_nesting(&ls));
    let levels = ls.level_count();
    let f = d.set_depth as usize;
    let bad = usize::from(levels != f && levels != f + 1);
    out.push(Check::new("level-count", bad, format!("{levels} levels, {f} layers")));
    out.push(check_cycle_interiors(s.points(), &d, &l));
    out.push(check_cycle_containment(s.points(), &d, &l));
    let comps = component_count(&l);
    let bound = (s.len() + 2 - f) / 2;
    out.push(Check::new(
        "component-bound",
        usize::from(comps > bound),
        format!("{comps} components, bound {bound}"),
    ));
    Ok(out)
}

fn check_delaunay(t: &Triangulation) -> Check {
    let bad = t.non_delaunay_edges().len();
    if bad > 0 || t.len() > NAIVE_DT_LIMIT {
        return Check::new("delaunay", bad, format!("{bad} locally non-Delaunay edges"));
    }
    match naive_delaunay(t.point_set()) {
        Ok(n) => {
            let same = n.edges() == t.edges();
            Check::new(
                "delaunay",
                usize::from(!same),
                format!(
                    "edge sets {}",
                    if same {
                        "match the naive oracle"
                    } else {
                        "differ from the naive oracle"
                    }
                ),
            )
        }
        Err(e) => Check::new("delaunay", 0, format!("locally Delaunay; naive oracle undefined ({e})")),
    }
}

fn check_contour_samples(t: &Triangulation, ls: &LevelSet, samples: usize, seed: u64) -> Result<Check> {
    let (lo, hi) = t.point_set().bounding_box();
    let near = 1e-6 * (1.0 + (hi.x - lo.x).max(hi.y - lo.y));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut bad, mut kept) = (0, 0);
    for _ in 0..samples {
        let p = Point::new(rng.gen_range(lo.x..=hi.x), rng.gen_range(lo.y..=hi.y));
        if ls.boundary_distance(p) < near {
            continue;
        }
        kept += 1;
        if ls.classify(p) != Classification::Level(query_depth_in(t, p)?) {
            bad += 1;
        }
    }
    Ok(Check::new(
        "contours-vs-insertion",
        bad,
        format!("{bad} of {kept} samples disagree"),
    ))
}

/// Each curve of contour `j + 1` lies inside a curve of contour `j`.
fn check_nesting(ls: &LevelSet) -> Check {
    let mut bad = 0;
    for w in ls.contours.windows(2) {
        let ContourShape::Curves { curves } = &w[1].shape else {
            continue;
        };
        for c in curves {
            let p = c.interior_probe();
            let inside = match &w[0].shape {
                ContourShape::Polygon { points, .. } => crate::contours::polygon_contains(points, p),
                ContourShape::Curves { curves } => curves.iter().any(|o| o.contains(p)),
            };
            bad += usize::from(!inside);
        }
    }
    Check::new("nesting", bad, format!("{bad} curves outside their parent contour"))
}

/// Points strictly inside a cycle of layer `i` are deeper than `i`.
fn check_cycle_interiors(pts: &[Point], d: &DepthLabels, l: &[Layer]) -> Check {
    let mut bad = 0;
    for layer in l {
        for cycle in layer.all_cycles() {
            bad += (0..pts.len())
                .filter(|&v| d.depth[v] <= layer.index && cycle_contains(pts, cycle, pts[v]))
                .count();
        }
    }
    Check::new(
        "cycle-interiors",
        bad,
        format!("{bad} shallow points inside layer cycles"),
    )
}

/// Every point of depth `j + 1` lies inside a cycle of layer `j`.
fn check_cycle_containment(pts: &[Point], d: &DepthLabels, l: &[Layer]) -> Check {
    let bad = (0..pts.len())
        .filter(|&v| {
            let j = d.depth[v];
            j > 1 && !l[j as usize - 2].all_cycles().any(|c| cycle_contains(pts, c, pts[v]))
        })
        .count();
    Check::new(
        "cycle-containment",
        bad,
        format!("{bad} points outside every cycle of the layer above"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::uniform_points;

    #[test]
    fn random_set_passes() {
        let s = uniform_points(80, 3).unwrap();
        let checks = verify_set(&s, 300, 1).unwrap();
        assert_eq!(checks.len(), 8);
        for c in &checks {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn small_set_uses_naive_oracle() {
        let s = PointSet::from_xy(&[(0., 0.), (4., 0.), (4., 4.), (0., 4.), (2., 1.)]).unwrap();
        let checks = verify_set(&s, 50, 0).unwrap();
        assert!(checks[0].detail.contains("naive"));
        assert!(checks.iter().all(|c| c.passed));
    }
}
