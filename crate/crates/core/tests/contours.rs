use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strata_core::oracle::{nested_triangle_gadget, sampled_level_field, uniform_points, GridSpec};
use strata_core::{
    boundary_circles, circumcircle, delaunay, delaunay_depths, depth_contours, layers, level_set_of, orient,
    query_depth_in, Circle, Classification, ContourShape, Point, PointSet, Sign,
};

#[test]
fn classify_matches_insertion_on_random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = 0;
    let mut total = 0;
    for set in 0..40 {
        let n = rng.gen_range(20..=200);
        let s = uniform_points(n, 1000 + set).unwrap();
        let t = delaunay(&s).unwrap();
        let d = delaunay_depths(&t);
        let ls = depth_contours(&t, &d).unwrap();
        for _ in 0..1000 {
            let p = Point::new(rng.gen(), rng.gen());
            if ls.boundary_distance(p) < 1e-6 {
                continue;
            }
            total += 1;
            let want = query_depth_in(&t, p).unwrap();
            let got = ls.classify(p);
            if got != Classification::Level(want) {
                bad += 1;
                if bad < 10 {
                    eprintln!(
                        "set {set} n {n} f {} contours {} p {:?}: want {want} got {got:?}",
                        d.set_depth,
                        ls.contours.len(),
                        p
                    );
                }
            }
        }
    }
    eprintln!("{bad} / {total}");
    assert_eq!(bad, 0);
}

fn random_sets(count: u64, seed: u64) -> Vec<PointSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| uniform_points(rng.gen_range(20..=200), seed * 1000 + i).unwrap())
        .collect()
}

/// Lev_j membership straight from the circumdisks grouped by minimum depth:
/// a hull point is deeper than j exactly when it avoids every disk of minimum
/// depth below j.
#[test]
fn set_difference_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for s in random_sets(12, 31) {
        let t = delaunay(&s).unwrap();
        let d = delaunay_depths(&t);
        let ls = depth_contours(&t, &d).unwrap();
        let pts = t.points();
        let disks: Vec<(u32, Circle)> = t
            .triangles()
            .iter()
            .map(|tri| {
                let m = tri.iter().map(|&v| d.depth[v]).min().unwrap();
                (m, circumcircle(pts[tri[0]], pts[tri[1]], pts[tri[2]]).unwrap())
            })
            .collect();
        let hull: Vec<Point> = t.hull().iter().map(|&v| pts[v]).collect();
        for _ in 0..300 {
            let p = Point::new(rng.gen(), rng.gen());
            if ls.boundary_distance(p) < 1e-6 || disks.iter().any(|(_, c)| (c.center.dist(&p) - c.radius).abs() < 1e-9)
            {
                continue;
            }
            let inside_hull = (0..hull.len()).all(|i| orient(hull[i], hull[(i + 1) % hull.len()], p) == Sign::Positive);
            let level = if !inside_hull {
                1
            } else {
                let shallowest = disks.iter().filter(|(_, c)| c.contains(p)).map(|&(m, _)| m).min();
                shallowest.map_or(d.set_depth + 1, |m| m + 1)
            };
            assert_eq!(ls.classify(p), Classification::Level(level), "{p:?}");
        }
    }
}

#[test]
fn level_field_agrees_off_boundary() {
    for s in random_sets(6, 17) {
        let ls = level_set_of(&s).unwrap();
        let grid = GridSpec {
            nx: 40,
            ny: 40,
            margin: 0.05,
        };
        let field = sampled_level_field(&s, grid).unwrap();
        for (row, &y) in field.ys.iter().enumerate() {
            for (col, &x) in field.xs.iter().enumerate() {
                let p = Point::new(x, y);
                if ls.boundary_distance(p) < 1e-6 {
                    continue;
                }
                assert_eq!(ls.classify(p), Classification::Level(field.levels[row][col]));
            }
        }
    }
}

#[test]
fn contours_nest_and_arcs_sit_on_boundary_circles() {
    for s in random_sets(20, 23) {
        let t = delaunay(&s).unwrap();
        let d = delaunay_depths(&t);
        let ls = depth_contours(&t, &d).unwrap();
        let l = layers(&t, &d);
        let levels = ls.level_count();
        assert!(levels == l.len() || levels == l.len() + 1);
        for w in ls.contours.windows(2) {
            assert_eq!(w[1].level, w[0].level + 1);
            for c in w[1].curves() {
                assert!(c.signed_area() < 0.0);
                for a in &c.arcs {
                    let mut ds = a.circle.defining_triple.unwrap().map(|v| d.depth[v]);
                    ds.sort_unstable();
                    let j = w[1].level;
                    assert_eq!(ds, [j - 1, j, j]);
                }
                // Every point on the inner curve is inside the outer contour.
                for q in c.polygon(8) {
                    let outer = match &w[0].shape {
                        ContourShape::Polygon { points, .. } => (0..points.len())
                            .all(|i| orient(points[i], points[(i + 1) % points.len()], q) != Sign::Negative),
                        ContourShape::Curves { curves } => curves.iter().any(|o| o.contains(q) || o.distance(q) < 1e-9),
                    };
                    assert!(outer, "level {} point {q:?}", w[1].level);
                }
            }
        }
    }
}

#[test]
fn worked_examples() {
    let square = PointSet::from_xy(&[(0., 0.), (4., 0.), (4., 4.), (0., 4.), (2., 2.)]).unwrap();
    let ls = level_set_of(&square).unwrap();
    assert_eq!(ls.contours.len(), 1);
    let t = delaunay(&square).unwrap();
    assert!(boundary_circles(&t, &delaunay_depths(&t), 2).unwrap().is_empty());

    let pentagon = PointSet::from_xy(&[(0., 0.), (2., 0.), (3., 1.5), (1., 3.), (-1., 1.5)]).unwrap();
    assert_eq!(level_set_of(&pentagon).unwrap().contours.len(), 1);

    let (gadget, _) = nested_triangle_gadget(10).unwrap();
    let ls = level_set_of(&gadget).unwrap();
    let levels: Vec<u32> = ls.contours.iter().map(|c| c.level).collect();
    assert_eq!(levels, (1..=10).collect::<Vec<_>>());
    assert_eq!(ls.medians().len(), 1);
}
