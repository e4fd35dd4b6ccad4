//! Delaunay depth labels and the layer decomposition.

use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::geom::{orient, polygon_area, Point, Sign};
use crate::triangulation::{delaunay, PointSet, Triangulation};

/// Per-vertex Delaunay depth and the depth of the deepest point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthLabels {
    pub depth: Vec<u32>,
    pub set_depth: u32,
}

impl DepthLabels {
    fn from_depths(depth: Vec<u32>) -> Self {
        let set_depth = depth.iter().copied().max().unwrap_or(1);
        DepthLabels { depth, set_depth }
    }

    pub fn len(&self) -> usize {
        self.depth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.depth.is_empty()
    }
}

/// Multi-source BFS from the hull boundary.
///
/// Points lying on a hull edge without being corners are on CH(S) and are
/// seeded with depth 1 as well.
pub fn delaunay_depths(t: &Triangulation) -> DepthLabels {
    let n = t.len();
    let mut depth = vec![0u32; n];
    let mut queue = VecDeque::with_capacity(n);
    for &v in t.boundary() {
        depth[v] = 1;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        for &v in t.neighbors(u) {
            if depth[v] == 0 {
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
        }
    }
    DepthLabels::from_depths(depth)
}

/// Depth labels for any point set; sets without a triangulation (fewer than
/// three points, or all collinear) lie entirely on their hull and get depth 1.
pub fn depths_of_set(s: &PointSet) -> (Option<Triangulation>, DepthLabels) {
    if s.len() < 3 || s.is_collinear() {
        return (None, DepthLabels::from_depths(vec![1; s.len()]));
    }
    let t = delaunay(s).expect("non-degenerate set triangulates");
    let d = delaunay_depths(&t);
    (Some(t), d)
}

/// Subgraph of the triangulation induced by the vertices of one depth.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layer {
    pub index: u32,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<Vec<usize>>,
    /// Bounded-face boundaries of each component, as closed vertex walks
    /// (counterclockwise, first vertex not repeated). Parallel to `components`.
    pub cycles: Vec<Vec<Vec<usize>>>,
}

impl Layer {
    pub fn all_cycles(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.cycles.iter().flatten()
    }

    /// Layer edges joining two vertices of `cycle` that are not consecutive on it.
    pub fn chords(&self, cycle: &[usize]) -> Vec<(usize, usize)> {
        let m = cycle.len();
        let on: std::collections::HashSet<usize> = cycle.iter().copied().collect();
        let mut sides: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
        for i in 0..m {
            let (a, b) = (cycle[i], cycle[(i + 1) % m]);
            sides.insert((a.min(b), a.max(b)));
        }
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| on.contains(&u) && on.contains(&v) && !sides.contains(&(u, v)))
            .collect()
    }
}

pub fn layers(t: &Triangulation, d: &DepthLabels) -> Vec<Layer> {
    let pts = t.points();
    let n = t.len();
    let f = d.set_depth as usize;
    let mut by_level: Vec<Vec<usize>> = vec![Vec::new(); f + 1];
    for v in 0..n {
        by_level[d.depth[v] as usize].push(v);
    }
    let mut comp_id = vec![usize::MAX; n];
    (1..=f)
        .map(|i| {
            let vertices = std::mem::take(&mut by_level[i]);
            let same = |u: usize| {
                t.neighbors(u)
                    .iter()
                    .copied()
                    .filter(move |&v| d.depth[v] == d.depth[u])
            };
            let edges: Vec<(usize, usize)> = vertices
                .iter()
                .flat_map(|&u| same(u).filter(move |&v| u < v).map(move |v| (u, v)))
                .collect();
            let mut components: Vec<Vec<usize>> = Vec::new();
            for &s in &vertices {
                if comp_id[s] != usize::MAX {
                    continue;
                }
                let id = components.len();
                comp_id[s] = id;
                let mut comp = vec![s];
                let mut k = 0;
                while k < comp.len() {
                    let u = comp[k];
                    k += 1;
                    for v in same(u) {
                        if comp_id[v] == usize::MAX {
                            comp_id[v] = id;
                            comp.push(v);
                        }
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
            let cycles = components
                .iter()
                .map(|comp| bounded_faces(pts, comp, |u| same(u).collect()))
                .collect();
            Layer {
                index: i as u32,
                vertices,
                edges,
                components,
                cycles,
            }
        })
        .collect()
}

pub fn component_count(layers: &[Layer]) -> usize {
    layers.iter().map(|l| l.components.len()).sum()
}

/// Exact counterclockwise comparison of directions from `o`.
pub(crate) fn angular_cmp(o: Point, a: Point, b: Point) -> Ordering {
    // The sign of a floating-point difference is exact.
    let half = |p: Point| {
        let (dx, dy) = (p.x - o.x, p.y - o.y);
        if dy > 0.0 || (dy == 0.0 && dx > 0.0) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| match orient(o, a, b) {
        Sign::Positive => Ordering::Less,
        Sign::Negative => Ordering::Greater,
        Sign::Zero => Ordering::Equal,
    })
}

/// Faces of the plane graph on `comp`, minus the outer face.
fn bounded_faces(pts: &[Point], comp: &[usize], nbrs: impl Fn(usize) -> Vec<usize>) -> Vec<Vec<usize>> {
    if comp.len() < 3 {
        return Vec::new();
    }
    let local: std::collections::HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let rot: Vec<Vec<usize>> = comp
        .iter()
        .map(|&v| {
            let mut ns = nbrs(v);
            ns.sort_by(|&a, &b| angular_cmp(pts[v], pts[a], pts[b]));
            ns
        })
        .collect();
    let mut used: Vec<Vec<bool>> = rot.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces: Vec<(f64, Vec<usize>)> = Vec::new();
    for (li, &v0) in comp.iter().enumerate() {
        for k0 in 0..rot[li].len() {
            if used[li][k0] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut ui, mut k) = (v0, li, k0);
            loop {
                used[ui][k] = true;
                walk.push(u);
                let v = rot[ui][k];
                let vi = local[&v];
                // Next dart leaves v toward the neighbor just clockwise of u.
                let back = rot[vi].iter().position(|&x| x == u).unwrap();
                let m = rot[vi].len();
                let nk = (back + m - 1) % m;
                u = v;
                ui = vi;
                k = nk;
                if ui == li && k == k0 {
                    break;
                }
            }
            let poly: Vec<Point> = walk.iter().map(|&v| pts[v]).collect();
            faces.push((polygon_area(&poly), walk));
        }
    }
    let outer = faces
        .iter()
        .enumerate()
        .min_by(|a, b| a.1 .0.partial_cmp(&b.1 .0).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    faces.swap_remove(outer);
    let mut out: Vec<Vec<usize>> = faces.into_iter().map(|(_, w)| w).collect();
    for w in &mut out {
        let pos = w.iter().enumerate().min_by_key(|(_, v)| **v).unwrap().0;
        w.rotate_left(pos);
    }
    out.sort();
    out
}

/// Exact test that `p` lies strictly inside the closed polygonal walk `cycle`.
/// Points on the walk are reported as not inside.
pub fn cycle_contains(pts: &[Point], cycle: &[usize], p: Point) -> bool {
    let m = cycle.len();
    let mut inside = false;
    for i in 0..m {
        let a = pts[cycle[i]];
        let b = pts[cycle[(i + 1) % m]];
        let o = orient(a, b, p);
        if o == Sign::Zero && p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y) {
            return false;
        }
        if (a.y > p.y) != (b.y > p.y) {
            let crosses_right = if b.y > a.y {
                o == Sign::Positive
            } else {
                o == Sign::Negative
            };
            if crosses_right {
                inside = !inside;
            }
        }
    }
    inside
}
