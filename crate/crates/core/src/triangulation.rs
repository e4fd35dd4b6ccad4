//! Delaunay triangulation of a planar point set.
//!
//! The mesh closes the convex hull with "ghost" triangles that share a single
//! vertex at infinity, so points outside the hull are inserted with the same
//! cavity procedure as interior points. Insertion follows Bowyer–Watson: the
//! triangles whose circumcircle contains the new point are removed and the
//! cavity is re-triangulated as a star around it.
//!
//! Cocircular quadruples are resolved by a symbolic perturbation of the lifted
//! heights ordered by point index. For four cocircular points this selects the
//! diagonal whose endpoint pair is lexicographically smallest, and since the
//! perturbation is a lifting the result does not depend on insertion order:
//! `insert_point` and `delaunay` agree edge for edge.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geom::{orient, strictly_between, Point, Sign};

/// An immutable, indexed collection of distinct finite points.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point>,
}

fn key(p: Point) -> (u64, u64) {
    // +0.0 and -0.0 are the same coordinate.
    ((p.x + 0.0).to_bits(), (p.y + 0.0).to_bits())
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Empty);
        }
        let mut seen: HashMap<(u64, u64), usize> = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFinite { index: i });
            }
            if let Some(&first) = seen.get(&key(*p)) {
                return Err(Error::DuplicatePoint { first, second: i });
            }
            seen.insert(key(*p), i);
        }
        Ok(PointSet { points })
    }

    pub fn from_xy(coords: &[(f64, f64)]) -> Result<Self> {
        PointSet::new(coords.iter().map(|&c| Point::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn get(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn index_of(&self, p: Point) -> Option<usize> {
        let k = key(p);
        self.points.iter().position(|q| key(*q) == k)
    }

    /// The set with `p` appended as index `len()`.
    pub fn with_point(&self, p: Point) -> Result<PointSet> {
        if !p.is_finite() {
            return Err(Error::NonFinite {
                index: self.points.len(),
            });
        }
        if let Some(existing) = self.index_of(p) {
            return Err(Error::DuplicatePoint {
                first: existing,
                second: self.points.len(),
            });
        }
        let mut points = self.points.clone();
        points.push(p);
        Ok(PointSet { points })
    }

    /// True when fewer than three points are present or every point lies on one line.
    pub fn is_collinear(&self) -> bool {
        non_collinear_triple(&self.points, &(0..self.points.len() as u32).collect::<Vec<_>>()).is_none()
    }

    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.points[0];
        let mut hi = self.points[0];
        for p in &self.points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }
}

/// Which diagonal a cocircular quadrilateral receives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// The diagonal incident to the smallest index among the four points.
    #[default]
    LowDiagonal,
    /// The opposite choice; used to check that depths do not depend on the tie-break.
    HighDiagonal,
}

/// Counterclockwise hull of `s`, starting at its smallest index; collinear
/// points interior to hull edges are excluded.
pub fn convex_hull(s: &PointSet) -> Vec<usize> {
    let idx: Vec<usize> = (0..s.len()).collect();
    hull_of(s.points(), &idx, false)
}

/// Monotone chain over a subset of indices. With `keep_collinear` the points
/// lying on hull edges are retained (the order is then only meaningful as a set
/// for all-collinear input).
pub(crate) fn hull_of(pts: &[Point], subset: &[usize], keep_collinear: bool) -> Vec<usize> {
    let mut order: Vec<usize> = subset.to_vec();
    order.sort_by(|&a, &b| {
        pts[a]
            .x
            .partial_cmp(&pts[b].x)
            .unwrap()
            .then(pts[a].y.partial_cmp(&pts[b].y).unwrap())
    });
    if order.len() <= 2 {
        let mut h = order;
        rotate_to_min(&mut h);
        return h;
    }
    let pops = |s: Sign| {
        if keep_collinear {
            s == Sign::Negative
        } else {
            s != Sign::Positive
        }
    };
    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2 && pops(orient(pts[lower[lower.len() - 2]], pts[lower[lower.len() - 1]], pts[i])) {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2 && pops(orient(pts[upper[upper.len() - 2]], pts[upper[upper.len() - 1]], pts[i])) {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    let mut h = lower;
    h.extend(upper);
    if keep_collinear {
        let mut seen = std::collections::HashSet::new();
        h.retain(|v| seen.insert(*v));
    }
    rotate_to_min(&mut h);
    h
}

fn rotate_to_min(h: &mut [usize]) {
    if let Some(pos) = h.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i) {
        h.rotate_left(pos);
    }
}

fn non_collinear_triple(pts: &[Point], order: &[u32]) -> Option<(u32, u32, u32)> {
    let a = *order.first()?;
    let b = *order.get(1)?;
    let c = order[2..]
        .iter()
        .copied()
        .find(|&c| orient(pts[a as usize], pts[b as usize], pts[c as usize]) != Sign::Zero)?;
    Some((a, b, c))
}

pub(crate) const GHOST: u32 = u32::MAX;

/// Triangle soup with neighbor links. `adj[t][i]` is the triangle across the
/// edge opposite `tri[t][i]`. Ghost triangles store the infinite vertex in slot 2.
#[derive(Debug, Clone)]
struct Mesh {
    tri: Vec<[u32; 3]>,
    adj: Vec<[u32; 3]>,
    alive: Vec<bool>,
    free: Vec<u32>,
    mark: Vec<u32>,
    epoch: u32,
    last: u32,
    rng: u32,
    tie: TieBreak,
}

fn pos(v: &[u32; 3], x: u32) -> usize {
    v.iter().position(|&y| y == x).expect("vertex in triangle")
}

impl Mesh {
    fn from_triangles(tris: &[[u32; 3]], tie: TieBreak) -> Mesh {
        let mut all: Vec<[u32; 3]> = tris.to_vec();
        let mut directed: HashMap<(u32, u32), (u32, usize)> = HashMap::new();
        for (t, v) in tris.iter().enumerate() {
            for i in 0..3 {
                directed.insert((v[(i + 1) % 3], v[(i + 2) % 3]), (t as u32, i));
            }
        }
        for v in tris {
            for i in 0..3 {
                let (a, b) = (v[(i + 1) % 3], v[(i + 2) % 3]);
                if !directed.contains_key(&(b, a)) {
                    all.push([b, a, GHOST]);
                }
            }
        }
        let mut map: HashMap<(u32, u32), (u32, usize)> = HashMap::new();
        for (t, v) in all.iter().enumerate() {
            for i in 0..3 {
                map.insert((v[(i + 1) % 3], v[(i + 2) % 3]), (t as u32, i));
            }
        }
        let mut adj = vec![[GHOST; 3]; all.len()];
        for (t, v) in all.iter().enumerate() {
            for i in 0..3 {
                let (a, b) = (v[(i + 1) % 3], v[(i + 2) % 3]);
                let (n, _) = map[&(b, a)];
                adj[t][i] = n;
            }
        }
        let count = all.len();
        Mesh {
            tri: all,
            adj,
            alive: vec![true; count],
            free: Vec::new(),
            mark: vec![0; count],
            epoch: 0,
            last: 0,
            rng: 0x9E37_79B9,
            tie,
        }
    }

    fn is_ghost(&self, t: u32) -> bool {
        self.tri[t as usize][2] == GHOST
    }

    /// Perturbed in-circle test: exact sign, with cocircular ties decided by
    /// the point of smallest index (see module docs).
    fn in_circle_sos(&self, pts: &[Point], v: [u32; 3], q: Point, qi: u32) -> bool {
        let [a, b, c] = v.map(|i| pts[i as usize]);
        match crate::geom::in_circle_unchecked(a, b, c, q) {
            Sign::Positive => return true,
            Sign::Negative => return false,
            Sign::Zero => {}
        }
        let m = v[0].min(v[1]).min(v[2]).min(qi);
        // Lowering the lifted height of point `m` moves it inside the circle of the other three.
        let s = if m == qi {
            orient(a, b, c)
        } else if m == v[0] {
            orient(b, c, q).flip()
        } else if m == v[1] {
            orient(c, a, q).flip()
        } else {
            orient(a, b, q).flip()
        };
        let s = match self.tie {
            TieBreak::LowDiagonal => s,
            TieBreak::HighDiagonal => s.flip(),
        };
        s == Sign::Positive
    }

    /// Whether triangle `t` would be destroyed by inserting `q` with index `qi`.
    fn conflicts(&self, pts: &[Point], t: u32, q: Point, qi: u32) -> bool {
        let v = self.tri[t as usize];
        if v[2] == GHOST {
            let (a, b) = (pts[v[0] as usize], pts[v[1] as usize]);
            match orient(a, b, q) {
                Sign::Positive => true,
                Sign::Zero => strictly_between(a, b, q),
                Sign::Negative => false,
            }
        } else {
            self.in_circle_sos(pts, v, q, qi)
        }
    }

    /// Visibility walk from `t` to a triangle in conflict with `q`, or the
    /// index of a coincident vertex.
    fn locate(&self, pts: &[Point], q: Point, qi: u32, mut t: u32, rng: &mut u32) -> std::result::Result<u32, usize> {
        if !self.alive[t as usize] {
            t = self.alive.iter().position(|&a| a).unwrap() as u32;
        }
        if self.is_ghost(t) {
            if self.conflicts(pts, t, q, qi) {
                return Ok(t);
            }
            t = self.adj[t as usize][2];
        }
        let budget = 4 * self.tri.len() + 64;
        for _ in 0..budget {
            let v = self.tri[t as usize];
            *rng ^= *rng << 13;
            *rng ^= *rng >> 17;
            *rng ^= *rng << 5;
            let start = (*rng % 3) as usize;
            let mut moved = false;
            for k in 0..3 {
                let i = (start + k) % 3;
                let a = pts[v[(i + 1) % 3] as usize];
                let b = pts[v[(i + 2) % 3] as usize];
                if orient(a, b, q) == Sign::Negative {
                    t = self.adj[t as usize][i];
                    moved = true;
                    break;
                }
            }
            if !moved {
                if let Some(&dup) = v.iter().find(|&&x| pts[x as usize] == q) {
                    return Err(dup as usize);
                }
                return Ok(t);
            }
            if self.is_ghost(t) {
                return Ok(t);
            }
        }
        // The visibility walk terminates on Delaunay meshes; scan as a last resort.
        for (i, v) in self.tri.iter().enumerate() {
            if !self.alive[i] {
                continue;
            }
            if let Some(&dup) = v.iter().find(|&&x| x != GHOST && pts[x as usize] == q) {
                return Err(dup as usize);
            }
        }
        Ok((0..self.tri.len() as u32)
            .find(|&t| self.alive[t as usize] && self.conflicts(pts, t, q, qi))
            .expect("some triangle conflicts with a new point"))
    }

    fn alloc(&mut self, v: [u32; 3]) -> u32 {
        if let Some(t) = self.free.pop() {
            self.tri[t as usize] = v;
            self.alive[t as usize] = true;
            t
        } else {
            self.tri.push(v);
            self.adj.push([GHOST; 3]);
            self.alive.push(true);
            self.mark.push(0);
            (self.tri.len() - 1) as u32
        }
    }

    /// Inserts `pts[pi]`; all points with smaller indices that are already in
    /// the mesh must be present in `pts` at their indices.
    fn insert(&mut self, pts: &[Point], pi: u32) -> std::result::Result<(), usize> {
        let q = pts[pi as usize];
        let mut rng = self.rng;
        let seed = self.locate(pts, q, pi, self.last, &mut rng)?;
        self.rng = rng;
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        self.mark[seed as usize] = epoch;
        let mut stack = vec![seed];
        let mut cavity = vec![seed];
        // (edge start, edge end, outside triangle, slot in outside triangle)
        let mut boundary: Vec<(u32, u32, u32, usize)> = Vec::new();
        while let Some(t) = stack.pop() {
            for i in 0..3 {
                let n = self.adj[t as usize][i];
                if self.mark[n as usize] == epoch {
                    continue;
                }
                if self.conflicts(pts, n, q, pi) {
                    self.mark[n as usize] = epoch;
                    stack.push(n);
                    cavity.push(n);
                } else {
                    let v = self.tri[t as usize];
                    let slot = self.adj[n as usize]
                        .iter()
                        .position(|&x| x == t)
                        .expect("symmetric adjacency");
                    boundary.push((v[(i + 1) % 3], v[(i + 2) % 3], n, slot));
                }
            }
        }
        for &t in &cavity {
            self.alive[t as usize] = false;
            self.free.push(t);
        }
        let mut made: Vec<(u32, u32, u32)> = Vec::with_capacity(boundary.len());
        for &(a, b, outer, slot) in &boundary {
            let v = if a == GHOST {
                [b, pi, GHOST]
            } else if b == GHOST {
                [pi, a, GHOST]
            } else {
                [a, b, pi]
            };
            let nt = self.alloc(v);
            self.adj[nt as usize][pos(&v, pi)] = outer;
            self.adj[outer as usize][slot] = nt;
            made.push((a, b, nt));
        }
        let find = |made: &[(u32, u32, u32)], f: &dyn Fn(&(u32, u32, u32)) -> bool| -> u32 {
            made.iter().find(|e| f(e)).expect("closed cavity boundary").2
        };
        let mut links = Vec::with_capacity(made.len());
        if made.len() <= 32 {
            for &(a, b, nt) in &made {
                let after = find(&made, &|e| e.0 == b);
                let before = find(&made, &|e| e.1 == a);
                links.push((a, b, nt, after, before));
            }
        } else {
            let by_start: HashMap<u32, u32> = made.iter().map(|e| (e.0, e.2)).collect();
            let by_end: HashMap<u32, u32> = made.iter().map(|e| (e.1, e.2)).collect();
            for &(a, b, nt) in &made {
                links.push((a, b, nt, by_start[&b], by_end[&a]));
            }
        }
        for (a, b, nt, after, before) in links {
            let v = self.tri[nt as usize];
            self.adj[nt as usize][pos(&v, a)] = after;
            self.adj[nt as usize][pos(&v, b)] = before;
        }
        self.last = made
            .iter()
            .map(|e| e.2)
            .find(|&t| !self.is_ghost(t))
            .unwrap_or(made[0].2);
        Ok(())
    }

    fn real_triangles(&self) -> Vec<[usize; 3]> {
        self.tri
            .iter()
            .zip(&self.alive)
            .filter(|(v, &a)| a && v[2] != GHOST)
            .map(|(v, _)| [v[0] as usize, v[1] as usize, v[2] as usize])
            .collect()
    }

    /// Counterclockwise boundary cycle (every vertex on the hull, collinear ones included).
    fn boundary_cycle(&self, n: usize) -> Vec<usize> {
        let mut next = vec![usize::MAX; n];
        let mut any = usize::MAX;
        for (v, &a) in self.tri.iter().zip(&self.alive) {
            if a && v[2] == GHOST {
                // Ghost [u, w, inf] sits across hull edge w -> u.
                next[v[1] as usize] = v[0] as usize;
                any = any.min(v[1] as usize);
            }
        }
        let mut cycle = vec![any];
        let mut cur = next[any];
        while cur != any {
            cycle.push(cur);
            cur = next[cur];
        }
        cycle
    }
}

/// Delaunay triangulation of a point set with its hull and vertex adjacency.
#[derive(Debug, Clone)]
pub struct Triangulation {
    points: PointSet,
    mesh: Mesh,
    triangles: Vec<[usize; 3]>,
    adjacency: Vec<Vec<usize>>,
    hull: Vec<usize>,
    boundary: Vec<usize>,
    vtri: Vec<u32>,
}

/// Where a query point falls relative to a triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Probe {
    /// The point coincides with this vertex.
    Vertex(usize),
    /// On the hull boundary or outside it.
    Hull,
    /// Strictly inside the hull: the vertices of every triangle whose
    /// circumcircle contains the point (its neighbors after insertion).
    Inside(Vec<usize>),
}

pub fn delaunay(s: &PointSet) -> Result<Triangulation> {
    delaunay_with(s, TieBreak::default())
}

pub fn delaunay_with(s: &PointSet, tie: TieBreak) -> Result<Triangulation> {
    if s.len() < 3 {
        return Err(Error::TooFewPoints(s.len()));
    }
    let order = hilbert_order(s.points());
    delaunay_in_order(s, &order, tie)
}

pub(crate) fn delaunay_in_order(s: &PointSet, order: &[u32], tie: TieBreak) -> Result<Triangulation> {
    if s.len() < 3 {
        return Err(Error::TooFewPoints(s.len()));
    }
    let pts = s.points();
    let (a, b, mut c) = non_collinear_triple(pts, order).ok_or(Error::Collinear)?;
    let (a, mut b) = (a, b);
    if orient(pts[a as usize], pts[b as usize], pts[c as usize]) == Sign::Negative {
        std::mem::swap(&mut b, &mut c);
    }
    let mut mesh = Mesh::from_triangles(&[[a, b, c]], tie);
    for &i in order {
        if i == a || i == b || i == c {
            continue;
        }
        mesh.insert(pts, i).map_err(|dup| Error::DuplicatePoint {
            first: dup,
            second: i as usize,
        })?;
    }
    Ok(Triangulation::from_mesh(s.clone(), mesh))
}

/// Triangulation of `t`'s points plus `p` (index `t.len()`); `t` is left untouched.
pub fn insert_point(t: &Triangulation, p: Point) -> Result<Triangulation> {
    let points = t.points.with_point(p).map_err(|e| match e {
        Error::DuplicatePoint { first, .. } => Error::DuplicateInsert { existing: first },
        other => other,
    })?;
    let mut mesh = t.mesh.clone();
    let pi = (points.len() - 1) as u32;
    mesh.insert(points.points(), pi)
        .map_err(|existing| Error::DuplicateInsert { existing })?;
    Ok(Triangulation::from_mesh(points, mesh))
}

impl Triangulation {
    fn from_mesh(points: PointSet, mesh: Mesh) -> Triangulation {
        let n = points.len();
        let triangles = mesh.real_triangles();
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        for t in &triangles {
            for i in 0..3 {
                let (u, v) = (t[i], t[(i + 1) % 3]);
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let boundary = mesh.boundary_cycle(n);
        let pts = points.points();
        let m = boundary.len();
        let mut hull: Vec<usize> = (0..m)
            .filter(|&i| {
                orient(
                    pts[boundary[(i + m - 1) % m]],
                    pts[boundary[i]],
                    pts[boundary[(i + 1) % m]],
                ) != Sign::Zero
            })
            .map(|i| boundary[i])
            .collect();
        rotate_to_min(&mut hull);
        let mut boundary = boundary;
        rotate_to_min(&mut boundary);
        let mut vtri = vec![u32::MAX; n];
        for (t, v) in mesh.tri.iter().enumerate() {
            if mesh.alive[t] && v[2] != GHOST {
                for &x in v {
                    vtri[x as usize] = t as u32;
                }
            }
        }
        Triangulation {
            vtri,
            points,
            mesh,
            triangles,
            adjacency,
            hull,
            boundary,
        }
    }

    /// Builds a triangulation object from an explicit counterclockwise triangle list.
    pub(crate) fn from_triangles(points: PointSet, triangles: &[[usize; 3]]) -> Triangulation {
        let tris: Vec<[u32; 3]> = triangles
            .iter()
            .map(|t| [t[0] as u32, t[1] as u32, t[2] as u32])
            .collect();
        let mesh = Mesh::from_triangles(&tris, TieBreak::default());
        Triangulation::from_mesh(points, mesh)
    }

    /// Conflict region of `p` without modifying the triangulation. `hint`
    /// names a vertex near `p` to start the search from.
    pub fn probe(&self, p: Point, hint: Option<usize>) -> Probe {
        let pts = self.points();
        let mesh = &self.mesh;
        let qi = GHOST - 1;
        let start = hint.map(|v| self.vtri[v]).unwrap_or(mesh.last);
        let mut rng = 0x2545_F491;
        let seed = match mesh.locate(pts, p, qi, start, &mut rng) {
            Ok(t) => t,
            Err(v) => return Probe::Vertex(v),
        };
        let mut seen = std::collections::HashSet::from([seed]);
        let mut stack = vec![seed];
        let mut verts = Vec::new();
        while let Some(t) = stack.pop() {
            if mesh.is_ghost(t) {
                return Probe::Hull;
            }
            verts.extend(mesh.tri[t as usize].iter().map(|&x| x as usize));
            for &n in &mesh.adj[t as usize] {
                if !seen.contains(&n) && mesh.conflicts(pts, n, p, qi) {
                    seen.insert(n);
                    stack.push(n);
                }
            }
        }
        verts.sort_unstable();
        verts.dedup();
        Probe::Inside(verts)
    }

    pub fn point_set(&self) -> &PointSet {
        &self.points
    }

    pub fn points(&self) -> &[Point] {
        self.points.points()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Counterclockwise vertex-index triples.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Neighbors of each vertex, sorted by index.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Strict convex hull, counterclockwise from the smallest index.
    pub fn hull(&self) -> &[usize] {
        &self.hull
    }

    /// All vertices on the hull boundary (including collinear ones), counterclockwise.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn tie_break(&self) -> TieBreak {
        self.mesh.tie
    }

    /// Undirected edges as sorted pairs, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        e.sort_unstable();
        e
    }

    /// Interior edges whose opposite vertices lie strictly inside the
    /// neighboring circumcircle (exact test; empty for a Delaunay triangulation).
    pub fn non_delaunay_edges(&self) -> Vec<(usize, usize)> {
        let pts = self.points();
        let mut out = Vec::new();
        let mesh = &self.mesh;
        for (t, v) in mesh.tri.iter().enumerate() {
            if !mesh.alive[t] || v[2] == GHOST {
                continue;
            }
            for i in 0..3 {
                let n = mesh.adj[t][i] as usize;
                let w = mesh.tri[n];
                if w[2] == GHOST {
                    continue;
                }
                let (a, b) = (v[(i + 1) % 3], v[(i + 2) % 3]);
                let opp = w.iter().copied().find(|&x| x != a && x != b).unwrap();
                let [p, q, r] = v.map(|x| pts[x as usize]);
                if crate::geom::in_circle_unchecked(p, q, r, pts[opp as usize]) == Sign::Positive {
                    out.push((a.min(b) as usize, a.max(b) as usize));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Insertion order along a Hilbert curve, so that consecutive points are close
/// and the walk from the previous insertion is short.
fn hilbert_order(pts: &[Point]) -> Vec<u32> {
    let (mut lo, mut hi) = (pts[0], pts[0]);
    for p in pts {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y);
    let side: u32 = 1 << 16;
    let scale = if span > 0.0 { (side - 1) as f64 / span } else { 0.0 };
    let mut keyed: Vec<(u64, u32)> = pts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let x = ((p.x - lo.x) * scale) as u32;
            let y = ((p.y - lo.y) * scale) as u32;
            (hilbert_index(side, x.min(side - 1), y.min(side - 1)), i as u32)
        })
        .collect();
    keyed.sort_unstable();
    keyed.into_iter().map(|(_, i)| i).collect()
}

fn hilbert_index(side: u32, mut x: u32, mut y: u32) -> u64 {
    let mut d: u64 = 0;
    let mut s = side / 2;
    while s > 0 {
        let rx = u32::from(x & s > 0);
        let ry = u32::from(y & s > 0);
        d += (s as u64) * (s as u64) * u64::from((3 * rx) ^ ry);
        if ry == 0 {
            if rx == 1 {
                x = side - 1 - x;
                y = side - 1 - y;
            }
            std::mem::swap(&mut x, &mut y);
        }
        s /= 2;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_center() -> PointSet {
        PointSet::from_xy(&[(0., 0.), (4., 0.), (4., 4.), (0., 4.), (2., 2.)]).unwrap()
    }

    fn sorted_tris(t: &Triangulation) -> Vec<[usize; 3]> {
        let mut v: Vec<[usize; 3]> = t
            .triangles()
            .iter()
            .map(|t| {
                let mut s = *t;
                s.sort_unstable();
                s
            })
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn point_set_rejects_duplicates_and_non_finite() {
        assert_eq!(
            PointSet::from_xy(&[(0., 0.), (1., 1.), (0., 0.)]),
            Err(Error::DuplicatePoint { first: 0, second: 2 })
        );
        assert_eq!(
            PointSet::from_xy(&[(0., 0.), (-0., 0.)]),
            Err(Error::DuplicatePoint { first: 0, second: 1 })
        );
        assert_eq!(PointSet::from_xy(&[(0., f64::NAN)]), Err(Error::NonFinite { index: 0 }));
        assert_eq!(PointSet::new(vec![]), Err(Error::Empty));
    }

    #[test]
    fn convex_hull_examples() {
        assert_eq!(convex_hull(&square_center()), vec![0, 1, 2, 3]);
        let diag = PointSet::from_xy(&[(0., 0.), (1., 1.), (2., 2.)]).unwrap();
        assert_eq!(convex_hull(&diag), vec![0, 2]);
        let one = PointSet::from_xy(&[(0., 0.)]).unwrap();
        assert_eq!(convex_hull(&one), vec![0]);
    }

    #[test]
    fn convex_hull_drops_edge_collinear_points() {
        let s = PointSet::from_xy(&[(0., 0.), (2., 0.), (4., 0.), (4., 4.), (0., 4.)]).unwrap();
        assert_eq!(convex_hull(&s), vec![0, 2, 3, 4]);
    }

    #[test]
    fn delaunay_square_with_center() {
        let t = delaunay(&square_center()).unwrap();
        assert_eq!(sorted_tris(&t), vec![[0, 1, 4], [0, 3, 4], [1, 2, 4], [2, 3, 4]]);
        assert_eq!(t.hull(), &[0, 1, 2, 3]);
        assert!(t.non_delaunay_edges().is_empty());
    }

    #[test]
    fn delaunay_single_triangle_and_errors() {
        let s = PointSet::from_xy(&[(0., 0.), (2., 0.), (1., 2.)]).unwrap();
        let t = delaunay(&s).unwrap();
        assert_eq!(t.triangles().len(), 1);
        assert_eq!(t.hull().len(), 3);

        let line = PointSet::from_xy(&[(0., 0.), (1., 1.), (2., 2.), (3., 3.)]).unwrap();
        assert_eq!(delaunay(&line).unwrap_err(), Error::Collinear);
        let two = PointSet::from_xy(&[(0., 0.), (1., 1.)]).unwrap();
        assert_eq!(delaunay(&two).unwrap_err(), Error::TooFewPoints(2));
    }

    #[test]
    fn insert_matches_rebuild() {
        let corners = PointSet::from_xy(&[(0., 0.), (4., 0.), (4., 4.), (0., 4.)]).unwrap();
        let t = delaunay(&corners).unwrap();
        let before = sorted_tris(&t);
        let t2 = insert_point(&t, Point::new(2., 2.)).unwrap();
        assert_eq!(sorted_tris(&t2), sorted_tris(&delaunay(&square_center()).unwrap()));
        assert_eq!(sorted_tris(&t), before, "input left untouched");

        let tri = PointSet::from_xy(&[(0., 0.), (2., 0.), (1., 2.)]).unwrap();
        let t = insert_point(&delaunay(&tri).unwrap(), Point::new(1., 0.5)).unwrap();
        assert_eq!(t.triangles().len(), 3);
        assert!(t.triangles().iter().all(|tr| tr.contains(&3)));
    }

    #[test]
    fn insert_rejects_existing_point() {
        let t = delaunay(&square_center()).unwrap();
        assert_eq!(
            insert_point(&t, Point::new(4., 4.)).unwrap_err(),
            Error::DuplicateInsert { existing: 2 }
        );
    }

    #[test]
    fn cocircular_square_takes_low_diagonal() {
        let s = PointSet::from_xy(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]).unwrap();
        let t = delaunay(&s).unwrap();
        assert!(t.edges().contains(&(0, 2)));
        let t = delaunay_with(&s, TieBreak::HighDiagonal).unwrap();
        assert!(t.edges().contains(&(1, 3)));
        // Relabel so that vertex 0 sits at (1, 0): the diagonal follows the label.
        let s = PointSet::from_xy(&[(1., 0.), (1., 1.), (0., 1.), (0., 0.)]).unwrap();
        assert!(delaunay(&s).unwrap().edges().contains(&(0, 2)));
    }

    #[test]
    fn grid_is_order_independent() {
        // A 5x5 grid is maximally degenerate: collinear rows and cocircular cells.
        let mut coords = Vec::new();
        for i in 0..5 {
            for j in 0..5 {
                coords.push((i as f64, j as f64));
            }
        }
        let s = PointSet::from_xy(&coords).unwrap();
        let reference = delaunay(&s).unwrap();
        assert_eq!(reference.triangles().len(), 2 * 25 - 2 - reference.boundary().len());
        assert_eq!(reference.boundary().len(), 16);
        assert_eq!(reference.hull(), &[0, 20, 24, 4]);
        let mut order: Vec<u32> = (0..25).collect();
        for shift in 0..6 {
            order.rotate_left(shift * 3 + 1);
            order.reverse();
            let t = delaunay_in_order(&s, &order, TieBreak::default()).unwrap();
            assert_eq!(t.edges(), reference.edges());
        }
    }

    #[test]
    fn collinear_prefix_is_skipped() {
        let s = PointSet::from_xy(&[(0., 0.), (1., 0.), (2., 0.), (3., 0.), (1., 1.)]).unwrap();
        let t = delaunay_in_order(&s, &[0, 1, 2, 3, 4], TieBreak::default()).unwrap();
        assert_eq!(t.triangles().len(), 3);
        assert_eq!(t.boundary().len(), 5);
        assert_eq!(t.hull(), &[0, 3, 4]);
    }

    #[test]
    fn probe_reports_future_neighbors() {
        let t = delaunay(&square_center()).unwrap();
        assert_eq!(t.probe(Point::new(2., 2.), None), Probe::Vertex(4));
        assert_eq!(t.probe(Point::new(9., 2.), Some(0)), Probe::Hull);
        assert_eq!(t.probe(Point::new(2., 0.), None), Probe::Hull);
        let p = Point::new(2., 0.5);
        let Probe::Inside(v) = t.probe(p, Some(3)) else {
            panic!("interior point")
        };
        let after = insert_point(&t, p).unwrap();
        assert_eq!(v, after.neighbors(5));
    }

    #[test]
    fn insertion_on_hull_edge_and_line_extension() {
        let s = PointSet::from_xy(&[(0., 0.), (2., 0.), (1., 2.)]).unwrap();
        let t = delaunay(&s).unwrap();
        let on_edge = insert_point(&t, Point::new(1., 0.)).unwrap();
        assert_eq!(on_edge.triangles().len(), 2);
        assert_eq!(on_edge.hull(), &[0, 1, 2]);
        assert_eq!(on_edge.boundary().len(), 4);
        let beyond = insert_point(&t, Point::new(3., 0.)).unwrap();
        assert_eq!(beyond.hull(), &[0, 3, 2]);
        assert_eq!(beyond.triangles().len(), 2);
        assert!(beyond.non_delaunay_edges().is_empty());
    }
}
