//! Python bindings: `import strata`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use strata_core as core;
use strata_core::{Classification, ContourShape, Point};

type Xy = (f64, f64);

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pt((x, y): Xy) -> Point {
    Point::new(x, y)
}

fn xy(p: Point) -> Xy {
    (p.x, p.y)
}

/// Finite planar points without duplicates.
#[pyclass(module = "strata", frozen)]
struct PointSet(core::PointSet);

#[pymethods]
impl PointSet {
    #[new]
    fn new(points: Vec<Xy>) -> PyResult<Self> {
        core::PointSet::from_xy(&points).map(Self).map_err(err)
    }

    /// Parse the text point-file format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::io::parse_points(text).map(|f| Self(f.set)).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("PointSet(<{} points>)", self.0.len())
    }

    fn points(&self) -> Vec<Xy> {
        self.0.points().iter().copied().map(xy).collect()
    }

    fn with_point(&self, p: Xy) -> PyResult<Self> {
        self.0.with_point(pt(p)).map(Self).map_err(err)
    }

    fn bounding_box(&self) -> (Xy, Xy) {
        let (lo, hi) = self.0.bounding_box();
        (xy(lo), xy(hi))
    }

    fn convex_hull(&self) -> Vec<usize> {
        core::convex_hull(&self.0)
    }

    fn triangulate(&self) -> PyResult<Triangulation> {
        core::delaunay(&self.0).map(Triangulation).map_err(err)
    }

    /// Delaunay depth of every point; all 1 for collinear input.
    fn depths(&self) -> Vec<u32> {
        core::depths_of_set(&self.0).1.depth
    }

    fn convex_depths(&self) -> Vec<u32> {
        core::convex_depths(&self.0).depth
    }

    /// Location depth of `p` and a witness direction.
    fn tukey_depth(&self, p: Xy) -> (u32, Xy) {
        let t = core::tukey_depth(&self.0, pt(p));
        (t.depth, t.witness)
    }

    /// Depth `p` would receive if inserted.
    fn query_depth(&self, p: Xy) -> PyResult<u32> {
        core::query_depth(&self.0, pt(p)).map_err(err)
    }

    fn depth_change(&self, p: Xy) -> PyResult<DepthDelta> {
        core::depth_change_report(&self.0, pt(p)).map(DepthDelta).map_err(err)
    }

    fn level_set(&self) -> PyResult<LevelSet> {
        core::level_set_of(&self.0).map(LevelSet).map_err(err)
    }
}

#[pyclass(module = "strata", frozen)]
struct Triangulation(core::Triangulation);

#[pymethods]
impl Triangulation {
    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn triangles(&self) -> Vec<[usize; 3]> {
        self.0.triangles().to_vec()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn hull(&self) -> Vec<usize> {
        self.0.hull().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.len() {
            return Err(PyValueError::new_err(format!("no vertex {v}")));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn insert(&self, p: Xy) -> PyResult<Triangulation> {
        core::insert_point(&self.0, pt(p)).map(Triangulation).map_err(err)
    }

    fn depths(&self) -> Vec<u32> {
        core::delaunay_depths(&self.0).depth
    }

    fn set_depth(&self) -> u32 {
        core::delaunay_depths(&self.0).set_depth
    }

    fn layers(&self) -> Vec<Layer> {
        let d = core::delaunay_depths(&self.0);
        core::layers(&self.0, &d).into_iter().map(Layer).collect()
    }

    fn level_set(&self) -> PyResult<LevelSet> {
        let d = core::delaunay_depths(&self.0);
        core::depth_contours(&self.0, &d).map(LevelSet).map_err(err)
    }

    fn query_depth(&self, p: Xy) -> PyResult<u32> {
        core::query_depth_in(&self.0, pt(p)).map_err(err)
    }
}

/// Points of one depth, with the edges between them.
#[pyclass(module = "strata", frozen)]
struct Layer(core::Layer);

#[pymethods]
impl Layer {
    #[getter]
    fn index(&self) -> u32 {
        self.0.index
    }

    #[getter]
    fn vertices(&self) -> Vec<usize> {
        self.0.vertices.clone()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges.clone()
    }

    #[getter]
    fn components(&self) -> Vec<Vec<usize>> {
        self.0.components.clone()
    }

    #[getter]
    fn cycles(&self) -> Vec<Vec<usize>> {
        self.0.all_cycles().cloned().collect()
    }

    fn __repr__(&self) -> String {
        format!("Layer(index={}, vertices={})", self.0.index, self.0.vertices.len())
    }
}

#[pyclass(module = "strata", frozen)]
struct DepthDelta(core::DepthDelta);

#[pymethods]
impl DepthDelta {
    #[getter]
    fn point_deltas(&self) -> Vec<(u32, u32)> {
        self.0.point_deltas.clone()
    }

    #[getter]
    fn set_depth_before(&self) -> u32 {
        self.0.set_depth_before
    }

    #[getter]
    fn set_depth_after(&self) -> u32 {
        self.0.set_depth_after
    }

    #[getter]
    fn query_depth(&self) -> u32 {
        self.0.query_depth
    }

    fn max_point_change(&self) -> u32 {
        self.0.max_point_change()
    }
}

/// Nested depth contours of a set.
#[pyclass(module = "strata", frozen)]
struct LevelSet(core::LevelSet);

#[pymethods]
impl LevelSet {
    #[getter]
    fn depth_of_set(&self) -> u32 {
        self.0.depth_of_set
    }

    fn level_count(&self) -> usize {
        self.0.level_count()
    }

    /// Level of `p`, or `(outer, inner)` when `p` lies on a contour.
    fn classify(&self, py: Python<'_>, p: Xy) -> PyResult<Py<PyAny>> {
        Ok(match self.0.classify(pt(p)) {
            Classification::Level(l) => l.into_pyobject(py)?.into_any().unbind(),
            Classification::Boundary { outer, inner } => (outer, inner).into_pyobject(py)?.into_any().unbind(),
        })
    }

    fn boundary_distance(&self, p: Xy) -> f64 {
        self.0.boundary_distance(pt(p))
    }

    fn medians(&self) -> Vec<Xy> {
        self.0.medians().into_iter().map(xy).collect()
    }

    /// `(level, polygons)` per contour; arcs are flattened to `per_arc` points.
    #[pyo3(signature = (per_arc = 16))]
    fn contours(&self, per_arc: usize) -> Vec<(u32, Vec<Vec<Xy>>)> {
        self.0
            .contours
            .iter()
            .map(|c| {
                let polys = match &c.shape {
                    ContourShape::Polygon { points, .. } => vec![points.iter().copied().map(xy).collect()],
                    ContourShape::Curves { curves } => curves
                        .iter()
                        .map(|cu| cu.polygon(per_arc).into_iter().map(xy).collect())
                        .collect(),
                };
                (c.level, polys)
            })
            .collect()
    }
}

#[pyfunction]
fn element_uniqueness_gadget(values: Vec<f64>) -> PyResult<PointSet> {
    core::oracle::element_uniqueness_gadget(&values)
        .map(PointSet)
        .map_err(err)
}

/// The gadget and its query point.
#[pyfunction]
fn nested_triangle_gadget(k: usize) -> PyResult<(PointSet, Xy)> {
    core::oracle::nested_triangle_gadget(k)
        .map(|(s, p)| (PointSet(s), xy(p)))
        .map_err(err)
}

#[pyfunction]
fn component_extremal_gadget(k: usize) -> PyResult<PointSet> {
    core::oracle::component_extremal_gadget(k).map(PointSet).map_err(err)
}

#[pyfunction]
fn uniform_points(n: usize, seed: u64) -> PyResult<PointSet> {
    core::oracle::uniform_points(n, seed).map(PointSet).map_err(err)
}

#[pymodule]
fn strata(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PointSet>()?;
    m.add_class::<Triangulation>()?;
    m.add_class::<Layer>()?;
    m.add_class::<DepthDelta>()?;
    m.add_class::<LevelSet>()?;
    m.add_function(wrap_pyfunction!(element_uniqueness_gadget, m)?)?;
    m.add_function(wrap_pyfunction!(nested_triangle_gadget, m)?)?;
    m.add_function(wrap_pyfunction!(component_extremal_gadget, m)?)?;
    m.add_function(wrap_pyfunction!(uniform_points, m)?)?;
    Ok(())
}
