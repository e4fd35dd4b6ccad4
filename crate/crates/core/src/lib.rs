//! Delaunay depth of planar point sets.
//!
//! Points are labeled by their graph distance to the convex hull in the
//! Delaunay triangulation. On top of the labeling the crate extracts layers,
//! builds the level boundaries (depth contours) as circular-arc curves, answers
//! depth queries for arbitrary points, and computes convex (peeling) and
//! location (Tukey) depth for comparison.
//!
//! ```
//! use strata_core::{delaunay, delaunay_depths, PointSet};
//!
//! let s = PointSet::from_xy(&[(0., 0.), (4., 0.), (4., 4.), (0., 4.), (2., 2.)]).unwrap();
//! let t = delaunay(&s).unwrap();
//! assert_eq!(delaunay_depths(&t).depth, vec![1, 1, 1, 1, 2]);
//! ```

pub mod alt_depth;
pub mod contours;
pub mod depth;
pub mod error;
pub mod geom;
pub mod io;
pub mod oracle;
pub mod query;
pub mod svg;
pub mod triangulation;
pub mod verify;

pub use alt_depth::{convex_depths, tukey_depth, ConvexDepthLabels, TukeyDepth};
pub use contours::{
    boundary_circles, depth_contours, level_set_of, min_depth_circles, union_hole_boundary, Arc, Classification,
    ContourShape, Curve, DepthContour, LevelSet,
};
pub use depth::{component_count, delaunay_depths, depths_of_set, layers, DepthLabels, Layer};
pub use error::{Error, Result};
pub use geom::{circumcircle, in_circle, orient, point_vs_circle, Circle, Point, Sign};
pub use query::{depth_change_report, query_depth, query_depth_in, DepthDelta};
pub use triangulation::{convex_hull, delaunay, delaunay_with, insert_point, PointSet, Probe, TieBreak, Triangulation};
