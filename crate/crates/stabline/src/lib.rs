//! Exact stabbing lines for families of parallel vertical segments.
//!
//! Given closed vertical segments with pairwise distinct abscissas, this
//! crate decides whether one straight line crosses them all, classifies
//! whether that transversal is unique, and selects three canonical
//! transversals through point-line duality: each non-vertical line
//! `y = kx + l` is the dual point `(k, l)`, the transversals of a family
//! form a convex polygon in that dual plane, and the selections are the
//! dual midpoint of the two extremal transversals, the polygon's
//! discrete vertex centroid, and its continuous area centroid.
//!
//! All computation is exact: every coordinate, slope, and centroid is an
//! arbitrary-precision rational, and no comparison ever rounds.
//!
//! The `examples/` directory demonstrates each capability end to end;
//! the `stabline` binary exposes the same operations on JSON instance
//! files.

pub mod dual_space;
pub mod exact_geometry;
pub mod io;
pub mod line_selection;
pub mod transversal;

#[cfg(test)]
pub(crate) mod test_support;

pub use dual_space::Line;
pub use exact_geometry::{integer, rational, Point, Rational};
pub use line_selection::{feasibility_polygon, select_all, DualPolygon, SpecialLines};
pub use transversal::{classify, SegmentFamily, TransversalClass};
