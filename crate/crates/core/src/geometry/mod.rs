//! Exact planar primitives.
//!
//! Coordinates are arbitrary-precision rationals. Predicates run a
//! floating-point interval filter first and fall back to exact integer
//! determinants, so no answer depends on rounding.

mod clip;
mod locate;
pub mod number;
mod point;
mod polygon;
mod predicates;
mod segment;

use thiserror::Error;

pub(crate) use clip::{clip_by_polygon, clip_tagged};
pub use clip::{convex_overlap, convex_polygon_intersection, ConvexOverlap, HalfPlane};
pub use locate::{locate_point, Locate, PointLocation};
pub use number::Scalar;
pub use point::Point;
pub(crate) use polygon::signed_area2;
pub use polygon::{is_convex_polygon, Polygon};
pub use predicates::{circumcircle, cross, in_circumcircle, orientation, CirclePosition, CircumCircle, Orientation};
pub(crate) use predicates::{incircle_perturbed, orient_sign};
pub use segment::{segment_intersection, Segment, SegmentIntersection};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("points are collinear; no finite circumcircle")]
    CollinearInput,
    #[error("defining triple is not counterclockwise")]
    NotCcw,
    #[error("polygon is not convex")]
    NonConvexInput,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(&'static str),
}
