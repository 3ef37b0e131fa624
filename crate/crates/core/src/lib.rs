//! Exact construction, verification and classification of multiple lattice
//! tilings of the plane by centrally symmetric convex polygons.
//!
//! All arithmetic is over arbitrary-precision rationals; no decision ever
//! touches floating point.

pub mod affine;
pub mod arrangement;
pub mod bolle;
pub mod classify;
pub mod cli;
pub mod diophantine;
pub mod error;
pub mod families;
pub mod geom;
pub mod io;
pub mod lattice;
pub mod local;
pub mod polygon;
pub mod rational;
pub mod svg;

pub use affine::{AffineMap, LinearMap};
pub use arrangement::{
    multiplicity_at, overlapping_translates, slab_sample_points, verify_k_fold, MultiplicityReport,
};
pub use bolle::{check_bolle, half_lattice_points_on_segment, BolleReport};
pub use classify::{classify, Classification, RejectReason};
pub use error::Error;
pub use families::{Family, FamilyInstance};
pub use geom::{intersect_segments, Intersection, Point, Rect, Segment, Vector};
pub use lattice::{Lattice, TranslateSet};
pub use local::{
    check_vertex_sums, vertex_star, wheels_at, VertexStar, VertexSumTable, WheelReport,
};
pub use polygon::{CSPolygon, Location, Orientation};
pub use rational::Rational;
pub use svg::{render_svg, RenderMode, RenderSpec};
