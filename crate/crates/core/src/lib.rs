//! Inscribed rhombi of prescribed diagonal angle in polygonal Jordan curves.
//!
//! For an angle `θ`, the chord midpoints of direction `θ` between the two
//! support-bounded arcs of a closed curve form a *median*. Medians of the
//! angles `θ` and `θ + π/2` always meet when no special corner of angle `θ`
//! exists, and every meeting point is the center of an inscribed rhombus
//! whose diagonals have those two directions. On polygons every median is a
//! finite union of segments, so the whole construction is computed exactly
//! (up to floating point rounding).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and the
//! command line live in the companion `rhombic` crate.
//!
//! Module map:
//!
//! - [`curve`]: polygonal Jordan curves, simplicity checks, fixture generators.
//! - [`frame`]: support lines, extremal points and arc splitting for one angle.
//! - [`median`]: exact median construction and parameter-space zero masks.
//! - [`separation`]: digital corner separation and mask intersection.
//! - [`search`]: median intersection and rhombus lifting/validation.
//! - [`corners`]: special corners, their angle sets, sweep planning.
//! - [`two_corner`]: the refined search near the direction of two corners.
//! - [`oracle`]: an independent brute-force finder used for cross-checks.

#![no_std]

extern crate alloc;

pub mod corners;
pub mod curve;
mod error;
pub mod frame;
pub mod geom;
pub mod median;
pub mod oracle;
pub mod search;
pub mod separation;
pub mod two_corner;

pub use error::Error;
pub use geom::Point;

/// Relative tolerance (times the curve diameter) for "lies on a support line".
pub const SUPPORT_TOL: f64 = 1e-9;

/// Relative tolerance (times the curve diameter) below which two rhombus
/// vertices or two centers are considered the same point.
pub const DEGENERACY_FLOOR: f64 = 1e-7;
