//! Curve files, angle sweeps, canonical JSON reports and SVG output for the
//! inscribed-rhombus search in [`rhombic_core`].

mod error;
pub mod io;
pub mod json;
pub mod report;
pub mod svg;

pub use error::Error;
pub use rhombic_core as core;
