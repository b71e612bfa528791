use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by curve construction and the search pipelines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Fewer than three distinct vertices.
    TooFewVertices { found: usize },
    /// A vertex coordinate is NaN or infinite.
    NonFinite { index: usize },
    /// Two consecutive vertices coincide.
    RepeatedVertex { index: usize },
    /// The closed polyline is not simple; pairs of crossing edge indices.
    SelfIntersection { pairs: Vec<(usize, usize)> },
    /// A generator specification is invalid.
    InvalidSpec(String),
    /// The curve is too degenerate for a support frame at this angle.
    DegenerateFrame { theta: f64 },
    /// Two corners cannot be posed as a two-corner frame.
    IncompatibleCorners(String),
    /// A posed angle lies outside the guaranteed two-corner interval.
    OutsideGuarantee { theta: f64, eps: f64 },
    /// A proven geometric property failed at tolerance scale.
    InvariantViolation(String),
    /// Two cell masks of different grid sizes were combined.
    ResolutionMismatch { left: usize, right: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooFewVertices { found } => {
                write!(f, "curve needs at least 3 distinct vertices, found {found}")
            }
            Error::NonFinite { index } => write!(f, "vertex {index} has a non-finite coordinate"),
            Error::RepeatedVertex { index } => {
                write!(f, "vertex {index} repeats its predecessor")
            }
            Error::SelfIntersection { pairs } => {
                write!(f, "curve is not simple:")?;
                for (i, (a, b)) in pairs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, " edges {a} and {b} intersect")?;
                }
                Ok(())
            }
            Error::InvalidSpec(msg) => write!(f, "invalid curve spec: {msg}"),
            Error::DegenerateFrame { theta } => {
                write!(f, "degenerate support frame at angle {theta}")
            }
            Error::IncompatibleCorners(msg) => write!(f, "incompatible corner pair: {msg}"),
            Error::OutsideGuarantee { theta, eps } => write!(
                f,
                "posed angle {theta} is outside the guaranteed interval (-{eps}, {eps})"
            ),
            Error::InvariantViolation(msg) => write!(f, "invariant violated: {msg}"),
            Error::ResolutionMismatch { left, right } => {
                write!(f, "mask resolutions differ: {left} vs {right}")
            }
        }
    }
}

impl core::error::Error for Error {}
