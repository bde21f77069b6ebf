use thiserror::Error;

/// Where a monotonicity violation was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    /// Index into the breakpoint list.
    Breakpoint(usize),
    /// Index into the segment list.
    Segment(usize),
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Location::Breakpoint(i) => write!(f, "breakpoint {i}"),
            Location::Segment(k) => write!(f, "segment {k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum Error {
    #[error("malformed shape: {breakpoints} breakpoints need {} segments, got {segments}", breakpoints + 1)]
    MalformedShape { breakpoints: usize, segments: usize },

    #[error("breakpoints are not strictly increasing at index {0}")]
    UnsortedBreakpoints(usize),

    #[error("monotonicity violation at {location}: {detail}")]
    MonotonicityViolation { location: Location, detail: String },

    #[error("non-positive denominator in {0:?}")]
    NonPositiveDenominator(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("function is not {side}-continuous at x = {witness}")]
    NotOneSidedContinuous { side: Side, witness: String },

    #[error("not right-continuous at x = {0}")]
    NotRightContinuous(String),

    #[error("limits at -inf/+inf must be 0 and 1, got {at_neg_inf} and {at_pos_inf}")]
    BadLimits { at_neg_inf: String, at_pos_inf: String },

    #[error("value {value} at x = {x} lies outside [0, 1]")]
    OutOfUnitRange { x: String, value: String },

    #[error("empty sample")]
    EmptySample,

    #[error("unknown property {0:?}")]
    UnknownProperty(String),

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
