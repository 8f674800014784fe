use std::fmt;

use crate::decomposition::MonotoneTag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which line of a matrix a decomposition describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Column(usize),
    /// The single host of a vector decomposition.
    Vector,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {i}"),
            Line::Column(j) => write!(f, "column {j}"),
            Line::Vector => f.write_str("vector"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,
    #[error("dimension {n} exceeds the supported maximum {max}")]
    DimensionTooLarge { n: usize, max: usize },
    #[error("expected {expected} entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("entry {value} at position {position} exceeds the magnitude bound {bound}")]
    EntryOutOfBounds { value: i64, position: usize, bound: i64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("integer overflow while adding {x} and {y}")]
    Overflow { x: i64, y: i64 },

    #[error("part {part}: index {index} is out of range for host length {len}")]
    IndexOutOfRange { part: usize, index: usize, len: usize },
    #[error("part {part}: indices are not strictly increasing at index {index}")]
    UnsortedIndices { part: usize, index: usize },
    #[error("part {part}: index {index} already belongs to an earlier part")]
    Overlap { part: usize, index: usize },
    #[error("index {index} is not covered by any part")]
    CoverageGap { index: usize },
    #[error("part {part}: values violate {tag} order at index {index}")]
    OrderViolation { part: usize, index: usize, tag: MonotoneTag },
    #[error("{line}: {source}")]
    InLine { line: Line, source: Box<Error> },

    #[error("{line}, part {part}: tagged {found}, which is not admissible as {expected}")]
    DirectionViolation { line: Line, part: usize, found: MonotoneTag, expected: MonotoneTag },
    #[error("{line}, part {part}: values are not all equal")]
    UniformViolation { line: Line, part: usize },
    #[error("decomposition set describes {found}, expected {expected}")]
    AxisMismatch { expected: &'static str, found: &'static str },
    #[error("expected {expected} line decompositions, found {found}")]
    DecompositionCount { expected: usize, found: usize },

    #[error("convolution coefficients may reach {bound}, beyond the exact window {window}")]
    PrecisionWindowExceeded { bound: u128, window: u64 },
    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter { name: &'static str, value: usize, reason: &'static str },
}

impl Error {
    pub(crate) fn in_line(self, line: Line) -> Error {
        Error::InLine { line, source: Box::new(self) }
    }
}
