use std::fmt;

/// Errors raised by series evaluation, parameter validation and the
/// spectral oracle.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// No numerator parameter terminates the series at the stated degree.
    NonTerminatingSeries,
    /// A denominator Pochhammer factor vanishes inside the summed range.
    ZeroDenominatorFactor { offset: usize },
    /// A zero denominator factor in a Pochhammer ratio has no matching
    /// zero in the numerator, so no finite limit exists.
    UnmatchedZeroFactor { offset: usize },
    /// Parameters fall outside the positivity window required for the
    /// weight function, squared norm or matrix entries.
    OutsideWindow(String),
    /// A squared matrix entry came out nonpositive.
    NegativeRadicand { index: usize },
    /// Requested position is not on the q-grid of the model.
    OffGrid { twice_q: i64, twice_j: i64 },
    /// Matrix/vector dimensions do not agree.
    ShapeMismatch { expected: usize, got: usize },
    /// An iterative method exhausted its iteration budget.
    NoConvergence(&'static str),
    /// An argument is invalid (for example c <= 0).
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonTerminatingSeries => {
                write!(f, "no numerator parameter equals minus the truncation degree")
            }
            Self::ZeroDenominatorFactor { offset } => {
                write!(f, "denominator Pochhammer factor vanishes at offset {offset}")
            }
            Self::UnmatchedZeroFactor { offset } => {
                write!(f, "unmatched zero denominator factor at offset {offset}")
            }
            Self::OutsideWindow(what) => write!(f, "outside positivity window: {what}"),
            Self::NegativeRadicand { index } => {
                write!(f, "nonpositive radicand for matrix entry {index}")
            }
            Self::OffGrid { twice_q, twice_j } => {
                write!(f, "q = {}/2 is not on the grid -j..j with j = {}/2", twice_q, twice_j)
            }
            Self::ShapeMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Self::NoConvergence(what) => write!(f, "{what} did not converge"),
            Self::InvalidArgument(what) => write!(f, "{what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
