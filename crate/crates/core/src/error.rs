use alloc::string::String;
use core::fmt;

/// Errors raised by the state engine, the coherence metrics and the
/// scenario builder.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A state must carry at least one mode.
    InvalidModeCount(usize),
    ModeOutOfRange { mode: usize, n_modes: usize },
    /// Two-mode operations need two distinct modes.
    SameMode(usize),
    DuplicateMode(usize),
    /// A parameter fell outside its admissible range.
    InvalidParameter {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },
    DimensionMismatch { expected: usize, found: usize },
    /// Covariance matrix is not symmetric within tolerance.
    NotSymmetric(f64),
    /// `V + iΩ` has a negative eigenvalue beyond tolerance.
    Unphysical(f64),
    /// A symplectic eigenvalue fell below `1 - 1e-6`.
    SymplecticEigenvalueBelowOne(f64),
    /// Coherence came out negative beyond round-off.
    NegativeCoherence(f64),
    OverlappingPartition(usize),
    UnknownLabel(String),
    InvalidGrid(&'static str),
}

impl Error {
    /// True for failures that signal a numerical or physicality problem
    /// rather than bad caller input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NotSymmetric(_)
                | Error::Unphysical(_)
                | Error::SymplecticEigenvalueBelowOne(_)
                | Error::NegativeCoherence(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModeCount(n) => write!(f, "mode count must be positive, got {n}"),
            Error::ModeOutOfRange { mode, n_modes } => {
                write!(f, "mode {mode} out of range for {n_modes} mode(s)")
            }
            Error::SameMode(m) => write!(f, "two-mode operation needs distinct modes, got {m} twice"),
            Error::DuplicateMode(m) => write!(f, "mode {m} listed more than once"),
            Error::InvalidParameter { name, value, expected } => {
                write!(f, "parameter {name} = {value} out of range (expected {expected})")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotSymmetric(d) => write!(f, "covariance matrix not symmetric (max deviation {d:e})"),
            Error::Unphysical(e) => {
                write!(f, "covariance violates the uncertainty relation (min eigenvalue {e:e})")
            }
            Error::SymplecticEigenvalueBelowOne(v) => {
                write!(f, "unphysical symplectic eigenvalue {v}")
            }
            Error::NegativeCoherence(c) => write!(f, "negative coherence {c:e}"),
            Error::OverlappingPartition(m) => write!(f, "mode {m} appears in both partitions"),
            Error::UnknownLabel(l) => write!(f, "unknown mode label `{l}`"),
            Error::InvalidGrid(why) => write!(f, "invalid sweep grid: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
