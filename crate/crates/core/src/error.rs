use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map onto the command-line exit codes: `InvalidInput`,
/// `Domain` and `NotCosetClosed` are caller mistakes, `NoConstruction`
/// means no construction's precondition holds, and `Invariant` signals a
/// failed internal consistency check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("set is not closed under multiplication by 4 mod {n}: {element} ↦ {image} missing")]
    NotCosetClosed { n: usize, element: usize, image: usize },

    #[error("multiplier {a} is not invertible mod {n}")]
    NotInvertible { a: i64, n: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no applicable construction: {}", .0.join("; "))]
    NoConstruction(Vec<String>),

    #[error("inconsistent distance evidence: lower bound {lo} exceeds upper bound {hi}")]
    InconsistentBounds { lo: usize, hi: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
