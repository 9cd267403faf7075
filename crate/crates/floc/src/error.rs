use thiserror::Error;

/// Errors surfaced by the engine.
///
/// `Inconclusive` is a first-class outcome: a stabilization heuristic ran out
/// of stages before its plateau was reached.  It is never silently converted
/// into an answer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime (field characteristic must be 0 or a prime)")]
    NotPrime(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("zero ideal not allowed here: {0}")]
    ZeroIdeal(String),

    #[error("unit ideal not allowed here: {0}")]
    UnitIdeal(String),

    #[error("tensor factors are both non-flat; at least one side must be a complex of free/localized pieces")]
    TensorNonFlat,

    #[error("chain map fails to commute with differentials at index {index}, degree {degree}")]
    NotChainMap { index: i64, degree: String },

    #[error("operation needs a complex of flat pieces (frees and localizations), got a non-flat piece at index {0}")]
    NotFlat(i64),

    #[error("operation supports modules, complexes of frees, and their shifts; this complex is outside that class")]
    UnsupportedComplex,

    #[error("inconclusive: {what} did not stabilize within {stages} stages at index {index}, degree {degree} (plateau {plateau})")]
    Inconclusive {
        what: String,
        index: i64,
        degree: String,
        stages: usize,
        plateau: usize,
    },

    #[error("routes disagree: {0}")]
    RouteDisagreement(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("parse error at offset {offset}: {msg}")]
    ParseOffset { offset: usize, msg: String },

    #[error("unresolved name `{0}`")]
    Unresolved(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
