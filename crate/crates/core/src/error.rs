use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word entries must be positive, found 0 at position {position}")]
    ZeroEntry { position: usize },

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("{word} is not a Cayley permutation")]
    NotCayley { word: String },

    #[error("{word} is not a permutation")]
    NotPermutation { word: String },

    #[error("{object} is not in {class}")]
    NotInClass { object: String, class: String },

    #[error("{object} contains the pattern {pattern}")]
    ContainsPattern { object: String, pattern: String },

    #[error("invalid flat decomposition: {reason}")]
    InvalidDecomposition { reason: String },

    #[error("invalid set partition: {reason}")]
    InvalidPartition { reason: String },

    #[error("invalid composition: {reason}")]
    InvalidComposition { reason: String },

    #[error("invalid Dyck path: {reason}")]
    InvalidPath { reason: String },

    #[error("internal consistency violated for {word}: {reason}")]
    InternalConsistency { word: String, reason: String },

    #[error("no closed form for pattern {pattern} on class {class}")]
    NoClosedForm { pattern: String, class: String },

    #[error("count table {label} has no entry for n = {n}")]
    MissingEntry { label: String, n: usize },

    #[error("size {n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("series precondition failed: {reason}")]
    Series { reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
