use thiserror::Error;

/// Errors surfaced by the library. Most operators are total on valid inputs;
/// errors arise from constructor preconditions, windows, and parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid bead count: partition has {length} nonzero parts but N = {n_beads}")]
    InvalidBeadCount { length: usize, n_beads: usize },

    #[error("flip window [0, {window}) does not cover bead at position {bead}")]
    IncompleteWindow { window: i64, bead: i64 },

    #[error("pole at q = 0: lowest exponent is {lo}")]
    PoleAtZero { lo: i64 },

    #[error("three-row formula domain: {0}")]
    ThreeRowDomain(String),

    #[error("jacobi-trudi guard: sequence length {length} exceeds {max}")]
    JacobiTrudiTooLong { length: usize, max: usize },

    #[error("invalid history: {0}")]
    InvalidHistory(String),

    #[error("word parse error at token {index} ({token:?}): {reason}")]
    WordParse {
        index: usize,
        token: String,
        reason: String,
    },

    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
