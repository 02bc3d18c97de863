use thiserror::Error;

use crate::ring::RingSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: expected {0}, got {1}")]
    RingMismatch(RingSpec, RingSpec),
    #[error("invalid modulus `{0}` (need 2 <= m <= 4294967295)")]
    InvalidModulus(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial is not monic: leading coefficient must be 1")]
    NotMonic,
    #[error("polynomial must have degree at least 1")]
    ZeroDegree,
    #[error("{what}: degree {n} exceeds the cap {cap} (raise it with {flag})")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
        flag: &'static str,
    },
    #[error("level {level} is out of range for degree {n}")]
    LevelOutOfRange { level: usize, n: usize },
    #[error("operation requires the complete splitting algebra (level {n}), got level {level}")]
    NotComplete { level: usize, n: usize },
    #[error("elements belong to different splitting contexts")]
    ContextMismatch,
    #[error("not a permutation of 1..{n}: {perm:?}")]
    NotAPermutation { n: usize, perm: Vec<usize> },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("non-scalar result for {0}")]
    NonScalar(&'static str),
    #[error("enumeration bound exceeded: {0}")]
    EnumerationBound(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
