//! Crate-wide error type.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the quantum, isomorphism, protocol
/// and region layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid quantum state: {0}")]
    InvalidState(String),

    #[error("invalid dichotomic observable `{label}`: {reason}")]
    InvalidObservable { label: String, reason: String },

    #[error("observable is not projective: max |A^2 - 1| = {deviation:.3e}")]
    NotProjective { deviation: f64 },

    #[error("correlation has imaginary residue {imag:.3e} above tolerance")]
    NonRealCorrelation { imag: f64 },

    #[error("unknown measurement setting `{0}`")]
    UnknownSetting(String),

    #[error("Alice setting `{setting}` is biased: <A> = {bias:.3e}")]
    BiasedAlice { setting: String, bias: f64 },

    #[error("steering branch probability {probability:.3e} is below threshold")]
    ZeroProbabilityBranch { probability: f64 },

    #[error("Gram matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e}")]
    NonPsdGram { min_eigenvalue: f64 },

    #[error("vector norm {norm} exceeds the unit hyperball")]
    NormViolation { norm: f64 },

    #[error("expectation value {value} lies outside [-1, 1]")]
    ExpectationOutOfRange { value: f64 },

    #[error("|y| = 1 discards every outcome; the flip probability is undefined")]
    DegenerateDiscard,

    #[error("flip probability q = {q} falls outside [0, 1]")]
    InvalidFlipProbability { q: f64 },

    #[error("no convex strategy exists: constraint violated by {excess:.3e}")]
    Infeasible { excess: f64 },

    #[error("no admissible z satisfies the region constraints")]
    EmptyInterval,

    #[error("invalid strategy weights: {0}")]
    InvalidWeights(String),

    #[error("instance generator exhausted its rejection budget after {attempts} attempts")]
    RejectionBudgetExceeded { attempts: usize },

    #[error("grid contains no point of C outside D")]
    CounterexampleNotFound,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
