//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error(
        "enumeration budget exceeded: {needed} iterations needed, budget is {budget}; \
         use the Monte Carlo variant for domains of this size"
    )]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("operation requires a polynomial with zero shift, found shift {shift}")]
    NonzeroShift { shift: String },

    #[error("operation is defined at top degree only: got {given} derivative directions for a degree-{degree} polynomial")]
    DegreeMismatch { degree: usize, given: usize },

    #[error("zero linear form rejected")]
    ZeroForm,

    #[error("forms {i} and {j} are linearly dependent; operation requires pairwise independence")]
    PairwiseDependent { i: usize, j: usize },

    #[error("infeasible signature (d={d}, k={k}) at p={p}, n={n}: {reason}")]
    InfeasibleSignature {
        d: usize,
        k: usize,
        p: u64,
        n: usize,
        reason: String,
    },

    #[error("sampling budget exhausted after {attempts} attempts{detail}")]
    SampleBudgetExhausted { attempts: u64, detail: String },

    #[error("rewrite iteration cap ({cap}) reached; state: {state}")]
    RewriteIterationCap { cap: u64, state: String },

    #[error("inconsistent target: row {row} is not in the consistency group of its signature")]
    InconsistentTarget { row: usize },

    #[error("parse error: {msg}")]
    Parse { msg: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse { msg: msg.into() }
    }

    /// Machine-readable discriminant used in JSON violation records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::NonzeroShift { .. } => "nonzero_shift",
            Error::DegreeMismatch { .. } => "degree_mismatch",
            Error::ZeroForm => "zero_form",
            Error::PairwiseDependent { .. } => "pairwise_dependent",
            Error::InfeasibleSignature { .. } => "infeasible_signature",
            Error::SampleBudgetExhausted { .. } => "sample_budget_exhausted",
            Error::RewriteIterationCap { .. } => "rewrite_iteration_cap",
            Error::InconsistentTarget { .. } => "inconsistent_target",
            Error::Parse { .. } => "parse_error",
            Error::Internal(_) => "internal",
            Error::Io(_) => "io",
        }
    }
}
