use thiserror::Error;

use crate::lattice::IntVector;

/// Errors produced by the geometric and algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty point set")]
    EmptySupport,

    #[error("wrong number of arguments: expected {expected}, found {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("rank precondition violated: expected rank {expected}, found {found}")]
    RankPrecondition { expected: usize, found: usize },

    #[error("no fine subdivision found after {attempts} liftings (last seed {last_seed})")]
    GenericityFailure { attempts: u32, last_seed: u64 },

    #[error("subdivision is not fine")]
    NotFine,

    #[error("cell is not a transverse intersection point")]
    NonTransverse,

    #[error("tuple is not 2-developed; witness covector {witness}")]
    NotTwoDeveloped { witness: IntVector },

    #[error("tuple is not prickly; witness covector {witness}")]
    NotPrickly { witness: IntVector },

    #[error("vector must be nonzero")]
    ZeroVector,

    #[error("exponent matrix is singular")]
    SingularSystem,

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("grading {0} does not select a unique vertex")]
    GradingTie(String),

    #[error("missing weight for support {support}, point {point}")]
    MissingWeight { support: usize, point: usize },

    #[error("weights must be strictly positive")]
    NonPositiveWeight,

    #[error("support is not of the form {{0, 1, ..., d}}")]
    NonDenseSupport,

    #[error("invalid resultant input: {0}")]
    InvalidResultantInput(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

impl Error {
    /// Stable machine-readable name used by the command line front end.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::EmptySupport => "empty_support",
            Error::WrongArity { .. } => "wrong_arity",
            Error::NotSquare { .. } => "not_square",
            Error::RankPrecondition { .. } => "rank_precondition",
            Error::GenericityFailure { .. } => "genericity_failure",
            Error::NotFine => "not_fine",
            Error::NonTransverse => "non_transverse",
            Error::NotTwoDeveloped { .. } => "not_two_developed",
            Error::NotPrickly { .. } => "not_prickly",
            Error::ZeroVector => "zero_vector",
            Error::SingularSystem => "singular_system",
            Error::Consistency(_) => "consistency",
            Error::GradingTie(_) => "grading_tie",
            Error::MissingWeight { .. } => "missing_weight",
            Error::NonPositiveWeight => "non_positive_weight",
            Error::NonDenseSupport => "non_dense_support",
            Error::InvalidResultantInput(_) => "invalid_resultant_input",
            Error::InvalidInput(_) => "invalid_input",
            Error::Overflow => "overflow",
        }
    }

    /// Whether the error reports a failed mathematical precondition (as opposed
    /// to malformed input).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotTwoDeveloped { .. }
                | Error::NotPrickly { .. }
                | Error::GradingTie(_)
                | Error::SingularSystem
                | Error::NotFine
                | Error::NonTransverse
                | Error::GenericityFailure { .. }
                | Error::RankPrecondition { .. }
                | Error::ZeroVector
                | Error::InvalidResultantInput(_)
                | Error::NonDenseSupport
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
