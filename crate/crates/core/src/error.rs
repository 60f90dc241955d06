use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("code has {cardinality} codewords, above the enumeration guard of 2^{guard_log2}")]
    CardinalityTooLarge {
        cardinality: String,
        guard_log2: u32,
    },

    #[error(
        "MacWilliams transform produced non-integer coefficient {coefficient} at y^{exponent}"
    )]
    NonIntegerResult { exponent: u32, coefficient: String },

    #[error("torsion code differs from the dual of the residue code")]
    TorsionMismatch,

    #[error("no weight enumerator satisfies the constraints")]
    NoSolution,

    #[error("solution is not unique: solution space has dimension {dimension}")]
    NonUnique { dimension: usize },

    #[error("code is not self-dual: {reason}")]
    NotSelfDual { reason: String },

    #[error("residue code is not doubly even: {reason}")]
    NotDoublyEven { reason: String },

    #[error("torsion completion did not produce a self-dual code")]
    CompletionFailed,

    #[error("enumeration exceeded its node budget of {budget}")]
    BudgetExceeded { budget: u64 },

    #[error("lattice is not odd: every basis vector has even norm")]
    NotOdd,

    #[error("lattice is not unimodular")]
    NotUnimodular,

    #[error("dimension {0} is not divisible by 4")]
    DimensionNotDivisibleBy4(usize),

    #[error("unknown dataset name `{0}`")]
    UnknownName(String),

    #[error("linear solve failed: {0}")]
    SolveFailed(String),

    #[error("alpha = {0} outside 0..=16")]
    AlphaOutOfRange(i64),

    #[error("theta parameters violate constraints: {0}")]
    ConstraintViolated(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
