use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("subgroup is not a direct summand of the ambient lattice")]
    NotSaturated,

    #[error("matrix is not unimodular")]
    NotUnimodular,

    #[error("generators span the zero space")]
    ZeroSpan,

    #[error("enumeration box holds {cells} points, budget is {budget}")]
    BoxTooLarge { cells: u128, budget: u64 },

    #[error("ambient dimension {0} exceeds the supported maximum of {max}", max = crate::cone::MAX_DIMENSION)]
    DimensionTooLarge(usize),

    #[error("coefficient domains or variable counts differ")]
    DomainMismatch,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("generators have gcd {0}, not a numerical semigroup")]
    NotNumerical(u64),

    #[error("{0} is not an element of the semigroup")]
    NotMember(i64),

    #[error("membership undecided: {0}")]
    Undecided(String),

    #[error("gap report status {0} does not certify finiteness")]
    StatusNotCertified(String),

    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("polynomial has a negative exponent")]
    NegativeExponent,

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("integer overflow: {0}")]
    Overflow(&'static str),

    #[error("operation requires a coefficient field")]
    NotAField,

    #[error("invalid input: {0}")]
    Invalid(String),
}
