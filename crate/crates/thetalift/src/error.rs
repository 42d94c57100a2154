use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("incompatible coefficient rings: {0}")]
    IncompatibleRings(String),
    #[error("leading coefficient is not a unit")]
    NonUnitLeading,
    #[error("degenerate Gram matrix")]
    DegenerateGram,
    #[error("gram matrix is not even: diagonal entry {0} is odd")]
    OddDiagonal(i64),
    #[error("indefinite lattice without a negative plane")]
    IndefiniteWithoutMajorant,
    #[error("matrix is not in SL2(Z): {0}")]
    NotSl2(String),
    #[error("requested precision unreachable: {0}")]
    PrecisionUnreachable(String),
    #[error("zeta argument must be an even integer >= 2, got {0}")]
    OddZetaArgument(i64),
    #[error("outside region of convergence: {0}")]
    OutsideConvergence(String),
    #[error("insufficient expansion order: {0}")]
    InsufficientOrder(String),
    #[error("characteristic polynomial of T_2 is not squarefree in weight {0}")]
    NonSquarefree(i64),
    #[error("unsupported coefficient field: {0}")]
    UnsupportedField(String),
    #[error("parity or weight mismatch: {0}")]
    ParityMismatch(String),
    #[error("principal part is not integral")]
    NonIntegralPrincipalPart,
    #[error("missing Weyl vector")]
    MissingWeylVector,
    #[error("divergent exponent bookkeeping: {0}")]
    DivergentExponent(String),
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("invalid lattice description: {0}")]
    InvalidLattice(String),
    #[error("tail bound unavailable: {0}")]
    NoTailBound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
