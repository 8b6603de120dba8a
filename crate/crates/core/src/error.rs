use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("zero weight where a nonzero one is required")]
    ZeroWeight,

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("multiset size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),

    #[error("edge label has {got} entries, graph rank is {expected}")]
    LabelRank { expected: usize, got: usize },

    #[error("generators are linearly dependent")]
    DependentGenerators,

    #[error("weights do not form a basis")]
    NotABasis,

    #[error("degenerate blow-up at `{0}`: repeated weights")]
    DegenerateBlowup(String),

    #[error("blow-up requires rank = half_dim (torus manifold level)")]
    BlowupRank,

    #[error("sum is not a constant")]
    NotAConstant,

    #[error("denominator form {0} vanishes at the given point")]
    VanishingDenominator(String),

    #[error("degree vanishing violated: degree-{degree} pushforward is {value}, expected 0")]
    DegreeVanishingViolated { degree: u32, value: String },

    #[error("partition degree {got} does not match half_dim {expected}")]
    PartitionDegree { expected: u32, got: u32 },

    #[error("partition parts must be positive")]
    EmptyPartitionPart,

    #[error("circle direction pairs to zero with edge label {0}")]
    ZeroPairing(String),

    #[error("inconsistent normal data on component containing `{0}`")]
    InconsistentNormalData(String),

    #[error("graph failed {level} validation: {first}")]
    InvalidGraph { level: String, first: String },

    #[error("non-integral genus coefficient {0}")]
    NonIntegralGenus(String),

    #[error("no {degree}-regular graph on {vertices} vertices: parity infeasible")]
    InfeasibleParity { vertices: usize, degree: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
