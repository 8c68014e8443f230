use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("diagonal entry ({0},{0}) must be +inf")]
    DiagonalNotInfinite(usize),

    #[error("symmetric instance has c({i},{j}) != c({j},{i})")]
    SymmetryViolation { i: usize, j: usize },

    #[error("symmetric instance has negative cost c({i},{j})")]
    NegativeCost { i: usize, j: usize },

    #[error("off-diagonal entry ({i},{j}) must be finite")]
    NonFiniteEntry { i: usize, j: usize },

    #[error("invalid point set: {0}")]
    InvalidPoints(String),

    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),

    #[error("n = {0} is too large for exact unique-cost arithmetic (max 12)")]
    Overflow(usize),

    #[error("edge ({0},{0}) is a self loop")]
    SelfLoop(usize),

    #[error("vertex out of range: {vertex} not in 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("all entries are +inf")]
    AllInfinite,

    #[error("all finite entries are equal; range is degenerate")]
    DegenerateRange,

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("rank {rank} out of range 1..={max}")]
    RankOutOfRange { rank: String, max: String },

    #[error("cycle must start at vertex {n}")]
    NotAnchoredAtN { n: usize },

    #[error("cycle sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("n = {n} exceeds the brute-force cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("log2(n - T) undefined or zero: n = {n}, T = {tubes}")]
    DegenerateDenominator { n: usize, tubes: usize },

    #[error("assignment point is not a permutation matrix: {0}")]
    InvalidPoint(String),

    #[error("assignment splits into subtours of lengths {0:?}")]
    Subtour(Vec<usize>),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
