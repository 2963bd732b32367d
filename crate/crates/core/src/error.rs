use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point count must be positive")]
    NoPoints,
    #[error("endpoint {0} is used by more than one arc")]
    DuplicateEndpoint(usize),
    #[error("point {point} is outside 1..={n}")]
    OutOfRange { point: usize, n: usize },
    #[error("arc ({0},{0}) joins a point to itself")]
    SelfArc(usize),
    #[error("n = {n} exceeds the exhaustive-enumeration cap {cap}")]
    ResourceCap { n: usize, cap: usize },
    #[error("size mismatch: {left} points vs {right} points")]
    SizeMismatch { left: usize, right: usize },
    #[error("arc count {k} is impossible on {n} points")]
    ArcCountOutOfRange { n: usize, k: usize },
    #[error("no unique minimal involution with {k} arcs on {n} points")]
    NoUniqueMinimum { n: usize, k: usize },
    #[error("at least two fixed points are needed to add an arc")]
    NoFixedPoints,
    #[error("involution {0} has a crossing or a fixed point under an arc")]
    NotMaximal(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("{0} is a descent of the tableau")]
    DescentAtI(usize),
    #[error("invalid poset record: {0}")]
    InvalidPoset(String),
    #[error("tableaux have different shapes: ({n1},{k1}) vs ({n2},{k2})")]
    ShapeMismatch {
        n1: usize,
        k1: usize,
        n2: usize,
        k2: usize,
    },
}
