use thiserror::Error;

/// Errors raised by the permutation, graph and decoration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once in the cycle list")]
    RepeatedPoint(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("images do not form a bijection of 1..={0}")]
    NotBijective(usize),
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("permutation {0} is not an element of the group")]
    NotInGroup(String),
    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("graph has {vertices} vertices, above the configured bound {bound}")]
    VertexBoundExceeded { vertices: usize, bound: usize },
    #[error("ladder size must be at least {min}, got {n}")]
    LadderTooSmall { n: usize, min: usize },
    #[error("{k} is not a divisor of {two_n} at least 2")]
    BadDivisor { k: usize, two_n: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid decoration: {}", .0.join("; "))]
    InvalidDecoration(Vec<String>),
    #[error("operation requires the K3,3 graph")]
    NotK33,
    #[error("admissible elements are not closed under composition: {0}")]
    ClosureFailure(String),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
