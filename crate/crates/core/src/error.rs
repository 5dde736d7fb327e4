use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    Order(usize),
    #[error("combined order {0} exceeds 64")]
    Overflow(usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    Vertex { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("polynomial division not exact")]
    InexactDivision,
    #[error("refinement budget exhausted while separating roots")]
    RefinementBudget,
    #[error("requested size {0} exceeds the resource cap")]
    ResourceCap(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
