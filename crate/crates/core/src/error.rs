use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid proportion: {0}")]
    InvalidProportion(String),
    #[error("graph has {n} vertices; at most {max} are supported here")]
    TooLarge { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("floor(r*n) is 0 for n = {n}, r = {r}; the formula needs a positive threshold")]
    ZeroThreshold { n: usize, r: String },
    #[error("edge count {m} out of range for {n} vertices (max {max})")]
    EdgeCountOutOfRange { n: usize, m: usize, max: usize },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
