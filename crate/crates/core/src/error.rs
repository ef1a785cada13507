use thiserror::Error;

/// Errors produced by the graph, search and construction layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("capacity exceeded: {requested} vertices requested, at most {capacity} supported")]
    CapacityExceeded { requested: usize, capacity: usize },

    #[error("graph is not geodetic: vertex {vertex} has two predecessors at distance {level}")]
    NotGeodetic { vertex: usize, level: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("subdivision parameter must be even, got {0}")]
    OddParameter(usize),

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6: {0}")]
    Graph6(String),
}

pub type Result<T> = std::result::Result<T, Error>;
