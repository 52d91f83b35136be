use thiserror::Error;

/// Errors reported by the structure builders and decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (universe has {n} vertices)")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("edge index {edge} out of range (hypergraph has {m} edges)")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("edge {edge} lists vertex {vertex} more than once")]
    DuplicateVertexInEdge { edge: usize, vertex: u32 },
    #[error("edges {first} and {second} are identical")]
    DuplicateEdge { first: usize, second: usize },
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: u32 },
    #[error("{what} exceeds guard: {value} > {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("hypergraph is not Sperner")]
    NotSperner,
    #[error("hypergraph has dimension {dim}, expected at most {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },
    #[error("hypergraph is not 2-uniform")]
    NotTwoUniform,
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
