use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex set over {got} vertices does not match graph on {expected}")]
    UniverseMismatch { expected: usize, got: usize },
    #[error("not a partition of the vertex set: {0}")]
    InvalidPartition(&'static str),
    #[error("vertex set is not independent: {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("vertex set is not a clique: {0} and {1} are not adjacent")]
    NotClique(usize, usize),
    #[error("graph is not a split graph")]
    NotSplit,
    #[error("prefix length {m} out of range for clique of size {size}")]
    PrefixOutOfRange { m: usize, size: usize },
    #[error("instance too large: {n} vertices exceeds limit {cap}")]
    TooLarge { n: usize, cap: usize },
}
