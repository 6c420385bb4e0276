use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not simple (loops or parallel edges)")]
    NotSimple,

    #[error("search budget exceeded: p+q = {size} > cap {cap}")]
    BudgetExceeded { size: usize, cap: usize },

    #[error("invalid arc assignment: {0}")]
    Assignment(String),

    #[error("family members are not in a common class: {0}")]
    MixedFamily(String),

    #[error("labeled digraph is not in the required class: {0}")]
    NotInClass(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("malformed vertex partition: {0}")]
    MalformedPartition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
