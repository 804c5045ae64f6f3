use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of 32")]
    UnsupportedOrder(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("edge {0}-{1} is not present")]
    EdgeAbsent(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} given twice where two distinct vertices are required")]
    SameVertex(usize),
    #[error("adjacency row {0} is not symmetric, loop-free and in range")]
    CorruptAdjacency(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("input graph is bipartite")]
    BipartiteInput,
    #[error("graph has fewer than two vertices")]
    TooSmall,
    #[error("precoloring is not proper or uses a color outside the palette: {0}")]
    ImproperPrecoloring(String),
    #[error("exact solver exceeded its budget of {0} branch nodes")]
    SolverBudgetExceeded(u64),
    #[error("invalid separation: {0}")]
    InvalidSeparation(String),
    #[error("corpus read error: {0}")]
    CorpusRead(String),
}
