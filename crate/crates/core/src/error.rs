use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph needs at least two vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {u}-{v} has non-positive weight")]
    NonPositiveWeight { u: usize, v: usize },
    #[error("edge weights overflow the exact integer range")]
    WeightOverflow,
    #[error("graph not connected")]
    Disconnected,
    #[error("cut side is empty")]
    EmptySide,
    #[error("cut side contains every vertex")]
    FullSide,
    #[error("operands belong to different graphs")]
    MixedGraph,
    #[error("source and sink are the same vertex {0}")]
    SameVertex(usize),
    #[error("contraction sets overlap")]
    Overlap,
    #[error("contraction would merge the source and sink nodes")]
    Collapse,
    #[error("graph has {n} vertices, exceeding the limit of {max}")]
    TooLarge { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
