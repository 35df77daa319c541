use thiserror::Error;

use crate::weight::Weight;

/// Structural problems with a graph or matrix. Vertex ids in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("row {} has {len} entries, expected {n}", row + 1)]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("diagonal entry of vertex {} is {weight}, expected 0", vertex + 1)]
    NonZeroDiagonal { vertex: usize, weight: Weight },
    #[error("self-loop on vertex {}", vertex + 1)]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {} -> {}", src + 1, dst + 1)]
    DuplicateEdge { src: usize, dst: usize },
    #[error("vertex {} out of range for {n} vertices", vertex + 1)]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("weight {weight} on {} -> {} exceeds the 2^40 magnitude bound", src + 1, dst + 1)]
    WeightOutOfBounds { src: usize, dst: usize, weight: Weight },
}

/// What went wrong while reading a matrix or edge-list file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEof(&'static str),
    #[error("malformed token `{0}`")]
    BadToken(String),
    #[error("trailing token `{0}` after the last matrix entry")]
    TrailingToken(String),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing problem line `p sp <n> <m>`")]
    MissingHeader,
    #[error("unknown line type `{0}`")]
    UnknownLine(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parse failure located at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Errors from the single-source baselines and Johnson's algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaselineError {
    #[error("source {} out of range for {n} vertices", start + 1)]
    SourceOutOfRange { start: usize, n: usize },
    #[error("Dijkstra requires non-negative weights; edge {} -> {} has weight {weight}", src + 1, dst + 1)]
    NegativeEdge { src: usize, dst: usize, weight: i64 },
    #[error("negative cycle through vertex {}", vertex + 1)]
    NegativeCycle { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("requested {m} edges but {n} vertices admit at most {max}")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("weight range [{min}, {max}] is empty")]
    EmptyWeightRange { min: i64, max: i64 },
    #[error("weight range [{min}, {max}] exceeds the 2^40 magnitude bound")]
    WeightRangeOutOfBounds { min: i64, max: i64 },
    #[error("graph needs at least one vertex")]
    NoVertices,
}
