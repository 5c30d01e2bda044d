use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("uniformity must be at least 2, got {0}")]
    InvalidUniformity(usize),
    #[error("edge {edge:?} has {found} vertices, expected {expected}")]
    NonUniform {
        edge: Vec<u32>,
        expected: usize,
        found: usize,
    },
    #[error("edge {0:?} repeats a vertex")]
    RepeatedVertex(Vec<u32>),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<u32>),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("coloring has length {found}, hypergraph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("color {color} at vertex {vertex} is not below t = {t}")]
    ColorOutOfRange {
        vertex: usize,
        color: usize,
        t: usize,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("parameter {name} = {value} violates {bound}")]
    Parameter {
        name: &'static str,
        value: usize,
        bound: &'static str,
    },
    #[error("invalid split pattern: {0}")]
    InvalidPattern(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("malformed embedding text at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {0} lists itself as a neighbor")]
    Loop(u32),
    #[error("vertex {0} lists neighbor {1} more than once")]
    ParallelEdge(u32, u32),
    #[error("neighbor {1} of vertex {0} does not exist")]
    UnknownVertex(u32, u32),
    #[error("adjacency is not symmetric: {0} lists {1} but not conversely")]
    Asymmetric(u32, u32),
    #[error("embedding is not connected")]
    Disconnected,
    #[error("embedding is not planar: V - E + F = {0}")]
    NotPlanar(i64),
    #[error("embedding is not a triangulation")]
    NotTriangulation,
    #[error("triangulation is not Eulerian")]
    NotEulerian,
    #[error("triangulation enumeration supports 4 <= n <= 13, got {0}")]
    ScaleRefused(usize),
}
