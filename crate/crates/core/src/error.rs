use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("vertex {vertex} has degree {actual}, expected {expected}")]
    NotBiregular {
        vertex: Vertex,
        expected: usize,
        actual: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("degree equation violated: a*x = {lhs} but b*y = {rhs}")]
    DegreeEquationViolated { lhs: usize, rhs: usize },
    #[error("configuration model rejected {retries} matchings in a row")]
    RetriesExhausted { retries: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("vertex {vertex} out of range for part of size {size}")]
    IndexOutOfRange { vertex: Vertex, size: usize },
    #[error("duplicate edge ({x}, {y})")]
    DuplicateEdge { x: usize, y: usize },
    #[error("vertex set contains vertices from the wrong part")]
    PartMismatch,
    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },
    #[error("graph has {n} vertices, need at least {min}")]
    TooSmall { n: usize, min: usize },
    #[error("input of size {n} exceeds enumeration guard {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
