use thiserror::Error;

use crate::decomposition::Witness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    #[error("edge list parse error on line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{what} supports at most {cap} vertices, got {n}")]
    TooLarge { what: &'static str, cap: usize, n: usize },

    #[error("graph is not {class}: {witness}")]
    NotInClass { class: &'static str, witness: Witness },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
