//! One error type for the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },

    #[error("a graph needs at least one vertex")]
    EmptyGraph,

    #[error("graph on {n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("graph is disconnected: vertex {unreached} is unreachable")]
    Disconnected { unreached: usize },

    #[error("not a tree: {reason}")]
    NotATree { reason: &'static str },

    /// Brute-force canonical codes stop at eight vertices; past that a
    /// dedicated canonical-labelling package is the right tool.
    #[error("canonical graph codes are limited to n <= {max}, got n = {n}")]
    CodeSizeLimit { n: usize, max: usize },

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("no closed form: {0}")]
    UnsupportedForm(String),

    #[error("rewiring hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("enumeration is limited to n <= {max}, got n = {n}; larger corpora can be read from graph files")]
    EnumerationLimit { n: usize, max: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
