use thiserror::Error;

use crate::graph::Vertex;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    InvalidVertex { vertex: Vertex, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),

    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(Vertex, Vertex),

    #[error("graph is not outerplanar")]
    NotOuterplanar,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is isolated; open-neighborhood colorings need every vertex to have a neighbor")]
    IsolatedVertex(Vertex),

    #[error("vertex set is not dominating (vertex {0} is not dominated)")]
    NotDominating(Vertex),

    #[error("color {color} exceeds palette size {k}")]
    ColorOutOfRange { color: u32, k: u32 },

    #[error("no proper {0}-coloring exists for the contracted minor")]
    ProperColoringInfeasible(u32),

    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("{what} must satisfy {constraint}, got {value}")]
    InvalidParameter {
        what: &'static str,
        constraint: &'static str,
        value: i64,
    },

    #[error("component is not a path")]
    NotAPath,

    #[error("malformed formula: {0}")]
    MalformedFormula(String),

    #[error("malformed clause orders: {0}")]
    MalformedOrders(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
