use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has {n} vertices, bound is {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph name {input:?}: {reason}")]
    GraphName { input: String, reason: String },
    #[error("polynomial {input:?}: {reason}")]
    Polynomial { input: String, reason: String },
    #[error("term {input:?}: {reason}")]
    Term { input: String, reason: String },
    #[error("term uses {used} factor vertices, budget is {max}")]
    BudgetExceeded { used: usize, max: usize },
    #[error("data file: {0}")]
    Data(String),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("linear system: {0}")]
    LinearSystem(String),
}
