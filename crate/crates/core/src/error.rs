use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("word is not freely reduced and pinch-free: {0}")]
    NotReduced(String),

    #[error("{0} is not a node of the intersection graph")]
    NotANode(String),

    #[error("node {to} is not reachable from {from}")]
    Unreachable { from: String, to: String },

    #[error("ball of radius {radius} exceeds the vertex budget of {budget}")]
    BudgetExceeded { radius: usize, budget: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
