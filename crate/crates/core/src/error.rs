use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(usize, usize),
    #[error("edge between {0} and {1} already present")]
    EdgeExists(usize, usize),
    #[error("invalid order {order} for family {family}")]
    InvalidOrder { family: &'static str, order: usize },
    #[error("order {order} exceeds the limit {limit} of {what}")]
    TooLarge {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("malformed graph6: {0}")]
    Malformed(String),
    #[error("assignment has {got} labels, graph has order {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid Roman label {0} (must be 0, 1 or 2)")]
    InvalidLabel(u8),
    #[error("graph is not v-critical")]
    NotVCritical,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
