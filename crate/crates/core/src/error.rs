use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero in finite field")]
    DivisionByZero,
    #[error("invalid chain spec: {0}")]
    InvalidChainSpec(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("missing parameter: {0}")]
    MissingParameter(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("graph does not have girth at least six")]
    NotGirthSix,
    #[error("construction invariant violated: {0}")]
    ConstructionInvariantViolated(String),
    #[error("lemma bound violated: {0}")]
    LemmaBoundViolated(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
