use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("state has {got} coordinates but the network has {expected} nodes")]
    Dimension { expected: usize, got: usize },
    #[error("run lengths must be positive (run {index} is zero)")]
    ZeroRun { index: usize },
    #[error("a closed chain needs an even number of runs or a single run, got {0}")]
    OddRunCount(usize),
    #[error("a closed chain needs at least 3 nodes, got {0}")]
    TooFewNodes(u64),
    #[error("a closed chain needs at least one run")]
    EmptyClosed,
    #[error("invalid state character {0:?}")]
    BadStateChar(char),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("{0}")]
    Invalid(#[from] ModelError),
    #[error("'inf' is only allowed as the first or last entry (position {pos})")]
    InteriorInfinity { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("invalid run tuple: {0}")]
    InvalidTuple(String),
    #[error("{0}")]
    Invalid(#[from] ModelError),
    #[error("unsupported chain: {0}")]
    Unsupported(String),
    #[error("closed bounds need m >= 2, got {0}")]
    Domain(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("{what} is {size}, above the cap of {cap}; use count-only mode or raise the cap")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("{0}")]
    Model(#[from] ModelError),
}
