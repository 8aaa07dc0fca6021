use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("group order {order} exceeds the limit {limit}")]
    OrderBudget { order: usize, limit: usize },
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("element {0} is not in the group")]
    ElementOutOfRange(usize),
    #[error("subgroups come from different ambient groups")]
    AmbientMismatch,
    #[error("{0} does not divide the group order")]
    NotADivisor(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("malformed graph expression: {0}")]
    MalformedExpression(String),
    #[error("invalid embedding scheme: {0}")]
    InvalidScheme(String),
    #[error("search node budget of {0} exhausted")]
    SearchBudget(u64),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
