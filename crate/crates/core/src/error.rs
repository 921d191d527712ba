use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graphlet document: {0}")]
    Xml(String),
    #[error("invalid graphlet: {0}")]
    InvalidGraphlet(String),
    #[error("invalid vertex label {0:?}: labels are non-empty and contain no whitespace")]
    InvalidLabel(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("{what} has {actual} vertices, above the limit of {limit}; {hint}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
        hint: &'static str,
    },
    #[error("query graph has no edges")]
    EdgelessQuery,
    #[error("query vertex {0:?} is isolated and cannot be bound by any graphlet")]
    IsolatedQueryVertex(String),
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("ordering {0} is not a hub cover of the query")]
    NotHubCover(String),
    #[error("binding is not injective: {0}")]
    NotInjective(String),
    #[error("no hub covers supplied")]
    NoCovers,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
