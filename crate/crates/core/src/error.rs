use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid simplex {vertices:?}: {reason}")]
    InvalidSimplex { vertices: Vec<usize>, reason: String },

    #[error("dimension error: need 1 <= d and d + 1 <= n, got n = {n}, d = {d}")]
    Dimension { n: usize, d: usize },

    #[error("rank {rank} out of range for {count} subsets")]
    Range { rank: usize, count: usize },

    #[error("capacity exceeded: {what} = {value} exceeds cap {cap}")]
    Capacity { what: &'static str, value: String, cap: String },

    #[error("invalid edge ({0}, {1}) for n = {2}")]
    InvalidEdge(usize, usize, usize),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("outside the theorem's domain: {0}")]
    OutOfTheoremDomain(String),

    #[error("logarithm base (r - 1) * d = {0} is below 2")]
    UndefinedBase(u64),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn invalid_simplex(vertices: &[usize], reason: impl Into<String>) -> Self {
        Error::InvalidSimplex { vertices: vertices.to_vec(), reason: reason.into() }
    }

    pub fn with_context(self, context: impl Into<String>) -> Self {
        Error::Context { context: context.into(), source: Box::new(self) }
    }
}
