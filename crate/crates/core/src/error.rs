use thiserror::Error;

/// Problems found while reading a graph from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: malformed edge line: {reason}")]
    MalformedEdge { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    Graph6Byte { offset: usize, byte: u8 },
    #[error("graph6: expected {expected} data bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: nonzero padding bits in the last byte")]
    Graph6Padding,
    #[error("graph6: {n} vertices exceeds the supported maximum of 64")]
    Graph6TooLarge { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("vertex set over {found} vertices used with a graph on {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("product factors must be nonempty")]
    EmptyFactor,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a hull set: {0}")]
    NotHullSet(String),
    #[error("graph is not bipartite (odd cycle {witness:?})")]
    NotBipartite { witness: Vec<usize> },
    #[error("search budget exceeded in {what}; best bounds [{lower}, {upper}]")]
    BudgetExceeded {
        what: String,
        lower: usize,
        upper: usize,
    },
    #[error("counterexample: {0}")]
    Counterexample(String),
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("check `{0}` has an empty instance range")]
    EmptyInstanceRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
