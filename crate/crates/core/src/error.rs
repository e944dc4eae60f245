use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6: {msg} at byte offset {offset}")]
    Graph6 { offset: usize, msg: String },

    #[error("edge list, line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("{0} vertices is above the supported maximum of 62")]
    TooManyVertices(usize),

    #[error("{what} is {got}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex set is empty")]
    EmptyVertexSet,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not an extremal set: {0}")]
    NotExtremal(String),

    /// A partition that the theorems guarantee could not be produced. Never expected.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub(crate) fn cap(what: &'static str, got: usize, cap: usize) -> Result<()> {
    if got > cap {
        Err(Error::CapExceeded { what, got, cap })
    } else {
        Ok(())
    }
}
