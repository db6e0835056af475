use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = LdaError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LdaError {
    #[error("invalid family specification: {0}")]
    InvalidSpec(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: Vertex, n: usize },

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("size mismatch: expected {expected} entries, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("vertex {0} is isolated; weights are only defined without isolated vertices")]
    IsolatedVertex(Vertex),

    #[error("graph is not a tree")]
    NotATree,

    #[error("no neighborhood balanced coloring exists: {0}")]
    NoNbcExists(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("copy condition fails on edge ({u}, {v}): amplified weights coincide")]
    CopyCondition { u: Vertex, v: Vertex },

    #[error("pendant copy condition fails: {0}")]
    PendantCondition(String),

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("no magic rectangle: {0}")]
    NoRectangle(String),

    #[error("graph admits no local distance antimagic labeling")]
    NoLdaLabeling,

    #[error("search budget exceeded: {0}")]
    Budget(String),

    #[error("construction produced an invalid labeling: {0}")]
    Verification(String),
}

impl LdaError {
    /// Stable machine-readable tag for the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            LdaError::InvalidSpec(_) => "invalid-spec",
            LdaError::InvalidGraph(_) => "invalid-graph",
            LdaError::InvalidVertex { .. } => "invalid-vertex",
            LdaError::InvalidLabeling(_) => "invalid-labeling",
            LdaError::SizeMismatch { .. } => "size-mismatch",
            LdaError::IsolatedVertex(_) => "isolated-vertex",
            LdaError::NotATree => "not-a-tree",
            LdaError::NoNbcExists(_) => "no-nbc-exists",
            LdaError::Precondition(_) => "precondition",
            LdaError::CopyCondition { .. } => "copy-condition",
            LdaError::PendantCondition(_) => "pendant-condition",
            LdaError::UnsupportedCase(_) => "unsupported-case",
            LdaError::UnsupportedParameter(_) => "unsupported-parameter",
            LdaError::NoRectangle(_) => "no-rectangle",
            LdaError::NoLdaLabeling => "no-lda-labeling",
            LdaError::Budget(_) => "budget",
            LdaError::Verification(_) => "verification",
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, LdaError::Budget(_))
    }
}
