use thiserror::Error;

use crate::certificate::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{0}` is a loop")]
    Loop(String),
    #[error("signature covers {got} edges but the graph has {expected}")]
    DomainMismatch { expected: usize, got: usize },
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("subdivision length for edge `{0}` must be at least 1")]
    BadLength(String),
    #[error("{what} is {value}, above the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("graph is not Eulerian")]
    NotEulerian,
    #[error("signature has an odd number of odd edges")]
    OddSignature,
    #[error("signature has an even number of odd edges")]
    EvenSignature,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(Violation),
    #[error("internal construction failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
