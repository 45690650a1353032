use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex identifier {0:?}")]
    InvalidVertexId(String),
    #[error("unknown vertex {0}")]
    InvalidVertex(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("invalid tournament: {0}")]
    InvalidTournament(String),
    #[error("{op}: input size {actual} exceeds the limit of {limit}")]
    SizeLimit {
        op: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("vertex set is not a component of the graph")]
    NotAComponent,
    #[error("graph is not connected")]
    Disconnected,
    #[error("certificate does not match the input: {0}")]
    CertificateMismatch(String),
    #[error("realized tournament does not reproduce the input graph: {0}")]
    InternalRoundTripFailure(String),
}

pub(crate) fn check_size(op: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::SizeLimit { op, limit, actual })
    } else {
        Ok(())
    }
}
