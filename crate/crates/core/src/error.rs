use thiserror::Error;

/// Errors raised by graph construction, model validation and the recognizers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partitions are over different ground sets")]
    GroundMismatch,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("vertex set is not a maximal clique")]
    NotMaximalClique,
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("model is not normalized: {0}")]
    NotNormalized(String),
    #[error("model does not cover vertex `{0}`")]
    MissingVertex(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("instance has {n} vertices, limit is {limit}")]
    SizeLimit { n: usize, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
