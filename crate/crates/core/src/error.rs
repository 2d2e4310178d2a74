use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid element id {0:?}: ids must be nonempty and contain no whitespace")]
    InvalidElement(String),
    #[error("duplicate element id {0:?}")]
    DuplicateElement(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("ground set has {0} elements; at most {max} are supported", max = crate::subset::MAX_ELEMENTS)]
    GroundTooLarge(usize),
    #[error("{0} needs a nonempty ground set")]
    EmptyGround(&'static str),
    #[error("subset is not contained in the ground set")]
    NotASubset,
    #[error("ground sets of the summands overlap at {0:?}")]
    OverlappingGrounds(String),
    #[error("ground sets differ")]
    GroundMismatch,
    #[error("set is not independent")]
    Dependent,
    #[error("relative rank needs B to be a subset of A")]
    NotNested,
    #[error("exhaustive enumeration over {0} elements exceeds the limit of {limit}", limit = crate::matroid::ENUMERATION_LIMIT)]
    TooLarge(usize),
    #[error("rank {rank} is smaller than k = {k}")]
    RankTooSmall { rank: usize, k: usize },
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid exchange chain at link {link}: {reason}")]
    InvalidChain { link: usize, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown demo {0:?}")]
    UnknownDemo(String),
    #[error("{0}")]
    Budget(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
