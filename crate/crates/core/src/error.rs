use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("payload does not inhabit {expected}")]
    ShapeMismatch { expected: String },

    #[error("malformed containment path: step {step} meets non-sum descriptor {at}")]
    MalformedPath { step: usize, at: String },

    #[error("malformed derivation: {0}")]
    MalformedDerivation(String),

    #[error("step and typing derivations disagree: {0}")]
    SubjectMismatch(String),

    #[error("arithmetic overflow adding {0} and {1}")]
    Overflow(u64, u64),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown constructor `{0}`")]
    UnknownConstructor(String),

    #[error("enumeration depth {depth} exceeds cap {cap}")]
    DepthCapExceeded { depth: usize, cap: usize },

    #[error("population of {size} terms at depth {depth} exceeds budget {budget}")]
    PopulationTooLarge {
        depth: usize,
        size: u128,
        budget: u128,
    },
}

impl Error {
    pub(crate) fn syntax(offset: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            offset,
            message: message.into(),
        }
    }
}
