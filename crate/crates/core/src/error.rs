use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed signature: {0}")]
    MalformedSignature(String),

    #[error("corpus contains no comment tokens")]
    EmptyCorpus,

    #[error("comment of pair `{0}` has no tokens")]
    EmptyComment(String),

    #[error("pair `{id}` has negative or undefined MESIA {value}")]
    NegativeScore { id: String, value: f64 },

    #[error("need at least {needed} scored items, got {got}")]
    TooFewItems { needed: usize, got: usize },

    #[error("expected {expected} groups, got {got}")]
    WrongGroupCount { expected: usize, got: usize },

    #[error("groups are not equally sized: {0:?}")]
    UnequalGroups(Vec<usize>),

    #[error("id `{0}` is not present in the dataset")]
    UnknownId(String),

    #[error("duplicate id `{0}`")]
    DuplicateId(String),

    #[error("invalid pair `{id}`: {reason}")]
    InvalidPair { id: String, reason: String },

    #[error("reference is empty")]
    EmptyReference,

    #[error("no reference for candidate `{0}`")]
    MissingReference(String),

    #[error("no candidate for id `{0}`")]
    MissingCandidate(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable name of the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedSignature(_) => "malformed-signature",
            Error::EmptyCorpus => "empty-corpus",
            Error::EmptyComment(_) => "empty-comment",
            Error::NegativeScore { .. } => "negative-score",
            Error::TooFewItems { .. } => "too-few-items",
            Error::WrongGroupCount { .. } => "wrong-group-count",
            Error::UnequalGroups(_) => "unequal-groups",
            Error::UnknownId(_) => "unknown-id",
            Error::DuplicateId(_) => "duplicate-id",
            Error::InvalidPair { .. } => "invalid-pair",
            Error::EmptyReference => "empty-reference",
            Error::MissingReference(_) => "missing-reference",
            Error::MissingCandidate(_) => "missing-candidate",
            Error::Parse { .. } => "parse",
            Error::Config(_) => "config",
            Error::Io(_) => "io",
        }
    }
}
