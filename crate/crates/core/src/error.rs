use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("malformed quiver: {0}")]
    MalformedQuiver(String),
    #[error("algebra is not admissible or exceeds the size limits: paths of length {0} survive")]
    NonAdmissible(usize),
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("field unsupported: characteristic {characteristic} must exceed {needed}")]
    FieldUnsupported { characteristic: u64, needed: usize },
    #[error("algebra is not selfinjective")]
    NotSelfinjective,
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("algebra is not special biserial: {0}")]
    NotSpecialBiserial(String),
    #[error("invalid string: {0}")]
    InvalidString(String),
    #[error("invalid band: {0}")]
    InvalidBand(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("ideal is not idempotent")]
    NotIdempotent,
    #[error("morphism is not a member of the ideal")]
    NotMember,
    #[error("morphism is not a nonzero radical morphism")]
    NotRadical,
    #[error("window lacks the indecomposable projective at vertex {0}")]
    MissingProjectives(String),
    #[error("ideals belong to different windows")]
    WindowMismatch,
    #[error("no splitting endomorphism found; endomorphism algebra modulo radical has dimension {0}")]
    Undecided(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable name, used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedRelation(_) => "MalformedRelation",
            Error::MalformedQuiver(_) => "MalformedQuiver",
            Error::NonAdmissible(_) => "NonAdmissible",
            Error::UnknownPreset(_) => "UnknownPreset",
            Error::InvalidParams(_) => "InvalidParams",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::InvalidRepresentation(_) => "InvalidRepresentation",
            Error::FieldUnsupported { .. } => "FieldUnsupported",
            Error::NotSelfinjective => "NotSelfinjective",
            Error::NotIndecomposable => "NotIndecomposable",
            Error::NotSpecialBiserial(_) => "NotSpecialBiserial",
            Error::InvalidString(_) => "InvalidString",
            Error::InvalidBand(_) => "InvalidBand",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::NotIdempotent => "NotIdempotent",
            Error::NotMember => "NotMember",
            Error::NotRadical => "NotRadical",
            Error::MissingProjectives(_) => "MissingProjectives",
            Error::WindowMismatch => "WindowMismatch",
            Error::Undecided(_) => "Undecided",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
