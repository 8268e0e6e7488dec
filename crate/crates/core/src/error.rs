use alloc::string::String;

/// Errors raised anywhere in the evaluation and verification pipeline.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: {0}")]
    Pole(String),
    #[error("convergence failure: {0}")]
    Convergence(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("sampler for `{id}` exhausted after {rejections} consecutive rejections")]
    SamplerExhausted { id: String, rejections: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error("missing parameter `{0}`")]
    MissingParameter(String),
    #[error("precision ladder disagreement: {0}")]
    Precision(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn degenerate(what: impl Into<String>) -> Error {
    Error::DegenerateParams(what.into())
}

pub(crate) fn pole(what: impl Into<String>) -> Error {
    Error::Pole(what.into())
}
