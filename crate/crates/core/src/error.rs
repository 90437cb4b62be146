//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Audio input violates a precondition (empty, non-finite, too short).
    #[error("invalid audio: {0}")]
    InvalidAudio(String),

    /// Spectrogram input violates a precondition (non-finite entries, bad shape).
    #[error("invalid spectrogram: {0}")]
    InvalidSpectrogram(String),

    /// Mismatched or unusable configuration.
    #[error("config error: {0}")]
    Config(String),

    /// Tensor shape mismatch.
    #[error("shape error: {0}")]
    Shape(String),

    /// Token id outside the declared vocabulary.
    #[error("vocab error: {0}")]
    Vocab(String),

    /// Corpus or dataset level failure (empty corpus, not enough frames).
    #[error("data error: {0}")]
    Data(String),

    /// Token/mel alignment violation in chunked synthesis.
    #[error("alignment error: {0}")]
    Alignment(String),

    /// Malformed manifest line; fatal, reported with its line number.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Non-finite loss or other numeric breakdown during training.
    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("wav error: {0}")]
    Wav(#[from] hound::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 usage/config, 2 data, 3 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Shape(_) | Error::Vocab(_) => 1,
            Error::Numeric(_) => 3,
            _ => 2,
        }
    }
}
