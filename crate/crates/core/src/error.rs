use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("non-finite argument {0} passed to an integer function")]
    NonFinite(f64),

    #[error("deviation from diagonality is undefined for the zero matrix")]
    ZeroMatrix,

    #[error("matrix is singular")]
    Singular,

    #[error("degenerate input: diagonal entry {row} of T·Tᵀ is zero")]
    Degenerate { row: usize },

    #[error("transform `{0}` has no fast-algorithm constants; supply them explicitly")]
    UnsupportedTransform(String),

    #[error("transform `{0}` cannot be used in the codec")]
    UnsupportedCodec(String),

    #[error("image dimensions {width}×{height} are not usable: {reason}")]
    Dimension {
        width: usize,
        height: usize,
        reason: &'static str,
    },

    #[error("retention count {0} is outside 1..=64")]
    Retention(usize),

    #[error("images differ in size: {0:?} vs {1:?}")]
    SizeMismatch((usize, usize), (usize, usize)),

    #[error("baseline value is zero")]
    ZeroBaseline,

    #[error("unknown transform `{0}`")]
    UnknownTransform(String),

    #[error("malformed image: {0}")]
    Format(String),

    #[error("catalog schema violation: {0}")]
    Schema(String),

    #[error("catalog record `{name}` failed verification: {what}")]
    InvariantMismatch { name: String, what: String },

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
