use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group specification: {0}")]
    InvalidSpec(String),

    #[error("operands belong to different group specifications ({0})")]
    SpecMismatch(String),

    #[error("could not parse element `{input}`: {reason}")]
    ElementParse { input: String, reason: String },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("malformed spelling for `{label}`: {reason}")]
    MalformedSpelling { label: String, reason: String },

    #[error("bounded search exhausted: {0}")]
    BoundedSearchExhausted(String),

    #[error("no digit bound n <= {max_bound} passed the completeness check")]
    BoundSearchExhausted { max_bound: u32 },

    #[error(
        "resource limit reached after {stored} elements (completed radius {completed_radius}, sphere sizes {sphere_sizes:?})"
    )]
    ResourceExhausted {
        stored: usize,
        completed_radius: u32,
        sphere_sizes: Vec<u64>,
    },

    #[error("ball radius {available} is too small, radius {required} is required")]
    InsufficientRadius { required: u32, available: u32 },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
