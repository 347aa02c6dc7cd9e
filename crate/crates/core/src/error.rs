use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("letter {letter} is outside the alphabet 1..={sigma}")]
    LetterOutOfRange { letter: u32, sigma: u32 },

    #[error("alphabet mismatch: {left} letters vs {right} letters")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("invalid input: {0}")]
    Input(String),

    /// A search or construction would exceed its configured limit.
    #[error("resource limit exceeded: {what} needs {needed}, limit is {limit}")]
    Resource {
        what: String,
        needed: String,
        limit: String,
    },

    /// Signals a construction bug, never bad user input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn resource(
        what: impl Into<String>,
        needed: impl ToString,
        limit: impl ToString,
    ) -> Self {
        Error::Resource {
            what: what.into(),
            needed: needed.to_string(),
            limit: limit.to_string(),
        }
    }
}
