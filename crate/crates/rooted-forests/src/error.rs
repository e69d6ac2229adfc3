use thiserror::Error;

/// Errors produced by parsing and by constructors that validate their input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input text does not match the bracket grammar. `offset` is the
    /// byte position of the first offending byte.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// An edge subset was used as an admissible cut but two of its edges lie
    /// on a common root-to-leaf path.
    #[error("inadmissible cut {cut} on tree {tree}")]
    InadmissibleCut { tree: String, cut: String },

    /// A law name passed to the verifier is not one of the known laws.
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
