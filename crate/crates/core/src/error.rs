use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation {input:?}: {reason}")]
    ParsePermutation { input: String, reason: String },

    #[error(transparent)]
    PinWord(#[from] PinWordError),

    /// A configured size limit would be exceeded.
    #[error("{what} limit exceeded: requested {requested}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
}

/// Why a letter sequence is not a pin word. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PinWordError {
    #[error("empty pin word")]
    Empty,
    #[error("unknown letter {letter:?} at position {position}")]
    UnknownLetter { position: usize, letter: char },
    #[error("position 1: a pin word must begin with a numeral")]
    MustStartWithNumeral,
    #[error("position {position}: a horizontal direction must be followed by a numeral or U/D")]
    AfterHorizontal { position: usize },
    #[error("position {position}: a vertical direction must be followed by a numeral or L/R")]
    AfterVertical { position: usize },
}

impl PinWordError {
    /// The 1-based position of the offending letter, if any.
    pub fn position(&self) -> Option<usize> {
        match self {
            PinWordError::Empty => None,
            PinWordError::MustStartWithNumeral => Some(1),
            PinWordError::UnknownLetter { position, .. }
            | PinWordError::AfterHorizontal { position }
            | PinWordError::AfterVertical { position } => Some(*position),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
