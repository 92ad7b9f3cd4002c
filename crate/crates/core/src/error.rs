use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entry {index}: `{token}` is not a positive integer")]
    NotAnInteger { index: usize, token: String },
    #[error("entry {index}: value {value} is out of range 1..={n}")]
    OutOfRange { index: usize, value: u64, n: usize },
    #[error("entry {index}: duplicate value {value}")]
    Duplicate { index: usize, value: u32 },

    #[error("pattern length {0} exceeds the supported maximum of 4")]
    PatternTooLong(usize),

    #[error("step {index}: `{symbol}` is not one of U, D, H")]
    BadStep { index: usize, symbol: char },
    #[error("expected a {expected} path, got {found}")]
    WrongPathClass {
        expected: &'static str,
        found: String,
    },
    #[error("op {step}: {reason}")]
    InvalidTrace { step: usize, reason: String },
    #[error("ballot sequence must hold n+1 terms +1 and n terms -1 (got {plus} and {minus})")]
    BadBallot { plus: usize, minus: usize },

    #[error("permutation is not {class}: values {witness:?} form the forbidden pattern")]
    NotInClass {
        class: &'static str,
        witness: [u32; 3],
    },

    #[error("{what} requires n <= {max}, got {n}")]
    Guard {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("invalid machine configuration: {0}")]
    BadConfig(String),

    #[error("invalid game state: {0}")]
    BadState(String),
    #[error("illegal move {mv}: {reason}")]
    IllegalMove { mv: &'static str, reason: String },
    #[error("the game is already won")]
    GameWon,
    #[error("no legal moves: the game is lost")]
    GameLost,
    #[error("clairvoyant hints need the full deck order")]
    DeckHidden,
}

pub(crate) fn guard(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::Guard { what, n, max })
    } else {
        Ok(())
    }
}
