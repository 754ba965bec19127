use thiserror::Error;

use crate::word::Letter;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a word must contain at least one letter")]
    EmptyWord,

    #[error("letter {letter} at position {position} is outside the alphabet 1..={bound}")]
    LetterOutOfRange {
        position: usize,
        letter: Letter,
        bound: Letter,
    },

    #[error("{0} is not a permutation of 1..n")]
    NotPermutation(String),

    #[error("{word} is not dense over [{bound}]; use the general-word bijection instead")]
    NotDense { word: String, bound: Letter },

    #[error("alphabet has {given} letters but the word uses {needed} distinct letters")]
    AlphabetMismatch { given: usize, needed: usize },

    #[error("alphabet must be strictly increasing positive letters")]
    InvalidAlphabet,

    #[error("invalid interval partition: {0}")]
    InvalidPartition(String),

    #[error("partitions cover different ground sets ([{left}] vs [{right}])")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("partitions have different sizes ({left} vs {right} parts)")]
    PartCountMismatch { left: usize, right: usize },

    #[error("{fine} is not a refinement of {coarse}")]
    NotRefinement { fine: String, coarse: String },

    #[error("refinement index {index} is outside 1..={max}")]
    EncodingOutOfRange { index: usize, max: usize },

    #[error("refinement indices start at 1")]
    EncodingZeroIndex,

    #[error("refinement encoding must be strictly increasing")]
    EncodingNotIncreasing,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error(
        "extensions are only defined for the patterns xy-z and xy with distinct letters, got {0}"
    )]
    UnsupportedExtensionShape(String),

    #[error("invalid universe: {0}")]
    InvalidUniverse(String),

    #[error("universe has {size} elements, above the cap of {cap}; use smaller parameters or raise the cap")]
    TooManyElements { size: u128, cap: u128 },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
