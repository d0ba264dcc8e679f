//! Linear representations of measures on words: evaluation, trimming,
//! stochastic normalization, minimization, equivalence and the consistency
//! checks that make a series a shift-invariant probability measure.

mod alphabet;
mod axioms;
mod normalize;
mod reduce;
mod representation;

pub use alphabet::{words_of_length, words_up_to, Alphabet, Word};
pub use axioms::{support_words, verify_measure_axioms, AxiomReport};
pub use normalize::{normalize, trim, trim_indices};
pub use reduce::{equivalent, reduce};
pub use representation::{LinearRepresentation, NormalizationFlags};

use crate::exactalg::{AlgError, Rational};

/// Longest word length accepted by exhaustive enumerations in the CLI.
pub const MAX_ENUMERATION_LEN: usize = 31;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReprError {
    #[error("invalid alphabet: {0}")]
    BadAlphabet(String),
    #[error("symbol `{0}` is not in the alphabet")]
    UnknownSymbol(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("representation has a negative entry")]
    NotNonnegative,
    #[error("representation is zero after trimming")]
    ZeroRepresentation,
    #[error("not a probability measure: value of the empty word is {0}")]
    NotProbability(Rational),
    #[error("normalization failed: {0}")]
    NormalizationFailed(String),
    #[error("representations are over different alphabets")]
    AlphabetMismatch,
    #[error(transparent)]
    Alg(#[from] AlgError),
}
