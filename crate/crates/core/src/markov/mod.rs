//! Stationary Markov measures, letter-to-letter factor maps, and the
//! conversions between hidden Markov chains and linear representations.

mod hidden;
mod kblock;
mod measure;

pub use hidden::{hidden_markov_rep, markov_rank1_rep, rep_to_hidden_markov};
pub use kblock::{build_k_block_model, KBlockModel};
pub use measure::{BlockMap, MarkovMeasure};

use crate::repr::ReprError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MarkovError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not stochastic: {0}")]
    NotStochastic(String),
    #[error("initial vector is not stationary (v·M ≠ v)")]
    NotStationary,
    #[error("transition graph on the support of v is not strongly connected")]
    NotIrreducible,
    #[error("invalid block map: {0}")]
    BadMap(String),
    #[error("representation is not in stochastic normal form")]
    NotNormalized,
    #[error("block length must be at least 1")]
    BadOrder,
    #[error("measure has no support word of the requested length")]
    EmptySupport,
    #[error("block model is not stochastic: {0}")]
    NonStochasticModel(String),
    #[error(transparent)]
    Repr(#[from] ReprError),
}
