//! Exact linear representations of hidden Markov (sofic) measures.
//!
//! All arithmetic is over arbitrary-precision rationals. The crate covers
//! construction of representations from Markov chains and letter-to-letter
//! factor maps, the stochastic normal form, minimization, conversion back to
//! a hidden Markov chain, and the decision of whether a measure is k-step
//! Markov for some k.

pub mod catalog;
pub mod exactalg;
pub mod markov;
pub mod order;
pub mod repr;
mod workers;

pub use workers::Workers;
