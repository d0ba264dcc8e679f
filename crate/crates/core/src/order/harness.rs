use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactalg::{rank, RMatrix};
use crate::repr::{words_of_length, Word};

use super::frontier::Frontier;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("no generators given")]
    Empty,
    #[error("generator {index} is {rows}x{cols}; expected {n}x{n}")]
    Shape { index: usize, rows: usize, cols: usize, n: usize },
    #[error("generator {index} has rank {rank}, expected {expected}")]
    RankMismatch { index: usize, rank: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessConfig {
    pub trials: usize,
    pub seed: u64,
    /// Length up to which the rank-drop hypothesis is checked; defaults to `2^{n+2}`.
    pub long_len: Option<usize>,
    /// Literal enumeration at the target length runs only when `|S|^len` is at most this.
    pub exhaustive_limit: u64,
}

impl HarnessConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        HarnessConfig { trials, seed, long_len: None, exhaustive_limit: 1 << 16 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// Every product of length `long_len` has rank below r.
    Satisfied,
    /// Some product of length `long_len` still has rank r.
    NotSatisfied,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessReport {
    pub n: usize,
    pub r: usize,
    /// `2^{n+1}`.
    pub target_len: usize,
    pub long_len: usize,
    pub hypothesis: Hypothesis,
    /// Longest length at which some product keeps rank r (a lower bound when
    /// the hypothesis is not satisfied).
    pub longest_rank_r: usize,
    /// A product of length `target_len` with rank r found while the hypothesis holds.
    pub counterexample: Option<Word>,
    pub exhaustive: bool,
    pub trials: usize,
    pub seed: u64,
}

/// [`rank_drop_harness_with`] using the default long length and exhaustive limit.
pub fn rank_drop_harness(
    generators: &[RMatrix],
    r: usize,
    trials: usize,
    seed: u64,
) -> Result<HarnessReport, HarnessError> {
    rank_drop_harness_with(generators, r, &HarnessConfig::new(trials, seed))
}

/// Searches for a product of `2^{n+1}` generators with rank at least `r`,
/// given generators that all have rank exactly `r`.
///
/// Three independent searches are combined: a frontier search up to the long
/// length (which also decides the hypothesis and the longest rank-r length),
/// literal enumeration of all target-length words when that is small, and
/// seeded random words of the target length.
pub fn rank_drop_harness_with(
    generators: &[RMatrix],
    r: usize,
    config: &HarnessConfig,
) -> Result<HarnessReport, HarnessError> {
    let n = generators.first().ok_or(HarnessError::Empty)?.rows();
    for (index, g) in generators.iter().enumerate() {
        if g.rows() != n || g.cols() != n {
            return Err(HarnessError::Shape { index, rows: g.rows(), cols: g.cols(), n });
        }
        let found = rank(g);
        if found != r {
            return Err(HarnessError::RankMismatch { index, rank: found, expected: r });
        }
    }
    let target_len = 1usize << (n + 1);
    let long_len = config.long_len.unwrap_or(1 << (n + 2)).max(target_len);

    let mut frontier = Frontier::start(generators, r);
    let mut longest = 0;
    let mut witness_at_target = None;
    while !frontier.is_empty() {
        longest = frontier.depth();
        if longest == target_len {
            witness_at_target = Some(frontier.classes()[0].witness.clone());
        }
        if longest == long_len {
            break;
        }
        frontier = frontier.step(generators);
    }
    let hypothesis = if longest >= long_len { Hypothesis::NotSatisfied } else { Hypothesis::Satisfied };

    let keeps_rank = |w: &Word| rank(&product(generators, w)) >= r;
    let mut counterexample = match hypothesis {
        Hypothesis::Satisfied => witness_at_target,
        Hypothesis::NotSatisfied => None,
    };

    let exhaustive = (generators.len() as u64)
        .checked_pow(target_len as u32)
        .is_some_and(|count| count <= config.exhaustive_limit);
    if exhaustive && hypothesis == Hypothesis::Satisfied && counterexample.is_none() {
        counterexample = words_of_length(generators.len(), target_len).into_iter().find(keeps_rank);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.trials {
        let w = Word::new((0..target_len).map(|_| rng.gen_range(0..generators.len())).collect());
        if hypothesis == Hypothesis::Satisfied && counterexample.is_none() && keeps_rank(&w) {
            counterexample = Some(w);
        }
    }

    Ok(HarnessReport {
        n,
        r,
        target_len,
        long_len,
        hypothesis,
        longest_rank_r: longest,
        counterexample,
        exhaustive,
        trials: config.trials,
        seed: config.seed,
    })
}

fn product(generators: &[RMatrix], w: &Word) -> RMatrix {
    let n = generators[0].rows();
    w.symbols().iter().fold(RMatrix::identity(n), |acc, &a| &acc * &generators[a])
}
