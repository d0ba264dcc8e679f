//! Markov-order decision on the minimal representation.
//!
//! A measure is k-step Markov exactly when every length-k product of its
//! minimal matrices has rank at most one. Since rank never increases under
//! right multiplication, the set of rank-≥2 products of length d (up to
//! positive scaling) is computed level by level; an empty level proves the
//! order and surviving to `K = 2^{n²−1}` proves the measure is not Markov.

mod frontier;
mod harness;
mod semantic;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::repr::{reduce, LinearRepresentation};

pub use frontier::{canonical_scaling, Frontier, FrontierClass};
pub use harness::{
    rank_drop_harness, rank_drop_harness_with, HarnessConfig, HarnessError, HarnessReport,
    Hypothesis,
};
pub use semantic::{is_k_step_semantic, lemma_jm_check, JmReport, JmViolation};

/// Depth explored by [`markov_order`] when no cap is given and `K` is larger.
pub const DEFAULT_DEPTH_CAP: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    /// Least k such that the measure is k-step Markov.
    Order(u64),
    /// A rank-≥2 product survived to the cutoff.
    NotMarkov { proof_depth: u64 },
    /// The depth cap was hit below the cutoff.
    Inconclusive { depth_reached: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderVerdict {
    pub kind: VerdictKind,
    pub minimal_dim: usize,
    pub cutoff: BigUint,
}

impl fmt::Display for OrderVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            VerdictKind::Order(k) => write!(f, "verdict=Order order={k}")?,
            VerdictKind::NotMarkov { proof_depth } => {
                write!(f, "verdict=NotMarkov proof_depth={proof_depth}")?
            }
            VerdictKind::Inconclusive { depth_reached } => {
                write!(f, "verdict=Inconclusive depth_reached={depth_reached}")?
            }
        }
        write!(f, " minimal_dim={} cutoff={}", self.minimal_dim, self.cutoff)
    }
}

/// `2^{n²−1}`; dimension 0 (the zero measure) is given cutoff 1.
pub fn cutoff(n: usize) -> BigUint {
    let exponent = (n * n).saturating_sub(1);
    BigUint::one() << exponent
}

/// Frontier sizes per depth alongside the verdict, for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderTrace {
    pub verdict: OrderVerdict,
    /// `sizes[d − 1]` is the number of classes at depth `d`.
    pub sizes: Vec<usize>,
}

/// Decides the Markov order of the measure of `rep`.
///
/// `depth_cap` defaults to [`DEFAULT_DEPTH_CAP`]; values below 1 are treated as 1.
pub fn markov_order(rep: &LinearRepresentation, depth_cap: Option<u64>) -> OrderVerdict {
    markov_order_traced(rep, depth_cap).verdict
}

pub fn markov_order_traced(rep: &LinearRepresentation, depth_cap: Option<u64>) -> OrderTrace {
    let minimal = reduce(rep);
    let n = minimal.dim();
    let k = cutoff(n);
    let cap = depth_cap.unwrap_or(DEFAULT_DEPTH_CAP).max(1);
    // K fits in u64 whenever it is below the cap
    let (limit, reaches_cutoff) = match k.to_u64() {
        Some(k) if k <= cap => (k, true),
        _ => (cap, false),
    };
    let generators = minimal.matrices();
    let mut frontier = Frontier::start(generators, 2);
    let mut sizes = Vec::new();
    let mut depth = 1u64;
    let kind = loop {
        sizes.push(frontier.len());
        if frontier.is_empty() {
            break VerdictKind::Order(depth);
        }
        if depth == limit {
            break if reaches_cutoff {
                VerdictKind::NotMarkov { proof_depth: depth }
            } else {
                VerdictKind::Inconclusive { depth_reached: depth }
            };
        }
        frontier = frontier.step(generators);
        depth += 1;
    };
    OrderTrace { verdict: OrderVerdict { kind, minimal_dim: n, cutoff: k }, sizes }
}

/// True iff every length-k product of the minimal matrices has rank ≤ 1.
///
/// `k = 0` asks whether the identity has rank ≤ 1, i.e. whether the measure
/// is Bernoulli.
pub fn is_k_step(rep: &LinearRepresentation, k: usize) -> bool {
    let minimal = reduce(rep);
    if k == 0 {
        return minimal.dim() <= 1;
    }
    let generators = minimal.matrices();
    let mut frontier = Frontier::start(generators, 2);
    for _ in 1..k {
        if frontier.is_empty() {
            return true;
        }
        frontier = frontier.step(generators);
    }
    frontier.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactalg::{rank, Rational};
    use crate::markov::{hidden_markov_rep, markov_rank1_rep};

    fn paired_b() -> LinearRepresentation {
        hidden_markov_rep(&catalog::paired_b_chain(), &catalog::merge_last_two()).unwrap()
    }

    #[test]
    fn cutoffs() {
        assert_eq!(cutoff(0), BigUint::one());
        assert_eq!(cutoff(1), BigUint::one());
        assert_eq!(cutoff(2), BigUint::from(8u32));
        assert_eq!(cutoff(3), BigUint::from(256u32));
        assert_eq!(cutoff(5), BigUint::from(1u64 << 24));
    }

    #[test]
    fn golden_nonmarkov_measure() {
        let trace = markov_order_traced(&catalog::hidden_three_state(), None);
        assert_eq!(
            trace.verdict,
            OrderVerdict {
                kind: VerdictKind::NotMarkov { proof_depth: 256 },
                minimal_dim: 3,
                cutoff: BigUint::from(256u32),
            }
        );
        assert_eq!(trace.sizes, vec![1; 256]);
        assert_eq!(
            trace.verdict.to_string(),
            "verdict=NotMarkov proof_depth=256 minimal_dim=3 cutoff=256"
        );
    }

    #[test]
    fn powers_of_the_rank_two_generator_keep_rank_two() {
        let rep = catalog::hidden_three_state();
        let b = rep.phi(1);
        let mut power = b.clone();
        for d in 1..=256 {
            assert_eq!(rank(&power), 2, "d = {d}");
            power = &power * b;
        }
        assert_eq!(rank(rep.phi(0)), 1);
    }

    #[test]
    fn order_one_examples() {
        let uniform = markov_order(&catalog::hidden_uniform_three_state(), None);
        assert_eq!(uniform.kind, VerdictKind::Order(1));
        assert_eq!(uniform.minimal_dim, 2);
        assert_eq!(uniform.cutoff, BigUint::from(8u32));
        assert_eq!(markov_order(&catalog::four_letter_chain(), None).kind, VerdictKind::Order(1));
        let rank1 = markov_rank1_rep(&catalog::biased_triangle_chain());
        assert_eq!(markov_order(&rank1, None).kind, VerdictKind::Order(1));
        assert!(is_k_step(&catalog::four_letter_chain(), 1));
        assert!(!is_k_step(&catalog::hidden_three_state(), 1));
    }

    #[test]
    fn order_two_example() {
        let rep = paired_b();
        assert_eq!(markov_order(&rep, None).kind, VerdictKind::Order(2));
        assert!(!is_k_step(&rep, 1));
        assert!(is_k_step(&rep, 2));
        assert!(is_k_step(&rep, 3));
    }

    #[test]
    fn bernoulli_measures() {
        let coin = markov_order(&catalog::fair_coin(), None);
        assert_eq!(coin.kind, VerdictKind::Order(1));
        assert_eq!(coin.cutoff, BigUint::one());
        let family = catalog::five_state_family(Rational::frac(1, 2), Rational::frac(1, 2)).unwrap();
        assert_eq!(markov_order(&family, None).minimal_dim, 1);
        assert!(is_k_step(&family, 0));
        assert!(!is_k_step(&catalog::hidden_uniform_reduced(), 0));
    }

    #[test]
    fn depth_cap_below_cutoff_is_inconclusive() {
        let v = markov_order(&catalog::hidden_three_state(), Some(10));
        assert_eq!(v.kind, VerdictKind::Inconclusive { depth_reached: 10 });
        let v = markov_order(&catalog::hidden_three_state(), Some(0));
        assert_eq!(v.kind, VerdictKind::Inconclusive { depth_reached: 1 });
        // a cap above the cutoff still stops at the cutoff
        let v = markov_order(&catalog::hidden_three_state(), Some(1000));
        assert_eq!(v.kind, VerdictKind::NotMarkov { proof_depth: 256 });
    }

    #[test]
    fn five_state_family_frontier_grows() {
        let rep = catalog::five_state_family(Rational::frac(1, 3), Rational::frac(1, 2)).unwrap();
        let trace = markov_order_traced(&rep, Some(6));
        assert_eq!(trace.verdict.kind, VerdictKind::Inconclusive { depth_reached: 6 });
        assert_eq!(trace.verdict.cutoff, BigUint::from(1u64 << 15));
        assert_eq!(trace.sizes, vec![2, 4, 8, 16, 30, 56]);
    }

    #[test]
    fn zero_measure() {
        let rep = catalog::hidden_three_state()
            .with_gamma(crate::exactalg::RVector::parse_column("0 0 0").unwrap())
            .unwrap();
        let v = markov_order(&rep, None);
        assert_eq!(v.minimal_dim, 0);
        assert_eq!(v.kind, VerdictKind::Order(1));
    }

    #[test]
    fn verdict_invariants_on_examples() {
        let reps = [
            catalog::hidden_uniform_three_state(),
            catalog::four_letter_chain(),
            catalog::fair_coin(),
            paired_b(),
            catalog::five_state_family(Rational::frac(1, 3), Rational::frac(1, 2)).unwrap(),
        ];
        for rep in reps {
            let verdict = markov_order(&rep, Some(8));
            assert_eq!(verdict, markov_order(&reduce(&rep), Some(8)));
            if let VerdictKind::Order(k) = verdict.kind {
                let k = k as usize;
                assert!(is_k_step(&rep, k));
                if k >= 2 {
                    assert!(!is_k_step(&rep, k - 1));
                }
                assert!(is_k_step_semantic(&rep, k, k + 4).unwrap());
            }
        }
    }

    #[test]
    fn non_minimal_rank_is_not_decisive() {
        // the unreduced uniform example has a rank-2 generator yet is 1-step Markov
        let rep = catalog::hidden_uniform_three_state();
        assert_eq!(rank(rep.phi(1)), 2);
        assert!(is_k_step(&rep, 1));
    }
}
