use rayon::prelude::*;

use crate::exactalg::Rational;

use super::alphabet::Word;
use super::representation::LinearRepresentation;
use super::ReprError;

/// Outcome of checking the cylinder-measure consistency equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub max_len: usize,
    /// `π(ε)`.
    pub empty_value: Rational,
    /// First word (length-lexicographic) with `π(w) ≠ Σ_a π(wa)`.
    pub right_violation: Option<Word>,
    /// First word (length-lexicographic) with `π(w) ≠ Σ_a π(aw)`.
    pub left_violation: Option<Word>,
}

impl AxiomReport {
    pub fn normalized(&self) -> bool {
        self.empty_value.is_one()
    }

    pub fn holds(&self) -> bool {
        self.normalized() && self.right_violation.is_none() && self.left_violation.is_none()
    }
}

/// Checks `π(ε) = 1`, `π(w) = Σ_a π(wa)` and `π(w) = Σ_a π(aw)` for every `|w| ≤ max_len`.
///
/// The sums run over the whole alphabet. Both sums collapse to single dot
/// products: `Σ_a π(wa) = λφ(w)·(Mγ)` and `Σ_a π(aw) = (λM)φ(w)·γ`.
pub fn verify_measure_axioms(rep: &LinearRepresentation, max_len: usize) -> AxiomReport {
    let m = rep.transition_sum();
    let m_gamma = m.right_mul(rep.gamma().entries());
    let lambda_m = m.left_mul(rep.lambda().entries());
    let gamma = rep.gamma().entries();

    let mut right_violation = None;
    let mut left_violation = None;
    // (word, λφ(w), λMφ(w))
    let mut level = vec![(Word::empty(), rep.lambda().entries().to_vec(), lambda_m)];
    for len in 0..=max_len {
        let verdicts: Vec<(bool, bool)> = level
            .par_iter()
            .map(|(_, f, g)| {
                let value = dot(f, gamma);
                (value == dot(f, &m_gamma), value == dot(g, gamma))
            })
            .collect();
        for ((w, _, _), (right_ok, left_ok)) in level.iter().zip(verdicts) {
            if !right_ok && right_violation.is_none() {
                right_violation = Some(w.clone());
            }
            if !left_ok && left_violation.is_none() {
                left_violation = Some(w.clone());
            }
        }
        if (right_violation.is_some() && left_violation.is_some()) || len == max_len {
            break;
        }
        level = level
            .par_iter()
            .flat_map_iter(|(w, f, g)| {
                rep.matrices().iter().enumerate().map(move |(a, phi)| {
                    (w.extended(a), phi.left_mul(f), phi.left_mul(g))
                })
            })
            .collect();
    }
    AxiomReport {
        max_len,
        empty_value: rep.lambda().dot(rep.gamma()),
        right_violation,
        left_violation,
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Words of the given length with positive value, in lexicographic order.
pub fn support_words(rep: &LinearRepresentation, length: usize) -> Result<Vec<Word>, ReprError> {
    if !rep.is_nonnegative() {
        return Err(ReprError::NotNonnegative);
    }
    // A zero forward vector kills every extension, so such prefixes are pruned.
    let mut level: Vec<(Word, Vec<Rational>)> = vec![(Word::empty(), rep.lambda().entries().to_vec())];
    for _ in 0..length {
        level = level
            .par_iter()
            .flat_map_iter(|(w, f)| {
                rep.matrices().iter().enumerate().filter_map(move |(a, phi)| {
                    let next = phi.left_mul(f);
                    next.iter().any(|x| !x.is_zero()).then(|| (w.extended(a), next))
                })
            })
            .collect();
    }
    let gamma = rep.gamma().entries();
    Ok(level
        .into_iter()
        .filter(|(_, f)| dot(f, gamma).is_positive())
        .map(|(w, _)| w)
        .collect())
}
