use crate::exactalg::RVector;
use crate::markov::{build_k_block_model, MarkovError};
use crate::repr::{words_up_to, LinearRepresentation, Word};

/// A triple `(a, b, w)` with `μ(abw)·μ(b) ≠ μ(ab)·μ(bw)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JmViolation {
    pub a: usize,
    pub b: usize,
    pub w: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JmReport {
    pub max_len: usize,
    /// Number of `(a, b, w)` triples checked.
    pub checked: usize,
    pub violation: Option<JmViolation>,
}

impl JmReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `μ(abw)·μ(b) = μ(ab)·μ(bw)` for every pair of letters and every
/// `|w| ≤ max_len`, stopping at the first failure.
///
/// Words are visited in length-lexicographic order, then `a`, then `b`.
pub fn lemma_jm_check(rep: &LinearRepresentation, max_len: usize) -> JmReport {
    let letters = rep.alphabet().len();
    let lambda = rep.lambda();
    // λφ(b) and λφ(a)φ(b), indexed by b and (a, b)
    let single: Vec<RVector> = rep.matrices().iter().map(|m| lambda.mul_matrix(m)).collect();
    let pairs: Vec<Vec<RVector>> = (0..letters)
        .map(|a| rep.matrices().iter().map(|m| single[a].mul_matrix(m)).collect())
        .collect();
    let gamma = rep.gamma();
    let mu_b: Vec<_> = single.iter().map(|f| f.dot(gamma)).collect();
    let mu_ab: Vec<Vec<_>> = pairs.iter().map(|row| row.iter().map(|f| f.dot(gamma)).collect()).collect();

    let mut checked = 0;
    for w in words_up_to(letters, max_len) {
        let tail = rep.backward(&w);
        let mu_bw: Vec<_> = single.iter().map(|f| f.dot(&tail)).collect();
        for a in 0..letters {
            for b in 0..letters {
                checked += 1;
                let lhs = pairs[a][b].dot(&tail) * &mu_b[b];
                let rhs = &mu_ab[a][b] * &mu_bw[b];
                if lhs != rhs {
                    return JmReport { max_len, checked, violation: Some(JmViolation { a, b, w }) };
                }
            }
        }
    }
    JmReport { max_len, checked, violation: None }
}

/// True iff the order-k block chain predicts the measure exactly on every word
/// of length at most `horizon`.
pub fn is_k_step_semantic(
    rep: &LinearRepresentation,
    k: usize,
    horizon: usize,
) -> Result<bool, MarkovError> {
    let model = build_k_block_model(rep, k)?;
    Ok(words_up_to(rep.alphabet().len(), horizon)
        .iter()
        .all(|w| model.predict(w) == rep.evaluate(w)))
}
