//! Trimming and the stochastic normal form of non-negative representations.

use std::collections::VecDeque;

use crate::exactalg::{
    image_basis, kernel_basis, project_along, RMatrix, RVector, Rational,
};

use super::representation::{ones_column, LinearRepresentation};
use super::reduce::equivalent;
use super::ReprError;

fn reachable(adjacent: impl Fn(usize, usize) -> bool, n: usize, start: &[bool]) -> Vec<bool> {
    let mut seen = start.to_vec();
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| start[i]).collect();
    while let Some(p) = queue.pop_front() {
        for q in 0..n {
            if !seen[q] && adjacent(p, q) {
                seen[q] = true;
                queue.push_back(q);
            }
        }
    }
    seen
}

/// Indices that are both reachable from `λ` and co-reachable from `γ` in the
/// support graph of `M = Σ_a φ(a)`.
pub fn trim_indices(rep: &LinearRepresentation) -> Result<Vec<usize>, ReprError> {
    if !rep.is_nonnegative() {
        return Err(ReprError::NotNonnegative);
    }
    let n = rep.dim();
    let m = rep.transition_sum();
    let from_lambda: Vec<bool> = rep.lambda().iter().map(Rational::is_positive).collect();
    let from_gamma: Vec<bool> = rep.gamma().iter().map(Rational::is_positive).collect();
    let fwd = reachable(|p, q| m[(p, q)].is_positive(), n, &from_lambda);
    let bwd = reachable(|p, q| m[(q, p)].is_positive(), n, &from_gamma);
    Ok((0..n).filter(|&q| fwd[q] && bwd[q]).collect())
}

/// Restricts a non-negative representation to its trim part.
///
/// Dropped indices only carry paths of weight zero, so every word keeps its value.
pub fn trim(rep: &LinearRepresentation) -> Result<LinearRepresentation, ReprError> {
    let keep = trim_indices(rep)?;
    if keep.is_empty() {
        return Err(ReprError::ZeroRepresentation);
    }
    if keep.len() == rep.dim() {
        return Ok(rep.clone());
    }
    Ok(rep.restrict(&keep))
}

/// Component of `x` in `ker(A)` along `im(A)`.
fn fixed_component(x: &RVector, shifted: &RMatrix) -> Result<RVector, ReprError> {
    project_along(x, &kernel_basis(shifted), &image_basis(shifted)).map_err(|e| {
        ReprError::NormalizationFailed(format!("fixed-space projection: {e}"))
    })
}

/// Equivalent representation with `Σ_a φ(a)` row-stochastic, `λ` a stationary
/// probability vector, and `γ` all ones.
///
/// Steps: trim; replace `γ` by its component in `ker(M−I)` along `im(M−I)`
/// (the exact value of the averaged limit of `M^k γ`); drop indices where that
/// vector vanishes; conjugate by `D = diag(γ)`; replace `λ` by its component in
/// the left fixed space of the new `M`, along the left image of `M−I`.
/// Fails when the result no longer computes the same series, which happens
/// exactly when the input is not a stationary measure.
pub fn normalize(rep: &LinearRepresentation) -> Result<LinearRepresentation, ReprError> {
    let trimmed = trim(rep)?;
    let rep = &trimmed;
    let total = rep.lambda().dot(rep.gamma());
    if !total.is_one() {
        return Err(ReprError::NotProbability(total));
    }
    let n = rep.dim();
    let shifted = &rep.transition_sum() - &RMatrix::identity(n);
    let gamma = fixed_component(rep.gamma(), &shifted)?;
    if !gamma.is_nonnegative() {
        return Err(ReprError::NormalizationFailed(
            "projected gamma has a negative entry".into(),
        ));
    }

    let keep: Vec<usize> = (0..n).filter(|&q| gamma[q].is_positive()).collect();
    let rep = rep.restrict(&keep);
    let scale: Vec<Rational> = keep.iter().map(|&q| gamma[q].clone()).collect();
    let lambda: Vec<Rational> = rep
        .lambda()
        .iter()
        .zip(&scale)
        .map(|(l, d)| l * d)
        .collect();
    let k = keep.len();
    let phi: Vec<RMatrix> = rep
        .matrices()
        .iter()
        .map(|m| {
            let mut out = RMatrix::zeros(k, k);
            for p in 0..k {
                for q in 0..k {
                    if !m[(p, q)].is_zero() {
                        out[(p, q)] = &(&m[(p, q)] * &scale[q]) / &scale[p];
                    }
                }
            }
            out
        })
        .collect();
    let conjugated = LinearRepresentation::new(
        rep.alphabet().clone(),
        RVector::row(lambda),
        phi,
        ones_column(k),
    )?;

    let shifted_t = (&conjugated.transition_sum() - &RMatrix::identity(k)).transpose();
    let lambda = fixed_component(conjugated.lambda(), &shifted_t)?;
    if !lambda.is_nonnegative() {
        return Err(ReprError::NormalizationFailed(
            "projected lambda has a negative entry".into(),
        ));
    }
    let out = conjugated.with_lambda(lambda)?;
    // inputs that are not stationary measures project to something else
    if !out.flags().is_normalized() || !equivalent(&out, &trimmed)? {
        return Err(ReprError::NormalizationFailed(
            "input does not define a stationary measure".into(),
        ));
    }
    Ok(out)
}
