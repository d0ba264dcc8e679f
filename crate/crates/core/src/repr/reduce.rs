//! Minimization of linear representations.
//!
//! The backward space `span{φ(w)γ}` is explored first, then the forward space
//! `span{λφ(w)}` of the restricted representation. Both explorations visit
//! words in length-lexicographic order and expand only vectors that were
//! independent when inserted. The retained subspace is stored in reduced
//! echelon form and that basis is the change of basis, so the output only
//! depends on the subspaces, not on which generators were met first.

use rayon::prelude::*;

use crate::exactalg::{RMatrix, Rational, RowSpace};

use super::representation::LinearRepresentation;
use super::ReprError;

#[derive(Clone, Copy)]
enum Side {
    /// `v ↦ φ(a)·v` starting from `γ`.
    Backward,
    /// `v ↦ v·φ(a)` starting from `λ`.
    Forward,
}

fn reachable_space(rep: &LinearRepresentation, side: Side) -> RowSpace {
    let n = rep.dim();
    let mut space = RowSpace::new(n);
    let start = match side {
        Side::Backward => rep.gamma().entries().to_vec(),
        Side::Forward => rep.lambda().entries().to_vec(),
    };
    if !space.insert(&start) {
        return space;
    }
    let mut level = vec![start];
    while !level.is_empty() && !space.is_full() {
        let candidates: Vec<Vec<Rational>> = level
            .par_iter()
            .flat_map_iter(|v| {
                rep.matrices().iter().map(move |m| match side {
                    Side::Backward => m.right_mul(v),
                    Side::Forward => m.left_mul(v),
                })
            })
            .collect();
        level = candidates
            .into_iter()
            .filter(|c| space.insert(c))
            .collect();
    }
    space
}

/// Restricts to the backward space; `L` has the echelon basis as columns.
fn restrict_backward(rep: &LinearRepresentation) -> LinearRepresentation {
    let space = reachable_space(rep, Side::Backward);
    if space.is_full() {
        return rep.clone();
    }
    let basis = space.basis();
    let pivots = space.pivots();
    let k = basis.len();
    let gamma: Vec<Rational> = pivots.iter().map(|&p| rep.gamma()[p].clone()).collect();
    let lambda: Vec<Rational> = basis.iter().map(|b| rep.lambda().dot_slice(b)).collect();
    let phi = rep
        .matrices()
        .par_iter()
        .map(|m| {
            let mut out = RMatrix::zeros(k, k);
            for (j, b) in basis.iter().enumerate() {
                let image = m.right_mul(b);
                debug_assert!(space.contains(&image));
                for (i, &p) in pivots.iter().enumerate() {
                    out[(i, j)] = image[p].clone();
                }
            }
            out
        })
        .collect();
    LinearRepresentation::from_parts_unchecked(rep.alphabet().clone(), lambda, phi, gamma)
}

/// Restricts to the forward space; `R` has the echelon basis as rows.
fn restrict_forward(rep: &LinearRepresentation) -> LinearRepresentation {
    let space = reachable_space(rep, Side::Forward);
    if space.is_full() {
        return rep.clone();
    }
    let basis = space.basis();
    let pivots = space.pivots();
    let k = basis.len();
    let lambda: Vec<Rational> = pivots.iter().map(|&p| rep.lambda()[p].clone()).collect();
    let gamma: Vec<Rational> = basis.iter().map(|r| rep.gamma().dot_slice(r)).collect();
    let phi = rep
        .matrices()
        .par_iter()
        .map(|m| {
            let mut out = RMatrix::zeros(k, k);
            for (i, r) in basis.iter().enumerate() {
                let image = m.left_mul(r);
                debug_assert!(space.contains(&image));
                for (j, &p) in pivots.iter().enumerate() {
                    out[(i, j)] = image[p].clone();
                }
            }
            out
        })
        .collect();
    LinearRepresentation::from_parts_unchecked(rep.alphabet().clone(), lambda, phi, gamma)
}

/// Equivalent representation of minimal dimension.
///
/// Works for signed representations. The zero series reduces to dimension 0.
pub fn reduce(rep: &LinearRepresentation) -> LinearRepresentation {
    restrict_forward(&restrict_backward(rep))
}

/// Whether two representations define the same series.
///
/// Decided on the difference representation `(λ_a, -λ_b) · diag(φ_a, φ_b) · (γ_a; γ_b)`:
/// the series vanishes iff every generator of its forward space is orthogonal
/// to the stacked `γ`, and those generators are values `λφ(w)` on words shorter
/// than the summed dimensions.
pub fn equivalent(a: &LinearRepresentation, b: &LinearRepresentation) -> Result<bool, ReprError> {
    if a.alphabet() != b.alphabet() {
        return Err(ReprError::AlphabetMismatch);
    }
    let (na, nb) = (a.dim(), b.dim());
    let n = na + nb;
    let mut lambda: Vec<Rational> = a.lambda().entries().to_vec();
    lambda.extend(b.lambda().iter().map(|x| -x));
    let mut gamma: Vec<Rational> = a.gamma().entries().to_vec();
    gamma.extend(b.gamma().iter().cloned());
    let phi = a
        .matrices()
        .iter()
        .zip(b.matrices())
        .map(|(ma, mb)| {
            let mut m = RMatrix::zeros(n, n);
            for i in 0..na {
                for j in 0..na {
                    m[(i, j)] = ma[(i, j)].clone();
                }
            }
            for i in 0..nb {
                for j in 0..nb {
                    m[(na + i, na + j)] = mb[(i, j)].clone();
                }
            }
            m
        })
        .collect();
    let diff = LinearRepresentation::from_parts_unchecked(a.alphabet().clone(), lambda, phi, gamma);
    let space = reachable_space(&diff, Side::Forward);
    Ok(space
        .basis()
        .iter()
        .all(|v| diff.gamma().dot_slice(v).is_zero()))
}
