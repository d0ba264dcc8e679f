use crate::exactalg::{Orientation, RMatrix, RVector};
use crate::repr::{Alphabet, LinearRepresentation};

use super::measure::{BlockMap, MarkovMeasure};
use super::MarkovError;

/// Representation of the image of `m` under the 1-block map `f`.
///
/// `λ = v`, `γ = 1`, and `φ(a)_{p,q} = M_{p,q}` when `f(q) = a`, zero otherwise.
/// The value of a word is the total weight of the state paths labelled by it.
pub fn hidden_markov_rep(
    m: &MarkovMeasure,
    f: &BlockMap,
) -> Result<LinearRepresentation, MarkovError> {
    if f.source() != m.states() {
        return Err(MarkovError::BadMap("map source differs from the chain's states".into()));
    }
    let n = m.states().len();
    let t = m.transitions();
    let phi = (0..f.target().len())
        .map(|a| {
            let mut out = RMatrix::zeros(n, n);
            for q in (0..n).filter(|&q| f.apply(q) == a) {
                for p in 0..n {
                    out[(p, q)] = t[(p, q)].clone();
                }
            }
            out
        })
        .collect();
    Ok(LinearRepresentation::new(
        f.target().clone(),
        m.v().clone(),
        phi,
        RVector::ones(Orientation::Column, n),
    )?)
}

/// Hidden Markov chain on `{1..n} × A` presenting a normalized representation.
///
/// `N_{(i,a),(j,b)} = φ(b)_{i,j}` and `v_{(i,a)} = (λ·φ(a))_i`, which sums to
/// `λ_i` over `a` and is stationary for `N` because `λM = λ`. State `(i, a)`
/// is named `i:a` with `i` counted from 1, and maps to `a`.
pub fn rep_to_hidden_markov(
    rep: &LinearRepresentation,
) -> Result<(MarkovMeasure, BlockMap), MarkovError> {
    if !rep.flags().is_normalized() {
        return Err(MarkovError::NotNormalized);
    }
    let n = rep.dim();
    let k = rep.alphabet().len();
    let index = |i: usize, a: usize| i * k + a;
    let mut names = Vec::with_capacity(n * k);
    for i in 0..n {
        for a in rep.alphabet().symbols() {
            names.push(format!("{}:{a}", i + 1));
        }
    }
    let states = Alphabet::new(names)?;

    let mut transitions = RMatrix::zeros(n * k, n * k);
    for i in 0..n {
        for a in 0..k {
            for (b, phi_b) in rep.matrices().iter().enumerate() {
                for j in 0..n {
                    transitions[(index(i, a), index(j, b))] = phi_b[(i, j)].clone();
                }
            }
        }
    }
    let mut v = RVector::zeros(Orientation::Row, n * k);
    for (a, phi_a) in rep.matrices().iter().enumerate() {
        let row = rep.lambda().mul_matrix(phi_a);
        for i in 0..n {
            v[index(i, a)] = row[i].clone();
        }
    }
    let image = (0..n * k).map(|s| s % k).collect();
    let f = BlockMap::new(states.clone(), rep.alphabet().clone(), image)?;
    let m = MarkovMeasure::new(states, v, transitions)?;
    Ok((m, f))
}

/// Representation of a Markov measure over its own states in which every
/// `φ(a)` keeps only column `a` of `M`, so each generator has rank at most one.
pub fn markov_rank1_rep(m: &MarkovMeasure) -> LinearRepresentation {
    let n = m.states().len();
    let t = m.transitions();
    let phi = (0..n)
        .map(|a| {
            let mut out = RMatrix::zeros(n, n);
            for p in 0..n {
                out[(p, a)] = t[(p, a)].clone();
            }
            out
        })
        .collect();
    LinearRepresentation::new(
        m.states().clone(),
        m.v().clone(),
        phi,
        RVector::ones(Orientation::Column, n),
    )
    .expect("dimensions agree by construction")
}
