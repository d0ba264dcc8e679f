//! Small worked measures used as golden data in tests, fixtures and the CLI.

use crate::exactalg::{RMatrix, RVector, Rational};
use crate::markov::{BlockMap, MarkovMeasure};
use crate::repr::{Alphabet, LinearRepresentation, ReprError};

fn build(symbols: &[&str], lambda: &str, phi: &[&str], gamma: &str) -> LinearRepresentation {
    LinearRepresentation::new(
        Alphabet::new(symbols.iter().copied()).expect("valid alphabet"),
        RVector::parse_row(lambda).expect("valid scalars"),
        phi.iter().map(|m| m.parse::<RMatrix>().expect("valid matrix")).collect(),
        RVector::parse_column(gamma).expect("valid scalars"),
    )
    .expect("consistent dimensions")
}

fn chain(v: &str, m: &str) -> MarkovMeasure {
    MarkovMeasure::new(
        Alphabet::new(["1", "2", "3"]).expect("valid alphabet"),
        RVector::parse_row(v).expect("valid scalars"),
        m.parse().expect("valid matrix"),
    )
    .expect("valid chain")
}

/// Three-state chain with transitions 1→2 (2/3), 1→3 (1/3), 2→1 (2/3),
/// 2→2 (1/3), 3→1 (1/3), 3→3 (2/3); uniform stationary vector.
pub fn biased_triangle_chain() -> MarkovMeasure {
    chain("1/3 1/3 1/3", "0 2/3 1/3; 2/3 1/3 0; 1/3 0 2/3")
}

/// Same graph as [`biased_triangle_chain`] with every transition 1/2.
pub fn uniform_triangle_chain() -> MarkovMeasure {
    chain("1/3 1/3 1/3", "0 1/2 1/2; 1/2 1/2 0; 1/2 0 1/2")
}

/// `1 ↦ a`, `2 ↦ b`, `3 ↦ b`.
pub fn merge_last_two() -> BlockMap {
    let states = Alphabet::new(["1", "2", "3"]).expect("valid alphabet");
    BlockMap::from_pairs(&states, &[("1", "a"), ("2", "b"), ("3", "b")]).expect("onto map")
}

/// Image of [`biased_triangle_chain`] under [`merge_last_two`]. Minimal in
/// dimension 3 and not k-step Markov for any k.
pub fn hidden_three_state() -> LinearRepresentation {
    build(
        &["a", "b"],
        "1/3 1/3 1/3",
        &["0 0 0; 2/3 0 0; 1/3 0 0", "0 2/3 1/3; 0 1/3 0; 0 0 2/3"],
        "1 1 1",
    )
}

/// Image of [`uniform_triangle_chain`] under [`merge_last_two`]; its minimal
/// representation has dimension 2 and the measure is 1-step Markov.
pub fn hidden_uniform_three_state() -> LinearRepresentation {
    build(
        &["a", "b"],
        "1/3 1/3 1/3",
        &["0 0 0; 1/2 0 0; 1/2 0 0", "0 1/2 1/2; 0 1/2 0; 0 0 1/2"],
        "1 1 1",
    )
}

/// Minimal form of [`hidden_uniform_three_state`].
pub fn hidden_uniform_reduced() -> LinearRepresentation {
    build(&["a", "b"], "1/3 2/3", &["0 0; 1/2 0", "0 1; 0 1/2"], "1 1")
}

/// Five-state family over `{a, b}` with `q = 1 − p` and `s = 1 − r`:
/// `λ = (1, p, r, q, s(r+q)) / σ` with `σ = 2 + r + s(r+q)`.
///
/// Minimal dimension is 4 when `p ≠ r`; for `p = r` the measure is Bernoulli.
pub fn five_state_family(p: Rational, r: Rational) -> Result<LinearRepresentation, ReprError> {
    let open_unit = |x: &Rational| x.is_positive() && x < &Rational::one();
    if !open_unit(&p) || !open_unit(&r) {
        return Err(ReprError::Shape("parameters must lie strictly between 0 and 1".into()));
    }
    let q = Rational::one() - &p;
    let s = Rational::one() - &r;
    let z = Rational::zero;
    let tail = &s * &(&r + &q);
    let sigma = Rational::from(2) + &r + &tail;
    let lambda: Vec<Rational> = [Rational::one(), p.clone(), r.clone(), q.clone(), tail]
        .iter()
        .map(|x| x / &sigma)
        .collect();
    let a = RMatrix::from_rows(vec![
        vec![z(), p.clone(), z(), z(), z()],
        vec![z(), z(), r.clone(), z(), z()],
        vec![r.clone(), z(), z(), z(), z()],
        vec![z(), z(), r.clone(), z(), z()],
        vec![r.clone(), z(), z(), z(), z()],
    ])?;
    let b = RMatrix::from_rows(vec![
        vec![z(), z(), z(), q.clone(), z()],
        vec![s.clone(), z(), z(), z(), z()],
        vec![z(), z(), z(), z(), s.clone()],
        vec![z(), z(), z(), z(), s.clone()],
        vec![s.clone(), z(), z(), z(), z()],
    ])?;
    LinearRepresentation::new(
        Alphabet::new(["a", "b"])?,
        RVector::row(lambda),
        vec![a, b],
        RVector::column(vec![Rational::one(); 5]),
    )
}

/// Four-letter, four-state representation whose minimal form has dimension 3
/// with rank-one generators: a 1-step Markov measure.
pub fn four_letter_chain() -> LinearRepresentation {
    build(
        &["a", "b", "c", "d"],
        "1/3 5/24 1/6 7/24",
        &[
            "2/3 0 0 0; 0 0 0 0; 2/3 0 0 0; 0 0 0 0",
            "0 1/3 0 0; 0 0 0 0; 0 0 0 0; 0 1/3 0 0",
            "0 0 0 0; 0 0 1/3 0; 0 0 0 0; 0 0 1/3 0",
            "0 0 0 0; 0 0 0 2/3; 0 0 0 1/3; 0 0 0 1/3",
        ],
        "1 1 1 1",
    )
}

/// Minimal (signed) form of [`four_letter_chain`].
pub fn four_letter_reduced() -> LinearRepresentation {
    build(
        &["a", "b", "c", "d"],
        "15/24 1/2 -1/8",
        &[
            "2/3 0 0; 0 0 0; 2/3 0 0",
            "0 1/3 0; 0 0 0; 0 0 0",
            "0 0 0; 0 0 1/3; 0 0 0",
            "0 0 0; 2/3 2/3 -2/3; 1/3 1/3 -1/3",
        ],
        "1 1 1",
    )
}

/// Bernoulli measure with `μ(a) = μ(b) = 1/2`, in dimension 1.
pub fn fair_coin() -> LinearRepresentation {
    build(&["a", "b"], "1", &["1/2", "1/2"], "1")
}

/// Chain 1→1 (1/2), 1→2 (1/2), 2→3, 3→1 seen through [`merge_last_two`]:
/// the letters `b` come in pairs, so the image is 2-step but not 1-step Markov.
pub fn paired_b_chain() -> MarkovMeasure {
    chain("1/2 1/4 1/4", "1/2 1/2 0; 0 0 1; 1 0 0")
}
