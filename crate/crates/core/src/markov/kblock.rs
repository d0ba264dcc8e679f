use std::collections::HashMap;

use crate::exactalg::{RMatrix, RVector, Rational};
use crate::repr::{Alphabet, LinearRepresentation, Word};

use super::measure::MarkovMeasure;
use super::MarkovError;

/// Candidate 1-step Markov measure on the k-block presentation of a measure.
///
/// Block symbols are the length-k words of positive measure (lexicographic
/// order); `v_u = μ(u)` and `M_{u,u'} = μ(x)/μ(u)` where `x` is the (k+1)-word
/// whose prefix is `u` and suffix is `u'`.
#[derive(Debug, Clone)]
pub struct KBlockModel {
    k: usize,
    base: Alphabet,
    block_alphabet: Alphabet,
    markov: MarkovMeasure,
    decode: Vec<Word>,
    encode: HashMap<Word, usize>,
}

impl KBlockModel {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn base(&self) -> &Alphabet {
        &self.base
    }

    pub fn block_alphabet(&self) -> &Alphabet {
        &self.block_alphabet
    }

    pub fn markov(&self) -> &MarkovMeasure {
        &self.markov
    }

    pub fn decode(&self, block: usize) -> &Word {
        &self.decode[block]
    }

    pub fn encode(&self, w: &Word) -> Option<usize> {
        self.encode.get(w).copied()
    }

    /// Measure of `w` predicted by the block chain.
    ///
    /// For `|w| ≥ k` this is the Markov product over the length-k windows of
    /// `w` (zero once a window leaves the support). Shorter words are summed
    /// over their right extensions to length k.
    pub fn predict(&self, w: &Word) -> Rational {
        if w.len() < self.k {
            return self
                .decode
                .iter()
                .enumerate()
                .filter(|(_, u)| u.symbols().starts_with(w.symbols()))
                .map(|(i, _)| self.markov.v()[i].clone())
                .sum();
        }
        let blocks: Option<Vec<usize>> = w
            .symbols()
            .windows(self.k)
            .map(|win| self.encode.get(&Word::new(win.to_vec())).copied())
            .collect();
        match blocks {
            Some(blocks) => self.markov.cylinder(&Word::new(blocks)),
            None => Rational::zero(),
        }
    }

    /// Left-marginal variant of [`KBlockModel::predict`] for `|w| < k`: sums
    /// over left extensions instead. Agrees with `predict` for invariant measures.
    pub fn predict_left(&self, w: &Word) -> Rational {
        if w.len() >= self.k {
            return self.predict(w);
        }
        self.decode
            .iter()
            .enumerate()
            .filter(|(_, u)| u.symbols().ends_with(w.symbols()))
            .map(|(i, _)| self.markov.v()[i].clone())
            .sum()
    }
}

/// Length-`k` words with positive value, lexicographic.
///
/// Works for signed representations too: a prefix whose forward vector
/// `λφ(w)` vanishes has no extension of nonzero value.
fn positive_words(rep: &LinearRepresentation, k: usize) -> Vec<(Word, Rational)> {
    let mut level = vec![(Word::empty(), rep.lambda().clone())];
    for _ in 0..k {
        level = level
            .iter()
            .flat_map(|(w, f)| {
                rep.matrices().iter().enumerate().filter_map(move |(a, m)| {
                    let next = f.mul_matrix(m);
                    (!next.is_zero()).then(|| (w.extended(a), next))
                })
            })
            .collect();
    }
    level
        .into_iter()
        .map(|(w, f)| {
            let value = f.dot(rep.gamma());
            (w, value)
        })
        .filter(|(_, value)| value.is_positive())
        .collect()
}

fn block_name(base: &Alphabet, w: &Word) -> String {
    if base.single_char() {
        base.render(w)
    } else {
        w.symbols().iter().map(|&s| base.symbol(s)).collect::<Vec<_>>().join(".")
    }
}

/// Builds the order-k block chain of the measure given by `rep`.
pub fn build_k_block_model(rep: &LinearRepresentation, k: usize) -> Result<KBlockModel, MarkovError> {
    if k == 0 {
        return Err(MarkovError::BadOrder);
    }
    let blocks = positive_words(rep, k);
    if blocks.is_empty() {
        return Err(MarkovError::EmptySupport);
    }
    let base = rep.alphabet().clone();
    let encode: HashMap<Word, usize> = blocks
        .iter()
        .enumerate()
        .map(|(i, (w, _))| (w.clone(), i))
        .collect();
    let n = blocks.len();
    let mut transitions = RMatrix::zeros(n, n);
    for (i, (u, mu_u)) in blocks.iter().enumerate() {
        let forward = rep.forward(u);
        for (a, m) in rep.matrices().iter().enumerate() {
            let x = u.extended(a);
            let Some(&j) = encode.get(&x.slice(1, k + 1)) else {
                continue;
            };
            let mu_x = forward.mul_matrix(m).dot(rep.gamma());
            transitions[(i, j)] = mu_x.checked_div(mu_u).expect("support words have positive measure");
        }
        let row_sum: Rational = transitions.row(i).iter().sum();
        if !row_sum.is_one() {
            return Err(MarkovError::NonStochasticModel(format!(
                "row `{}` sums to {row_sum}",
                block_name(&base, u)
            )));
        }
    }
    let names: Vec<String> = blocks.iter().map(|(w, _)| block_name(&base, w)).collect();
    let block_alphabet = Alphabet::new(names)?;
    let v = RVector::row(blocks.iter().map(|(_, p)| p.clone()).collect());
    let markov = MarkovMeasure::new(block_alphabet.clone(), v, transitions)?;
    let decode = blocks.into_iter().map(|(w, _)| w).collect();
    Ok(KBlockModel { k, base, block_alphabet, markov, decode, encode })
}
