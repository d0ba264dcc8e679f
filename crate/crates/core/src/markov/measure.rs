use crate::exactalg::{RMatrix, RVector, Rational};
use crate::repr::{Alphabet, Word};

use super::MarkovError;

/// Stationary 1-step Markov measure `(v, M)` on a state alphabet.
///
/// `M` is row-stochastic, `v` is a probability vector with `v·M = v`, and the
/// support digraph of `M` restricted to `{q : v_q > 0}` is strongly connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovMeasure {
    states: Alphabet,
    v: RVector,
    m: RMatrix,
}

impl MarkovMeasure {
    pub fn new(states: Alphabet, v: RVector, m: RMatrix) -> Result<Self, MarkovError> {
        let n = states.len();
        if v.len() != n || m.rows() != n || m.cols() != n {
            return Err(MarkovError::Shape(format!(
                "{n} states, vector of length {}, {}x{} matrix",
                v.len(),
                m.rows(),
                m.cols()
            )));
        }
        if !m.is_nonnegative() {
            return Err(MarkovError::NotStochastic("transition matrix has a negative entry".into()));
        }
        if let Some(i) = m.row_sums().iter().position(|s| !s.is_one()) {
            return Err(MarkovError::NotStochastic(format!(
                "row of state `{}` sums to {}",
                states.symbol(i),
                m.row_sums()[i]
            )));
        }
        if !v.is_nonnegative() || !v.sum().is_one() {
            return Err(MarkovError::NotStochastic(
                "initial vector is not a probability vector".into(),
            ));
        }
        let v = RVector::row(v.into_entries());
        if v.mul_matrix(&m) != v {
            return Err(MarkovError::NotStationary);
        }
        if !support_strongly_connected(&v, &m) {
            return Err(MarkovError::NotIrreducible);
        }
        Ok(MarkovMeasure { states, v, m })
    }

    pub fn states(&self) -> &Alphabet {
        &self.states
    }

    pub fn v(&self) -> &RVector {
        &self.v
    }

    pub fn transitions(&self) -> &RMatrix {
        &self.m
    }

    /// `v_{w₁}·M_{w₁,w₂}⋯M_{w_{m−1},w_m}`; the empty word has measure 1.
    pub fn cylinder(&self, w: &Word) -> Rational {
        let s = w.symbols();
        let Some(&first) = s.first() else {
            return Rational::one();
        };
        let mut p = self.v[first].clone();
        for pair in s.windows(2) {
            if p.is_zero() {
                break;
            }
            p *= &self.m[(pair[0], pair[1])];
        }
        p
    }
}

fn support_strongly_connected(v: &RVector, m: &RMatrix) -> bool {
    let support: Vec<usize> = (0..v.len()).filter(|&i| v[i].is_positive()).collect();
    let Some(&root) = support.first() else {
        return false;
    };
    let in_support = |i: usize| v[i].is_positive();
    let sweep = |forward: bool| {
        let mut seen = vec![false; v.len()];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(p) = stack.pop() {
            for q in 0..v.len() {
                let edge = if forward { &m[(p, q)] } else { &m[(q, p)] };
                if !seen[q] && in_support(q) && edge.is_positive() {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        support.iter().all(|&q| seen[q])
    };
    sweep(true) && sweep(false)
}

/// Letter-to-letter map `f: B → A` inducing a 1-block factor map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMap {
    source: Alphabet,
    target: Alphabet,
    image: Vec<usize>,
}

impl BlockMap {
    /// `image[i]` is the target index of source symbol `i`; must be onto.
    pub fn new(source: Alphabet, target: Alphabet, image: Vec<usize>) -> Result<Self, MarkovError> {
        if image.len() != source.len() {
            return Err(MarkovError::BadMap("map is not total on the source".into()));
        }
        if image.iter().any(|&t| t >= target.len()) {
            return Err(MarkovError::BadMap("image outside the target alphabet".into()));
        }
        if let Some(t) = (0..target.len()).find(|t| !image.contains(t)) {
            return Err(MarkovError::BadMap(format!(
                "target symbol `{}` has no preimage",
                target.symbol(t)
            )));
        }
        Ok(BlockMap { source, target, image })
    }

    /// Builds the map from `source=target` pairs covering every source symbol
    /// exactly once. Target symbols are ordered by first appearance in source order.
    pub fn from_pairs<S: AsRef<str>>(source: &Alphabet, pairs: &[(S, S)]) -> Result<Self, MarkovError> {
        let mut assigned: Vec<Option<&str>> = vec![None; source.len()];
        for (s, t) in pairs {
            let i = source
                .index_of(s.as_ref())
                .ok_or_else(|| MarkovError::BadMap(format!("`{}` is not a state", s.as_ref())))?;
            if assigned[i].replace(t.as_ref()).is_some() {
                return Err(MarkovError::BadMap(format!("state `{}` mapped twice", s.as_ref())));
            }
        }
        let mut targets: Vec<&str> = Vec::new();
        let mut image = Vec::with_capacity(source.len());
        for (i, t) in assigned.iter().enumerate() {
            let t = t.ok_or_else(|| {
                MarkovError::BadMap(format!("state `{}` is not mapped", source.symbol(i)))
            })?;
            let idx = targets.iter().position(|x| *x == t).unwrap_or_else(|| {
                targets.push(t);
                targets.len() - 1
            });
            image.push(idx);
        }
        let target = Alphabet::new(targets).map_err(|e| MarkovError::BadMap(e.to_string()))?;
        Self::new(source.clone(), target, image)
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        BlockMap {
            source: alphabet.clone(),
            target: alphabet.clone(),
            image: (0..alphabet.len()).collect(),
        }
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn apply(&self, symbol: usize) -> usize {
        self.image[symbol]
    }

    pub fn apply_word(&self, w: &Word) -> Word {
        Word::new(w.symbols().iter().map(|&s| self.image[s]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn states() -> Alphabet {
        Alphabet::new(["1", "2", "3"]).unwrap()
    }

    #[test]
    fn validates_the_biased_triangle() {
        let m = catalog::biased_triangle_chain();
        assert_eq!(m.v(), &RVector::parse_row("1/3 1/3 1/3").unwrap());
    }

    #[test]
    fn rejects_non_stochastic_rows() {
        let m: RMatrix = "0 1/3 1/3; 2/3 1/3 0; 1/3 0 2/3".parse().unwrap();
        let v = RVector::parse_row("1/3 1/3 1/3").unwrap();
        assert!(matches!(
            MarkovMeasure::new(states(), v, m),
            Err(MarkovError::NotStochastic(_))
        ));
    }

    #[test]
    fn rejects_non_stationary_vectors() {
        let m = catalog::biased_triangle_chain().transitions().clone();
        let v = RVector::parse_row("1 0 0").unwrap();
        // (1,0,0)·M = (0, 2/3, 1/3)
        assert_eq!(v.mul_matrix(&m), RVector::parse_row("0 2/3 1/3").unwrap());
        assert_eq!(MarkovMeasure::new(states(), v, m), Err(MarkovError::NotStationary));
    }

    #[test]
    fn rejects_reducible_support() {
        let m = RMatrix::identity(2);
        let v = RVector::parse_row("1/2 1/2").unwrap();
        let two = Alphabet::new(["x", "y"]).unwrap();
        assert_eq!(MarkovMeasure::new(two.clone(), v, m.clone()), Err(MarkovError::NotIrreducible));
        // restricted to the support of v the chain is irreducible
        let v = RVector::parse_row("1 0").unwrap();
        assert!(MarkovMeasure::new(two, v, m).is_ok());
    }

    #[test]
    fn cylinders() {
        let m = catalog::biased_triangle_chain();
        let w = |s: &str| m.states().parse_word(s).unwrap();
        assert_eq!(m.cylinder(&w("12")), Rational::frac(2, 9));
        assert_eq!(m.cylinder(&w("121")), Rational::frac(4, 27));
        assert_eq!(m.cylinder(&w("2")), Rational::frac(1, 3));
        assert_eq!(m.cylinder(&Word::empty()), Rational::one());
        assert_eq!(m.cylinder(&w("23")), Rational::zero());
    }

    #[test]
    fn block_map_validation() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        assert!(BlockMap::new(states(), ab.clone(), vec![0, 1, 1]).is_ok());
        assert!(BlockMap::new(states(), ab.clone(), vec![0, 0, 0]).is_err());
        assert!(BlockMap::new(states(), ab, vec![0, 1]).is_err());
        let f = BlockMap::from_pairs(&states(), &[("2", "b"), ("1", "a"), ("3", "b")]).unwrap();
        assert_eq!(f.target().symbols(), ["a", "b"]);
        assert_eq!(f.apply(2), 1);
        assert!(BlockMap::from_pairs(&states(), &[("1", "a"), ("2", "b")]).is_err());
        assert!(BlockMap::from_pairs(&states(), &[("1", "a"), ("1", "b"), ("3", "b")]).is_err());
    }
}
