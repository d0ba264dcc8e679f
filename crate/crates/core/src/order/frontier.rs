use std::cmp::Ordering;

use rayon::prelude::*;

use crate::exactalg::{rank, RMatrix};
use crate::repr::Word;

/// One stored product: its canonical matrix and the first word that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierClass {
    pub matrix: RMatrix,
    pub witness: Word,
}

/// Products of a fixed length whose rank is at least a threshold, stored up
/// to positive scalar multiples.
///
/// Each matrix is divided by the absolute value of its first nonzero entry in
/// row-major order, so that entry becomes `±1`. Classes are kept sorted by
/// their entries, which makes the frontier independent of evaluation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frontier {
    depth: usize,
    min_rank: usize,
    classes: Vec<FrontierClass>,
}

/// `m / |first nonzero entry|`; the zero matrix is returned unchanged.
pub fn canonical_scaling(m: &RMatrix) -> RMatrix {
    match m.entries().iter().find(|x| !x.is_zero()) {
        Some(first) if !first.abs().is_one() => {
            let inv = first.abs().recip().expect("nonzero");
            m.scale(&inv)
        }
        _ => m.clone(),
    }
}

fn by_entries(a: &FrontierClass, b: &FrontierClass) -> Ordering {
    a.matrix.entries().cmp(b.matrix.entries())
}

fn normalize_classes(mut classes: Vec<FrontierClass>) -> Vec<FrontierClass> {
    // stable sort: among equal matrices the earliest candidate keeps its witness
    classes.sort_by(by_entries);
    classes.dedup_by(|later, earlier| later.matrix == earlier.matrix);
    classes
}

impl Frontier {
    /// Depth-1 frontier: the generators of rank at least `min_rank`.
    pub fn start(generators: &[RMatrix], min_rank: usize) -> Frontier {
        let classes = generators
            .par_iter()
            .enumerate()
            .filter(|(_, g)| rank(g) >= min_rank)
            .map(|(a, g)| FrontierClass { matrix: canonical_scaling(g), witness: Word::new(vec![a]) })
            .collect();
        Frontier { depth: 1, min_rank, classes: normalize_classes(classes) }
    }

    /// Frontier one letter deeper: `{P·g : P stored, g generator, rank(P·g) ≥ min_rank}`.
    pub fn step(&self, generators: &[RMatrix]) -> Frontier {
        let candidates: Vec<FrontierClass> = self
            .classes
            .par_iter()
            .flat_map_iter(|class| {
                generators.iter().enumerate().map(move |(a, g)| (class, a, g))
            })
            .filter_map(|(class, a, g)| {
                let product = &class.matrix * g;
                (rank(&product) >= self.min_rank).then(|| FrontierClass {
                    matrix: canonical_scaling(&product),
                    witness: class.witness.extended(a),
                })
            })
            .collect();
        Frontier {
            depth: self.depth + 1,
            min_rank: self.min_rank,
            classes: normalize_classes(candidates),
        }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn min_rank(&self) -> usize {
        self.min_rank
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[FrontierClass] {
        &self.classes
    }
}
