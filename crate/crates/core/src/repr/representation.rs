use crate::exactalg::{Orientation, RMatrix, RVector, Rational};

use super::alphabet::{Alphabet, Word};
use super::ReprError;

/// Linear representation `(λ, φ, γ)` of a series `w ↦ λ·φ(w)·γ`.
///
/// `λ` is a row vector, `γ` a column vector and `φ` holds one `n×n` matrix per
/// alphabet symbol, in alphabet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRepresentation {
    alphabet: Alphabet,
    lambda: RVector,
    phi: Vec<RMatrix>,
    gamma: RVector,
}

impl LinearRepresentation {
    pub fn new(
        alphabet: Alphabet,
        lambda: RVector,
        phi: Vec<RMatrix>,
        gamma: RVector,
    ) -> Result<Self, ReprError> {
        let n = lambda.len();
        if gamma.len() != n {
            return Err(ReprError::Shape(format!(
                "gamma has {} entries, expected {n}",
                gamma.len()
            )));
        }
        if phi.len() != alphabet.len() {
            return Err(ReprError::Shape(format!(
                "{} matrices for {} symbols",
                phi.len(),
                alphabet.len()
            )));
        }
        for (i, m) in phi.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(ReprError::Shape(format!(
                    "matrix for `{}` is {}x{}, expected {n}x{n}",
                    alphabet.symbol(i),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let lambda = RVector::row(lambda.into_entries());
        let gamma = RVector::column(gamma.into_entries());
        Ok(LinearRepresentation { alphabet, lambda, phi, gamma })
    }

    /// The zero series in dimension 0.
    pub fn zero(alphabet: Alphabet) -> Self {
        let phi = vec![RMatrix::zeros(0, 0); alphabet.len()];
        LinearRepresentation {
            alphabet,
            lambda: RVector::row(vec![]),
            phi,
            gamma: RVector::column(vec![]),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &RVector {
        &self.lambda
    }

    pub fn gamma(&self) -> &RVector {
        &self.gamma
    }

    pub fn phi(&self, symbol: usize) -> &RMatrix {
        &self.phi[symbol]
    }

    pub fn matrices(&self) -> &[RMatrix] {
        &self.phi
    }

    /// `M = Σ_a φ(a)`.
    pub fn transition_sum(&self) -> RMatrix {
        let n = self.dim();
        self.phi.iter().fold(RMatrix::zeros(n, n), |acc, m| &acc + m)
    }

    /// `φ(w) = φ(w₁)⋯φ(w_m)`, the identity for the empty word.
    pub fn phi_of_word(&self, w: &Word) -> RMatrix {
        w.symbols()
            .iter()
            .fold(RMatrix::identity(self.dim()), |acc, &a| &acc * &self.phi[a])
    }

    /// Row vector `λ·φ(w)`.
    pub fn forward(&self, w: &Word) -> RVector {
        let mut v = self.lambda.entries().to_vec();
        for &a in w.symbols() {
            v = self.phi[a].left_mul(&v);
        }
        RVector::row(v)
    }

    /// Column vector `φ(w)·γ`.
    pub fn backward(&self, w: &Word) -> RVector {
        let mut v = self.gamma.entries().to_vec();
        for &a in w.symbols().iter().rev() {
            v = self.phi[a].right_mul(&v);
        }
        RVector::column(v)
    }

    /// `λ·φ(w)·γ`. Panics if `w` uses a symbol index outside the alphabet.
    pub fn evaluate(&self, w: &Word) -> Rational {
        assert!(w.fits(&self.alphabet), "word uses a symbol outside the alphabet");
        self.forward(w).dot(&self.gamma)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.lambda.is_nonnegative()
            && self.gamma.is_nonnegative()
            && self.phi.iter().all(RMatrix::is_nonnegative)
    }

    pub fn flags(&self) -> NormalizationFlags {
        NormalizationFlags::of(self)
    }

    /// Restriction to the given index subset (kept in the given order).
    pub fn restrict(&self, indices: &[usize]) -> LinearRepresentation {
        LinearRepresentation {
            alphabet: self.alphabet.clone(),
            lambda: self.lambda.select(indices),
            phi: self.phi.iter().map(|m| m.select(indices, indices)).collect(),
            gamma: self.gamma.select(indices),
        }
    }

    pub fn with_lambda(&self, lambda: RVector) -> Result<Self, ReprError> {
        Self::new(self.alphabet.clone(), lambda, self.phi.clone(), self.gamma.clone())
    }

    pub fn with_gamma(&self, gamma: RVector) -> Result<Self, ReprError> {
        Self::new(self.alphabet.clone(), self.lambda.clone(), self.phi.clone(), gamma)
    }

    pub(crate) fn from_parts_unchecked(
        alphabet: Alphabet,
        lambda: Vec<Rational>,
        phi: Vec<RMatrix>,
        gamma: Vec<Rational>,
    ) -> Self {
        LinearRepresentation {
            alphabet,
            lambda: RVector::row(lambda),
            phi,
            gamma: RVector::column(gamma),
        }
    }
}

/// Which of the stochastic normal-form conditions a representation meets.
///
/// Always computed from the representation; there is no way to assert a flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizationFlags {
    /// `Σ_a φ(a)` has every row summing to one.
    pub row_stochastic: bool,
    /// `λ ≥ 0`, `Σλ = 1` and `λ·M = λ`.
    pub lambda_stochastic_fixed: bool,
    pub gamma_all_ones: bool,
    pub nonnegative: bool,
}

impl NormalizationFlags {
    pub fn of(rep: &LinearRepresentation) -> Self {
        let m = rep.transition_sum();
        let row_stochastic = m.row_sums().iter().all(Rational::is_one);
        let lambda = rep.lambda();
        let lambda_stochastic_fixed = lambda.is_nonnegative()
            && lambda.sum().is_one()
            && lambda.mul_matrix(&m) == *lambda;
        let gamma_all_ones = rep.gamma().iter().all(Rational::is_one);
        NormalizationFlags {
            row_stochastic,
            lambda_stochastic_fixed,
            gamma_all_ones,
            nonnegative: rep.is_nonnegative(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.row_stochastic && self.lambda_stochastic_fixed && self.gamma_all_ones && self.nonnegative
    }
}

pub(crate) fn ones_column(n: usize) -> RVector {
    RVector::ones(Orientation::Column, n)
}
