use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::{Orientation, RMatrix, RVector};
use super::rational::Rational;
use super::AlgError;

/// Exact rank by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled by the lcm of its denominators, which leaves the
/// rank unchanged and makes every entry integral. Every intermediate entry is
/// then a minor of the integral matrix, so the divisions below are exact.
pub fn rank(m: &RMatrix) -> usize {
    let mut a = integer_rows(m);
    let rows = m.rows();
    let cols = m.cols();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let num = pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!(num.is_multiple_of(&prev), "inexact Bareiss division");
                row[j] = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        r += 1;
    }
    r
}

fn integer_rows(m: &RMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let lcm = row
                .iter()
                .fold(BigUint::one(), |acc, x| acc.lcm(&x.denom_magnitude()));
            let lcm = BigInt::from(lcm);
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect()
}

/// Reduced row echelon form and the pivot column of each nonzero row.
pub fn rref(m: &RMatrix) -> (RMatrix, Vec<usize>) {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.row_vectors();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip().expect("pivot is nonzero");
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let reduced = RMatrix::from_rows(a).unwrap_or_else(|_| RMatrix::zeros(rows, cols));
    (reduced, pivots)
}

/// Incrementally built subspace of `Q^n`, kept as a reduced row echelon basis.
///
/// Rows are stored sorted by pivot column, so the basis is canonical for the
/// subspace regardless of insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowSpace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(ambient: usize) -> Self {
        RowSpace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient space");
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&c * y);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.residual(v).iter().all(Rational::is_zero)
    }

    /// Adds `v` to the span; returns `false` when it was already in it.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut r = self.residual(v);
        let Some(q) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[q].recip().expect("nonzero");
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[q].is_zero() {
                continue;
            }
            let c = row[q].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &(&c * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, r);
        true
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

/// Basis of `{x : m·x = 0}` in reduced echelon form (leftmost pivot first).
pub fn kernel_basis(m: &RMatrix) -> Vec<RVector> {
    let cols = m.cols();
    let (r, pivots) = rref(m);
    let mut space = RowSpace::new(cols);
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![Rational::zero(); cols];
        x[free] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = -&r[(i, free)];
        }
        space.insert(&x);
    }
    space
        .basis()
        .iter()
        .map(|row| RVector::column(row.clone()))
        .collect()
}

/// Basis of the column space of `m` in reduced echelon form.
pub fn image_basis(m: &RMatrix) -> Vec<RVector> {
    let mut space = RowSpace::new(m.rows());
    for j in 0..m.cols() {
        space.insert(&m.column(j));
        if space.is_full() {
            break;
        }
    }
    space
        .basis()
        .iter()
        .map(|row| RVector::column(row.clone()))
        .collect()
}

/// Solves `a·x = b`; returns one solution (free variables set to zero) or `None`.
pub fn solve(a: &RMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let mut aug = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let mut row = a.row(i).to_vec();
        row.push(b[i].clone());
        aug.push(row);
    }
    let aug = RMatrix::from_rows(aug).ok()?;
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, n)].clone();
    }
    Some(x)
}

/// Component of `x` in `span(u_basis)` under the direct sum `span(u) ⊕ span(w)`.
pub fn project_along(
    x: &RVector,
    u_basis: &[RVector],
    w_basis: &[RVector],
) -> Result<RVector, AlgError> {
    let n = x.len();
    let all: Vec<RVector> = u_basis.iter().chain(w_basis).cloned().collect();
    if all.iter().any(|v| v.len() != n) {
        return Err(AlgError::Shape("basis vector length differs from x".into()));
    }
    let b = RMatrix::from_columns(n, &all);
    if all.len() != n || rank(&b) != n {
        return Err(AlgError::DecompositionNotDirect);
    }
    let c = solve(&b, x.entries()).ok_or(AlgError::DecompositionNotDirect)?;
    let mut out = vec![Rational::zero(); n];
    for (ci, u) in c.iter().zip(u_basis) {
        if ci.is_zero() {
            continue;
        }
        for (o, ui) in out.iter_mut().zip(u.iter()) {
            *o += &(ci * ui);
        }
    }
    Ok(match x.orientation() {
        Orientation::Row => RVector::row(out),
        Orientation::Column => RVector::column(out),
    })
}

/// Nonzero row vector `x` with `x·m = x`.
///
/// When the fixed space has dimension above one, the reduced-echelon basis
/// vector with the smallest leading index is returned.
pub fn solve_left_fixed(m: &RMatrix) -> Result<RVector, AlgError> {
    if !m.is_square() {
        return Err(AlgError::Shape("fixed vector of a non-square matrix".into()));
    }
    let shifted = &m.transpose() - &RMatrix::identity(m.rows());
    kernel_basis(&shifted)
        .into_iter()
        .next()
        .map(|v| v.transpose())
        .ok_or(AlgError::NoFixedVector)
}
