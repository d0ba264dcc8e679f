use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};
use std::str::FromStr;

use super::rational::{ParseRationalError, Rational};
use super::AlgError;

/// Whether a vector multiplies matrices from the left (row) or the right (column).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Row,
    Column,
}

/// Dense vector of rationals with an explicit orientation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RVector {
    orientation: Orientation,
    entries: Vec<Rational>,
}

impl RVector {
    pub fn row(entries: Vec<Rational>) -> Self {
        RVector { orientation: Orientation::Row, entries }
    }

    pub fn column(entries: Vec<Rational>) -> Self {
        RVector { orientation: Orientation::Column, entries }
    }

    pub fn zeros(orientation: Orientation, len: usize) -> Self {
        RVector { orientation, entries: vec![Rational::zero(); len] }
    }

    pub fn ones(orientation: Orientation, len: usize) -> Self {
        RVector { orientation, entries: vec![Rational::one(); len] }
    }

    /// Canonical basis vector with a one at `index`.
    pub fn unit(orientation: Orientation, len: usize, index: usize) -> Self {
        let mut v = Self::zeros(orientation, len);
        v.entries[index] = Rational::one();
        v
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.entries.iter()
    }

    pub fn transpose(&self) -> Self {
        let orientation = match self.orientation {
            Orientation::Row => Orientation::Column,
            Orientation::Column => Orientation::Row,
        };
        RVector { orientation, entries: self.entries.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    pub fn sum(&self) -> Rational {
        self.entries.iter().sum()
    }

    /// Plain dot product; orientation is ignored.
    pub fn dot(&self, other: &RVector) -> Rational {
        dot(&self.entries, &other.entries)
    }

    pub fn dot_slice(&self, other: &[Rational]) -> Rational {
        dot(&self.entries, other)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RVector {
            orientation: self.orientation,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn select(&self, indices: &[usize]) -> Self {
        RVector {
            orientation: self.orientation,
            entries: indices.iter().map(|&i| self.entries[i].clone()).collect(),
        }
    }

    /// Row vector times matrix. Panics on a length mismatch.
    pub fn mul_matrix(&self, m: &RMatrix) -> RVector {
        RVector::row(m.left_mul(&self.entries))
    }

    /// Parses whitespace-separated scalars into a row vector.
    pub fn parse_row(s: &str) -> Result<Self, ParseRationalError> {
        Ok(RVector::row(parse_scalars(s)?))
    }

    /// Parses whitespace-separated scalars into a column vector.
    pub fn parse_column(s: &str) -> Result<Self, ParseRationalError> {
        Ok(RVector::column(parse_scalars(s)?))
    }
}

impl Index<usize> for RVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl IndexMut<usize> for RVector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.entries[i]
    }
}

impl fmt::Debug for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.orientation {
            Orientation::Row => "row",
            Orientation::Column => "col",
        };
        write!(f, "{tag}{:?}", self.entries)
    }
}

fn parse_scalars(s: &str) -> Result<Vec<Rational>, ParseRationalError> {
    s.split_whitespace().map(str::parse).collect()
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "dot product of vectors with different lengths");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, AlgError> {
        if data.len() != rows * cols {
            return Err(AlgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, AlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgError::Shape("ragged rows".into()));
        }
        Ok(RMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[RVector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &RMatrix) -> Result<RMatrix, AlgError> {
        if self.cols != rhs.rows {
            return Err(AlgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: usize) -> RMatrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = RMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `x · self` for a row given as a slice.
    pub fn left_mul(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.rows, "row vector length mismatch");
        let mut out = vec![Rational::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += &(xi * a);
                }
            }
        }
        out
    }

    /// `self · x` for a column given as a slice.
    pub fn right_mul(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols, "column vector length mismatch");
        (0..self.rows).map(|i| dot(self.row(i), x)).collect()
    }

    /// Matrix times column vector.
    pub fn mul_vector(&self, v: &RVector) -> RVector {
        RVector::column(self.right_mul(v.entries()))
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> RMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        RMatrix { rows: rows.len(), cols: cols.len(), data }
    }
}

impl Index<(usize, usize)> for RMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&RMatrix> for &RMatrix {
    type Output = RMatrix;
    fn mul(self, rhs: &RMatrix) -> RMatrix {
        self.checked_mul(rhs).expect("non-conformable matrix product")
    }
}

impl Add<&RMatrix> for &RMatrix {
    type Output = RMatrix;
    fn add(self, rhs: &RMatrix) -> RMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&RMatrix> for &RMatrix {
    type Output = RMatrix;
    fn sub(self, rhs: &RMatrix) -> RMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Error from the compact `"a b; c d"` matrix syntax.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseMatrixError {
    #[error(transparent)]
    Scalar(#[from] ParseRationalError),
    #[error("ragged rows")]
    Ragged,
}

/// Rows separated by `;`, entries by whitespace: `"0 2/3; 1 0"`.
impl FromStr for RMatrix {
    type Err = ParseMatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = s
            .split(';')
            .map(parse_scalars)
            .collect::<Result<Vec<_>, _>>()?;
        RMatrix::from_rows(rows).map_err(|_| ParseMatrixError::Ragged)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> RMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn product_and_power() {
        let b = m("0 2/3 1/3; 0 1/3 0; 0 0 2/3");
        let direct = &b * &b;
        assert_eq!(direct, m("0 2/9 2/9; 0 1/9 0; 0 0 4/9"));
        assert_eq!(b.pow(2), direct);
        assert_eq!(b.pow(0), RMatrix::identity(3));
        assert_eq!(b.pow(5), &b.pow(2) * &b.pow(3));
    }

    #[test]
    fn vector_products() {
        let a = m("0 0 0; 2/3 0 0; 1/3 0 0");
        let lambda = RVector::parse_row("1/3 1/3 1/3").unwrap();
        assert_eq!(lambda.mul_matrix(&a), RVector::parse_row("1/3 0 0").unwrap());
        let gamma = RVector::ones(Orientation::Column, 3);
        assert_eq!(a.mul_vector(&gamma), RVector::parse_column("0 2/3 1/3").unwrap());
    }

    #[test]
    fn shape_errors() {
        assert!(RMatrix::new(2, 2, vec![Rational::zero(); 3]).is_err());
        assert!("1 2; 3".parse::<RMatrix>().is_err());
        assert!(m("1 2").checked_mul(&m("1 2")).is_err());
    }
}
