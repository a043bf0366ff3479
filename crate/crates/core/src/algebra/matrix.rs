use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from nested rows. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(n * m);
        for row in rows {
            if row.len() != m {
                return Err(Error::LengthMismatch { expected: m, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols: m, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn ensure_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Principal submatrix on the given (ordered) index set.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])].clone())
    }
}

impl<T: PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl<T: Zero + Clone> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }
}

impl<T: Zero + One + Clone> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<'a, T> Mul for &'a Matrix<T>
where
    T: Clone + Zero,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    type Output = Matrix<T>;

    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    let cell = &mut out[(i, j)];
                    *cell = std::mem::replace(cell, T::zero()) + prod;
                }
            }
        }
        out
    }
}

impl<'a, T> Add for &'a Matrix<T>
where
    for<'x> &'x T: Add<&'x T, Output = T>,
{
    type Output = Matrix<T>;

    fn add(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<'a, T> Sub for &'a Matrix<T>
where
    for<'x> &'x T: Sub<&'x T, Output = T>,
{
    type Output = Matrix<T>;

    fn sub(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Matrix<i64> {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("ragged rows")
    }

    pub fn to_bigint(&self) -> Matrix<BigInt> {
        self.map(|&x| BigInt::from(x))
    }

    pub fn to_rational(&self) -> Matrix<BigRational> {
        self.map(|&x| BigRational::from_integer(BigInt::from(x)))
    }

    /// Parses the plain-text matrix format: first line is the dimension,
    /// followed by that many rows of space-separated integers.
    pub fn parse_square(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lno, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let n: usize =
            first.parse().map_err(|_| Error::Parse { line: lno, msg: format!("bad dimension '{first}'") })?;
        let mut data = Vec::with_capacity(n * n);
        for _ in 0..n {
            let (lno, line) = lines.next().ok_or(Error::Parse { line: lno, msg: format!("expected {n} rows") })?;
            let row: Vec<i64> = line
                .split_whitespace()
                .map(|w| w.parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse { line: lno, msg: e.to_string() })?;
            if row.len() != n {
                return Err(Error::Parse { line: lno, msg: format!("expected {n} entries, got {}", row.len()) });
            }
            data.extend(row);
        }
        if let Some((lno, _)) = lines.next() {
            return Err(Error::Parse { line: lno, msg: "trailing content".into() });
        }
        Ok(Matrix::from_vec(n, n, data))
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// Renders the plain-text matrix format (dimension line, then rows).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.rows)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
