//! Exact linear algebra: inertia of symmetric and hermitian matrices,
//! fraction-free determinants, characteristic and Alexander polynomials.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::Serialize;

use super::matrix::Matrix;
use super::number::{GaussianRational, Rational};
use super::poly::{IntPoly, RatPoly};
use crate::error::{Error, Result};

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Inertia { positive, negative, zero }
    }

    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn nullity(&self) -> usize {
        self.zero
    }

    pub fn is_positive_definite(&self) -> bool {
        self.negative == 0 && self.zero == 0
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.positive, self.negative, self.zero)
    }
}

/// Inertia of a symmetric rational matrix by congruence diagonalization.
///
/// Pivots on a nonzero diagonal entry when one exists; otherwise a nonzero
/// off-diagonal `a_ij` is turned into the pivot by adding row/column `j` to
/// row/column `i` (new diagonal `2·a_ij`).
pub fn inertia(m: &Matrix<Rational>) -> Result<Inertia> {
    m.ensure_square()?;
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let pivots = congruence_pivots(m.clone());
    let mut out = Inertia::new(0, 0, m.rows() - pivots.len());
    for p in &pivots {
        if p.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
    }
    Ok(out)
}

pub fn inertia_int(m: &Matrix<i64>) -> Result<Inertia> {
    inertia(&m.to_rational())
}

/// Nonzero diagonal entries of a congruent diagonal form of `a` (assumed symmetric).
/// Only unimodular congruences are used, so the product of the pivots is the
/// determinant whenever all of them are nonzero.
pub(crate) fn congruence_pivots(mut a: Matrix<Rational>) -> Vec<Rational> {
    let n = a.rows();
    let mut pivots = Vec::with_capacity(n);
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !a[(i, i)].is_zero()) {
            a.swap_rows(k, p);
            a.swap_cols(k, p);
        } else if let Some((i, j)) =
            (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[(i, j)].is_zero())
        {
            for c in k..n {
                let v = a[(j, c)].clone();
                a[(i, c)] += v;
            }
            for r in k..n {
                let v = a[(r, j)].clone();
                a[(r, i)] += v;
            }
            a.swap_rows(k, i);
            a.swap_cols(k, i);
        } else {
            break;
        }
        let piv = a[(k, k)].clone();
        let row: Vec<(usize, Rational)> =
            (k + 1..n).filter(|&j| !a[(k, j)].is_zero()).map(|j| (j, a[(k, j)].clone())).collect();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &piv;
            for (j, akj) in &row {
                let d = &f * akj;
                a[(i, *j)] -= d;
            }
            a[(i, k)] = Rational::zero();
        }
        for j in k + 1..n {
            a[(k, j)] = Rational::zero();
        }
        pivots.push(piv);
        k += 1;
    }
    pivots
}

/// Inertia of a hermitian Gaussian-rational matrix via its real
/// `2n×2n` symmetric realification `[[X, -Y], [Y, X]]`.
pub fn hermitian_inertia(m: &Matrix<GaussianRational>) -> Result<Inertia> {
    m.ensure_square()?;
    let n = m.rows();
    for i in 0..n {
        for j in 0..=i {
            if m[(i, j)] != m[(j, i)].conj() {
                return Err(Error::NotHermitian);
            }
        }
    }
    let real = Matrix::from_fn(2 * n, 2 * n, |i, j| {
        let z = &m[(i % n, j % n)];
        match (i < n, j < n) {
            (true, true) | (false, false) => z.re.clone(),
            (true, false) => -z.im.clone(),
            (false, true) => z.im.clone(),
        }
    });
    let doubled = inertia(&real)?;
    if doubled.positive % 2 != 0 || doubled.negative % 2 != 0 || doubled.zero % 2 != 0 {
        return Err(Error::OddRealifiedCount((doubled.positive, doubled.negative, doubled.zero)));
    }
    Ok(Inertia::new(doubled.positive / 2, doubled.negative / 2, doubled.zero / 2))
}

/// Fraction-free Bareiss determinant of an integer matrix.
pub fn bareiss_det(m: &Matrix<BigInt>) -> Result<BigInt> {
    m.ensure_square()?;
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => {
                    a.swap_rows(k, p);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let piv = a[(k, k)].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&piv * &a[(i, j)] - &a[(i, k)] * &a[(k, j)]).div_floor(&prev);
                a[(i, j)] = v;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = piv;
    }
    Ok(sign * &a[(n - 1, n - 1)])
}

/// Exact determinant of a rational matrix (rows scaled to integers, then Bareiss).
pub fn determinant(m: &Matrix<Rational>) -> Result<Rational> {
    m.ensure_square()?;
    let n = m.rows();
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let l = m.row(i).iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        rows.push(m.row(i).iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect::<Vec<_>>());
        scale *= l;
    }
    let ints = Matrix::from_rows(rows)?;
    let ints = if n == 0 { Matrix::zeros(0, 0) } else { ints };
    Ok(BigRational::new(bareiss_det(&ints)?, scale))
}

pub fn determinant_int(m: &Matrix<i64>) -> Result<BigInt> {
    bareiss_det(&m.to_bigint())
}

/// Interpolates the polynomial taking `values[k]` at `t = k`.
/// The result must have integer coefficients.
pub(crate) fn interpolate_integer_nodes(values: &[BigInt]) -> IntPoly {
    let n = values.len();
    // Newton divided differences on nodes 0, 1, ..., n-1.
    let mut dd: Vec<Rational> = values.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    let mut p = RatPoly::zero();
    for k in (0..n).rev() {
        p = p.mul(&RatPoly::linear(-BigRational::from_integer(BigInt::from(k)), Rational::one()));
        p = p.add(&RatPoly::constant(dd[k].clone()));
    }
    p.to_int_exact().expect("interpolated polynomial has non-integer coefficients")
}

/// `det(t·I - m)` by exact evaluation at `dim + 1` integer points.
pub fn char_poly(m: &Matrix<BigInt>) -> Result<IntPoly> {
    m.ensure_square()?;
    let n = m.rows();
    let values = (0..=n)
        .map(|k| {
            let k = BigInt::from(k);
            let shifted = Matrix::from_fn(n, n, |i, j| {
                let e = -&m[(i, j)];
                if i == j {
                    e + &k
                } else {
                    e
                }
            });
            bareiss_det(&shifted)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(interpolate_integer_nodes(&values))
}

pub fn char_poly_int(m: &Matrix<i64>) -> Result<IntPoly> {
    char_poly(&m.to_bigint())
}

/// `det(t·A - Aᵀ)`; the empty matrix gives the constant 1.
pub fn alexander_poly(a: &Matrix<i64>) -> Result<IntPoly> {
    a.ensure_square()?;
    let n = a.rows();
    let a = a.to_bigint();
    let values = (0..=n)
        .map(|k| {
            let k = BigInt::from(k);
            bareiss_det(&Matrix::from_fn(n, n, |i, j| &k * &a[(i, j)] - &a[(j, i)]))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(interpolate_integer_nodes(&values))
}

/// The polynomial matrix `t·A - Aᵀ`.
pub fn alexander_matrix(a: &Matrix<i64>) -> Matrix<RatPoly> {
    let n = a.rows();
    Matrix::from_fn(n, n, |i, j| {
        RatPoly::linear(
            BigRational::from_integer(BigInt::from(-a[(j, i)])),
            BigRational::from_integer(BigInt::from(a[(i, j)])),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::number::rat;

    fn im(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn inertia_of_trefoil_form() {
        assert_eq!(inertia_int(&im(&[&[2, 1], &[1, 2]])).unwrap(), Inertia::new(2, 0, 0));
    }

    #[test]
    fn inertia_needs_off_diagonal_pivot() {
        // hyperbolic plane
        assert_eq!(inertia_int(&im(&[&[0, 1], &[1, 0]])).unwrap(), Inertia::new(1, 1, 0));
        assert_eq!(inertia_int(&im(&[&[0, 0], &[0, 0]])).unwrap(), Inertia::new(0, 0, 2));
        assert_eq!(inertia_int(&im(&[&[0, 0, 1], &[0, 0, 0], &[1, 0, 0]])).unwrap(), Inertia::new(1, 1, 1));
    }

    #[test]
    fn inertia_rejects_asymmetric() {
        assert_eq!(inertia_int(&im(&[&[1, 1], &[0, 1]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn hermitian_examples() {
        let h = Matrix::from_rows(vec![
            vec![GaussianRational::from_i64(2, 0), GaussianRational::from_i64(1, -1)],
            vec![GaussianRational::from_i64(1, 1), GaussianRational::from_i64(2, 0)],
        ])
        .unwrap();
        assert_eq!(hermitian_inertia(&h).unwrap(), Inertia::new(2, 0, 0));
        let id: Matrix<GaussianRational> = Matrix::identity(3);
        assert_eq!(hermitian_inertia(&id).unwrap(), Inertia::new(3, 0, 0));
        let z = Matrix::from_rows(vec![vec![GaussianRational::from_i64(0, 0)]]).unwrap();
        assert_eq!(hermitian_inertia(&z).unwrap(), Inertia::new(0, 0, 1));
        let bad = Matrix::from_rows(vec![vec![GaussianRational::from_i64(0, 1)]]).unwrap();
        assert_eq!(hermitian_inertia(&bad), Err(Error::NotHermitian));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant_int(&im(&[&[2]])).unwrap(), BigInt::from(2));
        assert_eq!(determinant_int(&im(&[&[2, 1], &[1, 2]])).unwrap(), BigInt::from(3));
        assert_eq!(determinant_int(&im(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(determinant_int(&im(&[&[1, 2], &[2, 4]])).unwrap(), BigInt::from(0));
        let r = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]]).unwrap();
        assert_eq!(determinant(&r).unwrap(), rat(1, 10) - rat(1, 12));
        assert_eq!(determinant_int(&Matrix::zeros(0, 0)).unwrap(), BigInt::one());
        assert!(determinant_int(&Matrix::from_vec(1, 2, vec![1, 2])).is_err());
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(char_poly_int(&im(&[&[0, -1], &[1, -1]])).unwrap(), IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(char_poly_int(&im(&[&[1, 0], &[0, 1]])).unwrap(), IntPoly::from_i64s(&[1, -2, 1]));
        assert_eq!(char_poly_int(&im(&[&[1]])).unwrap(), IntPoly::from_i64s(&[-1, 1]));
    }

    #[test]
    fn alexander_polynomials() {
        assert_eq!(alexander_poly(&im(&[&[1, 1], &[0, 1]])).unwrap(), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(alexander_poly(&im(&[&[1]])).unwrap(), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(alexander_poly(&Matrix::zeros(0, 0)).unwrap(), IntPoly::one());
    }

    #[test]
    fn congruence_pivot_product_is_determinant() {
        let m = im(&[&[2, 1, 3, 2], &[1, 2, 2, 3], &[3, 2, 2, 4], &[2, 3, 4, 2]]);
        let prod = congruence_pivots(m.to_rational()).into_iter().fold(Rational::one(), |a, b| a * b);
        assert_eq!(prod, BigRational::from_integer(determinant_int(&m).unwrap()));
    }
}
