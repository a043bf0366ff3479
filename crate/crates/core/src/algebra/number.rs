//! Exact scalars: re-exported big rationals plus Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rat(n: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(n.into())
}

/// Rational bounds `lo <= sqrt(q) <= hi` with `hi - lo <= 2^-bits` (for q >= 0).
pub fn sqrt_bounds(q: &Rational, bits: u32) -> (Rational, Rational) {
    assert!(!q.is_negative(), "square root of a negative rational");
    // sqrt(n/d) = sqrt(n*d*4^bits) / (d*2^bits)
    let scale = BigInt::one() << bits;
    let n = q.numer();
    let d = q.denom();
    let radicand = n * d * &scale * &scale;
    let floor = radicand.sqrt();
    let denom = d * &scale;
    let lo = BigRational::new(floor.clone(), denom.clone());
    let hi = if &floor * &floor == radicand { lo.clone() } else { BigRational::new(floor + 1, denom) };
    (lo, hi)
}

/// `re + im·i` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussianRational { re: int_rat(re), im: int_rat(im) }
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &Rational) -> Self {
        GaussianRational { re: &self.re * k, im: &self.im * k }
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(GaussianRational { re: &self.re / &n, im: -&self.im / &n })
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational { re: Rational::one(), im: Rational::zero() }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        GaussianRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_bounds_bracket() {
        for (n, d) in [(1, 3), (2, 1), (9, 4), (0, 1), (7, 11)] {
            let q = rat(n, d);
            let (lo, hi) = sqrt_bounds(&q, 20);
            assert!(&lo * &lo <= q && q <= &hi * &hi);
            assert!(&hi - &lo <= rat(1, 1 << 20));
        }
        let (lo, hi) = sqrt_bounds(&rat(9, 4), 4);
        assert_eq!(lo, rat(3, 2));
        assert_eq!(hi, rat(3, 2));
    }

    #[test]
    fn gaussian_arithmetic() {
        let a = GaussianRational::from_i64(1, -1);
        let b = a.conj();
        assert_eq!(&a * &b, GaussianRational::from_i64(2, 0));
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, GaussianRational::one());
        assert!(GaussianRational::zero().inv().is_none());
    }
}
