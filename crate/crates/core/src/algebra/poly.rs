//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficients are stored lowest degree first. Both types keep the
//! representation trimmed: the zero polynomial has no coefficients and any
//! other polynomial has a nonzero leading coefficient.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::number::{GaussianRational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64s(&[1])
    }

    /// `t - c`
    pub fn linear_root(c: i64) -> Self {
        IntPoly::from_i64s(&[-c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect() }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_gaussian(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * z;
            acc.re += BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
    }

    /// `p(-t)`
    pub fn substitute_neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect())
    }

    /// `t^deg · p(1/t)`
    pub fn reversed(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Number of leading zero coefficients, i.e. the power of `t` dividing `p`.
    pub fn t_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Strips the `t^k` factor.
    pub fn strip_t_power(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs[self.t_valuation()..].to_vec() }
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn primitive(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Primitive part with positive leading coefficient.
    pub fn normalized(&self) -> IntPoly {
        let p = self.primitive();
        if p.leading().is_some_and(|c| c.is_negative()) {
            p.neg()
        } else {
            p
        }
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn equal_up_to_unit(&self, other: &IntPoly) -> bool {
        let a = self.strip_t_power();
        let b = other.strip_t_power();
        a == b || a == b.neg()
    }

    /// Multiplicity of the integer root `c` (0 for the zero polynomial).
    pub fn root_multiplicity(&self, c: i64) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = IntPoly::linear_root(c);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_exact(&lin) {
            p = q;
            k += 1;
        }
        k
    }

    /// Exact division by `divisor` over the integers; `None` if it does not divide.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.to_rat().div_rem(&divisor.to_rat());
        if !r.is_zero() {
            return None;
        }
        q.to_int_exact()
    }

    /// Parses space-separated coefficients, lowest degree first.
    pub fn parse(text: &str) -> Result<IntPoly> {
        let coeffs = text
            .split_whitespace()
            .map(BigInt::from_str)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse { line: 1, msg: e.to_string() })?;
        Ok(IntPoly::new(coeffs))
    }

    /// Human-readable form in `t`, highest degree first.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                out.push_str(&abs.to_string());
            }
            match k {
                0 => {}
                1 => out.push('t'),
                _ => out.push_str(&format!("t^{k}")),
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    /// Space-separated coefficients, lowest degree first; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly { coeffs: vec![Rational::one()] }
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::new(vec![c])
    }

    /// `a + b·t`
    pub fn linear(a: Rational, b: Rational) -> Self {
        RatPoly::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (RatPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn rem(&self, divisor: &RatPoly) -> RatPoly {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &RatPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Scales by a positive rational to a primitive integer polynomial,
    /// preserving the sign of every coefficient.
    pub fn to_int_primitive(&self) -> IntPoly {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        IntPoly::new(ints).primitive()
    }

    /// Converts to an integer polynomial if every coefficient is an integer.
    pub fn to_int_exact(&self) -> Option<IntPoly> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
        } else {
            None
        }
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Zero for RatPoly {
    fn zero() -> Self {
        RatPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl std::ops::Add for RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: RatPoly) -> RatPoly {
        RatPoly::add(&self, &rhs)
    }
}
