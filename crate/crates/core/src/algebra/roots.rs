//! Exact real-root and unit-circle-root counting for integer polynomials.
//!
//! Everything here goes through square-free decomposition and Sturm
//! sequences over the rationals. Circle roots `ω ≠ ±1` of a self-reciprocal
//! factor are mapped to real roots of its transform in `x = t + 1/t`,
//! which lie in the open interval `(-2, 2)`.

use std::cmp::Ordering;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;

use super::number::{int_rat, Rational};
use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Factors `f_i` with multiplicities such that `p = c · ∏ f_i^{m_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub factors: Vec<(IntPoly, usize)>,
}

impl SquarefreeDecomposition {
    pub fn product(&self) -> IntPoly {
        self.factors.iter().fold(IntPoly::one(), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }
}

/// Yun's square-free decomposition. Factors are primitive with positive
/// leading coefficient, listed by increasing multiplicity; constants are dropped.
pub fn squarefree_decomposition(p: &IntPoly) -> Result<SquarefreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    if p.degree() == Some(0) {
        return Ok(SquarefreeDecomposition { factors });
    }
    let f = p.to_rat();
    let df = f.derivative();
    let g = f.gcd(&df);
    let mut c = f.div_rem(&g).0;
    let mut d = df.div_rem(&g).0.sub(&c.derivative());
    let mut mult = 1;
    while c.degree().unwrap_or(0) > 0 {
        let a = c.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            factors.push((a.to_int_primitive().normalized(), mult));
        }
        c = c.div_rem(&a).0;
        d = d.div_rem(&a).0.sub(&c.derivative());
        mult += 1;
    }
    Ok(SquarefreeDecomposition { factors })
}

/// `p = tᵃ (t-1)ᵇ (t+1)ᶜ q` with `q(0)`, `q(1)`, `q(-1)` nonzero and `q` reciprocal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocalSplit {
    pub t_power: usize,
    pub at_one: usize,
    pub at_minus_one: usize,
    pub residual: IntPoly,
}

/// Strips `t`, `t-1` and `t+1` powers and returns the exact quotient.
fn strip_special(p: &IntPoly) -> (usize, usize, usize, IntPoly) {
    let a = p.t_valuation();
    let mut q = p.strip_t_power();
    let mut b = 0;
    let one = IntPoly::linear_root(1);
    while q.degree().unwrap_or(0) > 0 && q.eval_int(&BigInt::one()).is_zero() {
        q = q.div_exact(&one).expect("t - 1 divides");
        b += 1;
    }
    let mut c = 0;
    let minus_one = IntPoly::linear_root(-1);
    while q.degree().unwrap_or(0) > 0 && q.eval_int(&-BigInt::one()).is_zero() {
        q = q.div_exact(&minus_one).expect("t + 1 divides");
        c += 1;
    }
    (a, b, c, q)
}

pub fn reciprocal_split(p: &IntPoly) -> Result<ReciprocalSplit> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (a, b, c, q) = strip_special(p);
    if !q.is_palindromic() {
        return Err(Error::NonReciprocal(q.to_string()));
    }
    Ok(ReciprocalSplit { t_power: a, at_one: b, at_minus_one: c, residual: q })
}

/// Rewrites a palindromic polynomial of even degree `2m` as `t^m · r(t + 1/t)`
/// and returns `r`.
pub fn chebyshev_transform(q: &IntPoly) -> Result<IntPoly> {
    if !q.is_palindromic() {
        return Err(Error::NonReciprocal(q.to_string()));
    }
    let deg = q.degree().ok_or(Error::ZeroPolynomial)?;
    if deg % 2 == 1 {
        return Err(Error::Internal(format!("odd-degree reciprocal factor {q}")));
    }
    let m = deg / 2;
    // P_0 = 2, P_1 = x, P_{j+1} = x P_j - P_{j-1}, where P_j(t + 1/t) = t^j + t^-j
    let x = IntPoly::from_i64s(&[0, 1]);
    let mut prev = IntPoly::from_i64s(&[2]);
    let mut cur = x.clone();
    let mut r = IntPoly::new(vec![q.coeff(m)]);
    for j in 1..=m {
        r = r.add(&cur.mul(&IntPoly::new(vec![q.coeff(m + j)])));
        let next = x.mul(&cur).add(&prev.neg());
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(r)
}

/// Sturm sequence of a polynomial, each term scaled by a positive constant
/// to a primitive integer polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(p: &IntPoly) -> Self {
        let mut seq = vec![p.primitive()];
        let d = p.derivative().primitive();
        if !d.is_zero() {
            seq.push(d);
        }
        while seq.len() >= 2 {
            let n = seq.len();
            let r = seq[n - 2].to_rat().rem(&seq[n - 1].to_rat());
            if r.is_zero() {
                break;
            }
            seq.push(r.neg().to_int_primitive());
        }
        SturmSequence { seq }
    }

    fn variations_of(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations_of(self.seq.iter().map(|p| p.eval(x).cmp(&Rational::zero())))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations_of(self.seq.iter().map(|p| p.leading().map_or(Ordering::Equal, |c| c.sign_cmp())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations_of(self.seq.iter().map(|p| {
            let s = p.leading().map_or(Ordering::Equal, |c| c.sign_cmp());
            if p.degree().unwrap_or(0) % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in `(a, b]`, for `a < b`.
    pub fn count_in(&self, a: &Rational, b: &Rational) -> usize {
        debug_assert!(a < b);
        self.variations_at(a) - self.variations_at(b)
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Strict upper bound on the modulus of every root (Cauchy).
pub fn cauchy_bound(p: &IntPoly) -> Rational {
    let lead = BigRational::from_integer(p.leading().expect("nonzero polynomial").abs());
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| BigRational::from_integer(c.abs()))
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + max / lead
}

/// The part of a square-free `f` (with `f(0), f(±1) ≠ 0`) that carries all of
/// its roots closed under `z ↦ 1/z`; this contains every unit-circle root.
fn reciprocal_core(f: &IntPoly) -> IntPoly {
    let g = f.to_rat().gcd(&f.reversed().to_rat());
    g.to_int_primitive().normalized()
}

/// One square-free block of circle roots: a self-reciprocal factor `f` of
/// the input, its transform `r(x)` and the multiplicity of its roots.
#[derive(Clone, Debug)]
pub(crate) struct CircleBlock {
    pub factor: IntPoly,
    pub xpoly: IntPoly,
    pub multiplicity: usize,
}

pub(crate) struct CircleData {
    pub at_one: usize,
    pub at_minus_one: usize,
    pub blocks: Vec<CircleBlock>,
}

pub(crate) fn circle_data(p: &IntPoly) -> Result<CircleData> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, at_one, at_minus_one, q) = strip_special(p);
    let mut blocks = Vec::new();
    for (f, m) in squarefree_decomposition(&q)?.factors {
        let core = reciprocal_core(&f);
        if core.degree().unwrap_or(0) == 0 {
            continue;
        }
        let xpoly = chebyshev_transform(&core)?;
        blocks.push(CircleBlock { factor: core, xpoly, multiplicity: m });
    }
    Ok(CircleData { at_one, at_minus_one, blocks })
}

fn count_open_pm2(r: &IntPoly) -> usize {
    SturmSequence::new(r).count_in(&int_rat(-2), &int_rat(2))
}

/// Number of roots on the unit circle, with multiplicity.
pub fn circle_root_count(p: &IntPoly) -> Result<usize> {
    let data = circle_data(p)?;
    let interior: usize = data.blocks.iter().map(|b| 2 * count_open_pm2(&b.xpoly) * b.multiplicity).sum();
    Ok(interior + data.at_one + data.at_minus_one)
}

/// Number of roots in `(0, ∞)`, with multiplicity.
pub fn positive_real_root_count(p: &IntPoly) -> Result<usize> {
    let dec = squarefree_decomposition(p)?;
    Ok(dec
        .factors
        .iter()
        .map(|(f, m)| {
            let bound = cauchy_bound(f);
            SturmSequence::new(f).count_in(&Rational::zero(), &bound) * m
        })
        .sum())
}

/// Number of roots in `(-∞, 0)`, with multiplicity.
pub fn negative_real_root_count(p: &IntPoly) -> Result<usize> {
    let dec = squarefree_decomposition(p)?;
    Ok(dec
        .factors
        .iter()
        .map(|(f, m)| {
            let bound = cauchy_bound(f);
            let mut n = SturmSequence::new(f).count_in(&-bound, &Rational::zero());
            if f.coeff(0).is_zero() {
                n -= 1;
            }
            n * m
        })
        .sum())
}

/// An interval in `x = ω + ω̄` isolating one distinct conjugate pair of
/// circle roots. When `lo == hi` the value is exact; otherwise the root lies
/// strictly inside `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "ser_rat")]
    pub lo: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub hi: Rational,
}

pub(crate) fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        if self.is_exact() {
            x == &self.lo
        } else {
            &self.lo < x && x < &self.hi
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    fn overlaps(&self, other: &RootInterval) -> bool {
        !(self.hi <= other.lo || other.hi <= self.lo)
    }
}

#[derive(Clone, Debug)]
pub struct CircleRoot {
    pub interval: RootInterval,
    pub multiplicity: usize,
    /// Square-free self-reciprocal factor of the input that vanishes at this root.
    pub factor: IntPoly,
    /// `factor` rewritten in `x = t + 1/t`.
    pub xpoly: IntPoly,
    sturm: SturmSequence,
}

impl CircleRoot {
    /// Bisects the interval once (no-op for exact roots).
    pub fn refine(&mut self) {
        if self.interval.is_exact() {
            return;
        }
        let mid = (&self.interval.lo + &self.interval.hi) / int_rat(2);
        if self.xpoly.eval(&mid).is_zero() {
            self.interval = RootInterval { lo: mid.clone(), hi: mid };
        } else if self.sturm.count_in(&self.interval.lo, &mid) == 1 {
            self.interval.hi = mid;
        } else {
            self.interval.lo = mid;
        }
    }
}

/// Circle roots of a polynomial: isolated pairs in `(-2, 2)` (sorted by
/// increasing `x`) plus the multiplicities at `ω = 1` and `ω = -1`.
#[derive(Clone, Debug)]
pub struct CircleRootIsolation {
    pub roots: Vec<CircleRoot>,
    pub at_one: usize,
    pub at_minus_one: usize,
}

impl CircleRootIsolation {
    pub fn total_count(&self) -> usize {
        self.at_one + self.at_minus_one + self.roots.iter().map(|r| 2 * r.multiplicity).sum::<usize>()
    }

    /// Bisects every interval until all widths are at most `width`.
    pub fn refine_to(&mut self, width: &Rational) {
        for r in &mut self.roots {
            while r.interval.width() > *width {
                r.refine();
            }
        }
    }
}

fn isolate_real_roots(r: &IntPoly, lo: Rational, hi: Rational) -> Vec<RootInterval> {
    let sturm = SturmSequence::new(r);
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count_in(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RootInterval { lo: a, hi: b });
            continue;
        }
        let mid = (&a + &b) / int_rat(2);
        if r.eval(&mid).is_zero() {
            out.push(RootInterval { lo: mid.clone(), hi: mid.clone() });
        }
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    // Intervals are (a, b]; a root sitting on b is exact.
    let mut out: Vec<RootInterval> = out
        .into_iter()
        .map(|iv| {
            if !iv.is_exact() && r.eval(&iv.hi).is_zero() {
                RootInterval { lo: iv.hi.clone(), hi: iv.hi }
            } else {
                iv
            }
        })
        .collect();
    out.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
    out.dedup();
    out
}

/// Isolates the circle roots of `p` with pairwise disjoint `x`-intervals of
/// width at most 1.
pub fn isolate_circle_roots(p: &IntPoly) -> Result<CircleRootIsolation> {
    let data = circle_data(p)?;
    let mut roots = Vec::new();
    for block in data.blocks {
        let sturm = SturmSequence::new(&block.xpoly);
        for interval in isolate_real_roots(&block.xpoly, int_rat(-2), int_rat(2)) {
            roots.push(CircleRoot {
                interval,
                multiplicity: block.multiplicity,
                factor: block.factor.clone(),
                xpoly: block.xpoly.clone(),
                sturm: sturm.clone(),
            });
        }
    }
    let mut iso = CircleRootIsolation { roots, at_one: data.at_one, at_minus_one: data.at_minus_one };
    iso.refine_to(&Rational::one());
    separate(&mut iso.roots);
    iso.roots.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo).then(a.interval.hi.cmp(&b.interval.hi)));
    Ok(iso)
}

/// Refines until no two intervals overlap.
pub(crate) fn separate(roots: &mut [CircleRoot]) {
    loop {
        let mut clash = None;
        'outer: for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if roots[i].interval.overlaps(&roots[j].interval) {
                    clash = Some((i, j));
                    break 'outer;
                }
            }
        }
        match clash {
            None => return,
            Some((i, j)) => {
                roots[i].refine();
                roots[j].refine();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::number::rat;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn yun_examples() {
        let d = squarefree_decomposition(&ip(&[1, -2, 1])).unwrap();
        assert_eq!(d.factors, vec![(ip(&[-1, 1]), 2)]);
        let d = squarefree_decomposition(&ip(&[1, -1, 1])).unwrap();
        assert_eq!(d.factors, vec![(ip(&[1, -1, 1]), 1)]);
        // (t^2 - 1)(t - 1) = t^3 - t^2 - t + 1
        let d = squarefree_decomposition(&ip(&[1, -1, -1, 1])).unwrap();
        assert_eq!(d.factors, vec![(ip(&[1, 1]), 1), (ip(&[-1, 1]), 2)]);
        assert_eq!(squarefree_decomposition(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn reciprocal_split_examples() {
        let s = reciprocal_split(&ip(&[1, -1, 1])).unwrap();
        assert_eq!((s.t_power, s.at_one, s.at_minus_one), (0, 0, 0));
        assert_eq!(s.residual, ip(&[1, -1, 1]));
        let s = reciprocal_split(&ip(&[0, 0, -1, 1])).unwrap();
        assert_eq!((s.t_power, s.at_one, s.at_minus_one), (2, 1, 0));
        assert_eq!(s.residual, ip(&[1]));
        assert!(matches!(reciprocal_split(&ip(&[-2, 0, 1])), Err(Error::NonReciprocal(_))));
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev_transform(&ip(&[1, -1, 1])).unwrap(), ip(&[-1, 1]));
        // t^4 + 1 = t^2 (x^2 - 2)
        assert_eq!(chebyshev_transform(&ip(&[1, 0, 0, 0, 1])).unwrap(), ip(&[-2, 0, 1]));
        assert!(chebyshev_transform(&ip(&[1, 1])).is_err());
    }

    #[test]
    fn circle_counts() {
        assert_eq!(circle_root_count(&ip(&[1, -1, 1])).unwrap(), 2);
        assert_eq!(circle_root_count(&ip(&[-1, 3, -3, 1])).unwrap(), 3);
        assert_eq!(circle_root_count(&ip(&[1, -3, 1])).unwrap(), 0);
        // (t^2 + 1)^2 (t - 2)
        let p = ip(&[1, 0, 1]).pow(2).mul(&ip(&[-2, 1]));
        assert_eq!(circle_root_count(&p).unwrap(), 4);
        assert_eq!(circle_root_count(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn positive_and_negative_counts() {
        assert_eq!(positive_real_root_count(&ip(&[1, -3, 1])).unwrap(), 2);
        assert_eq!(positive_real_root_count(&ip(&[1, 1, 1])).unwrap(), 0);
        assert_eq!(positive_real_root_count(&ip(&[0, -1, 1])).unwrap(), 1);
        assert_eq!(negative_real_root_count(&ip(&[0, 1, 1])).unwrap(), 1);
        assert_eq!(negative_real_root_count(&ip(&[1, 3, 1])).unwrap(), 2);
    }

    #[test]
    fn isolation_examples() {
        let iso = isolate_circle_roots(&ip(&[1, -1, 1])).unwrap();
        assert_eq!(iso.roots.len(), 1);
        let iv = &iso.roots[0].interval;
        assert!(iv.lo >= rat(1, 2) && iv.hi <= rat(3, 2));
        assert!(iv.contains(&rat(1, 1)) || (iv.lo <= rat(1, 1) && rat(1, 1) <= iv.hi));
        assert_eq!(iso.roots[0].multiplicity, 1);

        let iso = isolate_circle_roots(&ip(&[1, 2, 1])).unwrap();
        assert!(iso.roots.is_empty());
        assert_eq!(iso.at_minus_one, 2);

        let iso = isolate_circle_roots(&ip(&[1, -1, 1]).pow(2)).unwrap();
        assert_eq!(iso.roots.len(), 1);
        assert_eq!(iso.roots[0].multiplicity, 2);
    }

    #[test]
    fn isolation_separates_factors() {
        // cyclotomic Φ5 Φ10 Φ12: six distinct pairs
        let p = ip(&[1, 1, 1, 1, 1]).mul(&ip(&[1, -1, 1, -1, 1])).mul(&ip(&[1, 0, -1, 0, 1]));
        let iso = isolate_circle_roots(&p).unwrap();
        assert_eq!(iso.roots.len(), 6);
        for w in iso.roots.windows(2) {
            assert!(w[0].interval.hi <= w[1].interval.lo);
        }
        assert_eq!(iso.total_count(), 12);
    }

    #[test]
    fn exact_root_sorts_before_interval_sharing_its_endpoint() {
        // (t² - t + 1)(t⁴ + 3t³ - 5t² + 3t + 1): x = 1 exactly and x ∈ (1, 2]
        let p = ip(&[1, -1, 1]).mul(&ip(&[1, 3, -5, 3, 1]));
        let iso = isolate_circle_roots(&p).unwrap();
        assert_eq!(iso.roots.len(), 2);
        assert!(iso.roots[0].interval.is_exact());
        assert!(iso.roots[0].interval.hi <= iso.roots[1].interval.lo);
    }
}
