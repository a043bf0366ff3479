//! Exact ω-signatures on the unit circle.
//!
//! Points of the upper semicircle are parametrized by a rational `u ≥ 0`,
//! `ω(u) = ((1 - u²) + 2u·i) / (1 + u²)`, which runs from `ω = 1` (`u = 0`)
//! towards `ω = -1` (`u → ∞`) with increasing argument. In the coordinate
//! `x = ω + ω̄ = 2(1 - u²)/(1 + u²)` this is `u = √((2 - x)/(2 + x))`.
//!
//! For `u > 0`, `(1 + u²)/(2u) · M_ω = u·(A + Aᵀ) + i·(Aᵀ - A)`, so the
//! signature is computed on that Gaussian-rational matrix.

use std::fmt;

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::number::{int_rat, sqrt_bounds};
use crate::algebra::roots::ser_rat;
use crate::algebra::snf::invariant_factors_vanishing_at;
use crate::algebra::{
    alexander_matrix, circle_root_count, hermitian_inertia, inertia_int, isolate_circle_roots, smith_normal_form,
    CircleRoot, GaussianRational, Inertia, IntPoly, Matrix, Rational, RootInterval,
};
use crate::error::{Error, Result};
use crate::forms::SeifertMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CirclePoint {
    /// `ω(u)` for `u ≥ 0`.
    U(Rational),
    MinusOne,
}

impl CirclePoint {
    pub fn omega(&self) -> GaussianRational {
        match self {
            CirclePoint::MinusOne => GaussianRational::from_i64(-1, 0),
            CirclePoint::U(u) => {
                let u2 = u * u;
                let d = Rational::one() + &u2;
                GaussianRational::new((Rational::one() - &u2) / &d, (int_rat(2) * u) / d)
            }
        }
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CirclePoint::MinusOne => write!(f, "-1"),
            CirclePoint::U(u) => write!(f, "u={u}"),
        }
    }
}

/// Inertia of a hermitian matrix with the same signature and nullity as `M_ω`
/// (`ω = 1` gives the zero matrix).
pub fn omega_inertia(a: &SeifertMatrix, p: &CirclePoint) -> Inertia {
    let m = a.matrix();
    let n = m.rows();
    match p {
        CirclePoint::MinusOne => inertia_int(&(m + &m.transpose())).expect("symmetric"),
        CirclePoint::U(u) if u.is_zero() => Inertia::new(0, 0, n),
        CirclePoint::U(u) => {
            let h = Matrix::from_fn(n, n, |j, k| {
                GaussianRational::new(u * int_rat(m[(j, k)] + m[(k, j)]), int_rat(m[(k, j)] - m[(j, k)]))
            });
            hermitian_inertia(&h).expect("hermitian by construction")
        }
    }
}

pub fn omega_signature(a: &SeifertMatrix, p: &CirclePoint) -> i64 {
    omega_inertia(a, p).signature()
}

/// `Δ(ω) ≠ 0`, so `ω` is not a root of the Alexander polynomial.
fn certified_off_roots(delta: &IntPoly, p: &CirclePoint) -> bool {
    !delta.eval_gaussian(&p.omega()).is_zero()
}

/// Rational bounds on `u = √((2 - x)/(2 + x))` over an `x`-interval.
fn u_bounds(iv: &RootInterval, bits: u32) -> (Rational, Rational) {
    let two = int_rat(2);
    let q = |x: &Rational| (&two - x) / (&two + x);
    let (lo, _) = sqrt_bounds(&q(&iv.hi), bits);
    let (_, hi) = sqrt_bounds(&q(&iv.lo), bits);
    (lo, hi)
}

/// A distinct circle root on the upper semicircle.
#[derive(Clone, Debug, Serialize)]
pub struct ProfileRoot {
    pub interval: RootInterval,
    #[serde(serialize_with = "ser_rat")]
    pub u_lo: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub u_hi: Rational,
    pub multiplicity: usize,
    #[serde(skip)]
    pub root: CircleRoot,
}

/// Roots of `Δ` on the upper semicircle in order of increasing argument,
/// with `u`-brackets that are pairwise disjoint and exclude 0, and one
/// certified point in every gap.
#[derive(Clone, Debug)]
pub struct Separation {
    pub roots: Vec<ProfileRoot>,
    pub points: Vec<Rational>,
    pub at_one: usize,
    pub at_minus_one: usize,
}

pub fn separate_roots(delta: &IntPoly) -> Result<Separation> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut iso = isolate_circle_roots(delta)?;
    // increasing argument = decreasing x
    iso.roots.reverse();
    let two = int_rat(2);
    for r in &mut iso.roots {
        // the map to u needs brackets strictly inside (-2, 2)
        while r.interval.lo <= -&two || r.interval.hi >= two {
            r.refine();
        }
    }
    let mut bits = 16;
    loop {
        let brackets: Vec<_> = iso.roots.iter().map(|r| u_bounds(&r.interval, bits)).collect();
        let disjoint = brackets.windows(2).all(|w| w[0].1 < w[1].0);
        let positive = brackets.first().is_none_or(|b| b.0.is_positive());
        if disjoint && positive {
            let points = gap_points(&brackets);
            let all_certified = points.iter().all(|u| certified_off_roots(delta, &CirclePoint::U(u.clone())));
            if all_certified {
                let roots = iso
                    .roots
                    .into_iter()
                    .zip(brackets)
                    .map(|(r, (u_lo, u_hi))| ProfileRoot {
                        interval: r.interval.clone(),
                        u_lo,
                        u_hi,
                        multiplicity: r.multiplicity,
                        root: r,
                    })
                    .collect();
                return Ok(Separation { roots, points, at_one: iso.at_one, at_minus_one: iso.at_minus_one });
            }
        }
        for r in &mut iso.roots {
            r.refine();
        }
        bits += 8;
        if bits > 4096 {
            return Err(Error::Internal("root brackets failed to separate".into()));
        }
    }
}

fn gap_points(brackets: &[(Rational, Rational)]) -> Vec<Rational> {
    let two = int_rat(2);
    match (brackets.first(), brackets.last()) {
        (Some(first), Some(last)) => {
            let mut pts = vec![&first.0 / &two];
            pts.extend(brackets.windows(2).map(|w| (&w[0].1 + &w[1].0) / &two));
            pts.push(&last.1 + Rational::one());
            pts
        }
        _ => vec![Rational::one()],
    }
}

/// One point in every gap between consecutive roots of `Δ` on the open upper
/// semicircle, including the arcs next to `ω = 1` and `ω = -1`.
pub fn separating_points(a: &SeifertMatrix) -> Result<Vec<CirclePoint>> {
    Ok(separate_roots(&a.alexander_poly())?.points.into_iter().map(CirclePoint::U).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct SignatureProfile {
    pub roots: Vec<ProfileRoot>,
    #[serde(serialize_with = "ser_rats")]
    pub sample_points: Vec<Rational>,
    /// `σ_ω` on the arcs between consecutive roots, by increasing argument.
    pub plateau_values: Vec<i64>,
    /// Half the change of `σ_ω` across each root.
    pub jumps: Vec<i64>,
    pub sigma_at_minus_one: i64,
    /// Order of `Δ` at `t = 1` and `t = -1`.
    pub order_at_one: usize,
    pub order_at_minus_one: usize,
}

fn ser_rats<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

impl SignatureProfile {
    /// `|σ|` on the first arc is at most the order of `Δ` at 1.
    pub fn first_plateau_bounded(&self) -> bool {
        self.plateau_values[0].unsigned_abs() as usize <= self.order_at_one
    }

    /// When `Δ(-1) ≠ 0` the last arc extends through `-1`.
    pub fn endpoint_consistent(&self) -> bool {
        self.order_at_minus_one > 0 || self.plateau_values.last() == Some(&self.sigma_at_minus_one)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "roots": self.roots.iter().map(|r| serde_json::json!({
                "x_lo": r.interval.lo.to_string(),
                "x_hi": r.interval.hi.to_string(),
                "mult": r.multiplicity,
            })).collect::<Vec<_>>(),
            "plateaus": self.plateau_values,
            "jumps": self.jumps,
            "sigma_minus_one": self.sigma_at_minus_one,
        })
    }
}

impl fmt::Display for SignatureProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arc  sample_u  sigma")?;
        for (i, (u, s)) in self.sample_points.iter().zip(&self.plateau_values).enumerate() {
            writeln!(f, "{i:>3}  {u}  {s}")?;
            if let Some(r) = self.roots.get(i) {
                writeln!(
                    f,
                    "     root x in [{}, {}]  mult {}  jump {}",
                    r.interval.lo, r.interval.hi, r.multiplicity, self.jumps[i]
                )?;
            }
        }
        writeln!(f, "sigma(-1) = {}", self.sigma_at_minus_one)
    }
}

pub fn signature_profile(a: &SeifertMatrix) -> Result<SignatureProfile> {
    let sep = separate_roots(&a.alexander_poly())?;
    let plateau_values: Vec<i64> = sep.points.iter().map(|u| omega_signature(a, &CirclePoint::U(u.clone()))).collect();
    let mut jumps = Vec::with_capacity(sep.roots.len());
    for w in plateau_values.windows(2) {
        let d = w[1] - w[0];
        if d % 2 != 0 {
            return Err(Error::Internal(format!("odd signature change {d} across a root")));
        }
        jumps.push(d / 2);
    }
    Ok(SignatureProfile {
        roots: sep.roots,
        sample_points: sep.points,
        plateau_values,
        jumps,
        sigma_at_minus_one: omega_signature(a, &CirclePoint::MinusOne),
        order_at_one: sep.at_one,
        order_at_minus_one: sep.at_minus_one,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremAReport {
    /// `Δ ≡ 0`; the statement then holds trivially.
    pub vacuous: bool,
    pub signature: i64,
    pub circle_roots: usize,
    pub pass: bool,
}

/// `|σ| ≤` number of unit-circle roots of `Δ` (with multiplicity).
pub fn verify_theorem_a(a: &SeifertMatrix) -> TheoremAReport {
    let signature = omega_signature(a, &CirclePoint::MinusOne);
    let delta = a.alexander_poly();
    if delta.is_zero() {
        return TheoremAReport { vacuous: true, signature, circle_roots: 0, pass: true };
    }
    let circle_roots = circle_root_count(&delta).expect("nonzero");
    TheoremAReport { vacuous: false, signature, circle_roots, pass: signature.unsigned_abs() as usize <= circle_roots }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootJumpRecord {
    pub index: usize,
    pub jump: i64,
    pub multiplicity: usize,
    /// Nullity of `ω₀A - Aᵀ` at this root, from the Smith normal form.
    pub nullity: usize,
    /// Number of invariant factors divisible by the root's square-free factor.
    pub factor_nullity: usize,
}

impl RootJumpRecord {
    pub fn jump_within_order(&self) -> bool {
        self.jump.unsigned_abs() as usize <= self.multiplicity
    }

    pub fn jump_within_nullity(&self) -> bool {
        self.jump.unsigned_abs() as usize <= self.nullity
    }

    pub fn nullity_within_order(&self) -> bool {
        self.nullity <= self.multiplicity && self.factor_nullity <= self.multiplicity
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropDReport {
    pub roots: Vec<RootJumpRecord>,
    pub first_plateau_bounded: bool,
    pub endpoint_consistent: bool,
    /// Some root has order strictly above its nullity.
    pub order_exceeds_nullity: bool,
    /// Invariant factors multiply to `Δ` up to a constant and form a divisibility chain.
    pub snf_consistent: bool,
    pub pass: bool,
}

/// Per root: `|jump| ≤ order`, `|jump| ≤ nullity`, `nullity ≤ order`.
pub fn verify_prop_d(a: &SeifertMatrix) -> Result<PropDReport> {
    let profile = signature_profile(a)?;
    let factors = smith_normal_form(&alexander_matrix(a.matrix()));
    let delta = a.alexander_poly();
    let roots: Vec<RootJumpRecord> = profile
        .roots
        .iter()
        .enumerate()
        .map(|(index, r)| {
            let f = r.root.factor.to_rat();
            RootJumpRecord {
                index,
                jump: profile.jumps[index],
                multiplicity: r.multiplicity,
                nullity: invariant_factors_vanishing_at(&factors, &r.root),
                factor_nullity: factors.iter().filter(|alpha| f.divides(alpha)).count(),
            }
        })
        .collect();
    let snf_consistent = snf_matches(&factors, &delta);
    let order_exceeds_nullity = roots.iter().any(|r| r.nullity < r.multiplicity);
    let pass = snf_consistent
        && profile.first_plateau_bounded()
        && profile.endpoint_consistent()
        && roots.iter().all(|r| r.jump_within_order() && r.jump_within_nullity() && r.nullity_within_order());
    Ok(PropDReport {
        roots,
        first_plateau_bounded: profile.first_plateau_bounded(),
        endpoint_consistent: profile.endpoint_consistent(),
        order_exceeds_nullity,
        snf_consistent,
        pass,
    })
}

/// Product of invariant factors equals `Δ` up to a nonzero constant and
/// each factor divides the next.
pub fn snf_matches(factors: &[crate::algebra::RatPoly], delta: &IntPoly) -> bool {
    let chain = factors.windows(2).all(|w| w[0].divides(&w[1]));
    let product = factors.iter().fold(crate::algebra::RatPoly::one(), |acc, f| acc.mul(f));
    let d = delta.to_rat();
    let same = if d.is_zero() { product.is_zero() } else { !product.is_zero() && product.monic() == d.monic() };
    chain && same
}
