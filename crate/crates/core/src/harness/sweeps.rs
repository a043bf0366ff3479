//! Exhaustive and seeded-random sweeps over the supported corpora.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::report::{Check, Corpus, Failure, Record, SweepReport};
use crate::algebra::{bareiss_det, circle_root_count, negative_real_root_count, Matrix};
use crate::coxeter::{bicolored_coxeter, classify_spectrum, monodromy_correspondence_check};
use crate::error::{Error, Result};
use crate::forms::{
    plumb_band, plumb_trefoil, seifert_matrix, spiral_blocks, spiral_form, symmetrized_form, tree_form, upper_lift,
    SeifertMatrix, SymmetricForm,
};
use crate::omega::{verify_prop_d, verify_theorem_a};
use crate::trees::{
    canonical_code, enumerate_forests, enumerate_free_trees, enumerate_planted_trees, glue, lemma1_decompose,
    rooted_code, slalom_transform, Forest, Tree,
};

/// Fixed seed for every randomized sweep, so reports are reproducible.
pub const DEFAULT_SEED: u64 = 0x5EED_5EED;

fn corpus(family: &str, min_n: usize, max_n: usize, checks: &[&str]) -> Corpus {
    Corpus { family: family.into(), min_n, max_n, checks: checks.iter().map(|s| s.to_string()).collect() }
}

/// `3σ ≥ 2n`.
pub fn meets_two_thirds(sigma: i64, n: usize) -> bool {
    3 * sigma >= 2 * n as i64
}

/// `4σ ≥ 3n`.
pub fn meets_three_quarters(sigma: i64, n: usize) -> bool {
    4 * sigma >= 3 * n as i64
}

fn tree_record(t: &Tree, checks: &BTreeSet<Check>) -> Record {
    let n = t.vertex_count();
    let sigma = tree_form(t).signature();
    let mut r = Record::new(canonical_code(t), n, t.b1(), sigma);
    for &c in checks {
        match c {
            Check::Thm1 => r.set(c.name(), meets_two_thirds(sigma, n)),
            Check::Cert => {
                let cert = lemma1_decompose(t);
                r.cert_bound = Some(cert.certified_lower_bound);
                r.set(c.name(), cert.certified_lower_bound <= sigma && cert.meets_two_thirds(n));
                if cert.unresolved {
                    r.note = Some("decomposition left an unsplit component".into());
                }
            }
            Check::Small5 => {
                if n <= 5 {
                    r.set(c.name(), sigma == n as i64 || sigma == 4);
                }
            }
            Check::Cor1 | Check::Acampo => {
                if r.circle_count.is_none() {
                    let s = classify_spectrum(&bicolored_coxeter(&Forest::from(t.clone()))).expect("square");
                    r.circle_count = Some(s.circle_count);
                    r.positive_real_count = Some(s.positive_real_count);
                    r.other_count = Some(s.other_count);
                }
                let pass = if c == Check::Cor1 {
                    meets_two_thirds(r.circle_count.unwrap_or(0) as i64, n)
                } else {
                    r.other_count == Some(0)
                };
                r.set(c.name(), pass);
            }
            Check::ThmA => {
                let rep = verify_theorem_a(&seifert_matrix(t));
                r.alexander_circle_roots = Some(rep.circle_roots);
                r.set(c.name(), rep.pass);
            }
            Check::PropD | Check::LemmaB => {
                if r.checks.contains_key(Check::PropD.name()) || r.checks.contains_key(Check::LemmaB.name()) {
                    continue;
                }
                let (jumps_ok, nullity_ok, exceeds) = match verify_prop_d(&seifert_matrix(t)) {
                    Ok(rep) => (
                        rep.first_plateau_bounded
                            && rep.endpoint_consistent
                            && rep.roots.iter().all(|x| x.jump_within_order() && x.jump_within_nullity()),
                        rep.snf_consistent && rep.roots.iter().all(|x| x.nullity_within_order()),
                        rep.order_exceeds_nullity,
                    ),
                    Err(_) => (false, false, false),
                };
                if checks.contains(&Check::PropD) {
                    r.set(Check::PropD.name(), jumps_ok);
                }
                if checks.contains(&Check::LemmaB) {
                    r.set(Check::LemmaB.name(), nullity_ok);
                }
                if exceeds {
                    r.note = Some("some root has order above its nullity".into());
                }
            }
            Check::Monodromy => r.set(c.name(), monodromy_correspondence_check(t)),
        }
    }
    r
}

/// Runs the selected checks on every free tree with `1 ≤ n ≤ max_n` vertices.
pub fn sweep_trees(max_n: usize, checks: &BTreeSet<Check>) -> Result<SweepReport> {
    if max_n == 0 {
        return Err(Error::InvalidSize("max_n must be at least 1".into()));
    }
    if checks.is_empty() {
        return Err(Error::UnknownCheck(String::new()));
    }
    let records: Vec<Record> = (1..=max_n).flat_map(enumerate_free_trees).map(|t| tree_record(&t, checks)).collect();
    let exceeding =
        records.iter().filter(|r| r.note.as_deref() == Some("some root has order above its nullity")).count();
    let names: Vec<&str> = checks.iter().map(|c| c.name()).collect();
    let mut report = SweepReport::from_records(corpus("trees", 1, max_n, &names), records);
    if checks.contains(&Check::Thm1) {
        let equality = report.records.iter().filter(|r| 3 * r.sigma == 2 * r.n as i64).count();
        report = report.note("two_thirds_equality", equality);
    }
    if checks.contains(&Check::PropD) || checks.contains(&Check::LemmaB) {
        report = report.note("order_exceeds_nullity", exceeding);
    }
    Ok(report)
}

/// Bicolored Coxeter spectra of every forest with exactly `n ≤ max_n` vertices:
/// no roots off the circle and the positive real axis, and at least `2n/3` on the circle.
pub fn sweep_forests(max_n: usize) -> Result<SweepReport> {
    if max_n == 0 {
        return Err(Error::InvalidSize("max_n must be at least 1".into()));
    }
    let mut records = Vec::new();
    for n in 1..=max_n {
        for f in enumerate_forests(n) {
            let id: Vec<String> = f.components.iter().map(canonical_code).collect();
            let sigma = symmetrized_form(&f).signature();
            let mut r = Record::new(id.join("+"), n, n, sigma);
            let s = classify_spectrum(&bicolored_coxeter(&f))?;
            r.circle_count = Some(s.circle_count);
            r.positive_real_count = Some(s.positive_real_count);
            r.other_count = Some(s.other_count);
            r.set("acampo", s.other_count == 0);
            r.set("cor1", meets_two_thirds(s.circle_count as i64, n));
            records.push(r);
        }
    }
    Ok(SweepReport::from_records(corpus("forests", 1, max_n, &["acampo", "cor1"]), records))
}

/// `4σ ≥ 3·b₁` for the slalom tree of every planted tree with `2 ≤ m ≤ max_planted_n` vertices.
pub fn sweep_slalom(max_planted_n: usize) -> Result<SweepReport> {
    if max_planted_n < 2 {
        return Err(Error::InvalidSize("planted trees need at least 2 vertices".into()));
    }
    let mut records = Vec::new();
    for m in 2..=max_planted_n {
        for p in enumerate_planted_trees(m) {
            let s = slalom_transform(&p)?;
            let sigma = tree_form(&s).signature();
            let root = p.root().ok_or(Error::MissingRoot)?;
            let mut r = Record::new(rooted_code(&p, root), s.vertex_count(), s.b1(), sigma);
            r.set("thm2", meets_three_quarters(sigma, s.b1()));
            r.note = Some(canonical_code(&s));
            records.push(r);
        }
    }
    Ok(SweepReport::from_records(corpus("slalom", 2, max_planted_n, &["thm2"]), records))
}

fn sign(x: &num::BigInt) -> i8 {
    use num::Signed;
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Diagonal `(−3, 1, 2, …, 2)`, zero first off-diagonal, 1 on the second.
fn expected_reduction(n: usize) -> Matrix<i64> {
    Matrix::from_fn(n, n, |i, j| match i.abs_diff(j) {
        0 => match i {
            0 => -3,
            1 => 1,
            _ => 2,
        },
        2 => 1,
        _ => 0,
    })
}

/// `BᵗB − AD` of the spiral blocks.
pub fn spiral_reduction(n: usize) -> Result<Matrix<i64>> {
    let (a, b, d) = spiral_blocks(n)?;
    Ok(&(&b.transpose() * &b) - &(&a * &d))
}

/// Largest `n` for which the `BᵗB − AD` reduction is checked.
pub const SPIRAL_REDUCTION_MAX: usize = 50;
/// Largest `n` whose determinant sign is cross-checked by Bareiss elimination.
pub const SPIRAL_BAREISS_MAX: usize = 100;

/// For each `n`: `σ = 2`, determinant sign `(−1)ⁿ⁺¹`, and for small `n` the
/// reduction pattern with negative determinant.
pub fn sweep_spiral(max_n: usize) -> Result<SweepReport> {
    if max_n == 0 {
        return Err(Error::InvalidSize("max_n must be at least 1".into()));
    }
    let mut records = Vec::new();
    for n in 1..=max_n {
        let s = spiral_form(n)?;
        let inertia = s.inertia();
        let mut r = Record::new(format!("spiral-{n}"), 2 * n, 2 * n, inertia.signature());
        r.set("sigma2", inertia.signature() == 2);
        // for a nondegenerate form the determinant sign is (−1)^{n₋}
        let det_sign: i8 = if inertia.nullity() > 0 {
            0
        } else if inertia.negative % 2 == 0 {
            1
        } else {
            -1
        };
        r.det_sign = Some(det_sign);
        let expected: i8 = if n % 2 == 1 { 1 } else { -1 };
        let mut sign_ok = det_sign == expected;
        if n <= SPIRAL_BAREISS_MAX {
            sign_ok &= sign(&bareiss_det(&s.matrix().to_bigint())?) == expected;
        }
        r.set("det_sign", sign_ok);
        if n <= SPIRAL_REDUCTION_MAX {
            let red = spiral_reduction(n)?;
            let det = bareiss_det(&red.to_bigint())?;
            r.set("reduction", red == expected_reduction(n) && sign(&det) < 0);
        }
        records.push(r);
    }
    Ok(SweepReport::from_records(corpus("spiral", 1, max_n, &["sigma2", "det_sign", "reduction"]), records))
}

/// The vertex of the six-vertex extremal tree at which copies are glued.
pub const GLUE_VERTEX: usize = 0;

/// `copies` extremal trees, copy `i + 1` glued at its gluing vertex to that of copy `i`.
pub fn extremal_chain(copies: usize) -> Result<Tree> {
    let unit = Tree::two_thirds_tree();
    let size = unit.vertex_count();
    let mut chain = unit.clone();
    for i in 1..copies {
        chain = glue(&chain, (i - 1) * size + GLUE_VERTEX, &unit, GLUE_VERTEX)?;
    }
    Ok(chain)
}

/// Uniform random labeled tree on `n` vertices.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Tree {
    match n {
        0 | 1 => Tree::single_vertex(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            Tree::from_prufer(&seq).expect("valid sequence")
        }
    }
}

/// Number of random base trees in the additivity part of [`optimal_family_check`].
pub const RANDOM_BASES: usize = 50;

/// Chains of `1..=copies` extremal trees have `(σ, b₁) = (4m, 6m)`; gluing one
/// copy at its gluing vertex onto a random tree adds exactly 4 to `σ`.
/// Attaching at the other vertices of the copy is recorded but not checked.
pub fn optimal_family_check(copies: usize, seed: u64) -> Result<SweepReport> {
    if copies == 0 {
        return Err(Error::InvalidSize("copies must be at least 1".into()));
    }
    let mut records = Vec::new();
    for m in 1..=copies {
        let t = extremal_chain(m)?;
        let sigma = tree_form(&t).signature();
        let mut r = Record::new(format!("chain-{m}"), t.vertex_count(), t.b1(), sigma);
        r.set("chain", sigma == 4 * m as i64 && t.b1() == 6 * m);
        records.push(r);
    }
    let unit = Tree::two_thirds_tree();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut exploratory = Vec::new();
    for i in 0..RANDOM_BASES {
        let n = rng.gen_range(1..=12);
        let base = random_tree(&mut rng, n);
        let at = rng.gen_range(0..n);
        let base_sigma = tree_form(&base).signature();
        let glued = glue(&base, at, &unit, GLUE_VERTEX)?;
        let sigma = tree_form(&glued).signature();
        let mut r = Record::new(format!("base-{i}:{}", canonical_code(&base)), glued.vertex_count(), glued.b1(), sigma);
        r.set("additive", sigma == base_sigma + 4);
        let others: Vec<String> = (0..unit.vertex_count())
            .filter(|&v| v != GLUE_VERTEX)
            .map(|v| {
                let s = tree_form(&glue(&base, at, &unit, v).expect("in range")).signature();
                format!("{v}:{:+}", s - base_sigma)
            })
            .collect();
        exploratory.push(others.join(" "));
        r.note = Some(format!("other attachment points (vertex:delta) {}", others.join(" ")));
        records.push(r);
    }
    let non_four = exploratory.iter().filter(|s| s.split(' ').any(|x| !x.ends_with("+4"))).count();
    Ok(SweepReport::from_records(corpus("optimal", 1, copies, &["chain", "additive"]), records)
        .note("exploratory_bases_with_non_additive_attachment", non_four))
}

/// Every root of `Δ` is on the unit circle or negative real, for every free
/// tree with `n ≤ max_n`; so all roots have real part at most 1.
pub fn conjecture1_scan(max_n: usize) -> Result<SweepReport> {
    if max_n == 0 {
        return Err(Error::InvalidSize("max_n must be at least 1".into()));
    }
    let mut records = Vec::new();
    let mut root_at_one = 0usize;
    for t in (1..=max_n).flat_map(enumerate_free_trees) {
        let delta = seifert_matrix(&t).alexander_poly();
        let mut r = Record::new(canonical_code(&t), t.vertex_count(), t.b1(), tree_form(&t).signature());
        let circle = circle_root_count(&delta)?;
        let negative = negative_real_root_count(&delta)?;
        let degree = delta.degree().unwrap_or(0) - delta.t_valuation();
        r.alexander_circle_roots = Some(circle);
        r.set("circle_or_negative", circle + negative - delta.root_multiplicity(-1) == degree);
        if delta.root_multiplicity(1) > 0 {
            root_at_one += 1;
            r.note = Some("root at t = 1 (real part exactly 1)".into());
        }
        records.push(r);
    }
    Ok(SweepReport::from_records(corpus("trees", 1, max_n, &["circle_or_negative"]), records)
        .note("max_real_part_bound", "1")
        .note("trees_with_root_at_one", root_at_one))
}

/// A symmetric form with even diagonal built by `steps` random Hopf band or
/// trefoil plumbings; couplings lie in `[−2, 2]`.
pub fn random_plumbing_form(rng: &mut impl Rng, steps: usize) -> SymmetricForm {
    let mut s = SymmetricForm::empty();
    for _ in 0..steps {
        let coupling: Vec<i64> = (0..s.dim()).map(|_| rng.gen_range(-2..=2)).collect();
        s = if rng.gen_bool(0.5) {
            plumb_band(&s, &coupling, 2).expect("length matches")
        } else {
            plumb_trefoil(&s, &coupling).expect("length matches")
        };
    }
    s
}

/// A Seifert matrix `A` with `A + Aᵀ = s`; each off-diagonal pair is placed
/// above or below the diagonal at random.
pub fn random_seifert_lift(rng: &mut impl Rng, s: &SymmetricForm) -> Result<SeifertMatrix> {
    let m = s.matrix();
    let n = s.dim();
    if (0..n).any(|i| m[(i, i)] % 2 != 0) {
        return Err(Error::Internal("odd diagonal entry".into()));
    }
    let upper: Vec<bool> = (0..n * n).map(|_| rng.gen_bool(0.5)).collect();
    SeifertMatrix::new(Matrix::from_fn(n, n, |i, j| {
        if i == j {
            m[(i, i)] / 2
        } else {
            let (lo, hi) = (i.min(j), i.max(j));
            if upper[lo * n + hi] == (i < j) {
                m[(i, j)]
            } else {
                0
            }
        }
    }))
}

fn circle_bound_record(id: String, a: &SeifertMatrix) -> Record {
    let rep = verify_theorem_a(a);
    let mut r = Record::new(id, a.dim(), a.dim(), rep.signature);
    r.alexander_circle_roots = Some(rep.circle_roots);
    r.set("thmA", rep.pass);
    if rep.vacuous {
        r.note = Some("vanishing Alexander polynomial".into());
    }
    r
}

/// `|σ| ≤` unit-circle root count for the upper-triangular lift of each spiral form.
pub fn spiral_circle_bound(max_n: usize) -> Result<SweepReport> {
    let mut records = Vec::new();
    for n in 1..=max_n {
        let a = upper_lift(&spiral_form(n)?)?;
        records.push(circle_bound_record(format!("spiral-{n}"), &a));
    }
    Ok(SweepReport::from_records(corpus("spiral-lift", 1, max_n, &["thmA"]), records))
}

/// `|σ| ≤` unit-circle root count on `count` random multi-step plumbing Seifert matrices.
pub fn random_circle_bound(count: usize, max_steps: usize, seed: u64) -> SweepReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let records = (0..count)
        .map(|i| {
            let steps = rng.gen_range(2..=max_steps.max(2));
            let s = random_plumbing_form(&mut rng, steps);
            let a = random_seifert_lift(&mut rng, &s).expect("even diagonal");
            circle_bound_record(format!("random-{i}"), &a)
        })
        .collect();
    SweepReport::from_records(corpus("random-plumbing", 2, max_steps, &["thmA"]), records)
}

/// Random borderings: one band changes `σ` by at most one, a trefoil block never lowers it.
pub fn bordering_check(count: usize, seed: u64) -> SweepReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let records = (0..count)
        .map(|i| {
            let steps = rng.gen_range(0..=6);
            let s = random_plumbing_form(&mut rng, steps);
            let before = s.signature();
            let coupling: Vec<i64> = (0..s.dim()).map(|_| rng.gen_range(-3..=3)).collect();
            let self_pairing = rng.gen_range(-4..=4);
            let band = plumb_band(&s, &coupling, self_pairing).expect("length matches").signature();
            let tref = plumb_trefoil(&s, &coupling).expect("length matches").signature();
            let mut r = Record::new(format!("border-{i}"), s.dim(), s.dim(), before);
            r.set("band", (band - before).abs() <= 1);
            r.set("trefoil", tref >= before);
            r
        })
        .collect();
    SweepReport::from_records(corpus("borderings", 0, 6, &["band", "trefoil"]), records)
}

/// Failures of a report whose check name is `check`.
pub fn failures_of<'a>(report: &'a SweepReport, check: &'a str) -> impl Iterator<Item = &'a Failure> {
    report.failures.iter().filter(move |f| f.check == check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::parse_checks;

    #[test]
    fn small_sweep_all_checks() {
        let r = sweep_trees(5, &parse_checks("all").unwrap()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.records.len(), 8);
        // the star with four leaves sits strictly below n
        let k14 = r.records.iter().find(|x| x.id == canonical_code(&Tree::star(4))).unwrap();
        assert_eq!(k14.sigma, 4);
        let trefoil = r.records.iter().find(|x| x.n == 2).unwrap();
        assert_eq!((trefoil.sigma, trefoil.circle_count, trefoil.alexander_circle_roots), (2, Some(2), Some(2)));
        assert!(sweep_trees(0, &parse_checks("thm1").unwrap()).is_err());
    }

    #[test]
    fn two_thirds_equality_at_six() {
        let r = sweep_trees(6, &parse_checks("thm1").unwrap()).unwrap();
        assert!(r.passed());
        let e = r.summary.min_ratio.as_ref().unwrap();
        assert_eq!((e.sigma, e.b1), (4, 6));
        assert_eq!(e.id, canonical_code(&Tree::two_thirds_tree()));
    }

    #[test]
    fn spiral_small() {
        let r = sweep_spiral(6).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.records[0].det_sign, Some(1));
        assert_eq!(spiral_reduction(3).unwrap(), Matrix::from_i64_rows(&[&[-3, 0, 1], &[0, 1, 0], &[1, 0, 2]]));
    }

    #[test]
    fn slalom_small() {
        let r = sweep_slalom(4).unwrap();
        assert!(r.passed());
        assert_eq!(r.records[0].sigma, 2);
        assert!(sweep_slalom(1).is_err());
    }

    #[test]
    fn chains_and_lifts() {
        assert_eq!(extremal_chain(3).unwrap().vertex_count(), 18);
        let r = optimal_family_check(3, DEFAULT_SEED).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let mut rng = StdRng::seed_from_u64(1);
        let s = random_plumbing_form(&mut rng, 5);
        let a = random_seifert_lift(&mut rng, &s).unwrap();
        assert_eq!(a.symmetrized(), s);
        assert!(random_circle_bound(10, 5, 3).passed());
        assert!(bordering_check(50, 4).passed());
        assert!(conjecture1_scan(6).unwrap().passed());
    }
}
