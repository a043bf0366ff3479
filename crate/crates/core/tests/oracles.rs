mod common;

use std::collections::BTreeSet;

use num::{BigInt, BigRational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use plumbing::algebra::{
    bareiss_det, char_poly_int, circle_root_count, inertia_int, negative_real_root_count, positive_real_root_count,
    IntPoly, Matrix,
};
use plumbing::trees::{enumerate_free_trees, enumerate_planted_trees};

fn matrix(rows: &[Vec<i64>]) -> Matrix<i64> {
    let r: Vec<&[i64]> = rows.iter().map(|x| x.as_slice()).collect();
    Matrix::from_i64_rows(&r)
}

#[test]
fn free_trees_match_prufer_classes() {
    let known = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    for (n, &count) in known.iter().enumerate() {
        let oracle = common::prufer_free_classes(n);
        assert_eq!(oracle.len(), count, "oracle n={n}");
        let ours: BTreeSet<String> =
            enumerate_free_trees(n).map(|t| common::brute_canonical(t.vertex_count(), t.edges())).collect();
        assert_eq!(ours, oracle, "n={n}");
        assert_eq!(enumerate_free_trees(n).count(), count);
    }
}

#[test]
fn planted_trees_match_labeled_rooted_classes() {
    for n in 2..=7 {
        let oracle = common::prufer_planted_classes(n);
        let ours: Vec<String> = enumerate_planted_trees(n)
            .map(|t| {
                let adj = common::adjacency(t.vertex_count(), t.edges());
                let root = t.root().expect("planted");
                assert_eq!(adj[root].len(), 1);
                common::rooted_string(&adj, root, None)
            })
            .collect();
        let set: BTreeSet<String> = ours.iter().cloned().collect();
        assert_eq!(set.len(), ours.len(), "duplicates at n={n}");
        assert_eq!(set, oracle, "n={n}");
    }
}

#[test]
fn inertia_matches_char_poly_sign_counts() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let m = common::random_symmetric(&mut rng, n, 4);
        let i = inertia_int(&matrix(&m)).unwrap();
        assert_eq!(
            (i.positive, i.negative, i.zero),
            common::descartes_inertia(&common::faddeev_leverrier(&m)),
            "{m:?}"
        );
    }
    // rank one: inertia (1, 0, 2)
    let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![3, 6, 9]];
    let i = inertia_int(&matrix(&m)).unwrap();
    assert_eq!((i.positive, i.negative, i.zero), (1, 0, 2));
    assert_eq!(common::descartes_inertia(&common::faddeev_leverrier(&m)), (1, 0, 2));
}

#[test]
fn char_poly_and_determinant_match_faddeev_leverrier() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..60 {
        let n = rng.gen_range(1..=6);
        let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let oracle = common::faddeev_leverrier(&m);
        let ours = char_poly_int(&matrix(&m)).unwrap();
        for (k, c) in oracle.iter().enumerate() {
            assert_eq!(BigRational::from_integer(ours.coeff(k)), *c);
        }
        let det = bareiss_det(&matrix(&m).to_bigint()).unwrap();
        let sign = if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        assert_eq!(BigRational::from_integer(det * sign), oracle[0]);
    }
}

#[test]
fn circle_root_counts_match_numeric_roots() {
    let mut rng = StdRng::seed_from_u64(13);
    let mut decided = 0;
    for k in 0..150 {
        let c = common::random_reciprocal(&mut rng, 1 + k % 12, 5);
        if let Some(numeric) = common::numeric_circle_count(&c, 1e-6, 1e-3) {
            decided += 1;
            assert_eq!(circle_root_count(&IntPoly::from_i64s(&c)).unwrap(), numeric, "{c:?}");
        }
    }
    assert!(decided >= 140);
}

#[test]
fn real_root_counts_match_numeric_roots() {
    let mut rng = StdRng::seed_from_u64(14);
    let mut decided = 0;
    for _ in 0..100 {
        let degree = rng.gen_range(1..=10);
        let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-6..=6)).collect();
        if c[degree] == 0 {
            c[degree] = 1;
        }
        let roots = common::aberth_roots(&c);
        // undecided if some root is neither clearly real nor clearly complex, or sits near 0
        if roots.iter().any(|z| (z.im.abs() > 1e-7 && z.im.abs() < 1e-3) || z.norm() < 1e-3) {
            continue;
        }
        decided += 1;
        let pos = roots.iter().filter(|z| z.im.abs() <= 1e-7 && z.re > 0.0).count();
        let neg = roots.iter().filter(|z| z.im.abs() <= 1e-7 && z.re < 0.0).count();
        let p = IntPoly::from_i64s(&c);
        assert_eq!(positive_real_root_count(&p).unwrap(), pos, "{c:?}");
        assert_eq!(negative_real_root_count(&p).unwrap(), neg, "{c:?}");
    }
    assert!(decided >= 80);
}
