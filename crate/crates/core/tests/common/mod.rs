//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's enumeration, canonical forms, inertia or root counting.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use num::{BigInt, BigRational, One, Signed, Zero};
use num_complex::Complex64;
use rand::Rng;

// ---------- trees ----------

/// Edges of the labeled tree with the given Prüfer sequence on `seq.len() + 2` vertices.
pub fn prufer_edges(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));
    edges
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Sorted-children parenthesis string of the tree hanging from `v`.
pub fn rooted_string(adj: &[Vec<usize>], v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> =
        adj[v].iter().filter(|&&w| Some(w) != parent).map(|&w| rooted_string(adj, w, Some(v))).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Minimum rooted string over every choice of root: a complete isomorphism invariant.
pub fn brute_canonical(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    (0..n).map(|r| rooted_string(&adj, r, None)).min().expect("nonempty")
}

/// Visits every sequence over `0..labels` of length `len` in which label
/// `i` occurs `counts[i]` times.
fn multiset_permutations(counts: &mut [usize], prefix: &mut Vec<usize>, len: usize, visit: &mut impl FnMut(&[usize])) {
    if prefix.len() == len {
        visit(prefix);
        return;
    }
    for i in 0..counts.len() {
        if counts[i] > 0 {
            counts[i] -= 1;
            prefix.push(i);
            multiset_permutations(counts, prefix, len, visit);
            prefix.pop();
            counts[i] += 1;
        }
    }
}

fn partitions(total: usize, max_part: usize, parts_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if total == 0 {
        out.push(cur.clone());
        return;
    }
    if parts_left == 0 {
        return;
    }
    for p in (1..=max_part.min(total)).rev() {
        cur.push(p);
        partitions(total - p, p, parts_left - 1, cur, out);
        cur.pop();
    }
}

/// Isomorphism classes of trees on `n` vertices from Prüfer sequences.
/// A vertex of degree `d` occurs `d - 1` times in the sequence, so relabeling
/// by nonincreasing degree shows it suffices to decode sequences whose label
/// counts are nonincreasing in the label.
pub fn prufer_free_classes(n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    match n {
        0 => return out,
        1 => {
            out.insert("()".to_string());
            return out;
        }
        _ => {}
    }
    let len = n - 2;
    let mut shapes = Vec::new();
    partitions(len, len.max(1), n, &mut Vec::new(), &mut shapes);
    for shape in shapes {
        let mut counts = shape.clone();
        multiset_permutations(&mut counts, &mut Vec::new(), len, &mut |seq| {
            out.insert(brute_canonical(n, &prufer_edges(seq)));
        });
    }
    out
}

/// Rooted classes on `n` vertices whose root has degree one, from all labeled trees.
pub fn prufer_planted_classes(n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    if n < 2 {
        return out;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        let edges = prufer_edges(&seq);
        let adj = adjacency(n, &edges);
        for r in 0..n {
            if adj[r].len() == 1 {
                out.insert(rooted_string(&adj, r, None));
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

// ---------- exact linear algebra ----------

pub fn random_symmetric(rng: &mut impl Rng, n: usize, range: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-range..=range);
            m[i][j] = x;
            m[j][i] = x;
        }
    }
    m
}

/// Characteristic polynomial `det(xI - M)`, coefficients from degree 0 upward,
/// by the Faddeev–LeVerrier recursion over the rationals.
pub fn faddeev_leverrier(m: &[Vec<i64>]) -> Vec<BigRational> {
    let n = m.len();
    let a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let mul = |x: &[Vec<BigRational>], y: &[Vec<BigRational>]| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |s, k| s + &x[i][k] * &y[k][j])).collect())
            .collect()
    };
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = mul(&a, &mk);
        let trace = (0..n).fold(BigRational::zero(), |s, i| s + &am[i][i]);
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k as i64));
    }
    coeffs
}

fn sign_changes(c: &[BigRational]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(n₊, n₋, n₀)` of a real-rooted polynomial: Descartes' rule is exact when every root is real.
pub fn descartes_inertia(coeffs: &[BigRational]) -> (usize, usize, usize) {
    let zero = coeffs.iter().take_while(|x| x.is_zero()).count();
    let rest = &coeffs[zero..];
    let flipped: Vec<BigRational> =
        rest.iter().enumerate().map(|(k, x)| if k % 2 == 1 { -x.clone() } else { x.clone() }).collect();
    (sign_changes(rest), sign_changes(&flipped), zero)
}

// ---------- floating point roots ----------

/// Palindromic polynomial of the given degree, coefficients in `[-range, range]`
/// from degree 0 upward, with nonzero end coefficients.
pub fn random_reciprocal(rng: &mut impl Rng, degree: usize, range: i64) -> Vec<i64> {
    let mut c = vec![0i64; degree + 1];
    for k in 0..=degree / 2 {
        let mut x = rng.gen_range(-range..=range);
        if k == 0 {
            while x == 0 {
                x = rng.gen_range(-range..=range);
            }
        }
        c[k] = x;
        c[degree - k] = x;
    }
    c
}

/// All complex roots by Aberth–Ehrlich iteration.
pub fn aberth_roots(coeffs: &[i64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x as f64, 0.0)).collect();
    let eval = |z: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for a in c.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    };
    let radius = 1.0 + coeffs[..n].iter().map(|&x| (x as f64).abs()).fold(0.0, f64::max) / (coeffs[n] as f64).abs();
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.7, 2.0 * std::f64::consts::PI * (k as f64 + 0.3) / n as f64))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 =
                (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Numeric unit-circle count, or `None` when some root falls in the gray
/// zone between `on` and `off` distance from the circle.
pub fn numeric_circle_count(coeffs: &[i64], on: f64, off: f64) -> Option<usize> {
    let mut count = 0;
    for z in aberth_roots(coeffs) {
        let d = (z.norm() - 1.0).abs();
        if d <= on {
            count += 1;
        } else if d < off {
            return None;
        }
    }
    Some(count)
}
