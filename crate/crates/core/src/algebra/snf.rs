//! Smith normal form over `Q[t]` and the nullity counts derived from it.

use num::Zero;

use super::linalg::alexander_matrix;
use super::matrix::Matrix;
use super::poly::{IntPoly, RatPoly};
use super::roots::{chebyshev_transform, CircleRoot, SturmSequence};

fn deg(p: &RatPoly) -> usize {
    p.degree().unwrap_or(0)
}

fn row_axpy(a: &mut Matrix<RatPoly>, target: usize, src: usize, q: &RatPoly, from: usize) {
    for j in from..a.cols() {
        if a[(src, j)].is_zero() {
            continue;
        }
        let v = a[(target, j)].sub(&q.mul(&a[(src, j)]));
        a[(target, j)] = v;
    }
}

fn col_axpy(a: &mut Matrix<RatPoly>, target: usize, src: usize, q: &RatPoly, from: usize) {
    for i in from..a.rows() {
        if a[(i, src)].is_zero() {
            continue;
        }
        let v = a[(i, target)].sub(&q.mul(&a[(i, src)]));
        a[(i, target)] = v;
    }
}

/// Invariant factors `α_1 | α_2 | … | α_n` of a polynomial matrix, each monic;
/// rank deficiency shows up as trailing zero polynomials.
///
/// Pivot choice: the lowest-degree nonzero entry of the active block, ties
/// broken by row-major position.
pub fn smith_normal_form(m: &Matrix<RatPoly>) -> Vec<RatPoly> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let n = rows.min(cols);
    let mut k = 0;
    while k < n {
        let pivot = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[(i, j)].is_zero())
            .min_by_key(|&(i, j)| (deg(&a[(i, j)]), i, j));
        let Some((pi, pj)) = pivot else { break };
        a.swap_rows(k, pi);
        a.swap_cols(k, pj);
        loop {
            let piv = a[(k, k)].clone();
            let mut dirty = false;
            for i in k + 1..rows {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let q = a[(i, k)].div_rem(&piv).0;
                row_axpy(&mut a, i, k, &q, k);
                dirty |= !a[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                if a[(k, j)].is_zero() {
                    continue;
                }
                let q = a[(k, j)].div_rem(&piv).0;
                col_axpy(&mut a, j, k, &q, k);
                dirty |= !a[(k, j)].is_zero();
            }
            if dirty {
                // a remainder of lower degree is now in row or column k
                let best_row = (k + 1..rows).filter(|&i| !a[(i, k)].is_zero()).min_by_key(|&i| (deg(&a[(i, k)]), i));
                let best_col = (k + 1..cols).filter(|&j| !a[(k, j)].is_zero()).min_by_key(|&j| (deg(&a[(k, j)]), j));
                match (best_row, best_col) {
                    (Some(i), Some(j)) if deg(&a[(k, j)]) < deg(&a[(i, k)]) => a.swap_cols(k, j),
                    (Some(i), _) => a.swap_rows(k, i),
                    (None, Some(j)) => a.swap_cols(k, j),
                    (None, None) => unreachable!(),
                }
                continue;
            }
            let bad =
                (k + 1..rows).flat_map(|i| (k + 1..cols).map(move |j| (i, j))).find(|&(i, j)| !piv.divides(&a[(i, j)]));
            match bad {
                Some((i, _)) => {
                    let one = RatPoly::one().neg();
                    row_axpy(&mut a, k, i, &one, k);
                }
                None => break,
            }
        }
        k += 1;
    }
    (0..n).map(|i| if i < k { a[(i, i)].monic() } else { RatPoly::zero() }).collect()
}

/// Number of invariant factors of `t·A - Aᵀ` divisible by `f`.
///
/// For irreducible `f` this is the nullity of `ω₀A - Aᵀ` at any root `ω₀` of `f`.
/// No irreducibility test is made.
pub fn nullity_at_factor(a: &Matrix<i64>, f: &IntPoly) -> usize {
    let f = f.to_rat();
    smith_normal_form(&alexander_matrix(a)).iter().filter(|alpha| f.divides(alpha)).count()
}

/// Nullity of `ω₀A - Aᵀ` at the specific circle root `ω₀` isolated by `root`:
/// the number of invariant factors vanishing there.
pub fn nullity_at_root(a: &Matrix<i64>, root: &CircleRoot) -> usize {
    invariant_factors_vanishing_at(&smith_normal_form(&alexander_matrix(a)), root)
}

pub(crate) fn invariant_factors_vanishing_at(factors: &[RatPoly], root: &CircleRoot) -> usize {
    let f = root.factor.to_rat();
    factors
        .iter()
        .filter(|alpha| {
            if alpha.is_zero() {
                return true;
            }
            let g = alpha.gcd(&f);
            if deg(&g) == 0 {
                return false;
            }
            let g = g.to_int_primitive();
            // circle roots of g are closed under inversion
            let core = g.to_rat().gcd(&g.reversed().to_rat()).to_int_primitive().normalized();
            if core.degree().unwrap_or(0) == 0 {
                return false;
            }
            let r = chebyshev_transform(&core).expect("self-reciprocal core");
            let iv = &root.interval;
            if iv.is_exact() {
                r.eval(&iv.lo).is_zero()
            } else {
                SturmSequence::new(&r).count_in(&iv.lo, &iv.hi) > 0
            }
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::roots::isolate_circle_roots;
    use crate::algebra::{alexander_poly, number::int_rat};

    fn p(c: &[i64]) -> RatPoly {
        IntPoly::from_i64s(c).to_rat()
    }

    fn diag(entries: Vec<RatPoly>) -> Matrix<RatPoly> {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { RatPoly::zero() })
    }

    #[test]
    fn trefoil_invariant_factors() {
        let a = Matrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(smith_normal_form(&alexander_matrix(&a)), vec![p(&[1]), p(&[1, -1, 1])]);
    }

    #[test]
    fn diagonal_inputs() {
        let t = p(&[0, 1]);
        let t2 = p(&[0, 0, 1]);
        assert_eq!(smith_normal_form(&diag(vec![t.clone(), t2.clone()])), vec![t.clone(), t2.clone()]);
        assert_eq!(smith_normal_form(&diag(vec![t2.clone(), t.clone()])), vec![t.clone(), t2]);
        // coprime entries collapse: diag(t, t+1) ~ diag(1, t(t+1))
        assert_eq!(smith_normal_form(&diag(vec![t, p(&[1, 1])])), vec![p(&[1]), p(&[0, 1, 1])]);
    }

    #[test]
    fn rank_deficient() {
        let m = Matrix::from_fn(2, 2, |_, _| p(&[1, 1]));
        assert_eq!(smith_normal_form(&m), vec![p(&[1, 1]), RatPoly::zero()]);
    }

    #[test]
    fn nullities() {
        let a = Matrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let f = IntPoly::from_i64s(&[1, -1, 1]);
        assert_eq!(nullity_at_factor(&a, &f), 1);
        assert_eq!(nullity_at_factor(&a, &IntPoly::from_i64s(&[1, 1])), 0);
        let doubled = Matrix::from_i64_rows(&[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 1]]);
        assert_eq!(nullity_at_factor(&doubled, &f), 2);

        let iso = isolate_circle_roots(&alexander_poly(&doubled).unwrap()).unwrap();
        assert_eq!(iso.roots.len(), 1);
        assert_eq!(nullity_at_root(&doubled, &iso.roots[0]), 2);
        assert_eq!(nullity_at_root(&a, &isolate_circle_roots(&f).unwrap().roots[0]), 1);
        let _ = int_rat(0);
    }
}
