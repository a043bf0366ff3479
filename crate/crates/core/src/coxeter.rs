//! Reflection representation of the Coxeter system of a forest.
//!
//! Matrices act on column vectors. `R_i` sends `s_j` to `s_j + q(s_i, s_j)·s_i`,
//! and the transformation for an order `(o_1, …, o_n)` is the matrix product
//! `R_{o_1} ⋯ R_{o_n}`, so `R_{o_1}` is applied last.

use num::BigInt;
use serde::Serialize;

use crate::algebra::{
    alexander_poly, bareiss_det, char_poly, circle_root_count, positive_real_root_count, IntPoly, Matrix,
};
use crate::error::{Error, Result};
use crate::forms::{coxeter_form, seifert_matrix};
use crate::trees::{Forest, Tree};

pub fn reflection_matrix(f: &Forest, i: usize) -> Result<Matrix<i64>> {
    let q = coxeter_form(f);
    let n = q.dim();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    let q = q.matrix();
    Ok(Matrix::from_fn(n, n, |r, c| {
        let delta = i64::from(r == c);
        if r == i {
            delta + q[(i, c)]
        } else {
            delta
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    pub matrix: Matrix<BigInt>,
    pub order: Vec<usize>,
}

impl CoxeterMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn char_poly(&self) -> IntPoly {
        char_poly(&self.matrix).expect("square")
    }

    pub fn determinant(&self) -> BigInt {
        bareiss_det(&self.matrix).expect("square")
    }
}

fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for &o in order {
        if o >= n || seen[o] {
            return Err(Error::InvalidPermutation(o));
        }
        seen[o] = true;
    }
    if order.len() != n {
        return Err(Error::InvalidPermutation(order.len()));
    }
    Ok(())
}

pub fn coxeter_transformation(f: &Forest, order: &[usize]) -> Result<CoxeterMatrix> {
    let q = coxeter_form(f);
    let n = q.dim();
    check_permutation(order, n)?;
    let q = q.matrix();
    let mut m: Matrix<BigInt> = Matrix::identity(n);
    // right multiplication by R_i adds q_ij times column i to column j
    for &i in order {
        let col_i: Vec<BigInt> = (0..n).map(|r| m[(r, i)].clone()).collect();
        for j in 0..n {
            let qij = q[(i, j)];
            if qij == 0 {
                continue;
            }
            for (r, x) in col_i.iter().enumerate() {
                m[(r, j)] += x * qij;
            }
        }
    }
    Ok(CoxeterMatrix { matrix: m, order: order.to_vec() })
}

/// Color-0 vertices ascending, then color-1 vertices ascending. Each
/// component's smallest vertex gets color 0.
pub fn bicolored_order(f: &Forest) -> Vec<usize> {
    let n = f.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in f.global_edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut color: Vec<Option<u8>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(0);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let c = color[v].expect("colored");
            for &w in &adj[v] {
                if color[w].is_none() {
                    color[w] = Some(1 - c);
                    stack.push(w);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&v| color[v] == Some(0)).collect();
    order.extend((0..n).filter(|&v| color[v] == Some(1)));
    order
}

pub fn bicolored_coxeter(f: &Forest) -> CoxeterMatrix {
    coxeter_transformation(f, &bicolored_order(f)).expect("bicolored order is a permutation")
}

/// Eigenvalue counts (with multiplicity): on the unit circle, positive
/// real off the circle, and everything else. The three sum to the dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumClassification {
    pub circle_count: usize,
    pub positive_real_count: usize,
    pub other_count: usize,
}

/// Classifies the roots of the characteristic polynomial of any square
/// integer matrix. The eigenvalue 1 counts as a circle root only.
pub fn classify_matrix_spectrum(m: &Matrix<BigInt>) -> Result<SpectrumClassification> {
    let cp = char_poly(m)?;
    let dim = m.rows();
    if dim == 0 {
        return Ok(SpectrumClassification { circle_count: 0, positive_real_count: 0, other_count: 0 });
    }
    let circle = circle_root_count(&cp)?;
    let at_one = cp.root_multiplicity(1);
    let positive = positive_real_root_count(&cp)? - at_one;
    Ok(SpectrumClassification {
        circle_count: circle,
        positive_real_count: positive,
        other_count: dim - circle - positive,
    })
}

pub fn classify_spectrum(c: &CoxeterMatrix) -> Result<SpectrumClassification> {
    classify_matrix_spectrum(&c.matrix)
}

/// `χ(−t) = ±tᵏ·Δ(t)`, with `χ` the characteristic polynomial of the
/// bicolored Coxeter transformation and `Δ` the Alexander polynomial of
/// the tree's Seifert matrix.
pub fn monodromy_correspondence_check(t: &Tree) -> bool {
    let chi = bicolored_coxeter(&Forest::from(t.clone())).char_poly();
    let delta = alexander_poly(seifert_matrix(t).matrix()).expect("square");
    chi.substitute_neg().equal_up_to_unit(&delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forest(t: Tree) -> Forest {
        Forest::from(t)
    }

    fn big(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_i64_rows(rows).to_bigint()
    }

    #[test]
    fn reflections() {
        assert_eq!(reflection_matrix(&forest(Tree::single_vertex()), 0).unwrap(), Matrix::from_i64_rows(&[&[-1]]));
        let r = reflection_matrix(&forest(Tree::path(2)), 0).unwrap();
        assert_eq!(r, Matrix::from_i64_rows(&[&[-1, 1], &[0, 1]]));
        assert_eq!(&r * &r, Matrix::identity(2));
        assert!(reflection_matrix(&forest(Tree::path(2)), 2).is_err());
    }

    #[test]
    fn transformations() {
        let c = coxeter_transformation(&forest(Tree::path(2)), &[0, 1]).unwrap();
        assert_eq!(c.matrix, big(&[&[0, -1], &[1, -1]]));
        assert_eq!(c.char_poly(), IntPoly::from_i64s(&[1, 1, 1]));
        let c = coxeter_transformation(&forest(Tree::single_vertex()), &[0]).unwrap();
        assert_eq!(c.char_poly(), IntPoly::from_i64s(&[1, 1]));
        let f = forest(Tree::path(3));
        let a = coxeter_transformation(&f, &[0, 1, 2]).unwrap();
        let b = coxeter_transformation(&f, &[1, 2, 0]).unwrap();
        assert_ne!(a.matrix, b.matrix);
        assert_eq!(a.char_poly(), b.char_poly());
        assert!(coxeter_transformation(&f, &[0, 0, 1]).is_err());
        assert!(coxeter_transformation(&f, &[0, 1]).is_err());
    }

    #[test]
    fn bicoloring() {
        assert_eq!(bicolored_order(&forest(Tree::path(2))), vec![0, 1]);
        assert_eq!(bicolored_order(&forest(Tree::path(3))), vec![0, 2, 1]);
        assert_eq!(bicolored_order(&forest(Tree::star(3))), vec![0, 1, 2, 3]);
        let f = Forest::new(vec![Tree::path(2), Tree::path(2)]);
        assert_eq!(bicolored_order(&f), vec![0, 2, 1, 3]);
    }

    #[test]
    fn spectra() {
        let a2 = bicolored_coxeter(&forest(Tree::path(2)));
        let s = classify_spectrum(&a2).unwrap();
        assert_eq!((s.circle_count, s.positive_real_count, s.other_count), (2, 0, 0));
        let a1 = bicolored_coxeter(&forest(Tree::single_vertex()));
        assert_eq!(classify_spectrum(&a1).unwrap().circle_count, 1);
        // star with five leaves: hyperbolic, a pair of positive real roots
        let s = classify_spectrum(&bicolored_coxeter(&forest(Tree::star(5)))).unwrap();
        assert_eq!((s.circle_count, s.positive_real_count, s.other_count), (4, 2, 0));
        let m = big(&[&[0, 1], &[-2, 0]]);
        let s = classify_matrix_spectrum(&m).unwrap();
        assert_eq!(s.other_count, 2);
        assert!(a2.determinant() == BigInt::from(1) || a2.determinant() == BigInt::from(-1));
    }

    #[test]
    fn monodromy() {
        assert!(monodromy_correspondence_check(&Tree::path(2)));
        assert!(monodromy_correspondence_check(&Tree::single_vertex()));
        assert!(monodromy_correspondence_check(&Tree::two_thirds_tree()));
    }
}
