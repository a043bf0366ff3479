//! Integer forms attached to trees, forests, divides and plumbings.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{alexander_poly, inertia_int, Inertia, IntPoly, Matrix};
use crate::error::{Error, Result};
use crate::trees::{Forest, Tree};

/// Square symmetric integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricForm {
    matrix: Matrix<i64>,
}

impl SymmetricForm {
    pub fn new(matrix: Matrix<i64>) -> Result<Self> {
        matrix.ensure_square()?;
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(SymmetricForm { matrix })
    }

    pub fn empty() -> Self {
        SymmetricForm { matrix: Matrix::zeros(0, 0) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<i64> {
        &self.matrix
    }

    pub fn inertia(&self) -> Inertia {
        inertia_int(&self.matrix).expect("symmetric by construction")
    }

    pub fn signature(&self) -> i64 {
        self.inertia().signature()
    }

    pub fn restrict(&self, idx: &[usize]) -> SymmetricForm {
        SymmetricForm { matrix: self.matrix.principal_submatrix(idx) }
    }

    pub fn parse(text: &str) -> Result<Self> {
        SymmetricForm::new(Matrix::parse_square(text)?)
    }
}

impl fmt::Display for SymmetricForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// Square integer matrix `A`, not necessarily symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    matrix: Matrix<i64>,
}

impl SeifertMatrix {
    pub fn new(matrix: Matrix<i64>) -> Result<Self> {
        matrix.ensure_square()?;
        Ok(SeifertMatrix { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<i64> {
        &self.matrix
    }

    /// `A + Aᵀ`.
    pub fn symmetrized(&self) -> SymmetricForm {
        SymmetricForm { matrix: &self.matrix + &self.matrix.transpose() }
    }

    /// `det(tA - Aᵀ)`.
    pub fn alexander_poly(&self) -> IntPoly {
        alexander_poly(&self.matrix).expect("square by construction")
    }

    pub fn parse(text: &str) -> Result<Self> {
        SeifertMatrix::new(Matrix::parse_square(text)?)
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

fn forest_matrix(f: &Forest, diag: i64) -> Matrix<i64> {
    let n = f.vertex_count();
    let mut m = Matrix::from_fn(n, n, |i, j| if i == j { diag } else { 0 });
    for (u, v) in f.global_edges() {
        m[(u, v)] = 1;
        m[(v, u)] = 1;
    }
    m
}

/// Diagonal 2, entry 1 on every edge, block diagonal over components.
pub fn symmetrized_form(f: &Forest) -> SymmetricForm {
    SymmetricForm { matrix: forest_matrix(f, 2) }
}

pub fn tree_form(t: &Tree) -> SymmetricForm {
    symmetrized_form(&Forest::from(t.clone()))
}

/// Diagonal −2, entry 1 on every edge.
pub fn coxeter_form(f: &Forest) -> SymmetricForm {
    SymmetricForm { matrix: forest_matrix(f, -2) }
}

/// Unit diagonal plus `A[parent][child] = 1` for each edge, with edges
/// oriented away from vertex 0.
pub fn seifert_matrix(t: &Tree) -> SeifertMatrix {
    let n = t.vertex_count();
    let (parent, _) = t.bfs_from(0);
    let mut m: Matrix<i64> = Matrix::identity(n);
    for (child, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            m[(p, child)] = 1;
        }
    }
    SeifertMatrix { matrix: m }
}

/// Seifert matrix of a symmetric form with even diagonal: half the diagonal,
/// and every off-diagonal entry moved above the diagonal.
pub fn upper_lift(s: &SymmetricForm) -> Result<SeifertMatrix> {
    let m = s.matrix();
    if (0..s.dim()).any(|i| m[(i, i)] % 2 != 0) {
        return Err(Error::InvalidSize("odd diagonal entry has no integral lift".into()));
    }
    let n = s.dim();
    Ok(SeifertMatrix {
        matrix: Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => m[(i, j)],
            std::cmp::Ordering::Equal => m[(i, i)] / 2,
            std::cmp::Ordering::Greater => 0,
        }),
    })
}

/// The blocks `(A, B, D)` of the spiral divide with `n` double points.
pub fn spiral_blocks(n: usize) -> Result<(Matrix<i64>, Matrix<i64>, Matrix<i64>)> {
    if n == 0 {
        return Err(Error::InvalidSize("spiral needs n >= 1".into()));
    }
    let a = Matrix::from_fn(n, n, |i, j| if i == j { 2 } else { 0 });
    let b = Matrix::from_fn(n, n, |i, j| match j.wrapping_sub(i) {
        0 => 1,
        1 => 2,
        2 => 1,
        _ => 0,
    });
    let d = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            if i.min(j) == 0 {
                1
            } else {
                2
            }
        } else {
            0
        }
    });
    Ok((a, b, d))
}

/// `[[A, B], [Bᵀ, D]]`, double points first, then faces.
pub fn spiral_form(n: usize) -> Result<SymmetricForm> {
    let (a, b, d) = spiral_blocks(n)?;
    let bt = b.transpose();
    let m = Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => a[(i, j)],
        (true, false) => b[(i, j - n)],
        (false, true) => bt[(i - n, j)],
        (false, false) => d[(i - n, j - n)],
    });
    SymmetricForm::new(m)
}

/// Combinatorial adjacency data of a divide: counts of double points and
/// inner faces plus their adjacency multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DivideCombinatorics {
    pub double_points: usize,
    pub inner_faces: usize,
    /// `(face, face) -> multiplicity`, stored with the smaller index first.
    pub face_face: BTreeMap<(usize, usize), i64>,
    /// `(double point, face) -> multiplicity`.
    pub dp_face: BTreeMap<(usize, usize), i64>,
}

impl DivideCombinatorics {
    pub fn new(double_points: usize, inner_faces: usize) -> Self {
        DivideCombinatorics { double_points, inner_faces, ..Default::default() }
    }

    pub fn with_face_face(mut self, i: usize, j: usize, mult: i64) -> Self {
        self.face_face.insert((i.min(j), i.max(j)), mult);
        self
    }

    pub fn with_dp_face(mut self, k: usize, j: usize, mult: i64) -> Self {
        self.dp_face.insert((k, j), mult);
        self
    }

    pub fn validate(&self) -> Result<()> {
        for (&(i, j), &m) in &self.face_face {
            if m < 0 {
                return Err(Error::NegativeMultiplicity(m));
            }
            for x in [i, j] {
                if x >= self.inner_faces {
                    return Err(Error::IndexOutOfRange { index: x, len: self.inner_faces });
                }
            }
        }
        for (&(k, j), &m) in &self.dp_face {
            if m < 0 {
                return Err(Error::NegativeMultiplicity(m));
            }
            if k >= self.double_points {
                return Err(Error::IndexOutOfRange { index: k, len: self.double_points });
            }
            if j >= self.inner_faces {
                return Err(Error::IndexOutOfRange { index: j, len: self.inner_faces });
            }
        }
        Ok(())
    }

    /// Parses lines `dp <d>`, `faces <f>`, `ff i j n` and `df k j n`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut dc = DivideCombinatorics::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::Parse { line: i + 1, msg: format!("malformed line '{line}'") };
            let words: Vec<&str> = line.split_whitespace().collect();
            let num = |w: &str| w.parse::<i64>().map_err(|_| bad());
            let idx = |w: &str| w.parse::<usize>().map_err(|_| bad());
            match words.as_slice() {
                ["dp", d] => dc.double_points = idx(d)?,
                ["faces", f] => dc.inner_faces = idx(f)?,
                ["ff", a, b, m] => dc = dc.with_face_face(idx(a)?, idx(b)?, num(m)?),
                ["df", k, j, m] => dc = dc.with_dp_face(idx(k)?, idx(j)?, num(m)?),
                _ => return Err(bad()),
            }
        }
        dc.validate()?;
        Ok(dc)
    }
}

/// Diagonal 2, off-diagonal entries from the declared multiplicities;
/// double points come first, then faces.
pub fn divide_form(dc: &DivideCombinatorics) -> Result<SymmetricForm> {
    dc.validate()?;
    let d = dc.double_points;
    let n = d + dc.inner_faces;
    let mut m = Matrix::from_fn(n, n, |i, j| if i == j { 2 } else { 0 });
    for (&(i, j), &mult) in &dc.face_face {
        if i != j {
            m[(d + i, d + j)] = mult;
            m[(d + j, d + i)] = mult;
        }
    }
    for (&(k, j), &mult) in &dc.dp_face {
        m[(k, d + j)] = mult;
        m[(d + j, k)] = mult;
    }
    SymmetricForm::new(m)
}

fn border(s: &SymmetricForm, extra: usize, f: impl Fn(usize, usize) -> i64) -> SymmetricForm {
    let d = s.dim();
    let m = Matrix::from_fn(d + extra, d + extra, |i, j| if i < d && j < d { s.matrix[(i, j)] } else { f(i, j) });
    SymmetricForm::new(m).expect("bordering is symmetric")
}

/// Adds one band whose core pairs with the old basis by `coupling`.
pub fn plumb_band(s: &SymmetricForm, coupling: &[i64], self_pairing: i64) -> Result<SymmetricForm> {
    let d = s.dim();
    if coupling.len() != d {
        return Err(Error::LengthMismatch { expected: d, found: coupling.len() });
    }
    Ok(border(s, 1, |i, j| match (i == d, j == d) {
        (true, true) => self_pairing,
        (true, false) => coupling[j],
        _ => coupling[i],
    }))
}

/// Adds a trefoil block `[[2,1],[1,2]]`; only its first curve meets the old surface.
pub fn plumb_trefoil(s: &SymmetricForm, coupling: &[i64]) -> Result<SymmetricForm> {
    let d = s.dim();
    if coupling.len() != d {
        return Err(Error::LengthMismatch { expected: d, found: coupling.len() });
    }
    Ok(border(s, 2, |i, j| {
        let (lo, hi) = (i.min(j), i.max(j));
        if lo >= d {
            if lo == hi {
                2
            } else {
                1
            }
        } else if hi == d {
            coupling[lo]
        } else {
            0
        }
    }))
}

pub fn example1_form() -> SymmetricForm {
    SymmetricForm::new(Matrix::from_i64_rows(&[&[2, 1, 3, 2], &[1, 2, 2, 3], &[3, 2, 2, 4], &[2, 3, 4, 2]]))
        .expect("symmetric")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn tree_forms() {
        assert_eq!(tree_form(&Tree::path(2)).matrix(), &m(&[&[2, 1], &[1, 2]]));
        assert_eq!(tree_form(&Tree::single_vertex()).matrix(), &m(&[&[2]]));
        assert_eq!(tree_form(&Tree::path(3)).matrix(), &m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]));
        let q = coxeter_form(&Forest::from(Tree::star(3)));
        assert_eq!(q.matrix().row(0), &[-2, 1, 1, 1]);
        assert_eq!(q.matrix().row(2), &[1, 0, -2, 0]);
        let f = Forest::new(vec![Tree::path(2), Tree::single_vertex()]);
        assert_eq!(symmetrized_form(&f).matrix(), &m(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 2]]));
    }

    #[test]
    fn seifert_lifts() {
        assert_eq!(seifert_matrix(&Tree::path(2)).matrix(), &m(&[&[1, 1], &[0, 1]]));
        assert_eq!(seifert_matrix(&Tree::single_vertex()).matrix(), &m(&[&[1]]));
        assert_eq!(seifert_matrix(&Tree::path(3)).matrix(), &m(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]));
        let t = Tree::spider(&[2, 1, 3]);
        assert_eq!(seifert_matrix(&t).symmetrized(), tree_form(&t));
        assert_eq!(upper_lift(&tree_form(&Tree::path(3))).unwrap(), seifert_matrix(&Tree::path(3)));
    }

    #[test]
    fn spiral() {
        let (a, b, d) = spiral_blocks(1).unwrap();
        assert_eq!((a, b, d), (m(&[&[2]]), m(&[&[1]]), m(&[&[2]])));
        let (_, b, d) = spiral_blocks(2).unwrap();
        assert_eq!(b, m(&[&[1, 2], &[0, 1]]));
        assert_eq!(d, m(&[&[2, 1], &[1, 2]]));
        let (a, b, d) = spiral_blocks(3).unwrap();
        let r = &(&b.transpose() * &b) - &(&a * &d);
        assert_eq!(r, m(&[&[-3, 0, 1], &[0, 1, 0], &[1, 0, 2]]));
        assert_eq!(spiral_form(1).unwrap().matrix(), &m(&[&[2, 1], &[1, 2]]));
        assert_eq!(spiral_form(2).unwrap().matrix(), &m(&[&[2, 0, 1, 2], &[0, 2, 0, 1], &[1, 0, 2, 1], &[2, 1, 1, 2]]));
        assert!(spiral_blocks(0).is_err());
        assert!(spiral_form(0).is_err());
    }

    #[test]
    fn divides() {
        let one = divide_form(&DivideCombinatorics::new(1, 0)).unwrap();
        assert_eq!(one.matrix(), &m(&[&[2]]));
        let dc = DivideCombinatorics::new(1, 1).with_dp_face(0, 0, 1);
        assert_eq!(divide_form(&dc).unwrap(), spiral_form(1).unwrap());
        let dc = DivideCombinatorics::parse("dp 3\nfaces 1\ndf 0 0 1\ndf 1 0 1\ndf 2 0 1\n").unwrap();
        // face first, as printed
        let s = divide_form(&dc).unwrap().restrict(&[3, 0, 1, 2]);
        assert_eq!(s.matrix(), &m(&[&[2, 1, 1, 1], &[1, 2, 0, 0], &[1, 0, 2, 0], &[1, 0, 0, 2]]));
        assert_eq!(s.inertia(), Inertia::new(4, 0, 0));
        let bad = DivideCombinatorics::new(1, 1).with_dp_face(0, 0, -1);
        assert_eq!(divide_form(&bad), Err(Error::NegativeMultiplicity(-1)));
        assert!(DivideCombinatorics::parse("dp 1\nfaces 1\ndf 0 3 1").is_err());
        assert!(DivideCombinatorics::parse("dp x").is_err());
    }

    #[test]
    fn plumbing() {
        let single = tree_form(&Tree::single_vertex());
        assert_eq!(plumb_band(&single, &[1], 2).unwrap(), tree_form(&Tree::path(2)));
        assert_eq!(plumb_band(&SymmetricForm::empty(), &[], 2).unwrap(), single);
        let t = plumb_band(&tree_form(&Tree::path(2)), &[3, 2], 2).unwrap();
        assert_eq!(t.matrix().row(2), &[3, 2, 2]);
        assert_eq!(plumb_trefoil(&SymmetricForm::empty(), &[]).unwrap(), tree_form(&Tree::path(2)));
        assert_eq!(plumb_trefoil(&single, &[1]).unwrap(), tree_form(&Tree::path(3)));
        assert_eq!(plumb_trefoil(&single, &[0]).unwrap().matrix(), &m(&[&[2, 0, 0], &[0, 2, 1], &[0, 1, 2]]));
        assert!(plumb_band(&single, &[], 2).is_err());
        assert!(plumb_trefoil(&single, &[1, 2]).is_err());
    }

    #[test]
    fn example1() {
        let e = example1_form();
        assert_eq!(e.matrix()[(0, 2)], 3);
        assert_eq!(e.signature(), 0);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(SymmetricForm::parse("2\n2 1\n1 2\n").unwrap(), tree_form(&Tree::path(2)));
        assert_eq!(SymmetricForm::parse("2\n2 1\n0 2\n"), Err(Error::NotSymmetric));
        let a = SeifertMatrix::parse("2\n1 1\n0 1").unwrap();
        assert_eq!(a.alexander_poly(), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(a.to_string(), "2\n1 1\n0 1\n");
    }
}
