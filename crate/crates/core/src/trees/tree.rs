use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite tree on vertices `0..n`, optionally rooted.
///
/// Edges are stored normalized (`u < v`) and sorted, so two trees compare
/// equal exactly when they have the same labeled structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    root: Option<usize>,
    adj: Vec<Vec<usize>>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

impl Tree {
    pub fn new(n: usize, edges: &[(usize, usize)], root: Option<usize>) -> Result<Tree> {
        if n == 0 {
            return Err(Error::InvalidSize("a tree needs at least one vertex".into()));
        }
        let mut uf = UnionFind::new(n);
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, len: n });
                }
            }
            if u == v || !uf.union(u, v) {
                return Err(Error::Cycle);
            }
            norm.push((u.min(v), u.max(v)));
        }
        if norm.len() != n - 1 {
            return Err(Error::Disconnected);
        }
        if let Some(r) = root {
            if r >= n {
                return Err(Error::IndexOutOfRange { index: r, len: n });
            }
        }
        norm.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Tree { n, edges: norm, root, adj })
    }

    pub fn single_vertex() -> Tree {
        Tree::new(1, &[], None).unwrap()
    }

    /// Path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::new(n, &edges, None).expect("path")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Tree {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Tree::new(leaves + 1, &edges, None).expect("star")
    }

    /// Vertex with `legs.len()` paths attached; leg `i` has `legs[i]` vertices.
    /// The center is vertex 0.
    pub fn spider(legs: &[usize]) -> Tree {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Tree::new(next, &edges, None).expect("spider")
    }

    /// The six-vertex tree on which the signature is exactly two thirds of
    /// the vertex count: a vertex with three leaves, reached through a path of
    /// two further vertices. Labels: 0 = outer end (`v″`), 1 = `v′`, 2 = center.
    pub fn two_thirds_tree() -> Tree {
        Tree::new(6, &[(0, 1), (1, 2), (2, 3), (2, 4), (2, 5)], None).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// First Betti number of the associated plumbing (the vertex count).
    pub fn b1(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn with_root(&self, root: Option<usize>) -> Result<Tree> {
        Tree::new(self.n, &self.edges, root)
    }

    pub fn is_path(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) <= 2)
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| self.degree(v) <= 1)
    }

    /// Applies `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Tree::new(self.n, &edges, self.root.map(|r| perm[r])).expect("relabeling preserves validity")
    }

    /// Parent array and BFS order for the tree rooted at `root`.
    pub fn bfs_from(&self, root: usize) -> (Vec<Option<usize>>, Vec<usize>) {
        let mut parent = vec![None; self.n];
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        (parent, order)
    }

    /// Decodes a Prüfer sequence over `0..seq.len() + 2`.
    pub fn from_prufer(seq: &[usize]) -> Result<Tree> {
        let n = seq.len() + 2;
        if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        let mut degree = vec![1usize; n];
        for &x in seq {
            degree[x] += 1;
        }
        let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &x in seq {
            let leaf = leaves.pop_first().expect("a leaf always exists");
            edges.push((leaf, x));
            degree[x] -= 1;
            if degree[x] == 1 {
                leaves.insert(x);
            }
        }
        let rest: Vec<usize> = leaves.into_iter().collect();
        edges.push((rest[0], rest[1]));
        Tree::new(n, &edges, None)
    }

    /// Parses the tree file format: vertex count, optional `root k`, then
    /// `n - 1` lines `u v`.
    pub fn parse(text: &str) -> Result<Tree> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lno, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::Parse { line: lno, msg: format!("expected vertex count, got '{first}'") })?;
        let mut root = None;
        let mut edges = Vec::new();
        for (lno, line) in lines {
            let words: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse { line: lno, msg: format!("malformed line '{line}'") };
            match words.as_slice() {
                ["root", k] if root.is_none() && edges.is_empty() => {
                    root = Some(k.parse::<usize>().map_err(|_| bad())?);
                }
                [u, v] => {
                    let u = u.parse::<usize>().map_err(|_| bad())?;
                    let v = v.parse::<usize>().map_err(|_| bad())?;
                    edges.push((u, v));
                }
                _ => return Err(bad()),
            }
        }
        Tree::new(n, &edges, root)
    }

    /// Renders the tree file format.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        if let Some(r) = self.root {
            writeln!(f, "root {r}")?;
        }
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl serde::Serialize for Tree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Tree", 3)?;
        st.serialize_field("vertex_count", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.serialize_field("root", &self.root)?;
        st.end()
    }
}

/// Disjoint union of trees; vertex `j` of component `i` gets global index
/// `offset(i) + j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, serde::Serialize)]
pub struct Forest {
    pub components: Vec<Tree>,
}

impl Forest {
    pub fn new(components: Vec<Tree>) -> Self {
        Forest { components }
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(Tree::vertex_count).sum()
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.components
            .iter()
            .map(|t| {
                let o = acc;
                acc += t.vertex_count();
                o
            })
            .collect()
    }

    /// Edges in global indices.
    pub fn global_edges(&self) -> Vec<(usize, usize)> {
        self.components
            .iter()
            .zip(self.offsets())
            .flat_map(|(t, o)| t.edges().iter().map(move |&(u, v)| (u + o, v + o)))
            .collect()
    }
}

impl From<Tree> for Forest {
    fn from(t: Tree) -> Self {
        Forest { components: vec![t] }
    }
}

/// Replaces every edge `{u, v}` by `u - m - v` with a fresh vertex `m`.
/// The midpoint of the `i`-th edge (in sorted order) is `n + i`.
pub fn subdivide(t: &Tree) -> Tree {
    let n = t.vertex_count();
    let mut edges = Vec::with_capacity(2 * t.edges().len());
    for (i, &(u, v)) in t.edges().iter().enumerate() {
        edges.push((u, n + i));
        edges.push((n + i, v));
    }
    Tree::new(n + t.edges().len(), &edges, t.root()).expect("subdivision of a tree is a tree")
}

/// Subdivides every edge, then deletes the root and its single incident edge.
/// Surviving vertices keep their relative order; the result is unrooted.
pub fn slalom_transform(t: &Tree) -> Result<Tree> {
    let root = t.root().ok_or(Error::MissingRoot)?;
    if t.degree(root) != 1 {
        return Err(Error::RootDegree(t.degree(root)));
    }
    let s = subdivide(t);
    let keep: Vec<usize> = (0..s.vertex_count()).filter(|&v| v != root).collect();
    let mut index = vec![usize::MAX; s.vertex_count()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let edges: Vec<_> =
        s.edges().iter().filter(|&&(u, v)| u != root && v != root).map(|&(u, v)| (index[u], index[v])).collect();
    Tree::new(keep.len(), &edges, None)
}

/// Disjoint union of `base` and `attachment` plus an edge joining `at` and `at2`.
/// Attachment vertices are shifted by `base.vertex_count()`; the base root is kept.
pub fn glue(base: &Tree, at: usize, attachment: &Tree, at2: usize) -> Result<Tree> {
    if at >= base.vertex_count() {
        return Err(Error::IndexOutOfRange { index: at, len: base.vertex_count() });
    }
    if at2 >= attachment.vertex_count() {
        return Err(Error::IndexOutOfRange { index: at2, len: attachment.vertex_count() });
    }
    let off = base.vertex_count();
    let mut edges = base.edges().to_vec();
    edges.extend(attachment.edges().iter().map(|&(u, v)| (u + off, v + off)));
    edges.push((at, at2 + off));
    Tree::new(off + attachment.vertex_count(), &edges, base.root())
}
