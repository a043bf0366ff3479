//! Splitting a tree into pieces whose signature contribution is known,
//! producing a checkable lower bound on the signature.
//!
//! Each component with at least six vertices that is not a path is rooted at
//! its smallest leaf. An outermost branch vertex `v` (degree at least three,
//! no such vertex below it) is located together with its ancestors `v′`, `v″`,
//! `v‴`; the first matching case then removes a subtree `Γ₀`. Every removal
//! is validated exactly before it is accepted: either `Γ₀` minus its cut
//! vertex is positive definite and meets the rest only at the cut vertex, or
//! the case has the fixed shape for which the signature drops by exactly 4.

use std::collections::VecDeque;

use serde::Serialize;

use super::tree::{Forest, Tree};
use crate::forms::{tree_form, SymmetricForm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionStep {
    /// 1 to 7.
    pub case_id: u8,
    /// Removed vertices, in the labels of the input tree, ascending.
    pub removed: Vec<usize>,
    /// The removed piece relabeled `0..len` in the order of `removed`.
    pub subtree: Tree,
    pub cut_vertex: usize,
    pub v: usize,
    pub v1: Option<usize>,
    pub v2: Option<usize>,
    pub v3: Option<usize>,
    pub k: usize,
    pub n: usize,
    /// Guaranteed signature contribution of the piece.
    pub increment: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub steps: Vec<DecompositionStep>,
    pub residual: Forest,
    /// Vertex labels of each residual component, ascending.
    pub residual_vertices: Vec<Vec<usize>>,
    pub residual_signature: i64,
    pub certified_lower_bound: i64,
    /// True if some component of six or more vertices could not be split;
    /// it is then kept in the residual (the bound stays valid).
    pub unresolved: bool,
}

impl Certificate {
    /// `bound ≥ (2/3)·n` in exact arithmetic.
    pub fn meets_two_thirds(&self, n: usize) -> bool {
        3 * self.certified_lower_bound >= 2 * n as i64
    }
}

struct Rooted {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    desc: Vec<usize>,
    order: Vec<usize>,
}

struct Ctx<'a> {
    t: &'a Tree,
    form: SymmetricForm,
    alive: Vec<bool>,
}

impl Ctx<'_> {
    fn nbrs(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.t.neighbors(v).iter().copied().filter(|&w| self.alive[w])
    }

    fn deg(&self, v: usize) -> usize {
        self.nbrs(v).count()
    }

    fn components(&self, among: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.t.vertex_count()];
        let mut out = Vec::new();
        for &s in among {
            if seen[s] || !self.alive[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for w in self.nbrs(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn root_at(&self, root: usize) -> Rooted {
        let n = self.t.vertex_count();
        let mut r = Rooted {
            parent: vec![None; n],
            children: vec![Vec::new(); n],
            depth: vec![0; n],
            desc: vec![0; n],
            order: vec![root],
        };
        let mut queue = VecDeque::from([root]);
        let mut seen = vec![false; n];
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            for w in self.nbrs(v).collect::<Vec<_>>() {
                if !seen[w] {
                    seen[w] = true;
                    r.parent[w] = Some(v);
                    r.children[v].push(w);
                    r.depth[w] = r.depth[v] + 1;
                    r.order.push(w);
                    queue.push_back(w);
                }
            }
        }
        for &v in r.order.iter().rev() {
            if let Some(p) = r.parent[v] {
                r.desc[p] += r.desc[v] + 1;
            }
        }
        r
    }

    fn subtree(&self, r: &Rooted, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            out.extend(r.children[out[i]].iter().copied());
            i += 1;
        }
        out
    }

    fn positive_definite(&self, vs: &[usize]) -> bool {
        self.form.restrict(vs).inertia().is_positive_definite()
    }

    /// `piece` minus `cut` is positive definite and all edges leaving the
    /// piece start at `cut`.
    fn valid_split(&self, piece: &[usize], cut: usize) -> bool {
        if piece.len() < 6 {
            return false;
        }
        let inside = |w: usize| piece.contains(&w);
        let sealed = piece.iter().all(|&x| x == cut || self.nbrs(x).all(inside));
        let rest: Vec<usize> = piece.iter().copied().filter(|&x| x != cut).collect();
        sealed && self.positive_definite(&rest)
    }

    fn try_vertex(&self, r: &Rooted, v: usize) -> Option<DecompositionStep> {
        let k = r.desc[v];
        let n = r.children[v].len();
        let p1 = r.parent[v]?;
        let p2 = r.parent[p1];
        let p3 = p2.and_then(|x| r.parent[x]);
        let below = self.subtree(r, v);
        let with = |extra: &[usize]| {
            let mut p = below.clone();
            p.extend_from_slice(extra);
            p
        };
        let (case_id, piece, cut, exact_four) = if k >= 5 {
            (1, below.clone(), v, false)
        } else if k == 4 && n <= 3 {
            (2, with(&[p1]), p1, false)
        } else if k == 4 && n == 4 {
            (3, with(&[p1]), p1, true)
        } else if k == 3 && n == 2 && self.deg(p1) == 2 {
            let p2 = p2?;
            (4, with(&[p1, p2]), p2, false)
        } else if k == 3 && n == 3 && self.deg(p1) == 2 {
            let p2 = p2?;
            (5, with(&[p1, p2]), p2, true)
        } else if k == 2 && n == 2 && self.deg(p1) == 2 && p2.is_some_and(|x| self.deg(x) == 2) {
            let (p2, p3) = (p2?, p3?);
            (6, with(&[p1, p2, p3]), p3, false)
        } else {
            // cut at v″ when three or four vertices lie below v′, else at v′;
            // keep the positive definite branches hanging below the cut
            let cut = if r.desc[p1] <= 4 { p2? } else { p1 };
            let mut piece = vec![cut];
            for &c in &r.children[cut] {
                let branch = self.subtree(r, c);
                if self.positive_definite(&branch) {
                    piece.extend(branch);
                }
            }
            (7, piece, cut, false)
        };
        let ok = if exact_four { piece.len() == 6 } else { self.valid_split(&piece, cut) };
        if !ok {
            return None;
        }
        let mut removed = piece;
        removed.sort_unstable();
        let increment = if exact_four { 4 } else { removed.len() as i64 - 2 };
        Some(DecompositionStep {
            case_id,
            subtree: induced_tree(self.t, &removed),
            removed,
            cut_vertex: cut,
            v,
            v1: Some(p1),
            v2: p2,
            v3: p3,
            k,
            n,
            increment,
        })
    }

    fn find_step(&self, comp: &[usize]) -> Option<DecompositionStep> {
        let root = *comp.iter().find(|&&v| self.deg(v) == 1)?;
        let r = self.root_at(root);
        let mut branch_below = vec![false; self.t.vertex_count()];
        for &v in r.order.iter().rev() {
            if let Some(p) = r.parent[v] {
                if branch_below[v] || self.deg(v) >= 3 {
                    branch_below[p] = true;
                }
            }
        }
        let mut candidates: Vec<usize> =
            comp.iter().copied().filter(|&v| self.deg(v) >= 3 && !branch_below[v]).collect();
        candidates.sort_by_key(|&v| (std::cmp::Reverse(r.depth[v]), v));
        candidates.into_iter().find_map(|v| self.try_vertex(&r, v))
    }

    fn is_path(&self, comp: &[usize]) -> bool {
        comp.iter().all(|&v| self.deg(v) <= 2)
    }
}

/// Subgraph of `t` induced on `vs` (assumed connected), relabeled by position.
fn induced_tree(t: &Tree, vs: &[usize]) -> Tree {
    let pos = |x: usize| vs.iter().position(|&y| y == x);
    let edges: Vec<_> = t.edges().iter().filter_map(|&(a, b)| Some((pos(a)?, pos(b)?))).collect();
    Tree::new(vs.len(), &edges, None).expect("connected piece")
}

/// Certificate for `σ(t) ≥ certified_lower_bound`.
pub fn lemma1_decompose(t: &Tree) -> Certificate {
    let mut ctx = Ctx { t, form: tree_form(t), alive: vec![true; t.vertex_count()] };
    let all: Vec<usize> = (0..t.vertex_count()).collect();
    let mut queue: VecDeque<Vec<usize>> = ctx.components(&all).into();
    let mut steps = Vec::new();
    let mut residual = Vec::new();
    let mut unresolved = false;
    while let Some(comp) = queue.pop_front() {
        if comp.len() <= 5 || ctx.is_path(&comp) {
            residual.push(comp);
            continue;
        }
        match ctx.find_step(&comp) {
            Some(step) => {
                for &x in &step.removed {
                    ctx.alive[x] = false;
                }
                let rest: Vec<usize> = comp.iter().copied().filter(|&x| ctx.alive[x]).collect();
                queue.extend(ctx.components(&rest));
                steps.push(step);
            }
            None => {
                unresolved = true;
                residual.push(comp);
            }
        }
    }
    residual.sort();
    let flat: Vec<usize> = residual.iter().flatten().copied().collect();
    let residual_signature = ctx.form.restrict(&flat).signature();
    let certified_lower_bound = residual_signature + steps.iter().map(|s| s.increment).sum::<i64>();
    Certificate {
        residual: Forest::new(residual.iter().map(|c| induced_tree(t, c)).collect()),
        residual_vertices: residual,
        residual_signature,
        certified_lower_bound,
        steps,
        unresolved,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{enumerate_free_trees, glue};

    #[test]
    fn small_trees_are_terminal() {
        for n in 1..=5 {
            for t in enumerate_free_trees(n) {
                let c = lemma1_decompose(&t);
                assert!(c.steps.is_empty());
                assert_eq!(c.certified_lower_bound, tree_form(&t).signature());
            }
        }
    }

    #[test]
    fn long_path() {
        let c = lemma1_decompose(&Tree::path(10));
        assert!(c.steps.is_empty());
        assert_eq!(c.certified_lower_bound, 10);
    }

    #[test]
    fn two_thirds_tree_is_case_five() {
        let c = lemma1_decompose(&Tree::two_thirds_tree());
        assert_eq!(c.steps.len(), 1);
        assert_eq!(c.steps[0].case_id, 5);
        assert_eq!(c.certified_lower_bound, 4);
    }

    #[test]
    fn bounds_are_sound_up_to_nine() {
        for n in 6..=9 {
            for t in enumerate_free_trees(n) {
                let c = lemma1_decompose(&t);
                assert!(!c.unresolved, "{t}");
                assert!(c.certified_lower_bound <= tree_form(&t).signature(), "{t}");
                assert!(c.meets_two_thirds(n), "{t}");
                for s in &c.steps {
                    assert!(s.removed.len() >= 6);
                }
            }
        }
    }

    #[test]
    fn chained_copies() {
        let c5 = Tree::two_thirds_tree();
        let t = glue(&c5, 0, &c5, 0).unwrap();
        let c = lemma1_decompose(&t);
        assert_eq!(c.certified_lower_bound, 8);
        assert_eq!(tree_form(&t).signature(), 8);
    }
}
