//! Exhaustive enumeration of trees and forests up to isomorphism.
//!
//! Classes of size `n` are grown from classes of size `n - 1` by attaching a
//! leaf everywhere and keeping one tree per canonical code. Representatives
//! are rebuilt from their codes, so labels and order are deterministic.

use std::collections::BTreeSet;

use super::canon::{canonical_code, rooted_code, tree_from_code};
use super::tree::{Forest, Tree};

fn add_leaf(t: &Tree, at: usize) -> Tree {
    let n = t.vertex_count();
    let mut edges = t.edges().to_vec();
    edges.push((at, n));
    Tree::new(n + 1, &edges, t.root()).expect("adding a leaf keeps a tree")
}

fn grow(codes: &BTreeSet<String>, key: impl Fn(&Tree) -> String) -> BTreeSet<String> {
    let mut next = BTreeSet::new();
    for code in codes {
        let t = tree_from_code(code).expect("valid code");
        for v in 0..t.vertex_count() {
            next.insert(key(&add_leaf(&t, v)));
        }
    }
    next
}

/// Canonical codes of all free trees with `n` vertices, sorted.
pub fn free_tree_codes(n: usize) -> Vec<String> {
    if n == 0 {
        return Vec::new();
    }
    let mut codes = BTreeSet::from([canonical_code(&Tree::single_vertex())]);
    for _ in 1..n {
        codes = grow(&codes, canonical_code);
    }
    codes.into_iter().collect()
}

/// AHU codes of all rooted trees with `n` vertices, sorted.
pub fn rooted_tree_codes(n: usize) -> Vec<String> {
    if n == 0 {
        return Vec::new();
    }
    let mut codes = BTreeSet::from(["()".to_string()]);
    for _ in 1..n {
        codes = grow(&codes, |t| rooted_code(t, 0));
    }
    codes.into_iter().collect()
}

/// One unrooted representative per isomorphism class of `n`-vertex trees.
/// Each representative is labeled in preorder from a center.
pub fn enumerate_free_trees(n: usize) -> impl Iterator<Item = Tree> {
    free_tree_codes(n).into_iter().map(|c| tree_from_code(&c).expect("valid code").with_root(None).expect("valid tree"))
}

/// One representative per rooted isomorphism class of `n`-vertex trees whose
/// root is a leaf. The root is vertex 0 and its neighbor is vertex 1.
pub fn enumerate_planted_trees(n: usize) -> impl Iterator<Item = Tree> {
    let codes = if n < 2 { Vec::new() } else { rooted_tree_codes(n - 1) };
    codes.into_iter().map(|c| tree_from_code(&format!("({c})")).expect("valid code"))
}

/// Every forest (multiset of free trees) with exactly `n` vertices in total.
/// Components are listed by nonincreasing size, then by code.
pub fn enumerate_forests(n: usize) -> Vec<Forest> {
    let by_size: Vec<Vec<Tree>> = (0..=n).map(|k| enumerate_free_trees(k).collect()).collect();
    // items ordered as (size desc, index asc); a forest is a nonincreasing sequence of items
    let items: Vec<(usize, usize)> = (1..=n).rev().flat_map(|k| (0..by_size[k].len()).map(move |i| (k, i))).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        items: &[(usize, usize)],
        start: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for idx in start..items.len() {
            if items[idx].0 > remaining {
                continue;
            }
            current.push(idx);
            rec(items, idx, remaining - items[idx].0, current, out);
            current.pop();
        }
    }
    if n > 0 {
        rec(&items, 0, n, &mut current, &mut out);
    }
    out.into_iter()
        .map(|sel| Forest::new(sel.into_iter().map(|i| by_size[items[i].0][items[i].1].clone()).collect()))
        .collect()
}
