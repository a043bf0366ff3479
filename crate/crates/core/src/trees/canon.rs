//! AHU canonical codes for rooted and unrooted trees.

use super::tree::Tree;

/// Parenthesized AHU code of `t` rooted at `root`: a vertex is `(` followed by
/// the sorted codes of its children, then `)`.
pub fn rooted_code(t: &Tree, root: usize) -> String {
    let (parent, order) = t.bfs_from(root);
    let mut codes: Vec<String> = vec![String::new(); t.vertex_count()];
    for &v in order.iter().rev() {
        let mut children: Vec<String> =
            t.neighbors(v).iter().filter(|&&w| parent[w] == Some(v)).map(|&w| std::mem::take(&mut codes[w])).collect();
        children.sort_unstable();
        let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        s.push('(');
        for c in children {
            s.push_str(&c);
        }
        s.push(')');
        codes[v] = s;
    }
    std::mem::take(&mut codes[root])
}

/// One or two central vertices (by repeated leaf stripping).
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            deg[leaf] = 0;
            for &w in t.neighbors(leaf) {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Canonical code of the unrooted tree: the smallest rooted code over its
/// center(s). Equal codes exactly for isomorphic trees.
pub fn canonical_code(t: &Tree) -> String {
    centers(t).into_iter().map(|c| rooted_code(t, c)).min().expect("nonempty tree")
}

/// Canonical code of a rooted tree (root required).
pub fn rooted_canonical_code(t: &Tree) -> Option<String> {
    t.root().map(|r| rooted_code(t, r))
}

/// Rebuilds a rooted tree from an AHU code. Vertices are numbered in
/// preorder, so the root is 0.
pub fn tree_from_code(code: &str) -> Option<Tree> {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for ch in code.chars() {
        match ch {
            '(' => {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                } else if next > 0 {
                    return None;
                }
                stack.push(next);
                next += 1;
            }
            ')' => {
                stack.pop()?;
            }
            _ => return None,
        }
    }
    if !stack.is_empty() || next == 0 {
        return None;
    }
    Tree::new(next, &edges, Some(0)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_paths_agree() {
        let a = Tree::path(3);
        let b = Tree::new(3, &[(2, 0), (0, 1)], None).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn star_and_path_differ() {
        assert_ne!(canonical_code(&Tree::star(3)), canonical_code(&Tree::path(4)));
    }

    #[test]
    fn all_labelings_of_p3() {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let codes: std::collections::BTreeSet<_> =
            perms.iter().map(|p| canonical_code(&Tree::path(3).relabel(p))).collect();
        assert_eq!(codes.len(), 1);
    }

    #[test]
    fn centers_of_small_trees() {
        assert_eq!(centers(&Tree::path(5)), vec![2]);
        assert_eq!(centers(&Tree::path(4)), vec![1, 2]);
        assert_eq!(centers(&Tree::star(4)), vec![0]);
        assert_eq!(centers(&Tree::single_vertex()), vec![0]);
    }

    #[test]
    fn code_round_trip() {
        let t = Tree::spider(&[1, 2, 3]);
        let code = rooted_code(&t, 0);
        let back = tree_from_code(&code).unwrap();
        assert_eq!(rooted_code(&back, 0), code);
        assert!(tree_from_code("(()").is_none());
        assert!(tree_from_code("()()").is_none());
        assert!(tree_from_code("").is_none());
    }
}
