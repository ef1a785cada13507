//! Rooted trees in level order, the outer enumeration unit of the search.

use std::cmp::Reverse;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{bit, check_capacity, Graph};

/// A rooted tree whose vertices are numbered in level order.
///
/// Vertex 0 is the root, every other vertex has a parent with a smaller
/// index, and levels never decrease with the index. Children of a vertex
/// occupy a contiguous index range.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    parent: Vec<usize>,
    level: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    /// Build from a parent array in level order (`parents[0]` must be `None`).
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        let n = parents.len();
        check_capacity(n)?;
        if n == 0 {
            return Err(Error::BadParameters("tree must have a root".into()));
        }
        if parents[0].is_some() {
            return Err(Error::BadParameters("vertex 0 must be the root".into()));
        }
        let mut parent = vec![0; n];
        let mut level = vec![0; n];
        let mut children = vec![Vec::new(); n];
        for v in 1..n {
            let p = parents[v]
                .ok_or_else(|| Error::BadParameters(format!("vertex {v} has no parent")))?;
            if p >= v {
                return Err(Error::BadParameters(format!(
                    "parent {p} of vertex {v} is not smaller"
                )));
            }
            parent[v] = p;
            level[v] = level[p] + 1;
            if level[v] < level[v - 1] {
                return Err(Error::BadParameters(
                    "vertices are not in level order".into(),
                ));
            }
            if let Some(&last) = children[p].last() {
                if last + 1 != v {
                    return Err(Error::BadParameters(format!(
                        "children of {p} are not contiguous"
                    )));
                }
            }
            children[p].push(v);
        }
        // Children of earlier parents come first.
        for v in 2..n {
            if parent[v] < parent[v - 1] {
                return Err(Error::BadParameters("vertices are not in BFS order".into()));
            }
        }
        Ok(RootedTree {
            parent,
            level,
            children,
        })
    }

    /// Build from an arbitrary parent array with the given root and relabel into
    /// canonical level order.
    pub fn from_parents_rooted(root: usize, parents: &[Option<usize>]) -> Result<Self> {
        canonical_level_order(root, parents).map(|(t, _)| t)
    }

    /// Build from a pre-order level sequence (root at level 0), as produced by
    /// the level-sequence enumerator, and relabel into canonical level order.
    pub fn from_level_sequence(levels: &[usize]) -> Result<Self> {
        let n = levels.len();
        check_capacity(n)?;
        if n == 0 || levels[0] != 0 {
            return Err(Error::BadParameters(
                "level sequence must start at the root".into(),
            ));
        }
        let mut parents = vec![None; n];
        // `stack[l]` is the most recent vertex at level `l`.
        let mut stack: Vec<usize> = vec![0];
        for v in 1..n {
            let l = levels[v];
            if l == 0 || l > stack.len() {
                return Err(Error::BadParameters(format!(
                    "invalid level {l} at position {v}"
                )));
            }
            stack.truncate(l);
            parents[v] = Some(stack[l - 1]);
            stack.push(v);
        }
        Self::from_parents_rooted(0, &parents)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    pub fn parent(&self, v: usize) -> Option<usize> {
        (v != 0).then(|| self.parent[v])
    }

    #[inline]
    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    #[inline]
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Degree of `v` in the tree (children plus the parent edge).
    pub fn tree_degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(v != 0)
    }

    pub fn height(&self) -> usize {
        self.level.last().copied().unwrap_or(0)
    }

    /// Contiguous vertex range of each level.
    pub fn level_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for v in 1..=self.order() {
            if v == self.order() || self.level[v] != self.level[start] {
                out.push(start..v);
                start = v;
            }
        }
        out
    }

    /// Vertices of the subtree rooted at `v`, `v` included.
    pub fn subtree_mask(&self, v: usize) -> u32 {
        let mut m = bit(v);
        for &c in &self.children[v] {
            m |= self.subtree_mask(c);
        }
        m
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.order()).expect("tree order within capacity");
        for v in 1..self.order() {
            g.add_edge(self.parent[v], v);
        }
        g
    }

    /// Canonical encoding of the subtree rooted at `v`.
    pub fn subtree_encoding(&self, v: usize) -> Vec<u8> {
        let mut parts: Vec<Vec<u8>> = self.children[v]
            .iter()
            .map(|&c| self.subtree_encoding(c))
            .collect();
        parts.sort_by(|a, b| b.cmp(a));
        let mut out = Vec::with_capacity(2 * self.order());
        out.push(b'(');
        for p in parts {
            out.extend(p);
        }
        out.push(b')');
        out
    }

    /// Canonical encoding of the whole tree; equal iff rooted-isomorphic.
    pub fn canonical_encoding(&self) -> Vec<u8> {
        self.subtree_encoding(0)
    }

    /// Relabel into canonical level order (children sorted by subtree encoding,
    /// larger first, ties by current index).
    pub fn canonical_relabel(&self) -> RootedTree {
        let parents: Vec<Option<usize>> = (0..self.order()).map(|v| self.parent(v)).collect();
        canonical_level_order(0, &parents).expect("valid tree").0
    }

    /// Parent-array line: the root is written as `-`.
    pub fn parent_line(&self) -> String {
        let mut s = String::from("-");
        for v in 1..self.order() {
            let _ = write!(s, " {}", self.parent[v]);
        }
        s
    }
}

impl std::fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RootedTree[{}]", self.parent_line())
    }
}

/// Relabel an arbitrary rooted tree into canonical level order. Returns the
/// tree and `order` with `order[new] = old`.
pub(crate) fn canonical_level_order(
    root: usize,
    parents: &[Option<usize>],
) -> Result<(RootedTree, Vec<usize>)> {
    let n = parents.len();
    check_capacity(n)?;
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    let mut children = vec![Vec::new(); n];
    for (v, p) in parents.iter().enumerate() {
        match (v == root, p) {
            (true, None) => {}
            (false, Some(p)) if *p < n && *p != v => children[*p].push(v),
            _ => {
                return Err(Error::BadParameters(format!(
                    "bad parent entry for vertex {v}"
                )))
            }
        }
    }
    // Plain BFS order, used to compute encodings bottom-up.
    let mut bfs = vec![root];
    let mut i = 0;
    while i < bfs.len() {
        let v = bfs[i];
        bfs.extend(children[v].iter().copied());
        i += 1;
    }
    if bfs.len() != n {
        return Err(Error::BadParameters("parent array is not a tree".into()));
    }
    let mut enc: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &v in bfs.iter().rev() {
        let mut parts: Vec<&Vec<u8>> = children[v].iter().map(|&c| &enc[c]).collect();
        parts.sort_by(|a, b| b.cmp(a));
        let mut e = vec![b'('];
        for p in parts {
            e.extend_from_slice(p);
        }
        e.push(b')');
        enc[v] = e;
    }
    for c in children.iter_mut() {
        c.sort_by_key(|&w| (Reverse(enc[w].clone()), w));
    }
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        order.extend(children[v].iter().copied());
        i += 1;
    }
    let mut new_of = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        new_of[old] = new;
    }
    let new_parents: Vec<Option<usize>> = order
        .iter()
        .map(|&old| parents[old].map(|p| new_of[p]))
        .collect();
    let tree = RootedTree::from_parents(&new_parents)?;
    Ok((tree, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_sequence_roundtrip() {
        // Root with a path of two and a leaf; the leaf sorts first.
        let t = RootedTree::from_level_sequence(&[0, 1, 2, 1]).unwrap();
        assert_eq!(t.order(), 4);
        assert_eq!(t.children(0), &[1, 2]);
        assert_eq!(t.children(2), &[3]);
        assert_eq!(t.level_ranges(), vec![0..1, 1..3, 3..4]);
        assert_eq!(t.parent_line(), "- 0 0 2");
    }

    #[test]
    fn rejects_non_level_order() {
        assert!(RootedTree::from_parents(&[None, Some(0), Some(1), Some(0)]).is_err());
        assert!(RootedTree::from_parents(&[Some(0)]).is_err());
        assert!(RootedTree::from_parents(&[None, Some(0), Some(0), Some(1), Some(2)]).is_ok());
    }

    #[test]
    fn canonical_relabel_is_idempotent() {
        let t = RootedTree::from_parents_rooted(3, &[Some(3), Some(0), Some(3), None, Some(2)])
            .unwrap();
        assert_eq!(t.canonical_relabel(), t);
        assert_eq!(t.subtree_mask(0).count_ones(), 5);
    }
}
