//! Streaming enumeration of rooted trees.
//!
//! Trees are produced as pre-order level sequences by the constant amortized
//! time successor rule: find the last vertex `p` below level 1, the last
//! earlier vertex `q` one level above it, and copy the block `q..p`
//! periodically over the tail. Starting from the path and ending at the star,
//! this visits every rooted tree once, each as its lexicographically largest
//! level sequence.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::graph::check_capacity;
use crate::tree::RootedTree;

/// Iterator over one representative of every rooted tree on `n` vertices.
pub struct RootedTrees {
    levels: Vec<usize>,
    done: bool,
}

pub fn rooted_trees(n: usize) -> Result<RootedTrees> {
    check_capacity(n)?;
    Ok(RootedTrees {
        levels: (0..n).collect(),
        done: n == 0,
    })
}

impl RootedTrees {
    fn advance(&mut self) {
        let l = &mut self.levels;
        let Some(p) = l.iter().rposition(|&x| x > 1) else {
            self.done = true;
            return;
        };
        let q = l[..p]
            .iter()
            .rposition(|&x| x == l[p] - 1)
            .expect("a vertex above level 1 has an earlier parent level");
        for i in p..l.len() {
            l[i] = l[i - (p - q)];
        }
    }
}

impl RootedTrees {
    /// Next tree whose pre-order level sequence passes `keep`. Rejected
    /// sequences are never converted to trees.
    pub fn next_where(&mut self, mut keep: impl FnMut(&[usize]) -> bool) -> Option<RootedTree> {
        while !self.done {
            let hit = keep(&self.levels);
            let tree = hit.then(|| {
                RootedTree::from_level_sequence(&self.levels).expect("valid level sequence")
            });
            self.advance();
            if tree.is_some() {
                return tree;
            }
        }
        None
    }
}

/// Number of children of each vertex of a pre-order level sequence.
pub fn child_counts(levels: &[usize]) -> Vec<usize> {
    let mut counts = vec![0; levels.len()];
    let mut stack: Vec<usize> = Vec::with_capacity(levels.len());
    for (v, &l) in levels.iter().enumerate() {
        stack.truncate(l);
        if let Some(&p) = stack.last() {
            counts[p] += 1;
        }
        stack.push(v);
    }
    counts
}

impl Iterator for RootedTrees {
    type Item = RootedTree;

    fn next(&mut self) -> Option<RootedTree> {
        if self.done {
            return None;
        }
        let tree = RootedTree::from_level_sequence(&self.levels).expect("valid level sequence");
        self.advance();
        Some(tree)
    }
}

/// Encoding equal for exactly the rooted-isomorphic trees.
pub fn rooted_tree_canonical(t: &RootedTree) -> Vec<u8> {
    t.canonical_encoding()
}

/// Children of `v` grouped by the isomorphism class of their subtrees.
/// Classes appear in child order; on a canonically ordered tree each class is
/// a contiguous run.
pub fn subtree_classes(t: &RootedTree, v: usize) -> Vec<Vec<usize>> {
    let mut classes: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &c in t.children(v) {
        let idx = *classes.entry(t.subtree_encoding(c)).or_insert_with(|| {
            out.push(Vec::new());
            out.len() - 1
        });
        out[idx].push(c);
    }
    out
}
