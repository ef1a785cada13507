//! Fixed-capacity bitset graphs and the distance / geodesy primitives every
//! other module builds on.
//!
//! Row `v` of the adjacency matrix is a single `u32`; bit `u` is set iff
//! `{u, v}` is an edge. Capacity is therefore 32 vertices.

use std::fmt;

use crate::error::{Error, Result};
use crate::tree::RootedTree;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 32;

/// Distance value used for unreachable pairs.
pub const UNREACHABLE: u32 = u32::MAX;

/// Iterator over the set bits of a word, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u32);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn bit(v: usize) -> u32 {
    1u32 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::CapacityExceeded {
            requested: n,
            capacity: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Undirected simple graph on at most 32 vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build from adjacency rows. Rows are symmetrised and the diagonal cleared.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::new(n)?;
        let mask = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            for u in Bits(row & mask & !bit(v)) {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Unchecked constructor for callers that maintain symmetric rows.
    #[inline]
    pub(crate) fn from_raw(n: usize, adj: [u32; MAX_VERTICES]) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        Graph { n: n as u8, adj }
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[u32; MAX_VERTICES] {
        &self.adj
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        full_mask(self.order())
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.order()]
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Adds `{u, v}`. Panics in debug builds on loops or out-of-range ends.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order() && v < self.order());
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::BadParameters(format!("self-loop at vertex {u}")));
        }
        self.add_edge(u, v);
        Ok(())
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order())
            .flat_map(move |u| Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for v in 0..self.order() {
            let mut row = 0;
            for u in Bits(self.adj[v]) {
                row |= bit(perm[u]);
            }
            g.adj[perm[v]] = row;
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.order();
        let mut g = Graph::new(shift + other.order())?;
        g.adj[..shift].copy_from_slice(self.rows());
        for (v, &row) in other.rows().iter().enumerate() {
            g.adj[v + shift] = row << shift;
        }
        Ok(g)
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain `start`).
    pub fn component_within(&self, start: usize, allowed: u32) -> u32 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn connected_within(&self, allowed: u32) -> bool {
        if allowed == 0 {
            return true;
        }
        let start = allowed.trailing_zeros() as usize;
        self.component_within(start, allowed) == allowed
    }

    /// The empty graph and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_within(self.vertex_mask())
    }

    /// Connected and without cut vertices. `K_2` is biconnected, `K_1` is not.
    pub fn is_biconnected(&self) -> bool {
        let n = self.order();
        match n {
            0 | 1 => false,
            2 => self.has_edge(0, 1),
            _ => {
                let all = self.vertex_mask();
                self.is_connected() && (0..n).all(|v| self.connected_within(all & !bit(v)))
            }
        }
    }

    /// Hop distances and saturated shortest-path counts from `source`.
    ///
    /// `sigma[u]` is 0 when `u` is unreachable, 1 for a unique geodesic and
    /// 2 for two or more.
    pub fn bfs_paths(&self, source: usize) -> (Vec<u32>, Vec<u8>) {
        let n = self.order();
        let mut dist = vec![UNREACHABLE; n];
        let mut sigma = vec![0u8; n];
        if source >= n {
            return (dist, sigma);
        }
        dist[source] = 0;
        sigma[source] = 1;
        let mut seen = bit(source);
        let mut frontier = seen;
        let mut level = 0;
        while frontier != 0 {
            level += 1;
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            for w in Bits(next) {
                dist[w] = level;
                let count: u32 = Bits(self.adj[w] & frontier).map(|p| sigma[p] as u32).sum();
                sigma[w] = count.min(2) as u8;
            }
            seen |= next;
            frontier = next;
        }
        (dist, sigma)
    }

    pub fn all_pairs(&self) -> DistanceTable {
        let n = self.order();
        let mut dist = Vec::with_capacity(n * n);
        let mut sigma = Vec::with_capacity(n * n);
        for s in 0..n {
            let (d, c) = self.bfs_paths(s);
            dist.extend(d);
            sigma.extend(c);
        }
        DistanceTable { n, dist, sigma }
    }

    /// At most one geodesic between every pair of vertices.
    ///
    /// Disconnected graphs are allowed: unreachable pairs have no geodesic.
    pub fn is_geodetic(&self) -> bool {
        let n = self.order();
        for s in 0..n {
            // A vertex with two predecessors in the previous layer has two geodesics.
            let mut seen = bit(s);
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                next &= !seen;
                for w in Bits(next) {
                    if (self.adj[w] & frontier).count_ones() > 1 {
                        return false;
                    }
                }
                seen |= next;
                frontier = next;
            }
        }
        true
    }

    /// The Unique Predecessor characterisation, evaluated from a full distance
    /// table: every vertex at distance `r >= 1` from every root has exactly one
    /// neighbour at distance `r - 1`.
    pub fn satisfies_unique_predecessor(&self) -> bool {
        let table = self.all_pairs();
        let n = self.order();
        (0..n).all(|root| {
            (0..n).all(|v| {
                let r = table.dist(root, v);
                if r == 0 || r == UNREACHABLE {
                    return true;
                }
                Bits(self.adj[v])
                    .filter(|&u| table.dist(root, u) == r - 1)
                    .count()
                    == 1
            })
        })
    }

    /// Every 4-cycle spans a `K_4`.
    pub fn check_4cycles(&self) -> bool {
        let n = self.order();
        for a in 0..n {
            for b in a + 1..n {
                let common = self.adj[a] & self.adj[b];
                if common.count_ones() < 2 {
                    continue;
                }
                if !self.has_edge(a, b) {
                    return false;
                }
                if !self.is_clique(common) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_clique(&self, set: u32) -> bool {
        Bits(set).all(|v| (self.adj[v] | bit(v)) & set == set)
    }

    pub fn is_regular(&self) -> bool {
        self.order() == 0 || self.min_degree() == self.max_degree()
    }

    /// Shortest-path tree rooted at `root`, relabeled into canonical level order.
    pub fn shortest_path_tree(&self, root: usize) -> Result<RootedTree> {
        self.shortest_path_tree_labeled(root).map(|(t, _)| t)
    }

    /// As [`Graph::shortest_path_tree`], also returning `order` where
    /// `order[new] = old`.
    pub fn shortest_path_tree_labeled(&self, root: usize) -> Result<(RootedTree, Vec<usize>)> {
        let n = self.order();
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, n });
        }
        let mut parent = vec![None; n];
        let mut seen = bit(root);
        let mut frontier = seen;
        let mut level = 0;
        while frontier != 0 {
            level += 1;
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            for w in Bits(next) {
                let preds = self.adj[w] & frontier;
                if preds.count_ones() != 1 {
                    return Err(Error::NotGeodetic { vertex: w, level });
                }
                parent[w] = Some(preds.trailing_zeros() as usize);
            }
            seen |= next;
            frontier = next;
        }
        if seen != self.vertex_mask() {
            return Err(Error::Disconnected);
        }
        crate::tree::canonical_level_order(root, &parent)
    }

    /// Radius, diameter, minimum degree, regularity and hamiltonicity.
    pub fn report(&self) -> Result<GraphReport> {
        if self.order() == 0 || !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let table = self.all_pairs();
        let n = self.order();
        let ecc: Vec<u32> = (0..n)
            .map(|v| (0..n).map(|u| table.dist(v, u)).max().unwrap_or(0))
            .collect();
        Ok(GraphReport {
            order: n,
            radius: *ecc.iter().min().unwrap_or(&0) as usize,
            diameter: *ecc.iter().max().unwrap_or(&0) as usize,
            min_degree: self.min_degree(),
            is_regular: self.is_regular(),
            is_hamiltonian: self.is_hamiltonian(),
        })
    }

    /// Plain backtracking Hamiltonian-cycle search. Graphs on fewer than three
    /// vertices have no Hamiltonian cycle.
    pub fn is_hamiltonian(&self) -> bool {
        let n = self.order();
        if n < 3 || self.min_degree() < 2 || !self.is_connected() {
            return false;
        }
        let all = self.vertex_mask();
        self.extend_path(0, bit(0), all)
    }

    fn extend_path(&self, cur: usize, visited: u32, all: u32) -> bool {
        if visited == all {
            return self.has_edge(cur, 0);
        }
        let open = all & !visited;
        // Every unvisited vertex still needs two usable path neighbours.
        let ends = open | bit(cur) | bit(0);
        for w in Bits(open) {
            if (self.adj[w] & ends).count_ones() < 2 {
                return false;
            }
        }
        // The unvisited part plus the two ends must stay connected.
        if self.component_within(cur, ends) != ends {
            return false;
        }
        // Visit forced (degree-2 remaining) neighbours first.
        let mut cand: Vec<usize> = Bits(self.adj[cur] & open).collect();
        cand.sort_by_key(|&w| (self.adj[w] & ends).count_ones());
        cand.into_iter()
            .any(|w| self.extend_path(w, visited | bit(w), all))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &edges)
            .finish()
    }
}

/// All-pairs hop distances and saturated geodesic counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
    sigma: Vec<u8>,
}

impl DistanceTable {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    #[inline]
    pub fn sigma(&self, u: usize, v: usize) -> u8 {
        self.sigma[u * self.n + v]
    }

    pub fn max_finite(&self) -> Option<u32> {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
    }

    /// Vertices at distance exactly `r` from `v`.
    pub fn sphere(&self, v: usize, r: u32) -> u32 {
        let mut m = 0;
        for u in 0..self.n {
            if self.dist(v, u) == r {
                m |= bit(u);
            }
        }
        m
    }

    pub fn is_geodetic(&self) -> bool {
        self.sigma.iter().all(|&s| s <= 1)
    }

    /// Vertices on the unique geodesic from `u` to `v` (both ends included),
    /// or `None` if there is no unique geodesic.
    pub fn geodesic(&self, g: &Graph, u: usize, v: usize) -> Option<Vec<usize>> {
        if self.dist(u, v) == UNREACHABLE || self.sigma(u, v) != 1 {
            return None;
        }
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            let d = self.dist(cur, v);
            cur = Bits(g.neighbors(cur)).find(|&w| self.dist(w, v) + 1 == d)?;
            path.push(cur);
        }
        Some(path)
    }
}

/// Structural summary of a connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphReport {
    pub order: usize,
    pub radius: usize,
    pub diameter: usize,
    pub min_degree: usize,
    pub is_regular: bool,
    pub is_hamiltonian: bool,
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub(crate) fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub(crate) fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn bfs_paths_examples() {
        let (d, s) = cycle(4).bfs_paths(0);
        assert_eq!((d[2], s[2]), (2, 2));
        assert_eq!(complete(3).bfs_paths(0), (vec![0, 1, 1], vec![1, 1, 1]));
        assert_eq!(path(3).bfs_paths(0), (vec![0, 1, 2], vec![1, 1, 1]));
    }

    #[test]
    fn all_pairs_examples() {
        let t = complete(2).all_pairs();
        assert_eq!((t.dist(0, 1), t.dist(1, 0), t.dist(0, 0)), (1, 1, 0));
        let t = Graph::new(2).unwrap().all_pairs();
        assert_eq!((t.dist(0, 1), t.sigma(0, 1)), (UNREACHABLE, 0));
        assert_eq!(petersen().all_pairs().max_finite(), Some(2));
    }

    #[test]
    fn geodesy_examples() {
        assert!(cycle(5).is_geodetic());
        assert!(!cycle(4).is_geodetic());
        assert!(petersen().is_geodetic());
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(!k23.is_geodetic());
        assert_eq!(k23.all_pairs().sigma(0, 1), 2);
        assert!(Graph::new(3).unwrap().is_geodetic());
    }

    #[test]
    fn connectivity_examples() {
        assert!(Graph::new(1).unwrap().is_connected());
        assert!(!Graph::new(2).unwrap().is_connected());
        assert!(cycle(7).is_connected());
        assert!(complete(2).is_biconnected());
        assert!(!Graph::new(1).unwrap().is_biconnected());
        assert!(!path(3).is_biconnected());
        assert!(cycle(9).is_biconnected());
    }

    #[test]
    fn four_cycle_examples() {
        assert!(!cycle(4).check_4cycles());
        assert!(complete(4).check_4cycles());
        assert!(petersen().check_4cycles());
    }

    #[test]
    fn shortest_path_tree_examples() {
        let t = cycle(5).shortest_path_tree(3).unwrap();
        assert_eq!(t.height(), 2);
        assert_eq!(t.children(0).len(), 2);
        let t = complete(4).shortest_path_tree(0).unwrap();
        assert_eq!(t.children(0).len(), 3);
        assert_eq!(t.height(), 1);
        let t = petersen().shortest_path_tree(7).unwrap();
        assert_eq!(t.children(0).len(), 3);
        for c in t.children(0) {
            assert_eq!(t.children(*c).len(), 2);
        }
        assert_eq!(t.order(), 10);
        assert!(matches!(
            cycle(4).shortest_path_tree(0),
            Err(Error::NotGeodetic {
                vertex: 2,
                level: 2
            })
        ));
    }

    #[test]
    fn report_examples() {
        let r = petersen().report().unwrap();
        assert_eq!(
            (
                r.radius,
                r.diameter,
                r.min_degree,
                r.is_regular,
                r.is_hamiltonian
            ),
            (2, 2, 3, true, false)
        );
        let r = complete(7).report().unwrap();
        assert_eq!(
            (
                r.radius,
                r.diameter,
                r.min_degree,
                r.is_regular,
                r.is_hamiltonian
            ),
            (1, 1, 6, true, true)
        );
        assert!(!complete(2).report().unwrap().is_hamiltonian);
        assert_eq!(Graph::new(2).unwrap().report(), Err(Error::Disconnected));
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(Graph::new(32).is_ok());
        assert_eq!(
            Graph::new(33),
            Err(Error::CapacityExceeded {
                requested: 33,
                capacity: 32
            })
        );
    }

    #[test]
    fn disjoint_union_shifts_rows() {
        let g = cycle(3).disjoint_union(&complete(2)).unwrap();
        assert_eq!(g.order(), 5);
        assert!(g.has_edge(3, 4));
        assert!(!g.has_edge(2, 3));
        assert_eq!(g.edge_count(), 4);
    }
}
