//! Canonical labeling, isomorphism testing and automorphism group orders.
//!
//! The labeling is the lexicographically least relabeled adjacency matrix over
//! all leaves of the individualization-refinement tree. Refinement splits
//! every cell by the number of neighbours each vertex has in a splitter cell
//! until the ordered partition is equitable. The target cell at each node is
//! the first smallest non-singleton cell. Subtrees are skipped only when they
//! are images of already explored subtrees under automorphisms found along
//! the way, so the least leaf is never lost.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{bit, Bits, Graph, MAX_VERTICES};
use crate::graph6;

/// Byte string equal for exactly the isomorphic (colored) graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Result of canonical labeling.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// `perm[v]` is the canonical position of vertex `v`.
    pub perm: Vec<usize>,
    /// The graph relabeled by `perm`.
    pub graph: Graph,
    /// Colors in canonical vertex order (empty for uncolored input).
    pub colors: Vec<u32>,
}

impl Labeling {
    pub fn key(&self) -> CanonicalKey {
        let n = self.graph.order();
        let mut bytes = Vec::with_capacity(1 + 4 * self.colors.len() + 62);
        bytes.push(n as u8);
        for c in &self.colors {
            bytes.extend_from_slice(&c.to_be_bytes());
        }
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.graph.has_edge(i, j));
                nbits += 1;
                if nbits == 8 {
                    bytes.push(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            bytes.push(acc << (8 - nbits));
        }
        CanonicalKey(bytes)
    }

    /// graph6 line of the canonical relabeling.
    pub fn graph6(&self) -> String {
        graph6::encode(&self.graph)
    }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &[])
}

/// Canonical labeling of a vertex-colored graph. Isomorphisms must preserve
/// colors; canonical positions are sorted by color first. An empty `colors`
/// slice means uncolored.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> Labeling {
    let n = g.order();
    assert!(
        colors.is_empty() || colors.len() == n,
        "one color per vertex"
    );
    let mut search = Search::new(g);
    let root = search.initial_partition(colors);
    let mut prefix = Vec::with_capacity(n);
    search.canon_dfs(root, &mut prefix);
    let best = search.best.expect("search visits at least one leaf");
    let perm: Vec<usize> = (0..n).map(|v| best.pos[v] as usize).collect();
    let graph = g.permuted(&perm);
    let mut canon_colors = vec![0; if colors.is_empty() { 0 } else { n }];
    for v in 0..canon_colors.len() {
        canon_colors[perm[v]] = colors[v];
    }
    Labeling {
        perm,
        graph,
        colors: canon_colors,
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalKey {
    canonical_labeling(g).key()
}

pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> CanonicalKey {
    canonical_labeling_colored(g, colors).key()
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a) == canonical_form(b)
}

/// Order of the automorphism group.
pub fn automorphism_group_order(g: &Graph) -> u128 {
    automorphism_group_order_colored(g, &[])
}

/// Order of the color-preserving automorphism group.
///
/// Walks the first path of the search tree and, at each node from the
/// deepest up, decides for every vertex of the target cell whether some
/// automorphism fixing the path prefix maps the path's next vertex onto it.
/// The product of these orbit sizes is the group order.
pub fn automorphism_group_order_colored(g: &Graph, colors: &[u32]) -> u128 {
    let n = g.order();
    if n == 0 {
        return 1;
    }
    let mut search = Search::new(g);
    let root = search.initial_partition(colors);

    // First path.
    let mut nodes = vec![root];
    let mut path = Vec::new();
    loop {
        let p = *nodes.last().unwrap();
        let Some(ti) = p.target_cell() else { break };
        let v = p.cells[ti].trailing_zeros() as usize;
        path.push(v);
        nodes.push(search.individualize(&p, ti, v));
    }
    let first = search.leaf(nodes.last().unwrap());
    let shapes: Vec<Shape> = nodes.iter().map(Partition::shape).collect();

    let mut order: u128 = 1;
    for k in (0..path.len()).rev() {
        let node = nodes[k];
        let ti = node.target_cell().expect("non-discrete node on first path");
        let target = node.cells[ti];
        let prefix = &path[..k];
        for w in Bits(target) {
            if w == path[k] {
                continue;
            }
            let orbit = search.orbit_of(path[k], prefix);
            if orbit & bit(w) != 0 {
                continue;
            }
            let child = search.individualize(&node, ti, w);
            let mut pre = prefix.to_vec();
            pre.push(w);
            if let Some(leaf) = search.find_equivalent(child, &mut pre, &first, &shapes) {
                let gamma = first.map_to(&leaf, n);
                search.gens.push(gamma);
            }
        }
        let orbit = search.orbit_of(path[k], prefix);
        order *= (orbit & target).count_ones() as u128;
    }
    order
}

#[derive(Clone, Copy)]
struct Partition {
    cells: [u32; MAX_VERTICES],
    len: usize,
}

type Shape = Vec<u32>;

impl Partition {
    fn is_discrete(&self, n: usize) -> bool {
        self.len == n
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for i in 0..self.len {
            let size = self.cells[i].count_ones();
            if size > 1 && best.is_none_or(|(s, _)| size < s) {
                best = Some((size, i));
            }
        }
        best.map(|(_, i)| i)
    }

    fn shape(&self) -> Shape {
        self.cells[..self.len]
            .iter()
            .map(|c| c.count_ones())
            .collect()
    }

    fn shape_matches(&self, shape: &Shape) -> bool {
        self.len == shape.len()
            && self.cells[..self.len]
                .iter()
                .zip(shape)
                .all(|(c, &s)| c.count_ones() == s)
    }
}

#[derive(Clone)]
struct Leaf {
    /// Vertex at each canonical position.
    lab: [u8; MAX_VERTICES],
    /// Canonical position of each vertex.
    pos: [u8; MAX_VERTICES],
    code: [u32; MAX_VERTICES],
    path: Vec<usize>,
}

impl Leaf {
    /// Automorphism sending this leaf's labeling onto `other`'s.
    fn map_to(&self, other: &Leaf, n: usize) -> Vec<u8> {
        let mut gamma = vec![0u8; n];
        for i in 0..n {
            gamma[self.lab[i] as usize] = other.lab[i];
        }
        gamma
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

struct Search<'g> {
    g: &'g Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<u8>>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        Search {
            g,
            n: g.order(),
            first: None,
            best: None,
            gens: Vec::new(),
        }
    }

    fn initial_partition(&self, colors: &[u32]) -> Partition {
        let mut p = Partition {
            cells: [0; MAX_VERTICES],
            len: 0,
        };
        if self.n == 0 {
            return p;
        }
        if colors.is_empty() {
            p.cells[0] = self.g.vertex_mask();
            p.len = 1;
        } else {
            let mut order: Vec<usize> = (0..self.n).collect();
            order.sort_by_key(|&v| (colors[v], v));
            let mut prev = None;
            for v in order {
                if prev != Some(colors[v]) {
                    p.len += 1;
                    prev = Some(colors[v]);
                }
                p.cells[p.len - 1] |= bit(v);
            }
        }
        let splitters: Vec<u32> = p.cells[..p.len].to_vec();
        self.refine(&mut p, &splitters);
        p
    }

    /// Refine `p` to the coarsest equitable partition finer than it, starting
    /// from the given splitter cells.
    fn refine(&self, p: &mut Partition, initial: &[u32]) {
        let n = self.n;
        let adj = self.g.rows();
        let mut queue = [0u32; 4 * MAX_VERTICES];
        let mut head = 0;
        let mut tail = 0;
        for &s in initial {
            queue[tail] = s;
            tail += 1;
        }
        while head < tail && p.len < n {
            let w = queue[head];
            head += 1;
            let mut i = 0;
            while i < p.len {
                let x = p.cells[i];
                if x & (x - 1) == 0 {
                    i += 1;
                    continue;
                }
                let mut counts = [(0u8, 0u8); MAX_VERTICES];
                let mut k = 0;
                let mut uniform = true;
                for v in Bits(x) {
                    let c = (adj[v] & w).count_ones() as u8;
                    if k > 0 && c != counts[0].0 {
                        uniform = false;
                    }
                    counts[k] = (c, v as u8);
                    k += 1;
                }
                if uniform {
                    i += 1;
                    continue;
                }
                let counts = &mut counts[..k];
                counts.sort_unstable();
                let mut parts = [0u32; MAX_VERTICES];
                let mut np = 0;
                let mut last = None;
                for &(c, v) in counts.iter() {
                    if last != Some(c) {
                        np += 1;
                        last = Some(c);
                    }
                    parts[np - 1] |= bit(v as usize);
                }
                p.cells.copy_within(i + 1..p.len, i + np);
                p.cells[i..i + np].copy_from_slice(&parts[..np]);
                p.len += np - 1;
                // At most 32 initial cells plus 62 parts ever get queued.
                for &part in &parts[..np] {
                    queue[tail] = part;
                    tail += 1;
                }
                i += np;
            }
        }
    }

    fn individualize(&self, p: &Partition, cell: usize, v: usize) -> Partition {
        let mut q = *p;
        q.cells.copy_within(cell..q.len, cell + 1);
        q.cells[cell] = bit(v);
        q.cells[cell + 1] = p.cells[cell] & !bit(v);
        q.len += 1;
        self.refine(&mut q, &[bit(v)]);
        q
    }

    fn leaf(&self, p: &Partition) -> Leaf {
        let n = self.n;
        let mut lab = [0u8; MAX_VERTICES];
        let mut pos = [0u8; MAX_VERTICES];
        for i in 0..n {
            let v = p.cells[i].trailing_zeros() as u8;
            lab[i] = v;
            pos[v as usize] = i as u8;
        }
        let mut code = [0u32; MAX_VERTICES];
        for i in 0..n {
            let mut row = 0;
            for u in Bits(self.g.neighbors(lab[i] as usize)) {
                row |= bit(pos[u] as usize);
            }
            code[i] = row;
        }
        Leaf {
            lab,
            pos,
            code,
            path: Vec::new(),
        }
    }

    /// Orbit of `v` under the found generators that fix `prefix` pointwise.
    fn orbit_of(&self, v: usize, prefix: &[usize]) -> u32 {
        let mut orbit = bit(v);
        let active: Vec<&Vec<u8>> = self
            .gens
            .iter()
            .filter(|g| prefix.iter().all(|&p| g[p] as usize == p))
            .collect();
        loop {
            let mut grown = orbit;
            for gamma in &active {
                for u in Bits(orbit) {
                    grown |= bit(gamma[u] as usize);
                }
            }
            if grown == orbit {
                return orbit;
            }
            orbit = grown;
        }
    }

    /// Depth-first search for the least leaf. Returns `Some(depth)` to unwind
    /// to the node at that depth.
    fn canon_dfs(&mut self, p: Partition, prefix: &mut Vec<usize>) -> Option<usize> {
        let depth = prefix.len();
        if p.is_discrete(self.n) {
            return self.visit_leaf(&p, prefix);
        }
        let ti = p
            .target_cell()
            .expect("non-discrete partition has a target");
        let target = p.cells[ti];
        let mut explored = 0u32;
        for w in Bits(target) {
            if explored != 0 && self.orbit_of(w, prefix) & explored != 0 {
                continue;
            }
            explored |= bit(w);
            let child = self.individualize(&p, ti, w);
            prefix.push(w);
            let jump = self.canon_dfs(child, prefix);
            prefix.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn visit_leaf(&mut self, p: &Partition, prefix: &[usize]) -> Option<usize> {
        let n = self.n;
        let mut leaf = self.leaf(p);
        leaf.path = prefix.to_vec();
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        if first.code[..n] == leaf.code[..n] {
            let gamma = first.map_to(&leaf, n);
            let d = common_prefix(&first.path, prefix);
            self.gens.push(gamma);
            return Some(d);
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.code[..n].cmp(&best.code[..n]) {
            Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            Ordering::Equal => {
                let gamma = best.map_to(&leaf, n);
                let d = common_prefix(&best.path, prefix);
                self.gens.push(gamma);
                Some(d)
            }
            Ordering::Greater => None,
        }
    }

    /// Search the subtree at `p` for a leaf with the same code as `first`.
    fn find_equivalent(
        &self,
        p: Partition,
        prefix: &mut Vec<usize>,
        first: &Leaf,
        shapes: &[Shape],
    ) -> Option<Leaf> {
        let depth = prefix.len();
        if !p.shape_matches(&shapes[depth]) {
            return None;
        }
        if p.is_discrete(self.n) {
            let leaf = self.leaf(&p);
            return (leaf.code[..self.n] == first.code[..self.n]).then_some(leaf);
        }
        let ti = p
            .target_cell()
            .expect("non-discrete partition has a target");
        let target = p.cells[ti];
        let mut explored = 0u32;
        for w in Bits(target) {
            if explored != 0 && self.orbit_of(w, prefix) & explored != 0 {
                continue;
            }
            explored |= bit(w);
            let child = self.individualize(&p, ti, w);
            prefix.push(w);
            let found = self.find_equivalent(child, prefix, first, shapes);
            prefix.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}
