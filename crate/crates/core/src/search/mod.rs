//! Exhaustive search for biconnected geodetic graphs.
//!
//! Every rooted tree is tried as the shortest-path tree of a maximum-degree
//! root. Only edges between vertices of equal level may be added, which keeps
//! the tree a shortest-path tree. Levels are processed top down in two
//! phases: first the children of each vertex are partitioned into sibling
//! cliques, then each vertex of the new level picks its non-sibling
//! neighbours among later vertices of that level and becomes complete.
//!
//! Pruning:
//! - degree: no vertex exceeds the root degree;
//! - forbidden edges: once two same-level vertices are adjacent, their proper
//!   subtrees may not be joined;
//! - small cycles: a pair with two geodesics in the partial graph must still
//!   be able to get closer through edges that may be added later;
//! - biconnectivity of the graph with every still-addable edge added;
//! - clique neighbour: a leaf whose neighbours are its parent and its sibling
//!   clique needs another neighbour;
//! - isomorphism: sibling partitions up to permutations of isomorphic
//!   subtrees, non-increasing degrees along runs of interchangeable siblings,
//!   and per-step caches of canonical forms of colored partial graphs.
//!
//! The cache color of a vertex records its status, whether it is the root,
//! and its place in a run of interchangeable siblings together with the
//! degree bound that run imposes, so two states with equal keys have the same
//! completions up to isomorphism.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;
use std::time::Instant;

use lru::LruCache;

use crate::canon::{canonical_form_colored, canonical_labeling, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{bit, check_capacity, Bits, Graph, MAX_VERTICES};
use crate::tree::RootedTree;
use crate::treegen::{child_counts, rooted_trees, subtree_classes};

mod regular;

pub const DEFAULT_CACHE_SIZE: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub threads: usize,
    /// Entries per cache; 0 disables caching.
    pub cache_size: usize,
    /// Only graphs in which every vertex has the root's degree.
    pub regular_only: bool,
    /// Only graphs with at least this minimum degree.
    pub min_degree: Option<usize>,
    pub prune_small_cycles: bool,
    pub prune_biconnectivity: bool,
    pub prune_clique_neighbour: bool,
    pub iso_cache: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            cache_size: DEFAULT_CACHE_SIZE,
            regular_only: false,
            min_degree: None,
            prune_small_cycles: true,
            prune_biconnectivity: true,
            prune_clique_neighbour: true,
            iso_cache: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum VertexStatus {
    /// Additional incident edges may still be added.
    Unprocessed,
    /// Only non-sibling edges can still be added.
    SemiComplete,
    /// No additional incident edges can be added.
    Complete,
}

/// Counters reported by a search run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub trees: u64,
    pub trees_skipped: u64,
    pub nodes: u64,
    pub pruned_degree: u64,
    pub pruned_small_cycles: u64,
    pub pruned_biconnectivity: u64,
    pub pruned_clique_neighbour: u64,
    pub cache_hits: u64,
    pub rejected_at_emit: u64,
    pub emitted: u64,
}

impl SearchStats {
    fn merge(&mut self, o: &SearchStats) {
        self.trees += o.trees;
        self.trees_skipped += o.trees_skipped;
        self.nodes += o.nodes;
        self.pruned_degree += o.pruned_degree;
        self.pruned_small_cycles += o.pruned_small_cycles;
        self.pruned_biconnectivity += o.pruned_biconnectivity;
        self.pruned_clique_neighbour += o.pruned_clique_neighbour;
        self.cache_hits += o.cache_hits;
        self.rejected_at_emit += o.rejected_at_emit;
        self.emitted += o.emitted;
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchOutput {
    /// One canonically labeled graph per isomorphism class, keyed by its form.
    pub graphs: BTreeMap<CanonicalKey, Graph>,
    pub stats: SearchStats,
}

/// All biconnected geodetic graphs on `n` vertices, up to isomorphism.
pub fn enumerate_geodetic(n: usize, opts: &SearchOptions) -> Result<SearchOutput> {
    check_capacity(n)?;
    if n < 2 {
        return Err(Error::BadParameters(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    let started = Instant::now();
    let out = run(n, opts)?;
    log::info!(
        "n={n}: {} graphs from {} trees ({} skipped), {} nodes, {} cache hits in {:.2?}",
        out.graphs.len(),
        out.stats.trees,
        out.stats.trees_skipped,
        out.stats.nodes,
        out.stats.cache_hits,
        started.elapsed()
    );
    log::debug!("n={n}: {:?}", out.stats);
    Ok(out)
}

/// All regular biconnected geodetic graphs with 2 to `n_max` vertices.
pub fn enumerate_regular(n_max: usize, opts: &SearchOptions) -> Result<SearchOutput> {
    check_capacity(n_max)?;
    let opts = SearchOptions {
        regular_only: true,
        ..opts.clone()
    };
    let mut all = SearchOutput::default();
    for n in 2..=n_max {
        let out = enumerate_geodetic(n, &opts)?;
        all.graphs.extend(out.graphs);
        all.stats.merge(&out.stats);
    }
    Ok(all)
}

/// Extend a single tree. Returns every biconnected geodetic graph (meeting
/// the options' filters) whose shortest-path tree from vertex 0 is `tree`
/// and in which vertex 0 has maximum degree. Trees with a vertex of larger
/// tree degree than the root yield nothing.
pub fn extend_tree(tree: &RootedTree, opts: &SearchOptions) -> SearchOutput {
    let collector = Mutex::new(BTreeMap::new());
    let mut worker = Worker::new(opts, &collector);
    worker.process(tree);
    let stats = std::mem::take(&mut worker.stats);
    drop(worker);
    SearchOutput {
        graphs: collector.into_inner().unwrap(),
        stats,
    }
}

/// Whether no vertex of the level sequence has a larger tree degree than
/// the root.
fn root_degree_is_maximal(levels: &[usize]) -> bool {
    let counts = child_counts(levels);
    let d = counts[0];
    counts[1..].iter().all(|&c| c < d)
}

fn run(n: usize, opts: &SearchOptions) -> Result<SearchOutput> {
    if opts.regular_only {
        return Ok(run_regular(n, opts));
    }
    let collector = Mutex::new(BTreeMap::new());
    let stats = Mutex::new(SearchStats::default());
    let threads = opts.threads.max(1);
    let mut trees = rooted_trees(n)?;
    let mut skipped = 0u64;
    let mut keep = |l: &[usize]| {
        let ok = root_degree_is_maximal(l);
        skipped += u64::from(!ok);
        ok
    };
    if threads == 1 {
        let mut worker = Worker::new(opts, &collector);
        while let Some(t) = trees.next_where(&mut keep) {
            worker.process(&t);
        }
        stats.lock().unwrap().merge(&worker.stats);
    } else {
        let (tx, rx) = crossbeam_channel::bounded::<RootedTree>(4 * threads);
        std::thread::scope(|scope| {
            for _ in 0..threads {
                let rx = rx.clone();
                let collector = &collector;
                let stats = &stats;
                scope.spawn(move || {
                    let mut worker = Worker::new(opts, collector);
                    for t in rx {
                        worker.process(&t);
                    }
                    stats.lock().unwrap().merge(&worker.stats);
                });
            }
            drop(rx);
            while let Some(t) = trees.next_where(&mut keep) {
                if tx.send(t).is_err() {
                    break;
                }
            }
            drop(tx);
        });
    }
    let mut stats = stats.into_inner().unwrap();
    stats.trees_skipped += skipped;
    Ok(SearchOutput {
        graphs: collector.into_inner().unwrap(),
        stats,
    })
}

/// Regular graphs need no tree enumeration; the degrees are searched in
/// parallel instead.
fn run_regular(n: usize, opts: &SearchOptions) -> SearchOutput {
    let collector = Mutex::new(BTreeMap::new());
    let degrees: Vec<usize> = (1..n)
        .filter(|d| (n * d).is_multiple_of(2) && *d >= opts.min_degree.unwrap_or(0))
        .collect();
    let search = |d: usize| regular::search_degree(n, d, opts, &collector);
    let mut stats = SearchStats::default();
    if opts.threads <= 1 {
        for d in degrees {
            stats.merge(&search(d));
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build();
        let all: Vec<SearchStats> = match pool {
            Ok(pool) => pool.install(|| {
                use rayon::prelude::*;
                degrees.par_iter().map(|&d| search(d)).collect()
            }),
            Err(_) => degrees.iter().map(|&d| search(d)).collect(),
        };
        for s in &all {
            stats.merge(s);
        }
    }
    SearchOutput {
        graphs: collector.into_inner().unwrap(),
        stats,
    }
}

/// One sibling partition of a vertex's children, ready to apply.
struct SiblingPartition {
    blocks: Vec<u32>,
    /// `(w, prev)`: `w` follows `prev` in a run of interchangeable siblings.
    runs: Vec<(usize, usize)>,
}

/// Set partitions of `sizes[i]` interchangeable items of each class `i`, up to
/// permuting items within a class. Each partition is a list of blocks given by
/// per-class counts, blocks in non-increasing lexicographic order.
fn class_partitions(sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        rem: &mut Vec<usize>,
        last: Option<&[usize]>,
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if rem.iter().all(|&r| r == 0) {
            out.push(cur.clone());
            return;
        }
        // Candidate blocks in decreasing lexicographic order, bounded by `last`.
        let mut b: Vec<usize> = rem.clone();
        loop {
            let nonzero = b.iter().any(|&x| x > 0);
            if nonzero && last.is_none_or(|l| b.as_slice() <= l) {
                for (r, x) in rem.iter_mut().zip(&b) {
                    *r -= x;
                }
                cur.push(b.clone());
                let lastb = b.clone();
                rec(rem, Some(&lastb), cur, out);
                cur.pop();
                for (r, x) in rem.iter_mut().zip(&b) {
                    *r += x;
                }
            }
            // Decrement `b` as a mixed-radix number with digit bounds `rem`.
            let mut i = b.len();
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if b[i] > 0 {
                    b[i] -= 1;
                    b[i + 1..].copy_from_slice(&rem[i + 1..]);
                    break;
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut sizes.to_vec(), None, &mut Vec::new(), &mut out);
    out
}

/// Static data of one tree.
struct TreeInfo {
    n: usize,
    max_degree: usize,
    floor: usize,
    parent: [usize; MAX_VERTICES],
    same_level: [u32; MAX_VERTICES],
    siblings: [u32; MAX_VERTICES],
    descendants: [u32; MAX_VERTICES],
    n_children: [usize; MAX_VERTICES],
    children: [u32; MAX_VERTICES],
    /// Vertex ranges of the levels.
    levels: Vec<std::ops::Range<usize>>,
    level_of: [usize; MAX_VERTICES],
    partitions: Vec<Vec<SiblingPartition>>,
    tree_graph: Graph,
}

impl TreeInfo {
    fn new(
        tree: &RootedTree,
        opts: &SearchOptions,
        memo: &mut HashMap<Vec<usize>, Vec<Vec<Vec<usize>>>>,
    ) -> Self {
        let n = tree.order();
        let max_degree = tree.tree_degree(0);
        let floor = if opts.regular_only {
            max_degree
        } else {
            opts.min_degree.unwrap_or(0)
        };
        let mut parent = [0; MAX_VERTICES];
        let mut level_of = [0; MAX_VERTICES];
        let mut n_children = [0; MAX_VERTICES];
        let mut descendants = [0u32; MAX_VERTICES];
        for v in 0..n {
            parent[v] = tree.parent(v).unwrap_or(0);
            level_of[v] = tree.level(v);
            n_children[v] = tree.children(v).len();
        }
        for v in (1..n).rev() {
            descendants[parent[v]] |= descendants[v] | bit(v);
        }
        let levels = tree.level_ranges();
        let mut same_level = [0u32; MAX_VERTICES];
        for r in &levels {
            let mask = r.clone().fold(0, |m, v| m | bit(v));
            for v in r.clone() {
                same_level[v] = mask & !bit(v);
            }
        }
        let mut siblings = [0u32; MAX_VERTICES];
        let mut children = [0u32; MAX_VERTICES];
        for v in 0..n {
            let kids = tree.children(v).iter().fold(0, |m, &c| m | bit(c));
            children[v] = kids;
            for &c in tree.children(v) {
                siblings[c] = kids & !bit(c);
            }
        }
        let mut partitions = Vec::with_capacity(n);
        for v in 0..n {
            let classes = subtree_classes(tree, v);
            if tree.children(v).len() < 2 {
                partitions.push(Vec::new());
                continue;
            }
            let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
            let shapes = memo
                .entry(sizes.clone())
                .or_insert_with(|| class_partitions(&sizes));
            let mut list = Vec::with_capacity(shapes.len());
            for shape in shapes.iter() {
                let mut next = vec![0usize; classes.len()];
                let mut blocks = Vec::with_capacity(shape.len());
                let mut runs = Vec::new();
                for block in shape {
                    let mut mask = 0u32;
                    for (ci, &count) in block.iter().enumerate() {
                        let members = &classes[ci][next[ci]..next[ci] + count];
                        next[ci] += count;
                        for (i, &w) in members.iter().enumerate() {
                            mask |= bit(w);
                            if i > 0 {
                                runs.push((w, members[i - 1]));
                            }
                        }
                    }
                    blocks.push(mask);
                }
                list.push(SiblingPartition { blocks, runs });
            }
            partitions.push(list);
        }
        TreeInfo {
            n,
            max_degree,
            floor,
            parent,
            same_level,
            siblings,
            descendants,
            n_children,
            children,
            levels,
            level_of,
            partitions,
            tree_graph: tree.to_graph(),
        }
    }
}

/// A node of the search: the partial graph plus per-vertex bookkeeping.
#[derive(Clone, Copy)]
struct SearchState {
    g: Graph,
    status: [VertexStatus; MAX_VERTICES],
    /// Same-level vertices that may never become adjacent.
    forbidden: [u32; MAX_VERTICES],
    /// Previous vertex in the vertex's run of interchangeable siblings.
    run_prev: [u8; MAX_VERTICES],
}

const NO_PREV: u8 = u8::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Phase {
    Cliques,
    Neighbour,
}

struct Worker<'a> {
    opts: &'a SearchOptions,
    collector: &'a Mutex<BTreeMap<CanonicalKey, Graph>>,
    caches: Vec<LruCache<CanonicalKey, ()>>,
    memo: HashMap<Vec<usize>, Vec<Vec<Vec<usize>>>>,
    stats: SearchStats,
}

impl<'a> Worker<'a> {
    fn new(opts: &'a SearchOptions, collector: &'a Mutex<BTreeMap<CanonicalKey, Graph>>) -> Self {
        // Unbounded maps trimmed by hand: a bounded one preallocates its capacity.
        let caches = if opts.iso_cache && opts.cache_size > 0 {
            (0..2 * MAX_VERTICES)
                .map(|_| LruCache::unbounded())
                .collect()
        } else {
            Vec::new()
        };
        Worker {
            opts,
            collector,
            caches,
            memo: HashMap::new(),
            stats: SearchStats::default(),
        }
    }

    fn process(&mut self, tree: &RootedTree) {
        self.stats.trees += 1;
        let n = tree.order();
        if (1..n).any(|v| tree.tree_degree(v) > tree.tree_degree(0)) {
            self.stats.trees_skipped += 1;
            return;
        }
        let info = TreeInfo::new(tree, self.opts, &mut self.memo);
        for c in &mut self.caches {
            c.clear();
        }
        let state = SearchState {
            g: info.tree_graph,
            status: [VertexStatus::Unprocessed; MAX_VERTICES],
            forbidden: [0; MAX_VERTICES],
            run_prev: [NO_PREV; MAX_VERTICES],
        };
        let mut state = state;
        state.status[0] = VertexStatus::Complete;
        let mut search = Search {
            info: &info,
            worker: self,
        };
        search.gen_cliques(&state, 0, 0);
    }
}

struct Search<'a, 'w> {
    info: &'a TreeInfo,
    worker: &'a mut Worker<'w>,
}

impl Search<'_, '_> {
    /// Partition the children of `v` and move on along the level.
    fn gen_cliques(&mut self, state: &SearchState, level: usize, v: usize) {
        let info = self.info;
        if v == info.levels[level].end {
            match info.levels.get(level + 1) {
                Some(next) => self.gen_neighbour(state, level + 1, next.start),
                None => self.emit(state),
            }
            return;
        }
        let kids = info.children[v];
        if info.n_children[v] < 2 {
            let mut s = *state;
            for c in Bits(kids) {
                s.status[c] = VertexStatus::SemiComplete;
            }
            self.gen_cliques(&s, level, v + 1);
            return;
        }
        for p in &info.partitions[v] {
            let mut s = *state;
            let mut ok = true;
            for &block in &p.blocks {
                let size = block.count_ones() as usize;
                for c in Bits(block) {
                    if 1 + info.n_children[c] + size - 1 > info.max_degree {
                        ok = false;
                    }
                    for d in Bits(block & !bit(c) & !((bit(c) << 1) - 1)) {
                        self.add_edge(&mut s, c, d);
                    }
                }
            }
            if !ok {
                self.worker.stats.pruned_degree += 1;
                continue;
            }
            for c in Bits(kids) {
                s.status[c] = VertexStatus::SemiComplete;
            }
            for &(w, prev) in &p.runs {
                s.run_prev[w] = prev as u8;
            }
            if self.enter(&s, Phase::Cliques, v) {
                self.gen_cliques(&s, level, v + 1);
            }
        }
    }

    /// Choose the non-sibling neighbours of `v` among later vertices of its level.
    fn gen_neighbour(&mut self, state: &SearchState, level: usize, v: usize) {
        let info = self.info;
        let range = info.levels[level].clone();
        if v == range.end {
            self.gen_cliques(state, level, range.start);
            return;
        }
        let g = &state.g;
        let deg_v = g.degree(v);
        let cap_v = self.cap(state, v);
        if deg_v > cap_v {
            self.worker.stats.pruned_degree += 1;
            return;
        }
        let later = info.same_level[v] & !((bit(v) << 1) - 1);
        let own_family = info.siblings[v] | bit(v);
        // Parents already represented among v's non-sibling neighbours.
        let mut used_parents = 0u32;
        for u in Bits(g.neighbors(v) & info.same_level[v] & !info.siblings[v]) {
            used_parents |= bit(info.parent[u]);
        }
        let mut cands = Vec::with_capacity(16);
        for u in Bits(later & !info.siblings[v] & !g.neighbors(v) & !state.forbidden[v]) {
            if used_parents & bit(info.parent[u]) != 0 {
                continue;
            }
            // u may see at most one child of v's parent.
            if g.neighbors(u) & own_family != 0 {
                continue;
            }
            if g.degree(u) + 1 > self.cap(state, u) {
                continue;
            }
            cands.push(u);
        }
        let room = cap_v - deg_v;
        let need = info.floor.saturating_sub(deg_v);
        if need > room.min(cands.len()) {
            self.worker.stats.pruned_degree += 1;
            return;
        }
        let simplicial = self.worker.opts.prune_clique_neighbour
            && info.n_children[v] == 0
            && g.neighbors(v) & info.same_level[v] & !info.siblings[v] == 0
            && deg_v + 1 < info.n;
        if simplicial && (cands.is_empty() || room == 0) {
            self.worker.stats.pruned_clique_neighbour += 1;
            return;
        }
        let min_size = need.max(usize::from(simplicial));
        let max_size = if info.floor >= info.max_degree {
            need
        } else {
            room
        };
        self.choose(state, v, &cands, 0, 0, used_parents, min_size, max_size);
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        state: &SearchState,
        v: usize,
        cands: &[usize],
        i: usize,
        chosen: u32,
        used_parents: u32,
        min_size: usize,
        max_size: usize,
    ) {
        let size = chosen.count_ones() as usize;
        if size + (cands.len() - i) < min_size {
            return;
        }
        if i == cands.len() {
            self.finish_vertex(state, v, chosen);
            return;
        }
        let u = cands[i];
        let pu = bit(self.info.parent[u]);
        if size < max_size && used_parents & pu == 0 {
            self.choose(
                state,
                v,
                cands,
                i + 1,
                chosen | bit(u),
                used_parents | pu,
                min_size,
                max_size,
            );
        }
        self.choose(
            state,
            v,
            cands,
            i + 1,
            chosen,
            used_parents,
            min_size,
            max_size,
        );
    }

    fn finish_vertex(&mut self, state: &SearchState, v: usize, chosen: u32) {
        let mut s = *state;
        for u in Bits(chosen) {
            self.add_edge(&mut s, v, u);
        }
        s.status[v] = VertexStatus::Complete;
        if self.enter(&s, Phase::Neighbour, v) {
            self.gen_neighbour(&s, self.info.level_of[v], v + 1);
        }
    }

    fn add_edge(&self, s: &mut SearchState, a: usize, b: usize) {
        s.g.add_edge(a, b);
        let info = self.info;
        let (da, db) = (info.descendants[a], info.descendants[b]);
        if da != 0 && db != 0 {
            for x in Bits(da) {
                s.forbidden[x] |= db & info.same_level[x];
            }
            for y in Bits(db) {
                s.forbidden[y] |= da & info.same_level[y];
            }
        }
    }

    /// Degree bound of `v`: the root degree, lowered to the final degree of
    /// the previous vertex of its sibling run once that vertex is complete.
    fn cap(&self, s: &SearchState, v: usize) -> usize {
        let p = s.run_prev[v];
        if p != NO_PREV && s.status[p as usize] == VertexStatus::Complete {
            s.g.degree(p as usize)
        } else {
            self.info.max_degree
        }
    }

    /// Pruning and cache checks for a freshly created node.
    fn enter(&mut self, s: &SearchState, phase: Phase, v: usize) -> bool {
        self.worker.stats.nodes += 1;
        let info = self.info;
        let n = info.n;
        let addable = self.addable(s);
        for w in 0..n {
            let d = s.g.degree(w);
            let p = s.run_prev[w];
            if p != NO_PREV
                && s.status[p as usize] == VertexStatus::Complete
                && d > s.g.degree(p as usize)
            {
                self.worker.stats.pruned_degree += 1;
                return false;
            }
            if info.floor > 0 && d + (addable[w].count_ones() as usize) < info.floor {
                self.worker.stats.pruned_degree += 1;
                return false;
            }
        }
        let mut opt = *s.g.raw();
        for w in 0..n {
            opt[w] |= addable[w];
        }
        if self.worker.opts.prune_small_cycles && !closable(s.g.raw(), &opt, n) {
            self.worker.stats.pruned_small_cycles += 1;
            return false;
        }
        if self.worker.opts.prune_biconnectivity && !Graph::from_raw(n, opt).is_biconnected() {
            self.worker.stats.pruned_biconnectivity += 1;
            return false;
        }
        if !self.worker.caches.is_empty() {
            let colors = self.colors(s);
            let key = canonical_form_colored(&s.g, &colors[..n]);
            let step = match phase {
                Phase::Cliques => v,
                Phase::Neighbour => MAX_VERTICES + v,
            };
            let cap = self.worker.opts.cache_size;
            let cache = &mut self.worker.caches[step];
            if cache.put(key, ()).is_some() {
                self.worker.stats.cache_hits += 1;
                return false;
            }
            if cache.len() > cap {
                cache.pop_lru();
            }
        }
        true
    }

    /// Edges that some completion of `s` may still add, as adjacency rows.
    fn addable(&self, s: &SearchState) -> [u32; MAX_VERTICES] {
        let info = self.info;
        let n = info.n;
        let mut closed = 0u32;
        for w in 0..n {
            if s.status[w] == VertexStatus::Complete || s.g.degree(w) >= info.max_degree {
                closed |= bit(w);
            }
        }
        let mut out = [0u32; MAX_VERTICES];
        for w in 0..n {
            if closed & bit(w) != 0 {
                continue;
            }
            let mut m = info.same_level[w] & !s.g.neighbors(w) & !s.forbidden[w] & !closed;
            if s.status[w] != VertexStatus::Unprocessed {
                m &= !info.siblings[w];
            }
            out[w] = m;
        }
        out
    }

    fn colors(&self, s: &SearchState) -> [u32; MAX_VERTICES] {
        let n = self.info.n;
        let mut colors = [0u32; MAX_VERTICES];
        for w in 0..n {
            let mut c = s.status[w] as u32;
            if w == 0 {
                c |= 1 << 2;
            }
            if s.status[w] != VertexStatus::Complete && s.run_prev[w] != NO_PREV {
                // Rank among the incomplete members of the run, plus the bound
                // set by the last complete member.
                let mut rank = 0u32;
                let mut p = s.run_prev[w];
                let mut bound = 0u32;
                while p != NO_PREV {
                    if s.status[p as usize] == VertexStatus::Complete {
                        bound = s.g.degree(p as usize) as u32 + 1;
                        break;
                    }
                    rank += 1;
                    p = s.run_prev[p as usize];
                }
                c |= (rank + 1) << 3 | bound << 9;
            }
            colors[w] = c;
        }
        colors
    }

    fn emit(&mut self, s: &SearchState) {
        let info = self.info;
        let g = s.g;
        let ok = g.is_geodetic()
            && g.is_biconnected()
            && g.max_degree() == info.max_degree
            && g.min_degree() >= info.floor
            && (!self.worker.opts.regular_only || g.is_regular());
        if !ok {
            self.worker.stats.rejected_at_emit += 1;
            return;
        }
        self.worker.stats.emitted += 1;
        let canon = canonical_labeling(&g);
        self.worker
            .collector
            .lock()
            .unwrap()
            .entry(canon.key())
            .or_insert(canon.graph);
    }
}

/// Whether every pair joined by two geodesics in `cur` is strictly closer in
/// `opt`, the graph with every still-addable edge added. Edges are only ever
/// added, so a pair failing this keeps both geodesics in every completion.
fn closable(cur: &[u32; MAX_VERTICES], opt: &[u32; MAX_VERTICES], n: usize) -> bool {
    for s in 0..n {
        let mut seen = bit(s);
        let mut frontier = seen;
        let mut multi = 0u32;
        let mut ball = seen;
        let mut ball_frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= cur[v];
            }
            next &= !seen;
            let mut next_multi = 0;
            for w in Bits(next) {
                let preds = cur[w] & frontier;
                if preds.count_ones() > 1 || preds & multi != 0 {
                    next_multi |= bit(w);
                }
            }
            // `ball` holds the vertices within the previous distance in `opt`.
            if next_multi & !ball != 0 {
                return false;
            }
            let mut grow = 0;
            for v in Bits(ball_frontier) {
                grow |= opt[v];
            }
            ball_frontier = grow & !ball;
            ball |= grow;
            seen |= next;
            frontier = next;
            multi = next_multi;
        }
    }
    true
}
