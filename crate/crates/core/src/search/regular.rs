//! Search for regular geodetic graphs without enumerating trees.
//!
//! In a `D`-regular graph a vertex whose same-level neighbours are final has
//! exactly `D - 1 - s` children, `s` being its same-level degree, so the
//! shortest-path tree unfolds level by level as the search proceeds: children
//! are created when their parent's level is complete, all interchangeable,
//! and only the sibling partitions and non-sibling edges are branched on.
//!
//! Vertices whose children do not exist yet are "open". Pruning has to allow
//! for vertices still to come: every open vertex may reach every other
//! through them, which is modelled by a hub adjacent to all open vertices for
//! distances and by a clique on them for biconnectivity.

use std::collections::BTreeMap;
use std::sync::Mutex;

use lru::LruCache;

use super::{closable, SearchOptions, SearchStats, VertexStatus};
use crate::canon::{canonical_form_colored, canonical_labeling, CanonicalKey};
use crate::graph::{bit, Bits, Graph, MAX_VERTICES};

/// Integer partitions of `c` into non-increasing parts.
fn integer_partitions(c: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(c, c, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy)]
struct State {
    adj: [u32; MAX_VERTICES],
    /// Vertices created so far, numbered in level order.
    m: usize,
    parent: [u8; MAX_VERTICES],
    /// Level `l` spans `level_start[l]..level_start[l + 1]`.
    level_start: [u8; MAX_VERTICES + 2],
    depth: usize,
    status: [VertexStatus; MAX_VERTICES],
    /// Vertices whose children have been created.
    expanded: u32,
    forbidden: [u32; MAX_VERTICES],
}

impl State {
    fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn level(&self, l: usize) -> std::ops::Range<usize> {
        self.level_start[l] as usize..self.level_start[l + 1] as usize
    }

    fn level_mask(&self, l: usize) -> u32 {
        self.level(l).fold(0, |m, v| m | bit(v))
    }

    fn siblings(&self, v: usize) -> u32 {
        let p = self.parent[v];
        let mut m = 0;
        for u in self.level(self.level_of(v)) {
            if u != v && self.parent[u] == p {
                m |= bit(u);
            }
        }
        m
    }

    fn level_of(&self, v: usize) -> usize {
        (0..self.depth)
            .find(|&l| self.level(l).contains(&v))
            .expect("created vertex")
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
    }
}

/// All `d`-regular biconnected geodetic graphs on `n` vertices, into `collector`.
pub(super) fn search_degree(
    n: usize,
    d: usize,
    opts: &SearchOptions,
    collector: &Mutex<BTreeMap<CanonicalKey, Graph>>,
) -> SearchStats {
    let mut s = RegularSearch {
        n,
        d,
        opts,
        collector,
        caches: if opts.iso_cache && opts.cache_size > 0 {
            (0..2 * MAX_VERTICES)
                .map(|_| LruCache::unbounded())
                .collect()
        } else {
            Vec::new()
        },
        partitions: (0..=d).map(integer_partitions).collect(),
        stats: SearchStats::default(),
    };
    if n < 2 || d == 0 || d >= n || (n * d) % 2 == 1 {
        return s.stats;
    }
    s.stats.trees += 1;
    let mut root = State {
        adj: [0; MAX_VERTICES],
        m: 1,
        parent: [0; MAX_VERTICES],
        level_start: [0; MAX_VERTICES + 2],
        depth: 1,
        status: [VertexStatus::Unprocessed; MAX_VERTICES],
        expanded: 0,
        forbidden: [0; MAX_VERTICES],
    };
    root.level_start[1] = 1;
    root.status[0] = VertexStatus::Complete;
    s.gen_cliques(&root, 0, 0);
    s.stats
}

struct RegularSearch<'a> {
    n: usize,
    d: usize,
    opts: &'a SearchOptions,
    collector: &'a Mutex<BTreeMap<CanonicalKey, Graph>>,
    caches: Vec<LruCache<CanonicalKey, ()>>,
    partitions: Vec<Vec<Vec<usize>>>,
    stats: SearchStats,
}

#[derive(Clone, Copy)]
enum Phase {
    Cliques,
    Neighbour,
}

impl RegularSearch<'_> {
    /// Create and partition the children of `v`, then move along level `l`.
    fn gen_cliques(&mut self, state: &State, l: usize, v: usize) {
        if v == state.level(l).end {
            if state.depth > l + 1 {
                self.gen_neighbour(state, l + 1, state.level(l + 1).start);
            } else {
                self.emit(state);
            }
            return;
        }
        let c = self.d - state.deg(v);
        if c == 0 {
            let mut s = *state;
            s.expanded |= bit(v);
            self.gen_cliques(&s, l, v + 1);
            return;
        }
        if state.m + c > self.n {
            self.stats.pruned_degree += 1;
            return;
        }
        let mut base = *state;
        if base.depth == l + 1 {
            base.depth = l + 2;
            base.level_start[l + 2] = base.m as u8;
        }
        let next_level = base.level_mask(l + 1);
        let first = base.m;
        for x in first..first + c {
            base.parent[x] = v as u8;
            base.add_edge(v, x);
            // Children of adjacent or forbidden parents may never meet.
            let mut f = 0;
            for y in Bits(next_level) {
                let py = base.parent[y] as usize;
                if base.adj[v] & bit(py) != 0 || base.forbidden[v] & bit(py) != 0 {
                    f |= bit(y);
                }
            }
            base.forbidden[x] = f;
            for y in Bits(f) {
                base.forbidden[y] |= bit(x);
            }
            base.status[x] = VertexStatus::SemiComplete;
        }
        base.m += c;
        base.level_start[l + 2] = base.m as u8;
        base.expanded |= bit(v);
        for pi in 0..self.partitions[c].len() {
            let mut s = base;
            let mut start = first;
            for &size in &self.partitions[c][pi] {
                for a in start..start + size {
                    for b in a + 1..start + size {
                        s.add_edge(a, b);
                    }
                }
                start += size;
            }
            if self.enter(&s, Phase::Cliques, v) {
                self.gen_cliques(&s, l, v + 1);
            }
        }
    }

    fn gen_neighbour(&mut self, state: &State, l: usize, v: usize) {
        let range = state.level(l);
        if v == range.end {
            self.gen_cliques(state, l, range.start);
            return;
        }
        let deg_v = state.deg(v);
        let same = state.level_mask(l) & !bit(v);
        let sibs = state.siblings(v);
        let family = sibs | bit(v);
        let mut used_parents = 0u32;
        for u in Bits(state.adj[v] & same & !sibs) {
            used_parents |= bit(state.parent[u] as usize);
        }
        let later = same & !(((1u64 << (v + 1)) - 1) as u32);
        let mut cands = Vec::with_capacity(16);
        for u in Bits(later & !sibs & !state.adj[v] & !state.forbidden[v]) {
            if used_parents & bit(state.parent[u] as usize) != 0
                || state.adj[u] & family != 0
                || state.deg(u) >= self.d
            {
                continue;
            }
            cands.push(u);
        }
        let room = self.d - deg_v;
        self.choose(state, l, v, &cands, 0, 0, used_parents, room);
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        state: &State,
        l: usize,
        v: usize,
        cands: &[usize],
        i: usize,
        chosen: u32,
        used_parents: u32,
        room: usize,
    ) {
        if i == cands.len() {
            self.finish_vertex(state, l, v, chosen);
            return;
        }
        let u = cands[i];
        let pu = bit(state.parent[u] as usize);
        if room > 0 && used_parents & pu == 0 {
            self.choose(
                state,
                l,
                v,
                cands,
                i + 1,
                chosen | bit(u),
                used_parents | pu,
                room - 1,
            );
        }
        self.choose(state, l, v, cands, i + 1, chosen, used_parents, room);
    }

    fn finish_vertex(&mut self, state: &State, l: usize, v: usize, chosen: u32) {
        let mut s = *state;
        for u in Bits(chosen) {
            s.add_edge(v, u);
        }
        s.status[v] = VertexStatus::Complete;
        // A childless vertex seeing only its parent and sibling clique.
        if self.opts.prune_clique_neighbour
            && s.deg(v) == self.d
            && s.adj[v] & s.level_mask(l) & !s.siblings(v) == 0
            && self.d + 1 < self.n
        {
            self.stats.pruned_clique_neighbour += 1;
            return;
        }
        if self.enter(&s, Phase::Neighbour, v) {
            self.gen_neighbour(&s, l, v + 1);
        }
    }

    fn enter(&mut self, s: &State, phase: Phase, v: usize) -> bool {
        self.stats.nodes += 1;
        let m = s.m;
        let d = self.d;
        let created = if m >= 32 { u32::MAX } else { bit(m) - 1 };
        let mut closed = 0u32;
        for w in 0..m {
            if s.status[w] == VertexStatus::Complete || s.deg(w) >= d {
                closed |= bit(w);
            }
        }
        let mut addable = [0u32; MAX_VERTICES];
        let mut open = 0u32;
        // New vertices on the deepest level are shared by its vertices until
        // the level above is fully expanded; below that, every missing
        // neighbour is a child of its own.
        let deepest = s.depth - 1;
        let shared = deepest > 0 && s.level(deepest - 1).any(|w| s.expanded & bit(w) == 0);
        let mut min_new = 0usize;
        for w in 0..m {
            if closed & bit(w) == 0 {
                let lw = s.level_of(w);
                addable[w] = s.level_mask(lw)
                    & !bit(w)
                    & !s.adj[w]
                    & !s.forbidden[w]
                    & !closed
                    & !s.siblings(w);
            }
            if s.expanded & bit(w) == 0 {
                if !(shared && s.level_of(w) == deepest) {
                    let reach = s.deg(w) + addable[w].count_ones() as usize;
                    min_new += d.saturating_sub(reach);
                }
                if s.deg(w) < d {
                    open |= bit(w);
                }
            }
        }
        if m + min_new > self.n {
            self.stats.pruned_degree += 1;
            return false;
        }
        let mut opt = s.adj;
        for w in 0..m {
            opt[w] |= addable[w];
        }
        let grows = m < self.n && open != 0;
        if self.opts.prune_small_cycles {
            let mut with_hub = opt;
            if grows {
                for w in Bits(open) {
                    with_hub[w] |= bit(m);
                }
                with_hub[m] = open;
            }
            if !closable(&s.adj, &with_hub, m) {
                self.stats.pruned_small_cycles += 1;
                return false;
            }
        }
        if self.opts.prune_biconnectivity {
            let mut with_clique = opt;
            if grows {
                for w in Bits(open) {
                    with_clique[w] |= open & !bit(w);
                }
            }
            for row in with_clique.iter_mut().take(m) {
                *row &= created;
            }
            if m >= 3 && !Graph::from_raw(m, with_clique).is_biconnected() {
                self.stats.pruned_biconnectivity += 1;
                return false;
            }
        }
        if !self.caches.is_empty() {
            let mut colors = [0u32; MAX_VERTICES];
            for w in 0..m {
                colors[w] = s.status[w] as u32
                    | u32::from(w == 0) << 2
                    | u32::from(s.expanded & bit(w) != 0) << 3;
            }
            let key = canonical_form_colored(&Graph::from_raw(m, s.adj), &colors[..m]);
            let step = match phase {
                Phase::Cliques => v,
                Phase::Neighbour => MAX_VERTICES + v,
            };
            let cap = self.opts.cache_size;
            let cache = &mut self.caches[step];
            if cache.put(key, ()).is_some() {
                self.stats.cache_hits += 1;
                return false;
            }
            if cache.len() > cap {
                cache.pop_lru();
            }
        }
        true
    }

    fn emit(&mut self, s: &State) {
        if s.m != self.n {
            self.stats.rejected_at_emit += 1;
            return;
        }
        let g = Graph::from_raw(s.m, s.adj);
        let ok = g.is_geodetic()
            && g.is_biconnected()
            && g.is_regular()
            && g.max_degree() == self.d
            && g.min_degree() >= self.opts.min_degree.unwrap_or(0);
        if !ok {
            self.stats.rejected_at_emit += 1;
            return;
        }
        self.stats.emitted += 1;
        let canon = canonical_labeling(&g);
        self.collector
            .lock()
            .unwrap()
            .entry(canon.key())
            .or_insert(canon.graph);
    }
}
