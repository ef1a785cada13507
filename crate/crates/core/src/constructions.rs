//! Generators for known geodetic families and subdivision operators.
//!
//! Vertex numbering is deterministic: clique and cycle vertices first, then
//! star vertices, then the interiors of subdividing paths.

use crate::error::{Error, Result};
use crate::graph::{bit, check_capacity, full_mask, Bits, Graph, UNREACHABLE};

pub fn complete_graph(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for j in 1..n {
        for i in 0..j {
            g.add_edge(i, j);
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    check_capacity(n)?;
    if n < 3 {
        return Err(Error::BadParameters(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut g = Graph::new(n)?;
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g)
}

/// Outer 5-cycle on 0..5, inner pentagram on 5..10, spokes `i ~ i + 5`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10).expect("10 vertices fit");
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

/// Edge list under construction, with subdividing paths whose interior
/// vertices are numbered after all other vertices.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    paths: Vec<(usize, usize, usize)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            n,
            edges: Vec::new(),
            paths: Vec::new(),
        }
    }

    fn fresh(&mut self, count: usize) -> std::ops::Range<usize> {
        let start = self.n;
        self.n += count;
        start..self.n
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                self.edges.push((a, b));
            }
        }
    }

    /// Join `a` and `b` by a path with `interior` new vertices.
    fn path(&mut self, a: usize, b: usize, interior: usize) {
        self.paths.push((a, b, interior));
    }

    fn finish(mut self) -> Result<Graph> {
        let total = self.n + self.paths.iter().map(|p| p.2).sum::<usize>();
        check_capacity(total)?;
        for (a, b, k) in std::mem::take(&mut self.paths) {
            let mut prev = a;
            for w in self.fresh(k) {
                self.edges.push((prev, w));
                prev = w;
            }
            self.edges.push((prev, b));
        }
        Graph::from_edges(self.n, &self.edges)
    }
}

/// Replace every edge `{u, v}` (u < v) by a path with `count(u, v)` interior
/// vertices. New vertices follow the originals, edge by edge in
/// lexicographic order.
fn subdivide_by(g: &Graph, mut count: impl FnMut(usize, usize) -> usize) -> Result<Graph> {
    let mut b = Builder::new(g.order());
    for (u, v) in g.edges() {
        b.path(u, v, count(u, v));
    }
    b.finish()
}

/// A bipartition `(S, T)` of the vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cut {
    n: usize,
    side_s: u32,
}

impl Cut {
    pub fn new(n: usize, side_s: &[usize]) -> Result<Cut> {
        check_capacity(n)?;
        let mut mask = 0;
        for &v in side_s {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            mask |= bit(v);
        }
        if mask == 0 || mask == full_mask(n) {
            return Err(Error::InvalidCut("both sides must be non-empty".into()));
        }
        Ok(Cut { n, side_s: mask })
    }

    pub fn side_s(&self) -> u32 {
        self.side_s
    }

    pub fn side_t(&self) -> u32 {
        full_mask(self.n) & !self.side_s
    }

    pub fn contains_s(&self, v: usize) -> bool {
        self.side_s & bit(v) != 0
    }

    /// Cut-set edges as `(s, t)` pairs, sorted.
    pub fn edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in Bits(self.side_s) {
            for v in Bits(g.neighbors(u) & self.side_t()) {
                out.push((u, v));
            }
        }
        out
    }
}

/// Check the conditions under which subdividing the cut edges keeps the
/// graph geodetic: both sides are geodetically closed, and for any two cut
/// edges `{u, v}`, `{w, x}` with `u, w` in S, `d(u, w) + d(v, x)` is odd.
pub fn validate_cut(g: &Graph, c: &Cut) -> Result<()> {
    if c.n != g.order() {
        return Err(Error::InvalidCut(format!(
            "cut is over {} vertices, graph has {}",
            c.n,
            g.order()
        )));
    }
    if let Some((vertex, level)) = first_double_geodesic(g) {
        return Err(Error::NotGeodetic { vertex, level });
    }
    let t = g.all_pairs();
    for (name, side) in [("S", c.side_s()), ("T", c.side_t())] {
        for a in Bits(side) {
            for b in Bits(side) {
                let d = t.dist(a, b);
                if b <= a || d == UNREACHABLE {
                    continue;
                }
                for w in Bits(!side & g.vertex_mask()) {
                    let (x, y) = (t.dist(a, w), t.dist(w, b));
                    if x != UNREACHABLE && y != UNREACHABLE && x + y == d {
                        return Err(Error::InvalidCut(format!(
                            "{name} is not geodetically closed: the geodesic from {a} to {b} passes {w}"
                        )));
                    }
                }
            }
        }
    }
    let cut = c.edges(g);
    for (i, &(u, v)) in cut.iter().enumerate() {
        for &(w, x) in &cut[i + 1..] {
            let (a, b) = (t.dist(u, w), t.dist(v, x));
            if a == UNREACHABLE || b == UNREACHABLE || (a + b) % 2 == 0 {
                return Err(Error::InvalidCut(format!(
                    "cut edges {{{u},{v}}} and {{{w},{x}}}: d({u},{w}) + d({v},{x}) is not odd"
                )));
            }
        }
    }
    Ok(())
}

fn first_double_geodesic(g: &Graph) -> Option<(usize, usize)> {
    for s in 0..g.order() {
        if let Err(Error::NotGeodetic { vertex, level }) = g.shortest_path_tree_labeled(s) {
            return Some((vertex, level));
        }
    }
    None
}

/// Subdivide every cut edge with `k` new vertices.
pub fn subdivide_cut(g: &Graph, c: &Cut, k: usize) -> Result<Graph> {
    validate_cut(g, c)?;
    let cut = c.edges(g).len();
    check_capacity(g.order() + k * cut)?;
    subdivide_by(g, |u, v| {
        if c.contains_s(u) != c.contains_s(v) {
            k
        } else {
            0
        }
    })
}

/// `K_n` with edge `{i, j}` subdivided by `labels[i] + labels[j]` vertices.
pub fn subdivide_complete(labels: &[usize]) -> Result<Graph> {
    let n = labels.len();
    if n < 3 {
        return Err(Error::BadParameters(format!(
            "need at least 3 labels, got {n}"
        )));
    }
    let total = n + (n - 1) * labels.iter().sum::<usize>();
    check_capacity(total)?;
    subdivide_by(&complete_graph(n)?, |u, v| labels[u] + labels[v])
}

/// Subdivide every edge with `t` new vertices; `t` must be even.
pub fn subdivide_uniform(g: &Graph, t: usize) -> Result<Graph> {
    if !t.is_multiple_of(2) {
        return Err(Error::OddParameter(t));
    }
    check_capacity(g.order() + t * g.edge_count())?;
    subdivide_by(g, |_, _| t)
}

/// Attach the star-and-path part of an `h` graph between two cliques: each
/// vertex `i` of `a` reaches a new star centre, and leaf `j` of that star
/// reaches vertex `j` of `b`, through paths of length `s + 1`.
fn attach_h(b: &mut Builder, a: &[usize], target: &[usize], s: usize) {
    for &ai in a {
        let centre = b.fresh(1).start;
        b.path(ai, centre, s);
        for &tj in target {
            let leaf = b.fresh(1).start;
            b.edges.push((centre, leaf));
            b.path(leaf, tj, s);
        }
    }
}

pub fn h_graph(m: usize, n: usize, s: usize) -> Result<Graph> {
    if m < 2 || n < 2 {
        return Err(Error::BadParameters(format!(
            "h({m},{n},{s}) needs m, n >= 2"
        )));
    }
    check_capacity(m + n + (m + m * n) * (1 + s))?;
    let mut b = Builder::new(0);
    let km: Vec<usize> = b.fresh(m).collect();
    let kn: Vec<usize> = b.fresh(n).collect();
    b.clique(&km);
    b.clique(&kn);
    attach_h(&mut b, &km, &kn, s);
    b.finish()
}

/// Three `h` graphs `h(m,n,s)`, `h(n,p,s)`, `h(p,m,s)` glued along their cliques.
pub fn big_h_graph(m: usize, n: usize, p: usize, s: usize) -> Result<Graph> {
    if m < 2 || n < 2 || p < 2 {
        return Err(Error::BadParameters(format!(
            "H({m},{n},{p},{s}) needs m, n, p >= 2"
        )));
    }
    let parts = m * (1 + n) + n * (1 + p) + p * (1 + m);
    check_capacity(m + n + p + parts * (1 + s))?;
    let mut b = Builder::new(0);
    let km: Vec<usize> = b.fresh(m).collect();
    let kn: Vec<usize> = b.fresh(n).collect();
    let kp: Vec<usize> = b.fresh(p).collect();
    b.clique(&km);
    b.clique(&kn);
    b.clique(&kp);
    attach_h(&mut b, &km, &kn, s);
    attach_h(&mut b, &kn, &kp, s);
    attach_h(&mut b, &kp, &km, s);
    b.finish()
}

/// `F_k` for odd `k >= 3`: cycles `u` on `0..k` and `v` on `k..2k`, a vertex
/// `b = 2k` joined to both middle vertices, `s1, s2, t1, t2 = 2k+1..2k+5`
/// hanging off the cycle ends, and paths of length three from each `s` to
/// each `t`.
pub fn f_graph(k: usize) -> Result<Graph> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::BadParameters(format!(
            "F_k needs odd k >= 3, got {k}"
        )));
    }
    check_capacity(2 * k + 13)?;
    let mut b = Builder::new(0);
    let u: Vec<usize> = b.fresh(k).collect();
    let v: Vec<usize> = b.fresh(k).collect();
    let mid = b.fresh(1).start;
    let [s1, s2, t1, t2] = [0, 1, 2, 3].map(|_| b.fresh(1).start);
    for i in 0..k {
        b.edges.push((u[i], u[(i + 1) % k]));
        b.edges.push((v[i], v[(i + 1) % k]));
    }
    b.edges.push((mid, u[(k - 1) / 2]));
    b.edges.push((mid, v[(k - 1) / 2]));
    b.edges.push((s1, u[0]));
    b.edges.push((s2, u[k - 1]));
    b.edges.push((t1, v[0]));
    b.edges.push((t2, v[k - 1]));
    for s in [s1, s2] {
        for t in [t1, t2] {
            b.path(s, t, 2);
        }
    }
    b.finish()
}

/// The horizontal cut of `F_k`: S holds `b` and the cycle vertices other than
/// the two ends of each cycle.
pub fn f_graph_cut(k: usize) -> Result<Cut> {
    let g = f_graph(k)?;
    let mut side: Vec<usize> = (1..k - 1).chain(k + 1..2 * k - 1).collect();
    side.push(2 * k);
    Cut::new(g.order(), &side)
}

/// Petersen graph with every spoke subdivided by `t` vertices.
pub fn widespread_petersen(t: usize) -> Result<Graph> {
    check_capacity(10 + 5 * t)?;
    subdivide_by(&petersen(), |u, v| if v == u + 5 { t } else { 0 })
}

/// Finite projective plane of prime order.
#[derive(Debug, Clone)]
pub struct ProjectivePlane {
    pub order: usize,
    /// Normalised homogeneous coordinates of each point.
    pub points: Vec<[usize; 3]>,
    /// Point ids on each line, ascending.
    pub lines: Vec<Vec<usize>>,
}

fn is_prime(k: usize) -> bool {
    k >= 2
        && (2..)
            .take_while(|d| d * d <= k)
            .all(|d| !k.is_multiple_of(d))
}

/// Nonzero vectors of `F_k^3` whose first nonzero coordinate is 1.
fn normalised_vectors(k: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for x in 0..k {
        for y in 0..k {
            out.push([1, x, y]);
        }
    }
    for y in 0..k {
        out.push([0, 1, y]);
    }
    out.push([0, 0, 1]);
    out
}

/// `PG(2, k)` from homogeneous coordinates modulo the prime `k`.
pub fn projective_plane(k: usize) -> Result<ProjectivePlane> {
    if !is_prime(k) {
        return Err(Error::NotPrime(k));
    }
    let points = normalised_vectors(k);
    let lines = normalised_vectors(k)
        .iter()
        .map(|l| {
            (0..points.len())
                .filter(|&p| (0..3).map(|i| l[i] * points[p][i]).sum::<usize>() % k == 0)
                .collect()
        })
        .collect();
    Ok(ProjectivePlane {
        order: k,
        points,
        lines,
    })
}

/// One `(k+1)`-clique per line with a vertex per point on it, plus one vertex
/// per point joined to its copies in the cliques.
pub fn projective_plane_graph(k: usize) -> Result<Graph> {
    if !is_prime(k) {
        return Err(Error::NotPrime(k));
    }
    check_capacity((k * k + k + 1) * (k + 2))?;
    let plane = projective_plane(k)?;
    let mut b = Builder::new(0);
    let copies: Vec<Vec<usize>> = plane
        .lines
        .iter()
        .map(|line| {
            let vs: Vec<usize> = b.fresh(line.len()).collect();
            b.clique(&vs);
            vs
        })
        .collect();
    let point_vertices: Vec<usize> = b.fresh(plane.points.len()).collect();
    for (line, vs) in plane.lines.iter().zip(&copies) {
        for (&p, &w) in line.iter().zip(vs) {
            b.edges.push((w, point_vertices[p]));
        }
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{are_isomorphic, automorphism_group_order, canonical_form};
    use std::collections::BTreeSet;

    fn check(g: &Graph) {
        assert!(g.is_geodetic(), "not geodetic");
        assert!(g.is_biconnected(), "not biconnected");
    }

    #[test]
    fn standard_graphs() {
        assert!(complete_graph(4).unwrap().is_geodetic());
        assert!(cycle(7).unwrap().is_geodetic());
        assert!(!cycle(6).unwrap().is_geodetic());
        let p = petersen();
        assert_eq!((p.order(), p.edge_count()), (10, 15));
        check(&p);
        assert!(complete_graph(33).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn table_rows() {
        let cases = [
            (f_graph(3).unwrap(), 19, 4, 5, 2, 8),
            (f_graph(5).unwrap(), 23, 5, 5, 2, 8),
            (big_h_graph(2, 2, 2, 0).unwrap(), 24, 4, 4, 2, 24),
            (h_graph(3, 2, 0).unwrap(), 14, 3, 3, 2, 12),
        ];
        for (g, n, r, d, delta, aut) in cases {
            check(&g);
            let rep = g.report().unwrap();
            assert_eq!(
                (rep.order, rep.radius, rep.diameter, rep.min_degree),
                (n, r, d, delta)
            );
            assert_eq!(automorphism_group_order(&g), aut);
        }
        let wp = widespread_petersen(1).unwrap();
        check(&wp);
        let rep = wp.report().unwrap();
        assert_eq!((rep.order, rep.radius, rep.diameter), (15, 3, 3));
        assert_eq!(automorphism_group_order(&wp), 20);
    }

    #[test]
    fn h_family_sizes() {
        let g = h_graph(3, 2, 1).unwrap();
        assert_eq!(g.order(), 23);
        check(&g);
        let g = h_graph(3, 3, 0).unwrap();
        check(&g);
        let rep = g.report().unwrap();
        assert_eq!(
            (rep.order, rep.radius, rep.diameter, rep.min_degree),
            (18, 3, 3, 2)
        );
        assert!(h_graph(1, 2, 0).is_err());
        assert_eq!(h_graph(3, 3, 1).unwrap().order(), 30);
        assert!(matches!(
            h_graph(3, 3, 2),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn f_family() {
        for k in [3, 5, 7, 9] {
            let g = f_graph(k).unwrap();
            assert_eq!(g.order(), 2 * k + 13);
            check(&g);
        }
        assert!(f_graph(4).is_err());
        assert!(matches!(f_graph(11), Err(Error::CapacityExceeded { .. })));
    }

    #[test]
    fn cut_subdivision_gives_larger_f() {
        let f5 = f_graph(5).unwrap();
        let cut = f_graph_cut(5).unwrap();
        validate_cut(&f5, &cut).unwrap();
        assert_eq!(cut.edges(&f5), vec![(1, 0), (3, 4), (6, 5), (8, 9)]);
        assert_eq!(subdivide_cut(&f5, &cut, 0).unwrap(), f5);
        assert!(are_isomorphic(
            &subdivide_cut(&f5, &cut, 1).unwrap(),
            &f_graph(7).unwrap()
        ));
        assert!(are_isomorphic(
            &subdivide_cut(&f5, &cut, 2).unwrap(),
            &f_graph(9).unwrap()
        ));
    }

    #[test]
    fn cut_validation() {
        let k4 = complete_graph(4).unwrap();
        let cut = Cut::new(4, &[0]).unwrap();
        validate_cut(&k4, &cut).unwrap();
        let g = subdivide_cut(&k4, &cut, 1).unwrap();
        assert_eq!(g.order(), 7);
        assert!(g.is_geodetic());

        let c6 = cycle(6).unwrap();
        assert!(matches!(
            validate_cut(&c6, &Cut::new(6, &[0]).unwrap()),
            Err(Error::NotGeodetic { .. })
        ));
        // Two far-apart vertices of C_7 are not closed.
        let c7 = cycle(7).unwrap();
        assert!(matches!(
            validate_cut(&c7, &Cut::new(7, &[0, 2]).unwrap()),
            Err(Error::InvalidCut(_))
        ));
        assert!(Cut::new(3, &[]).is_err());
        assert!(Cut::new(3, &[0, 1, 2]).is_err());
    }

    /// Both conditions evaluated from a Floyd-Warshall table, with geodesic
    /// membership tested on every vertex triple.
    fn cut_ok_by_definition(g: &Graph, s: u32) -> bool {
        let n = g.order();
        let inf = usize::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for a in 0..n {
            d[a][a] = 0;
            for b in 0..n {
                if g.has_edge(a, b) {
                    d[a][b] = 1;
                }
            }
        }
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    d[a][b] = d[a][b].min(d[a][k] + d[k][b]);
                }
            }
        }
        let side = |v: usize| s >> v & 1 == 1;
        for a in 0..n {
            for b in 0..n {
                for w in 0..n {
                    if side(a) == side(b) && side(w) != side(a) && d[a][w] + d[w][b] == d[a][b] {
                        return false;
                    }
                }
            }
        }
        let cut: Vec<(usize, usize)> = g
            .edges()
            .map(|(a, b)| if side(a) { (a, b) } else { (b, a) })
            .filter(|&(a, b)| side(a) && !side(b))
            .collect();
        for i in 0..cut.len() {
            for j in i + 1..cut.len() {
                let ((u, v), (w, x)) = (cut[i], cut[j]);
                if (d[u][w] + d[v][x]) % 2 == 0 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn validation_matches_definition() {
        for g in [
            cycle(5).unwrap(),
            complete_graph(4).unwrap(),
            cycle(7).unwrap(),
            petersen(),
        ] {
            let n = g.order();
            for s in 1..full_mask(n) {
                let members: Vec<usize> = Bits(s).collect();
                let cut = Cut::new(n, &members).unwrap();
                assert_eq!(
                    validate_cut(&g, &cut).is_ok(),
                    cut_ok_by_definition(&g, s),
                    "{members:?}"
                );
            }
        }
    }

    #[test]
    fn c5_adjacent_pair_cut() {
        // S = {0,1} and T = {2,3,4} are both closed, and the cut edges
        // {0,4}, {1,2} give d(0,1) + d(4,2) = 3.
        let c5 = cycle(5).unwrap();
        let cut = Cut::new(5, &[0, 1]).unwrap();
        assert!(validate_cut(&c5, &cut).is_ok());
        assert!(subdivide_cut(&c5, &cut, 1).unwrap().is_geodetic());
    }

    #[test]
    fn subdivided_complete_graphs() {
        assert_eq!(
            subdivide_complete(&[0, 0, 0, 0]).unwrap(),
            complete_graph(4).unwrap()
        );
        let g = subdivide_complete(&[1, 1, 1, 1]).unwrap();
        assert_eq!(g.order(), 16);
        check(&g);
        for (total, want) in [(4usize, 5usize), (7, 11)] {
            let mut keys = BTreeSet::new();
            for a in 0..=total {
                for b in 0..=a {
                    for c in 0..=b {
                        if a + b + c <= total && total - a - b - c <= c {
                            let g = subdivide_complete(&[a, b, c, total - a - b - c]).unwrap();
                            check(&g);
                            keys.insert(canonical_form(&g));
                        }
                    }
                }
            }
            assert_eq!(keys.len(), want, "label sum {total}");
        }
    }

    #[test]
    fn uniform_subdivision() {
        assert_eq!(subdivide_uniform(&petersen(), 0).unwrap(), petersen());
        assert!(matches!(
            subdivide_uniform(&petersen(), 2),
            Err(Error::CapacityExceeded { .. })
        ));
        assert!(matches!(
            subdivide_uniform(&petersen(), 1),
            Err(Error::OddParameter(1))
        ));
        let g = subdivide_uniform(&complete_graph(4).unwrap(), 2).unwrap();
        assert_eq!(g.order(), 16);
        check(&g);
    }

    #[test]
    fn widespread() {
        assert_eq!(widespread_petersen(0).unwrap(), petersen());
        let g = widespread_petersen(3).unwrap();
        assert_eq!(g.order(), 25);
        check(&g);
    }

    #[test]
    fn planes() {
        for k in [2, 3, 5] {
            let p = projective_plane(k).unwrap();
            let size = k * k + k + 1;
            assert_eq!(p.points.len(), size);
            assert_eq!(p.lines.len(), size);
            assert!(p.lines.iter().all(|l| l.len() == k + 1));
            for a in 0..size {
                assert_eq!(p.lines.iter().filter(|l| l.contains(&a)).count(), k + 1);
                for b in a + 1..size {
                    let common = p
                        .lines
                        .iter()
                        .filter(|l| l.contains(&a) && l.contains(&b))
                        .count();
                    assert_eq!(common, 1);
                }
            }
        }
        assert!(matches!(projective_plane(4), Err(Error::NotPrime(4))));
        let g = projective_plane_graph(2).unwrap();
        assert_eq!(g.order(), 28);
        assert!(g.is_regular() && g.degree(0) == 3);
        check(&g);
        let rep = g.report().unwrap();
        assert_eq!(rep.diameter, g.all_pairs().max_finite().unwrap() as usize);
        assert!(matches!(
            projective_plane_graph(3),
            Err(Error::CapacityExceeded { .. })
        ));
    }
}
