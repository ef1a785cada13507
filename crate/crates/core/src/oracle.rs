//! Brute-force ground truth for small orders: every labeled graph is
//! generated, filtered, and deduplicated by canonical form.
//!
//! Shares only [`Graph`] and canonical forms with the rest of the crate.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the oracle accepts. Order 8 means 2^28 labeled graphs and is slow.
pub const ORACLE_MAX: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OracleCounts {
    pub total: usize,
    pub connected: usize,
    pub biconnected: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleFilter {
    All,
    Geodetic,
    ConnectedGeodetic,
    BiconnectedGeodetic,
}

fn check_order(n: usize) -> Result<()> {
    if n > ORACLE_MAX {
        return Err(Error::CapacityExceeded {
            requested: n,
            capacity: ORACLE_MAX,
        });
    }
    if n == 0 {
        return Err(Error::BadParameters(
            "oracle needs at least one vertex".into(),
        ));
    }
    Ok(())
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::new(n).expect("oracle orders fit");
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(a, b);
        }
    }
    g
}

/// One representative per isomorphism class of graphs on `n` vertices
/// passing `filter`.
pub fn brute_force_graphs(n: usize, filter: OracleFilter) -> Result<BTreeMap<CanonicalKey, Graph>> {
    check_order(n)?;
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total: u64 = 1 << pairs.len();
    let chunk = 1u64 << 14;
    let chunks = total.div_ceil(chunk);
    let found = (0..chunks)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, c| {
            for mask in c * chunk..((c + 1) * chunk).min(total) {
                let g = graph_from_mask(n, &pairs, mask);
                let keep = match filter {
                    OracleFilter::All => true,
                    OracleFilter::Geodetic => g.is_geodetic(),
                    OracleFilter::ConnectedGeodetic => g.is_geodetic() && g.is_connected(),
                    OracleFilter::BiconnectedGeodetic => g.is_geodetic() && g.is_biconnected(),
                };
                if keep {
                    let canon = canonical_labeling(&g);
                    acc.entry(canon.key()).or_insert(canon.graph);
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, g) in b {
                a.entry(k).or_insert(g);
            }
            a
        });
    Ok(found)
}

/// Geodetic class counts: all, connected, and biconnected.
pub fn brute_force_counts(n: usize) -> Result<OracleCounts> {
    let graphs = brute_force_graphs(n, OracleFilter::Geodetic)?;
    let mut counts = OracleCounts {
        total: graphs.len(),
        ..OracleCounts::default()
    };
    for g in graphs.values() {
        counts.connected += usize::from(g.is_connected());
        counts.biconnected += usize::from(g.is_biconnected());
    }
    Ok(counts)
}
