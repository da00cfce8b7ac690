//! Exhaustive generation of small graphs.
//!
//! Labeled generation walks every edge bitmask. Isomorphism classes are
//! built one vertex at a time: deleting the last vertex of any graph on `n`
//! vertices leaves a graph on `n − 1` vertices, so joining a new vertex to
//! every neighbor subset of every class representative on `n − 1` vertices
//! reaches every class on `n`; canonical forms remove the repeats.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{canonical_form, pack, unpack};
use super::SearchError;
use crate::bits::{self, bit};
use crate::graph::Graph;

/// Largest order accepted by the built-in generators. There are about
/// 1.2·10⁷ graphs on 10 vertices and 10⁹ on 11.
pub const MAX_GENERATED_ORDER: usize = 10;

/// Graphs on `n` vertices: all labeled ones, or one canonical
/// representative per isomorphism class when `dedup` is set, optionally
/// restricted to connected graphs. The order of the stream is fixed.
pub fn generate_graphs(
    n: usize,
    connected: bool,
    dedup: bool,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>, SearchError> {
    if n == 0 || n > MAX_GENERATED_ORDER {
        return Err(SearchError::OrderOutOfRange(n));
    }
    let graphs: Box<dyn Iterator<Item = Graph> + Send> = if dedup {
        Box::new(isomorphism_classes(n).into_iter())
    } else {
        Box::new(LabeledGraphs::new(n))
    };
    Ok(if connected {
        Box::new(graphs.filter(Graph::is_connected))
    } else {
        graphs
    })
}

/// Every labeled graph on `n` vertices, in increasing edge-mask order.
pub struct LabeledGraphs {
    n: usize,
    next: u128,
    end: u128,
}

impl LabeledGraphs {
    pub fn new(n: usize) -> LabeledGraphs {
        let pairs = n * n.saturating_sub(1) / 2;
        LabeledGraphs { n, next: 0, end: 1u128 << pairs }
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = unpack(self.n, self.next);
        self.next += 1;
        Some(g)
    }
}

/// Canonical representatives of all graphs on `n` vertices, sorted by
/// their packed adjacency.
pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_GENERATED_ORDER).contains(&n), "order {n} outside 1..={MAX_GENERATED_ORDER}");
    let mut keys: Vec<u128> = vec![0];
    for order in 2..=n {
        let parents: Vec<Graph> = keys.iter().map(|&k| unpack(order - 1, k)).collect();
        let found: HashSet<u128> = parents
            .par_iter()
            .flat_map_iter(|p| (0..1u64 << (order - 1)).map(move |mask| (p, mask)))
            .fold(HashSet::new, |mut set, (parent, mask)| {
                set.insert(pack(&canonical_form(&extend(parent, mask))));
                set
            })
            .reduce(HashSet::new, |mut a, b| {
                if a.len() < b.len() {
                    return b.into_iter().chain(a).collect();
                }
                a.extend(b);
                a
            });
        keys = found.into_iter().collect();
        keys.sort_unstable();
    }
    keys.into_iter().map(|k| unpack(n, k)).collect()
}

/// `parent` plus a new last vertex adjacent to `neighbors`.
fn extend(parent: &Graph, neighbors: u64) -> Graph {
    let n = parent.order() + 1;
    let new = n - 1;
    let edges = parent
        .edges()
        .chain(bits::members(neighbors).map(|v| (v, new)));
    let g = Graph::from_edges(n, edges).expect("extension stays in range");
    debug_assert_eq!(g.neighbors(new), neighbors & !bit(new));
    g
}
