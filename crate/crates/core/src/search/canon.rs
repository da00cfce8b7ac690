//! Canonical labeling by individualization and refinement.
//!
//! The ordered partition of the vertices is refined by neighbor counts into
//! each cell until stable. While some cell has several vertices, each
//! vertex of the first such cell is split off in turn and the search
//! recurses; every discrete partition is a labeling, and the smallest
//! relabeled graph over all leaves is the canonical form. Twins (vertices
//! whose neighborhoods agree apart from each other) can be swapped by an
//! automorphism that fixes the partition, so only one twin per class is
//! branched on.

use crate::bits::{self, bit, VertexSet};
use crate::graph::Graph;

/// Refines `cells` in place to the coarsest equitable refinement.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    loop {
        let mut next = Vec::with_capacity(g.order());
        for &cell in cells.iter() {
            if bits::len(cell) == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = bits::members(cell)
                .map(|v| {
                    let counts = cells.iter().map(|&c| bits::len(g.neighbors(v) & c)).collect();
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut current: VertexSet = 0;
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(current);
                    current = 0;
                }
                current |= bit(keyed[i].1);
            }
            next.push(current);
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) & !bit(v) == g.neighbors(v) & !bit(u)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Graph, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<VertexSet>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|&c| bits::len(c) > 1) else {
            let mut perm = vec![0; self.g.order()];
            for (label, &cell) in cells.iter().enumerate() {
                perm[cell.trailing_zeros() as usize] = label;
            }
            let candidate = self.g.relabel(&perm);
            if self.best.as_ref().is_none_or(|(b, _)| candidate < *b) {
                self.best = Some((candidate, perm));
            }
            return;
        };
        let cell = cells[target];
        let mut reps: Vec<usize> = Vec::new();
        for v in bits::members(cell) {
            if reps.iter().any(|&r| are_twins(self.g, r, v)) {
                continue;
            }
            reps.push(v);
            let mut split = Vec::with_capacity(cells.len() + 1);
            split.extend_from_slice(&cells[..target]);
            split.push(bit(v));
            split.push(cell & !bit(v));
            split.extend_from_slice(&cells[target + 1..]);
            self.descend(split);
        }
    }
}

/// A relabeling `perm` (vertex `v` becomes `perm[v]`) such that
/// `g.relabel(&perm)` is the same graph for every graph isomorphic to `g`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonical(g).1
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical(g).0
}

fn canonical(g: &Graph) -> (Graph, Vec<usize>) {
    if g.order() == 0 {
        return (g.clone(), Vec::new());
    }
    // Start from the degree partition, in increasing degree.
    let max_deg = (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0);
    let cells: Vec<VertexSet> = (0..=max_deg)
        .map(|d| bits::from_iter((0..g.order()).filter(|&v| g.degree(v) == d)))
        .filter(|&c| c != 0)
        .collect();
    let mut search = Search { g, best: None };
    search.descend(cells);
    search.best.expect("the search reaches at least one leaf")
}

/// Packs the upper triangle of a graph on at most 16 vertices, in graph6
/// bit order, into a `u128`.
pub fn pack(g: &Graph) -> u128 {
    debug_assert!(g.order() <= 16);
    let mut key = 0u128;
    let mut k = 0;
    for j in 1..g.order() {
        for i in 0..j {
            if g.has_edge(i, j) {
                key |= 1 << k;
            }
            k += 1;
        }
    }
    key
}

pub fn unpack(n: usize, key: u128) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("packed graphs are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        g.relabel(&perm)
    }

    #[test]
    fn invariant_under_relabeling() {
        for g in [
            NamedGraph::Petersen.build().unwrap(),
            NamedGraph::CompleteBipartite(3, 4).build().unwrap(),
            NamedGraph::Cycle(9).build().unwrap(),
            Graph::edgeless(12).unwrap(),
            NamedGraph::Complete(12).build().unwrap(),
            Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6)]).unwrap(),
        ] {
            let c = canonical_form(&g);
            assert_eq!(c.degree_sequence(), g.degree_sequence());
            for seed in 0..8 {
                assert_eq!(canonical_form(&shuffled(&g, seed)), c);
            }
            assert_eq!(g.relabel(&canonical_labeling(&g)), c);
        }
    }

    #[test]
    fn separates_non_isomorphic() {
        // Two 3-regular graphs on 6 vertices: the prism and K_{3,3}.
        let prism = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        let k33 = NamedGraph::CompleteBipartite(3, 3).build().unwrap();
        assert_ne!(canonical_form(&prism), canonical_form(&k33));
        // C6 versus two triangles.
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_form(&two_triangles), canonical_form(&NamedGraph::Cycle(6).build().unwrap()));
    }

    #[test]
    fn packing_round_trips() {
        let p = NamedGraph::Petersen.build().unwrap();
        assert_eq!(unpack(10, pack(&p)), p);
        assert_eq!(pack(&Graph::edgeless(5).unwrap()), 0);
    }
}
