//! Independence number and minimum degree sums over independent sets.

use crate::bits::{self, bit, VertexSet};
use crate::extended::ExtendedNat;
use crate::graph::Graph;

/// α(G) by branch and bound: branch on a vertex of maximum degree in the
/// candidate set, bound by a greedy clique cover of the candidates.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    mis(g, g.vertices(), 0, &mut best);
    best
}

fn mis(g: &Graph, cand: VertexSet, taken: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(taken);
        return;
    }
    if taken + clique_cover_bound(g, cand) <= *best {
        return;
    }
    let (v, deg) = bits::members(cand)
        .map(|v| (v, bits::len(g.neighbors(v) & cand)))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        .expect("nonempty candidate set");
    if deg == 0 {
        *best = (*best).max(taken + bits::len(cand));
        return;
    }
    mis(g, cand & !g.neighbors(v) & !bit(v), taken + 1, best);
    mis(g, cand & !bit(v), taken, best);
}

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// the independence number of the induced subgraph.
fn clique_cover_bound(g: &Graph, cand: VertexSet) -> usize {
    let mut rest = cand;
    let mut cliques = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let mut clique = bit(v);
        let mut open = g.neighbors(v) & rest;
        while open != 0 {
            let w = open.trailing_zeros() as usize;
            clique |= bit(w);
            open &= g.neighbors(w);
        }
        rest &= !clique;
        cliques += 1;
    }
    cliques
}

/// `σ_k` for every `k` from 1 to α(G), computed in one pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTable(Vec<u64>);

impl SigmaTable {
    /// `σ_1, σ_2, .., σ_α`.
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn independence_number(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, k: usize) -> ExtendedNat {
        match k {
            0 => ExtendedNat::Finite(0),
            k => self.0.get(k - 1).map_or(ExtendedNat::Infinity, |&v| ExtendedNat::Finite(v)),
        }
    }
}

/// Enumerates independent sets over vertices sorted by degree, so that the
/// smallest degrees among the candidates give a lower bound for every
/// extension size at once; a branch is cut when no size can improve.
pub fn sigma_table(g: &Graph) -> SigmaTable {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut rank = vec![0; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let sorted = g.relabel(&rank);
    let degrees: Vec<u64> = order.iter().map(|&v| g.degree(v) as u64).collect();

    let mut best = vec![u64::MAX; n + 1];
    let mut search = SigmaSearch {
        g: &sorted,
        degrees: &degrees,
        best: &mut best,
    };
    search.extend(sorted.vertices(), 0, 0);

    let values = best[1..].iter().take_while(|&&v| v != u64::MAX).copied().collect();
    SigmaTable(values)
}

struct SigmaSearch<'a> {
    g: &'a Graph,
    degrees: &'a [u64],
    best: &'a mut [u64],
}

impl SigmaSearch<'_> {
    fn extend(&mut self, cand: VertexSet, size: usize, sum: u64) {
        if cand == 0 {
            return;
        }
        let mut bound = sum;
        let mut useful = false;
        for (i, v) in bits::members(cand).enumerate() {
            bound += self.degrees[v];
            if bound < self.best[size + i + 1] {
                useful = true;
                break;
            }
        }
        if !useful {
            return;
        }
        for v in bits::members(cand) {
            let s = sum + self.degrees[v];
            if s < self.best[size + 1] {
                self.best[size + 1] = s;
            }
            let later = cand & !bits::full(v + 1) & !self.g.neighbors(v);
            self.extend(later, size + 1, s);
        }
    }
}

/// `σ_k`; `+∞` when the graph has no independent set of size `k`.
pub fn sigma_k(g: &Graph, k: usize) -> ExtendedNat {
    sigma_table(g).get(k)
}
