//! Simple undirected graphs on at most 64 vertices.

mod graph6;
mod named;

use std::fmt;

use thiserror::Error;

use crate::bits::{self, bit, VertexSet};

pub use graph6::{from_graph6, read_graph6, to_graph6, Graph6ReadError, ReadError};
pub use named::NamedGraph;

/// Largest supported vertex count; a vertex set fits in one machine word.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} is outside 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("adjacency is not symmetric between vertices {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("invalid named graph {0:?}: {1}")]
    InvalidName(String, String),
}

/// An immutable simple undirected graph.
///
/// `adj[i]` is the neighbor set of vertex `i`. Rows at or beyond `n` are
/// zero, there are no loops and adjacency is symmetric. The order `n = 0`
/// only arises internally, as the residue of a spanning cycle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: [VertexSet; MAX_ORDER],
}

impl Graph {
    /// The graph with no vertices.
    pub fn null() -> Graph {
        Graph {
            n: 0,
            adj: [0; MAX_ORDER],
        }
    }

    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbor sets, checking every representation invariant.
    pub fn from_adjacency(rows: &[VertexSet]) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut adj = [0; MAX_ORDER];
        for (i, &row) in rows.iter().enumerate() {
            if row & !bits::full(n) != 0 {
                let vertex = (row & !bits::full(n)).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if bits::contains(row, i) {
                return Err(GraphError::Loop(i));
            }
            adj[i] = row;
        }
        for i in 0..n {
            for j in bits::members(adj[i]) {
                if !bits::contains(adj[j], i) {
                    return Err(GraphError::Asymmetric(i, j));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        bits::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::contains(self.adj[u], v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj[..self.n]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits::members(self.adj[u] & !bits::full(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// Degrees sorted in nondecreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        seq
    }

    pub fn complement(&self) -> Graph {
        let mut adj = [0; MAX_ORDER];
        let all = self.vertices();
        for (v, row) in adj.iter_mut().enumerate().take(self.n) {
            *row = !self.adj[v] & all & !bit(v);
        }
        Graph { n: self.n, adj }
    }

    /// The graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = [0; MAX_ORDER];
        for v in 0..self.n {
            adj[perm[v]] = bits::members(self.adj[v]).fold(0, |acc, w| acc | bit(perm[w]));
        }
        Graph { n: self.n, adj }
    }

    /// The subgraph induced by `keep`, with kept vertices renumbered in
    /// increasing order. The second value maps new ids to original ids.
    /// An empty `keep` yields the null graph.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let keep = keep & self.vertices();
        let labels: Vec<usize> = bits::members(keep).collect();
        let mut position = [usize::MAX; MAX_ORDER];
        for (new, &old) in labels.iter().enumerate() {
            position[old] = new;
        }
        let mut adj = [0; MAX_ORDER];
        for (new, &old) in labels.iter().enumerate() {
            adj[new] = bits::members(self.adj[old] & keep).fold(0, |acc, w| acc | bit(position[w]));
        }
        (
            Graph {
                n: labels.len(),
                adj,
            },
            labels,
        )
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits::members(frontier) {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.vertices();
        let mut out = Vec::new();
        while rest != 0 {
            let comp = self.reach(rest.trailing_zeros() as usize, rest);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// True for connected graphs of order at least one.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(0, self.vertices()) == self.vertices()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return f.write_str("Graph(null)");
        }
        write!(f, "Graph({})", to_graph6(self))
    }
}
