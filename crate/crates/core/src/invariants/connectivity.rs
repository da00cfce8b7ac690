//! Vertex connectivity by Menger's theorem: the minimum, over nonadjacent
//! pairs, of the number of internally disjoint paths, found as a unit
//! capacity max-flow on the vertex-split digraph.

use crate::bits;
use crate::graph::Graph;

const INF: u8 = u8::MAX;

/// Residual network of the split digraph: vertex `v` becomes `2v -> 2v+1`.
struct SplitNetwork {
    size: usize,
    cap: Vec<u8>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> SplitNetwork {
        let size = 2 * g.order();
        let mut cap = vec![0u8; size * size];
        for v in 0..g.order() {
            cap[(2 * v) * size + 2 * v + 1] = 1;
            for w in bits::members(g.neighbors(v)) {
                cap[(2 * v + 1) * size + 2 * w] = INF;
            }
        }
        SplitNetwork { size, cap }
    }

    /// Max flow from `source` to `sink` nodes, stopping once `limit` is reached.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let size = self.size;
        let mut flow = 0;
        let mut parent = vec![usize::MAX; size];
        let mut queue = Vec::with_capacity(size);
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[source] = source;
            queue.clear();
            queue.push(source);
            let mut head = 0;
            while head < queue.len() && parent[sink] == usize::MAX {
                let u = queue[head];
                head += 1;
                let row = &self.cap[u * size..(u + 1) * size];
                for (w, &c) in row.iter().enumerate() {
                    if c > 0 && parent[w] == usize::MAX {
                        parent[w] = u;
                        queue.push(w);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut w = sink;
            while w != source {
                let u = parent[w];
                let fwd = &mut self.cap[u * size + w];
                if *fwd != INF {
                    *fwd -= 1;
                }
                let back = &mut self.cap[w * size + u];
                if *back != INF {
                    *back += 1;
                }
                w = u;
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths for distinct
/// nonadjacent `s`, `t`, capped at `limit`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t), "local connectivity needs distinct nonadjacent vertices");
    let mut net = SplitNetwork::new(g);
    // Source and sink are not capacity-limited.
    let size = net.size;
    net.cap[2 * s * size + 2 * s + 1] = INF;
    net.cap[2 * t * size + 2 * t + 1] = INF;
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// κ(G). Complete graphs have κ = n − 1; disconnected graphs and `K_1` have κ = 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    // Some vertex among the first κ + 1 lies outside a minimum cut, so it is
    // enough to try sources with index at most the current best.
    let mut best = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    let mut s = 0;
    while s <= best && s < n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t, best));
            }
        }
        s += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    #[test]
    fn known_values() {
        assert_eq!(vertex_connectivity(&NamedGraph::Complete(5).build().unwrap()), 4);
        assert_eq!(vertex_connectivity(&NamedGraph::Complete(1).build().unwrap()), 0);
        assert_eq!(vertex_connectivity(&NamedGraph::Complete(2).build().unwrap()), 1);
        assert_eq!(vertex_connectivity(&NamedGraph::Petersen.build().unwrap()), 3);
        assert_eq!(vertex_connectivity(&NamedGraph::Cycle(6).build().unwrap()), 2);
        assert_eq!(vertex_connectivity(&NamedGraph::CompleteBipartite(3, 4).build().unwrap()), 3);
        // Two triangles sharing vertex 0.
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(vertex_connectivity(&bowtie), 1);
        assert_eq!(vertex_connectivity(&Graph::edgeless(3).unwrap()), 0);
    }

    #[test]
    fn local_paths_in_petersen() {
        let p = NamedGraph::Petersen.build().unwrap();
        assert_eq!(local_connectivity(&p, 0, 2, usize::MAX), 3);
        assert_eq!(local_connectivity(&p, 0, 2, 2), 2);
    }
}
