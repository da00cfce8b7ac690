//! Orders of longest paths and longest cycles.
//!
//! Each connected component is solved separately. Components of at most
//! [`DP_ORDER_LIMIT`] vertices use a dynamic program over (vertex subset,
//! endpoint) where the endpoints of each subset are kept as one bitset and
//! extended a neighborhood at a time. Larger components fall back to a
//! depth-first search that cuts a branch when the vertices still reachable
//! from the path's end cannot beat the best order found so far.

use crate::bits::{self, bit, VertexSet};
use crate::budget::{Budget, BudgetExceeded};
use crate::graph::Graph;

/// Largest component order handled by the subset dynamic program.
pub const DP_ORDER_LIMIT: usize = 24;

/// Order (number of vertices) of a longest path; 0 for the null graph.
pub fn longest_path_order(g: &Graph) -> usize {
    longest_path_order_with(g, &mut Budget::unlimited()).expect("unlimited budget")
}

pub fn longest_path_order_with(g: &Graph, budget: &mut Budget) -> Result<usize, BudgetExceeded> {
    let mut best = 0;
    for comp in g.connected_components() {
        let size = bits::len(comp);
        if size <= best {
            continue;
        }
        let (h, _) = g.induced_subgraph(comp);
        let order = if h.edge_count() == size - 1 && is_path_like(&h) {
            size
        } else if size <= DP_ORDER_LIMIT {
            path_dp(&h, budget)?
        } else {
            path_dfs(&h, budget)?
        };
        best = best.max(order);
    }
    Ok(best)
}

/// Longest path order by branch-and-bound search only.
pub fn longest_path_order_dfs(g: &Graph) -> usize {
    path_dfs(g, &mut Budget::unlimited()).expect("unlimited budget")
}

/// Order of a longest cycle, counting a vertex as a cycle of order 1 and an
/// edge as a cycle of order 2: 0 for the null graph, 1 for an edgeless
/// graph, 2 for a forest with at least one edge.
pub fn circumference(g: &Graph) -> usize {
    circumference_with(g, &mut Budget::unlimited()).expect("unlimited budget")
}

pub fn circumference_with(g: &Graph, budget: &mut Budget) -> Result<usize, BudgetExceeded> {
    let mut best = 0;
    for comp in g.connected_components() {
        let size = bits::len(comp);
        if size < 3 || size <= best {
            continue;
        }
        let (h, _) = g.induced_subgraph(comp);
        if h.edge_count() == size - 1 {
            continue; // tree
        }
        let order = if size <= DP_ORDER_LIMIT {
            cycle_dp(&h, budget)?
        } else {
            cycle_dfs(&h, budget)?
        };
        best = best.max(order);
    }
    Ok(extend_order(g, best))
}

/// Circumference by branch-and-bound search only.
pub fn circumference_dfs(g: &Graph) -> usize {
    let best = cycle_dfs(g, &mut Budget::unlimited()).expect("unlimited budget");
    extend_order(g, best)
}

fn extend_order(g: &Graph, proper: usize) -> usize {
    if proper >= 3 {
        proper
    } else if g.edge_count() > 0 {
        2
    } else {
        g.order().min(1)
    }
}

/// A connected graph with `n - 1` edges and maximum degree 2 is a path.
fn is_path_like(h: &Graph) -> bool {
    (0..h.order()).all(|v| h.degree(v) <= 2)
}

fn path_dp(g: &Graph, budget: &mut Budget) -> Result<usize, BudgetExceeded> {
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let all = bits::full(n);
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 1;
    for mask in 1..(1usize << n) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        budget.tick()?;
        let size = mask.count_ones() as usize;
        if size > best {
            best = size;
            if best == n {
                break;
            }
        }
        let free = all & !(mask as VertexSet);
        for v in bits::members(e as VertexSet) {
            for w in bits::members(g.neighbors(v) & free) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    Ok(best)
}

/// Longest proper cycle (order >= 3), or 0 if there is none.
fn cycle_dp(g: &Graph, budget: &mut Budget) -> Result<usize, BudgetExceeded> {
    let n = g.order();
    let mut best = 0;
    let mut ends = vec![0u32; 1 << n];
    for s in 0..n {
        // Cycles whose smallest vertex is `s` live on vertices s..n.
        let m = n - s;
        if m < 3 || m <= best {
            break;
        }
        let local: Vec<u32> = (s..n).map(|v| (g.neighbors(v) >> s) as u32).collect();
        let table = &mut ends[..1 << m];
        table.fill(0);
        table[1] = 1;
        for mask in (1..(1usize << m)).step_by(2) {
            let e = table[mask];
            if e == 0 {
                continue;
            }
            budget.tick()?;
            let size = mask.count_ones() as usize;
            if size >= 3 && e & local[0] != 0 && size > best {
                best = size;
                if best == n {
                    return Ok(best);
                }
            }
            let free = !(mask as u32) & ((1u64 << m) - 1) as u32;
            for v in bits::members(e as VertexSet) {
                for w in bits::members((local[v] & free) as VertexSet) {
                    table[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    Ok(best)
}

struct PathSearch<'a> {
    g: &'a Graph,
    best: usize,
    budget: &'a mut Budget,
}

impl PathSearch<'_> {
    fn extend(&mut self, end: usize, visited: VertexSet, len: usize) -> Result<(), BudgetExceeded> {
        self.budget.tick()?;
        self.best = self.best.max(len);
        if self.best == self.g.order() {
            return Ok(());
        }
        let open = self.g.vertices() & !visited;
        let reachable = self.g.reach(end, open | bit(end));
        if len + bits::len(reachable) - 1 <= self.best {
            return Ok(());
        }
        for w in bits::members(self.g.neighbors(end) & open) {
            self.extend(w, visited | bit(w), len + 1)?;
        }
        Ok(())
    }
}

fn path_dfs(g: &Graph, budget: &mut Budget) -> Result<usize, BudgetExceeded> {
    let mut search = PathSearch { g, best: 0, budget };
    for v in 0..g.order() {
        search.extend(v, bit(v), 1)?;
    }
    Ok(search.best)
}

struct CycleSearch<'a> {
    g: &'a Graph,
    start: usize,
    allowed: VertexSet,
    best: usize,
    budget: &'a mut Budget,
}

impl CycleSearch<'_> {
    fn extend(&mut self, end: usize, visited: VertexSet, len: usize) -> Result<(), BudgetExceeded> {
        self.budget.tick()?;
        let home = self.g.neighbors(self.start);
        if len >= 3 && bits::contains(home, end) {
            self.best = self.best.max(len);
        }
        let open = self.allowed & !visited;
        let reachable = self.g.reach(end, open | bit(end));
        if len + bits::len(reachable) - 1 <= self.best || home & reachable == 0 {
            return Ok(());
        }
        for w in bits::members(self.g.neighbors(end) & open) {
            self.extend(w, visited | bit(w), len + 1)?;
        }
        Ok(())
    }
}

fn cycle_dfs(g: &Graph, budget: &mut Budget) -> Result<usize, BudgetExceeded> {
    let n = g.order();
    let mut search = CycleSearch {
        g,
        start: 0,
        allowed: 0,
        best: 0,
        budget,
    };
    for s in 0..n {
        if n - s <= search.best.max(2) {
            break;
        }
        search.start = s;
        search.allowed = g.vertices() & !bits::full(s + 1);
        search.extend(s, bit(s), 1)?;
    }
    Ok(search.best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn named(g: NamedGraph) -> Graph {
        g.build().unwrap()
    }

    #[test]
    fn paths() {
        assert_eq!(longest_path_order(&named(NamedGraph::Path(4))), 4);
        assert_eq!(longest_path_order(&Graph::null()), 0);
        assert_eq!(longest_path_order(&Graph::edgeless(3).unwrap()), 1);
        assert_eq!(longest_path_order(&named(NamedGraph::Petersen)), 10);
        assert_eq!(longest_path_order(&named(NamedGraph::Star(5))), 3);
        assert_eq!(longest_path_order_dfs(&named(NamedGraph::Petersen)), 10);
        assert_eq!(longest_path_order_dfs(&named(NamedGraph::CompleteBipartite(2, 5))), 5);
    }

    #[test]
    fn circumferences() {
        assert_eq!(circumference(&named(NamedGraph::Path(2))), 2);
        assert_eq!(circumference(&named(NamedGraph::Path(6))), 2);
        assert_eq!(circumference(&named(NamedGraph::Cycle(5))), 5);
        assert_eq!(circumference(&named(NamedGraph::Petersen)), 9);
        assert_eq!(circumference(&Graph::edgeless(2).unwrap()), 1);
        assert_eq!(circumference(&Graph::null()), 0);
        assert_eq!(circumference(&named(NamedGraph::CompleteBipartite(3, 4))), 6);
        assert_eq!(circumference_dfs(&named(NamedGraph::Petersen)), 9);
        assert_eq!(circumference_dfs(&named(NamedGraph::CompleteBipartite(3, 4))), 6);
        assert_eq!(circumference_dfs(&named(NamedGraph::Star(3))), 2);
    }

    #[test]
    fn large_components_use_search() {
        // 30 vertices: above the dynamic-programming limit.
        let c30 = named(NamedGraph::Cycle(30));
        assert_eq!(circumference(&c30), 30);
        assert_eq!(longest_path_order(&c30), 30);
        let lollipop = Graph::from_edges(30, (1..30).map(|i| (i - 1, i)).chain([(0, 20)])).unwrap();
        assert_eq!(circumference(&lollipop), 21);
        assert_eq!(longest_path_order(&lollipop), 30);
    }

    #[test]
    fn budget_interrupts() {
        let big = named(NamedGraph::CompleteBipartite(12, 13));
        let mut b = Budget::new(std::time::Duration::ZERO);
        assert!(circumference_with(&big, &mut b).is_err());
    }
}
