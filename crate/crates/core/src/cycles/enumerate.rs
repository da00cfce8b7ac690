use super::{circumference_with, CycleError, CycleSeq};
use crate::bits::{self, bit, VertexSet};
use crate::budget::Budget;
use crate::graph::Graph;

/// Default ceiling on the number of longest cycles materialized per graph.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Every longest cycle of `g`, once each, in canonical form and sorted.
///
/// When the circumference is 1 or 2 the result lists the vertices or the
/// edges. Fails rather than truncating when more than `cap` cycles exist.
pub fn enumerate_longest_cycles(g: &Graph, cap: usize) -> Result<Vec<CycleSeq>, CycleError> {
    enumerate_longest_cycles_with(g, cap, &mut Budget::unlimited())
}

pub fn enumerate_longest_cycles_with(
    g: &Graph,
    cap: usize,
    budget: &mut Budget,
) -> Result<Vec<CycleSeq>, CycleError> {
    let c = circumference_with(g, budget)?;
    let mut out = Vec::new();
    let push = |out: &mut Vec<CycleSeq>, cycle: Vec<usize>| {
        if out.len() == cap {
            return Err(CycleError::EnumerationCap { cap });
        }
        out.push(CycleSeq::from_canonical(cycle));
        Ok(())
    };
    match c {
        0 => {}
        1 => {
            for v in 0..g.order() {
                push(&mut out, vec![v])?;
            }
        }
        2 => {
            for (u, v) in g.edges() {
                push(&mut out, vec![u, v])?;
            }
        }
        _ => {
            let mut search = Enumerator {
                g,
                target: c,
                start: 0,
                allowed: 0,
                path: Vec::with_capacity(c),
                found: Vec::new(),
                cap,
                budget,
            };
            for s in 0..g.order() {
                if g.order() - s < c {
                    break;
                }
                search.start = s;
                search.allowed = g.vertices() & !bits::full(s + 1);
                search.path.clear();
                search.path.push(s);
                search.extend(s, bit(s))?;
            }
            for cycle in std::mem::take(&mut search.found) {
                push(&mut out, cycle)?;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Backtracking over paths that start at the cycle's smallest vertex.
struct Enumerator<'a> {
    g: &'a Graph,
    target: usize,
    start: usize,
    allowed: VertexSet,
    path: Vec<usize>,
    found: Vec<Vec<usize>>,
    cap: usize,
    budget: &'a mut Budget,
}

impl Enumerator<'_> {
    fn extend(&mut self, end: usize, visited: VertexSet) -> Result<(), CycleError> {
        self.budget.tick()?;
        let len = self.path.len();
        let home = self.g.neighbors(self.start);
        if len == self.target {
            // Keep one of the two traversal directions.
            if bits::contains(home, end) && self.path[1] < end {
                if self.found.len() == self.cap {
                    return Err(CycleError::EnumerationCap { cap: self.cap });
                }
                self.found.push(self.path.clone());
            }
            return Ok(());
        }
        let open = self.allowed & !visited;
        let reachable = self.g.reach(end, open | bit(end));
        if len + bits::len(reachable) - 1 < self.target || home & reachable & !bit(end) == 0 {
            return Ok(());
        }
        for w in bits::members(self.g.neighbors(end) & open) {
            self.path.push(w);
            self.extend(w, visited | bit(w))?;
            self.path.pop();
        }
        Ok(())
    }
}
