use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, MAX_ORDER};

/// Standard graph families used as fixtures and from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    /// `K_n`.
    Complete(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// The path on `n` vertices.
    Path(usize),
    /// `K_{a,b}`; the first `a` vertices form one side.
    CompleteBipartite(usize, usize),
    Petersen,
    /// `K_{1,k}`: a center (vertex 0) and `k` leaves.
    Star(usize),
}

impl NamedGraph {
    pub fn build(self) -> Result<Graph, GraphError> {
        let bad = |why: &str| GraphError::InvalidName(self.to_string(), why.to_string());
        match self {
            NamedGraph::Complete(n) => {
                Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            }
            NamedGraph::Cycle(n) => {
                if n < 3 {
                    return Err(bad("a cycle needs at least 3 vertices"));
                }
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            NamedGraph::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
            NamedGraph::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 || a + b > MAX_ORDER {
                    return Err(bad("both sides must be nonempty and fit in 64 vertices"));
                }
                Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            }
            NamedGraph::Petersen => {
                // Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
                let outer = (0..5).map(|i| (i, (i + 1) % 5));
                let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
                let spokes = (0..5).map(|i| (i, i + 5));
                Graph::from_edges(10, outer.chain(inner).chain(spokes))
            }
            NamedGraph::Star(k) => {
                if k == 0 || k + 1 > MAX_ORDER {
                    return Err(bad("a star needs 1..=63 leaves"));
                }
                Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
            }
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Complete(n) => write!(f, "complete,{n}"),
            NamedGraph::Cycle(n) => write!(f, "cycle,{n}"),
            NamedGraph::Path(n) => write!(f, "path,{n}"),
            NamedGraph::CompleteBipartite(a, b) => write!(f, "complete_bipartite,{a},{b}"),
            NamedGraph::Petersen => f.write_str("petersen"),
            NamedGraph::Star(k) => write!(f, "star,{k}"),
        }
    }
}

/// Parses `NAME[,ARGS]`, e.g. `petersen`, `cycle,5`, `complete_bipartite,3,4`.
impl FromStr for NamedGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: String| GraphError::InvalidName(s.to_string(), why);
        let mut parts = s.split(',').map(str::trim);
        let name = parts.next().unwrap_or_default().to_ascii_lowercase();
        let args = parts
            .map(|p| p.parse::<usize>().map_err(|e| bad(format!("argument {p:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad(format!("expected {k} argument(s), got {}", args.len())))
            }
        };
        let named = match name.as_str() {
            "complete" | "k" => arity(1).map(|_| NamedGraph::Complete(args[0])),
            "cycle" | "c" => arity(1).map(|_| NamedGraph::Cycle(args[0])),
            "path" | "p" => arity(1).map(|_| NamedGraph::Path(args[0])),
            "complete_bipartite" | "kab" => arity(2).map(|_| NamedGraph::CompleteBipartite(args[0], args[1])),
            "petersen" => arity(0).map(|_| NamedGraph::Petersen),
            "star" => arity(1).map(|_| NamedGraph::Star(args[0])),
            _ => Err(bad("unknown family".to_string())),
        }?;
        Ok(named)
    }
}
