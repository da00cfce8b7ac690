//! Degree, connectivity and independence invariants.

mod connectivity;
mod independence;

use serde::{Deserialize, Serialize};

use crate::extended::ExtendedNat;
use crate::graph::Graph;

pub use connectivity::{local_connectivity, vertex_connectivity};
pub use independence::{independence_number, sigma_k, sigma_table, SigmaTable};

/// Minimum degree; 0 for the null graph.
pub fn min_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).min().unwrap_or(0)
}

/// The scalar invariants of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub n: usize,
    pub min_degree: usize,
    pub connectivity: usize,
    pub independence_number: usize,
    /// `sigma[k - 1]` is the minimum degree sum over independent `k`-sets,
    /// for `1 <= k <= independence_number`.
    pub sigma: Vec<u64>,
    pub degree_sequence: Vec<usize>,
}

impl InvariantBundle {
    pub fn compute(g: &Graph) -> InvariantBundle {
        let table = sigma_table(g);
        InvariantBundle {
            n: g.order(),
            min_degree: min_degree(g),
            connectivity: vertex_connectivity(g),
            independence_number: independence_number(g),
            sigma: table.values().to_vec(),
            degree_sequence: g.degree_sequence(),
        }
    }

    /// `σ_k`, infinite when `k` exceeds the independence number. `σ_0 = 0`.
    pub fn sigma(&self, k: usize) -> ExtendedNat {
        match k {
            0 => ExtendedNat::Finite(0),
            k => self.sigma.get(k - 1).map_or(ExtendedNat::Infinity, |&v| ExtendedNat::Finite(v)),
        }
    }
}
