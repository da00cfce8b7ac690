//! One-call aggregation of every invariant the statements refer to.

use std::collections::HashMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::budget::Budget;
use crate::cycles::{
    enumerate_longest_cycles_with, longest_path_order_with, CycleError, CycleSeq, ResidualProfile,
    DEFAULT_ENUMERATION_CAP,
};
use crate::graph::Graph;
use crate::invariants::InvariantBundle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub enumeration_cap: usize,
    /// Wall-clock allowance for the cycle computations.
    pub budget: Option<Duration>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            budget: None,
        }
    }
}

/// D/PD/CD status of one cycle for one λ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub d: bool,
    pub pd: bool,
    pub cd: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleAnalysis {
    pub circumference: usize,
    pub longest_path: usize,
    /// All longest cycles, canonical and sorted.
    pub longest_cycles: Vec<CycleSeq>,
    /// `profiles[i]` belongs to `longest_cycles[i]`.
    pub profiles: Vec<ResidualProfile>,
}

impl CycleAnalysis {
    pub fn is_hamiltonian(&self, n: usize) -> bool {
        self.circumference == n
    }

    pub fn classify(&self, cycle: usize, lambda: usize) -> Classification {
        let p = &self.profiles[cycle];
        Classification {
            d: p.is_d_lambda(lambda),
            pd: p.is_pd_lambda(lambda),
            cd: p.is_cd_lambda(lambda),
        }
    }

    /// Distinct profiles in first-seen order.
    pub fn distinct_profiles(&self) -> Vec<ResidualProfile> {
        let mut seen = Vec::new();
        for p in &self.profiles {
            if !seen.contains(p) {
                seen.push(*p);
            }
        }
        seen
    }
}

pub fn analyze(g: &Graph) -> Result<(InvariantBundle, CycleAnalysis), CycleError> {
    analyze_with(g, &AnalysisOptions::default())
}

pub fn analyze_with(
    g: &Graph,
    options: &AnalysisOptions,
) -> Result<(InvariantBundle, CycleAnalysis), CycleError> {
    let mut budget = Budget::from_option(options.budget);
    let cycles = analyze_cycles(g, options.enumeration_cap, &mut budget)?;
    Ok((InvariantBundle::compute(g), cycles))
}

pub fn analyze_cycles(g: &Graph, cap: usize, budget: &mut Budget) -> Result<CycleAnalysis, CycleError> {
    let longest_cycles = enumerate_longest_cycles_with(g, cap, budget)?;
    let circumference = longest_cycles.first().map_or(0, CycleSeq::order);
    let longest_path = longest_path_order_with(g, budget)?;
    // Cycles on the same vertex set leave the same remainder.
    let mut memo: HashMap<VertexSet, ResidualProfile> = HashMap::new();
    let mut profiles = Vec::with_capacity(longest_cycles.len());
    for cycle in &longest_cycles {
        let rest = g.vertices() & !cycle.vertex_set();
        let profile = match memo.get(&rest) {
            Some(p) => *p,
            None => {
                let (h, _) = g.induced_subgraph(rest);
                let p = ResidualProfile::of_remainder(&h, budget)?;
                memo.insert(rest, p);
                p
            }
        };
        profiles.push(profile);
    }
    Ok(CycleAnalysis {
        circumference,
        longest_path,
        longest_cycles,
        profiles,
    })
}
