use serde::{Deserialize, Serialize};

use super::{circumference_with, longest_path_order_with, CycleError, CycleSeq};
use crate::bits;
use crate::budget::Budget;
use crate::graph::Graph;

/// What a cycle `C` leaves behind in `G − C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidualProfile {
    /// Order of a longest path in `G − C`.
    pub p_bar: usize,
    /// Order of a longest (extended) cycle in `G − C`.
    pub c_bar: usize,
    /// Order of a largest component of `G − C`.
    pub largest_component: usize,
}

impl ResidualProfile {
    /// Profile of the subgraph left after deleting a cycle.
    pub fn of_remainder(rest: &Graph, budget: &mut Budget) -> Result<ResidualProfile, CycleError> {
        Ok(ResidualProfile {
            p_bar: longest_path_order_with(rest, budget)?,
            c_bar: circumference_with(rest, budget)?,
            largest_component: rest
                .connected_components()
                .into_iter()
                .map(bits::len)
                .max()
                .unwrap_or(0),
        })
    }

    /// The cycle is a `D_λ`-cycle: every component of `G − C` has order ≤ λ − 1.
    pub fn is_d_lambda(&self, lambda: usize) -> bool {
        self.largest_component < lambda
    }

    /// The cycle meets every path of order ≥ λ.
    pub fn is_pd_lambda(&self, lambda: usize) -> bool {
        self.p_bar < lambda
    }

    /// The cycle meets every cycle of order ≥ λ.
    pub fn is_cd_lambda(&self, lambda: usize) -> bool {
        self.c_bar < lambda
    }

    /// Least λ for which the cycle is a `D_λ`-cycle.
    pub fn min_d_lambda(&self) -> usize {
        self.largest_component + 1
    }

    pub fn min_pd_lambda(&self) -> usize {
        self.p_bar + 1
    }

    pub fn min_cd_lambda(&self) -> usize {
        self.c_bar + 1
    }
}

pub fn residual_profile(g: &Graph, cycle: &CycleSeq) -> Result<ResidualProfile, CycleError> {
    residual_profile_with(g, cycle, &mut Budget::unlimited())
}

pub fn residual_profile_with(
    g: &Graph,
    cycle: &CycleSeq,
    budget: &mut Budget,
) -> Result<ResidualProfile, CycleError> {
    cycle.validate(g)?;
    let (rest, _) = g.induced_subgraph(g.vertices() & !cycle.vertex_set());
    ResidualProfile::of_remainder(&rest, budget)
}

fn checked_profile(g: &Graph, q: &CycleSeq, lambda: usize) -> Result<ResidualProfile, CycleError> {
    if lambda == 0 {
        return Err(CycleError::LambdaZero);
    }
    residual_profile(g, q)
}

pub fn is_d_lambda_cycle(g: &Graph, q: &CycleSeq, lambda: usize) -> Result<bool, CycleError> {
    Ok(checked_profile(g, q, lambda)?.is_d_lambda(lambda))
}

pub fn is_pd_lambda_cycle(g: &Graph, q: &CycleSeq, lambda: usize) -> Result<bool, CycleError> {
    Ok(checked_profile(g, q, lambda)?.is_pd_lambda(lambda))
}

pub fn is_cd_lambda_cycle(g: &Graph, q: &CycleSeq, lambda: usize) -> Result<bool, CycleError> {
    Ok(checked_profile(g, q, lambda)?.is_cd_lambda(lambda))
}
