//! Longest paths and cycles under the extended cycle convention: a single
//! vertex is a cycle of order 1 and an edge a cycle of order 2.

mod enumerate;
mod longest;
mod residual;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{self, VertexSet};
use crate::budget::BudgetExceeded;
use crate::graph::Graph;

pub use enumerate::{enumerate_longest_cycles, enumerate_longest_cycles_with, DEFAULT_ENUMERATION_CAP};
pub use longest::{
    circumference, circumference_dfs, circumference_with, longest_path_order, longest_path_order_dfs,
    longest_path_order_with, DP_ORDER_LIMIT,
};
pub use residual::{
    is_cd_lambda_cycle, is_d_lambda_cycle, is_pd_lambda_cycle, residual_profile, residual_profile_with,
    ResidualProfile,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("more than {cap} longest cycles; raise the enumeration cap")]
    EnumerationCap { cap: usize },
    #[error("λ must be at least 1")]
    LambdaZero,
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// A cycle `v1 v2 .. vt v1` of distinct vertices, `t >= 1`.
///
/// Orders 1 and 2 stand for a vertex and an edge. Values built by this crate
/// are in canonical form: the smallest vertex first, then the direction
/// whose second vertex is smaller.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleSeq {
    vertices: Vec<usize>,
}

impl CycleSeq {
    /// Validates `vertices` as a cycle of `g` and canonicalizes it.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<CycleSeq, CycleError> {
        let cycle = CycleSeq { vertices };
        cycle.validate(g)?;
        Ok(cycle.canonical())
    }

    pub(crate) fn from_canonical(vertices: Vec<usize>) -> CycleSeq {
        CycleSeq { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        bits::from_iter(self.vertices.iter().copied())
    }

    pub fn validate(&self, g: &Graph) -> Result<(), CycleError> {
        let t = self.vertices.len();
        let err = |m: String| Err(CycleError::NotACycle(m));
        if t == 0 {
            return err("empty vertex sequence".into());
        }
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.order()) {
            return err(format!("vertex {v} is not in a graph of order {}", g.order()));
        }
        if bits::len(self.vertex_set()) != t {
            return err("repeated vertex".into());
        }
        let closing = if t >= 3 { t } else { t - 1 };
        for i in 0..closing {
            let (u, v) = (self.vertices[i], self.vertices[(i + 1) % t]);
            if !g.has_edge(u, v) {
                return err(format!("{u} and {v} are not adjacent"));
            }
        }
        Ok(())
    }

    /// The smallest rotation/reflection of the vertex sequence.
    pub fn canonical(&self) -> CycleSeq {
        let t = self.vertices.len();
        if t <= 1 {
            return self.clone();
        }
        let start = (0..t).min_by_key(|&i| self.vertices[i]).expect("nonempty");
        let fwd: Vec<usize> = (0..t).map(|i| self.vertices[(start + i) % t]).collect();
        let bwd: Vec<usize> = (0..t).map(|i| self.vertices[(start + t - i) % t]).collect();
        CycleSeq {
            vertices: fwd.min(bwd),
        }
    }
}

impl fmt::Debug for CycleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.vertices)
    }
}

impl fmt::Display for CycleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("-"))
    }
}
