//! JSON-lines records written by `analyze`, `check`, `identities` and
//! `catalog`. Each stream starts with a header carrying the schema version.

use serde::{Deserialize, Serialize};

use cyclelab::catalog::{CheckResult, IdentitySweep, StatementRecord};
use cyclelab::cycles::{CycleSeq, ResidualProfile};
use cyclelab::InvariantBundle;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Record {
    Header { schema_version: u32, command: String },
    Graph(GraphRecord),
    Check(CheckRecord),
    Skipped { index: usize, graph6: String, reason: String },
    Identities(IdentityRecord),
    Statement(StatementRecord),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub index: usize,
    pub graph6: String,
    pub invariants: InvariantBundle,
    pub circumference: usize,
    pub longest_path: usize,
    pub hamiltonian: bool,
    pub longest_cycles: Vec<CycleSeq>,
    /// `profiles[i]` belongs to `longest_cycles[i]`.
    pub profiles: Vec<ResidualProfile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub index: usize,
    pub graph6: String,
    pub beyond_delta: bool,
    #[serde(flatten)]
    pub result: CheckResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub delta_max: i64,
    pub n_max: i64,
    pub all_hold: bool,
    #[serde(flatten)]
    pub sweep: IdentitySweep,
}
