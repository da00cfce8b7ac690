//! Exact longest-cycle invariants for small graphs and exhaustive checking
//! of degree-condition theorems about what a longest cycle leaves behind.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`]: bitset graphs on at most 64 vertices and graph6 I/O.
//! * [`invariants`]: minimum degree, connectivity, independence number and
//!   degree sums `σ_k`.
//! * [`cycles`]: longest paths and cycles, enumeration of all longest
//!   cycles, residual profiles and `D_λ`/`PD_λ`/`CD_λ` tests.
//! * [`catalog`]: the statements under test and their evaluation.
//! * [`search`]: graph generation, isomorphism reduction and parallel scans.
//!
//! ```
//! use cyclelab::graph::NamedGraph;
//! use cyclelab::analysis::analyze;
//!
//! let petersen = NamedGraph::Petersen.build()?;
//! let (bundle, cycles) = analyze(&petersen)?;
//! assert_eq!(bundle.connectivity, 3);
//! assert_eq!(cycles.circumference, 9);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod analysis;
pub mod bits;
pub mod budget;
pub mod catalog;
pub mod cycles;
pub mod extended;
pub mod graph;
pub mod invariants;
pub mod search;

pub use analysis::{analyze, analyze_with, AnalysisOptions, CycleAnalysis};
pub use extended::ExtendedNat;
pub use graph::{Graph, GraphError, NamedGraph};
pub use invariants::InvariantBundle;

/// Version stamped into every JSON document this crate produces.
pub const SCHEMA_VERSION: u32 = 1;

// The guide's code listings run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/cycles.md")]
    mod cycles {}
    #[doc = include_str!("../../../book/src/statements.md")]
    mod statements {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/scanning.md")]
    mod scanning {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
