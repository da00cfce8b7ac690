//! Graph generation and parallel scanning of statements over graph families.

mod canon;
mod generate;
mod report;
mod scan;

use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::graph::Graph6ReadError;

pub use canon::{canonical_form, canonical_labeling, pack, unpack};
pub use generate::{generate_graphs, isomorphism_classes, LabeledGraphs, MAX_GENERATED_ORDER};
pub use report::{Counterexample, ReportLine, ReportRow, ScanReport, Skipped, StatementTotals, TightInstance};
pub use scan::{find_tight, scan, GraphSource, LambdaPolicy, Limits, ScanJob};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("order {0} is outside 1..={MAX_GENERATED_ORDER} for built-in generation")]
    OrderOutOfRange(usize),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: Graph6ReadError },
    #[error("time budget must be positive")]
    ZeroBudget,
    #[error("enumeration cap must be positive")]
    ZeroCap,
    #[error("worker count must be positive")]
    ZeroWorkers,
    #[error("no statements selected")]
    NoStatements,
    #[error("thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}
