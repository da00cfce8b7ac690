use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::time::Duration;

use rayon::prelude::*;

use super::report::{GraphOutcome, ScanReport};
use super::{generate_graphs, SearchError, MAX_GENERATED_ORDER};
use crate::analysis::analyze_cycles;
use crate::budget::Budget;
use crate::catalog::{evaluate, evaluate_beyond_delta, lambdas_for, CheckResult, LambdaDomain, Quantifier, Statement};
use crate::cycles::DEFAULT_ENUMERATION_CAP;
use crate::graph::{read_graph6, Graph};
use crate::invariants::{min_degree, InvariantBundle};

/// Where the graphs of a scan come from.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// Built-in generation for every order in `n_min..=n_max`.
    Generated {
        n_min: usize,
        n_max: usize,
        connected: bool,
        min_degree: usize,
        dedup: bool,
    },
    /// A graph6 file, one graph per line.
    Graph6File(PathBuf),
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaPolicy {
    /// Every λ in the statement's domain (`1..=δ`, or its fixed value).
    AllInDomain,
    /// Only these λ, intersected with each statement's domain.
    Fixed(Vec<usize>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Per-graph wall-clock allowance; `None` for no limit.
    pub budget: Option<Duration>,
    pub enumeration_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            budget: Some(Duration::from_secs(5)),
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanJob {
    pub source: GraphSource,
    pub statements: Vec<&'static Statement>,
    pub lambda_policy: LambdaPolicy,
    /// Also evaluate parametric statements at δ < λ ≤ n, reported separately.
    pub beyond_delta: bool,
    pub mode: Quantifier,
    pub limits: Limits,
    pub workers: usize,
}

impl ScanJob {
    pub fn new(source: GraphSource, statements: Vec<&'static Statement>) -> ScanJob {
        ScanJob {
            source,
            statements,
            lambda_policy: LambdaPolicy::AllInDomain,
            beyond_delta: false,
            mode: Quantifier::ForallLongest,
            limits: Limits::default(),
            workers: 1,
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.limits.budget == Some(Duration::ZERO) {
            return Err(SearchError::ZeroBudget);
        }
        if self.limits.enumeration_cap == 0 {
            return Err(SearchError::ZeroCap);
        }
        if self.workers == 0 {
            return Err(SearchError::ZeroWorkers);
        }
        if self.statements.is_empty() {
            return Err(SearchError::NoStatements);
        }
        Ok(())
    }

    fn load(&self) -> Result<Vec<Graph>, SearchError> {
        match &self.source {
            GraphSource::Generated {
                n_min,
                n_max,
                connected,
                min_degree: floor,
                dedup,
            } => {
                if let Some(&bad) = [*n_min, *n_max].iter().find(|&&n| n == 0 || n > MAX_GENERATED_ORDER) {
                    return Err(SearchError::OrderOutOfRange(bad));
                }
                let mut out = Vec::new();
                for n in *n_min..=*n_max {
                    out.extend(generate_graphs(n, *connected, *dedup)?.filter(|g| min_degree(g) >= *floor));
                }
                Ok(out)
            }
            GraphSource::Graph6File(path) => {
                let file = File::open(path).map_err(|e| SearchError::Read {
                    path: path.clone(),
                    source: e.into(),
                })?;
                read_graph6(BufReader::new(file)).map_err(|source| SearchError::Read {
                    path: path.clone(),
                    source,
                })
            }
            GraphSource::Graphs(gs) => Ok(gs.clone()),
        }
    }

    /// `(λ, beyond δ)` pairs at which `s` is evaluated on a graph.
    fn lambdas(&self, s: &Statement, bundle: &InvariantBundle) -> Vec<(usize, bool)> {
        let beyond = self.beyond_delta.then_some(bundle.n);
        lambdas_for(s, bundle.min_degree, beyond)
            .into_iter()
            .filter(|l| match &self.lambda_policy {
                LambdaPolicy::AllInDomain => true,
                LambdaPolicy::Fixed(list) => list.contains(l),
            })
            .map(|l| (l, matches!(s.lambda_domain, LambdaDomain::UpToMinDegree) && l > bundle.min_degree))
            .collect()
    }

    fn run_one(&self, g: &Graph) -> GraphOutcome {
        let mut budget = Budget::from_option(self.limits.budget);
        if g.order() == 0 {
            return GraphOutcome::Skipped("graph has no vertices".to_string());
        }
        let analysis = match analyze_cycles(g, self.limits.enumeration_cap, &mut budget) {
            Ok(a) => a,
            Err(e) => return GraphOutcome::Skipped(e.to_string()),
        };
        let bundle = InvariantBundle::compute(g);
        let mut results: Vec<(CheckResult, bool)> = Vec::new();
        for s in &self.statements {
            for (lambda, beyond) in self.lambdas(s, &bundle) {
                let r = if beyond {
                    evaluate_beyond_delta(&bundle, &analysis, s, lambda, self.mode)
                } else {
                    evaluate(&bundle, &analysis, s, lambda, self.mode)
                };
                match r {
                    Ok(r) => results.push((r, beyond)),
                    Err(e) => return GraphOutcome::Skipped(e.to_string()),
                }
            }
        }
        GraphOutcome::Evaluated {
            bundle,
            analysis,
            results,
        }
    }
}

/// Evaluates every selected statement at every selected λ on every graph.
///
/// Graphs are processed in parallel on `job.workers` threads; the report is
/// assembled in input order, so it does not depend on the worker count.
pub fn scan(job: &ScanJob) -> Result<ScanReport, SearchError> {
    job.validate()?;
    let graphs = job.load()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(job.workers)
        .build()
        .map_err(|e| SearchError::Pool(e.to_string()))?;
    let outcomes: Vec<GraphOutcome> = pool.install(|| graphs.par_iter().map(|g| job.run_one(g)).collect());
    Ok(ScanReport::assemble(job, &graphs, outcomes))
}

/// A scan whose rows are only the confirmed ones with zero conclusion slack.
pub fn find_tight(job: &ScanJob) -> Result<ScanReport, SearchError> {
    let mut report = scan(job)?;
    report.retain_tight();
    Ok(report)
}
