use std::io::Write;
use std::time::Duration;

use cyclelab::catalog::{select, Verdict};
use cyclelab::graph::{to_graph6, NamedGraph};
use cyclelab::search::{find_tight, scan, GraphSource, LambdaPolicy, ScanJob, ScanReport, SearchError};
use cyclelab::Graph;

fn generated(n_max: usize) -> GraphSource {
    GraphSource::Generated {
        n_min: 3,
        n_max,
        connected: true,
        min_degree: 0,
        dedup: true,
    }
}

#[test]
fn clean_scan_has_exit_code_zero() {
    let report = scan(&ScanJob::new(generated(6), select("proved").unwrap())).unwrap();
    assert_eq!(report.graphs, 2 + 6 + 21 + 112);
    assert_eq!(report.exit_code(), 0);
    assert!(report.counterexamples.is_empty());
}

#[test]
fn slow_graphs_are_skipped_and_reported() {
    let big = Graph::from_edges(40, (0..40).flat_map(|j| (0..j).map(move |i| (i, j)))).unwrap();
    let small = NamedGraph::Cycle(5).build().unwrap();
    let mut job = ScanJob::new(GraphSource::Graphs(vec![small, big.clone()]), select("T1").unwrap());
    job.limits.budget = Some(Duration::from_millis(1));
    let report = scan(&job).unwrap();
    assert_eq!(report.evaluated, 1);
    assert_eq!(report.skipped.len(), 1);
    assert_eq!(report.skipped[0].index, 1);
    assert_eq!(report.skipped[0].graph6, to_graph6(&big));
    assert!(report.skipped[0].reason.contains("exceeded") || report.skipped[0].reason.contains("cap"));
    assert_eq!(report.exit_code(), 4);
}

#[test]
fn invalid_jobs_are_rejected() {
    let mut job = ScanJob::new(generated(4), select("T1").unwrap());
    job.limits.budget = Some(Duration::ZERO);
    assert!(matches!(scan(&job), Err(SearchError::ZeroBudget)));
    let mut job = ScanJob::new(generated(4), select("T1").unwrap());
    job.workers = 0;
    assert!(matches!(scan(&job), Err(SearchError::ZeroWorkers)));
    let job = ScanJob::new(generated(11), select("T1").unwrap());
    assert!(matches!(scan(&job), Err(SearchError::OrderOutOfRange(_))));
    let job = ScanJob::new(GraphSource::Graph6File("/nonexistent/graphs.g6".into()), select("T1").unwrap());
    assert!(matches!(scan(&job), Err(SearchError::Read { .. })));
}

#[test]
fn graph6_files_are_scanned_in_file_order() {
    let dir = std::env::temp_dir().join(format!("cyclelab-scan-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("in.g6");
    let graphs = [
        NamedGraph::Petersen.build().unwrap(),
        NamedGraph::Complete(5).build().unwrap(),
    ];
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, ">>graph6<<{}", to_graph6(&graphs[0])).unwrap();
    writeln!(f, "{}", to_graph6(&graphs[1])).unwrap();
    drop(f);
    let from_file = scan(&ScanJob::new(GraphSource::Graph6File(path), select("all").unwrap())).unwrap();
    let direct = scan(&ScanJob::new(GraphSource::Graphs(graphs.to_vec()), select("all").unwrap())).unwrap();
    assert_eq!(from_file, direct);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn beyond_delta_totals_are_separate() {
    let mut job = ScanJob::new(generated(5), select("T1-T8").unwrap());
    let inside = scan(&job).unwrap();
    job.beyond_delta = true;
    let both = scan(&job).unwrap();
    assert!(inside.beyond_delta_totals.is_empty());
    assert_eq!(inside.totals, both.totals);
    assert!(both.beyond_delta_totals.iter().map(|t| t.total()).sum::<u64>() > 0);
    assert!(both.rows.iter().filter(|r| r.beyond_delta).all(|r| r.lambda > 0));
    // Violations found beyond δ are outside the proved range and do not fail the scan.
    assert!(both.proved_violations().next().is_none());
}

#[test]
fn fixed_lambda_policy_restricts_rows() {
    let mut job = ScanJob::new(generated(6), select("T1-T8").unwrap());
    job.lambda_policy = LambdaPolicy::Fixed(vec![2]);
    let report = scan(&job).unwrap();
    assert!(report.rows.iter().all(|r| r.lambda == 2));
    assert!(!report.rows.is_empty());
}

#[test]
fn find_tight_keeps_only_zero_margin_rows() {
    let graphs = vec![
        NamedGraph::CompleteBipartite(3, 4).build().unwrap(),
        NamedGraph::Petersen.build().unwrap(),
    ];
    let report = find_tight(&ScanJob::new(GraphSource::Graphs(graphs), select("CL-e").unwrap())).unwrap();
    assert_eq!(report.rows.len(), 1);
    assert_eq!(report.rows[0].verdict, Verdict::Confirmed);
    assert_eq!(report.rows[0].conclusion_margin, Some(0));
    assert_eq!(report.tight_instances.len(), 1);
}

#[test]
fn worker_count_does_not_change_reports() {
    let mut texts = Vec::new();
    for workers in [1, 3, 8] {
        let mut job = ScanJob::new(generated(6), select("all").unwrap());
        job.workers = workers;
        texts.push(scan(&job).unwrap().to_json_lines());
    }
    assert!(texts.windows(2).all(|w| w[0] == w[1]));
    let back = ScanReport::read_json_lines(texts[0].as_bytes()).unwrap();
    assert_eq!(back.to_json_lines(), texts[0]);
}
