use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};

use super::scan::ScanJob;
use crate::analysis::CycleAnalysis;
use crate::catalog::{lookup, CheckResult, HypothesisMargin, Quantifier, Status, Verdict};
use crate::cycles::{CycleSeq, ResidualProfile};
use crate::graph::{to_graph6, Graph};
use crate::invariants::InvariantBundle;
use crate::SCHEMA_VERSION;

pub(crate) enum GraphOutcome {
    Evaluated {
        bundle: InvariantBundle,
        analysis: CycleAnalysis,
        results: Vec<(CheckResult, bool)>,
    },
    Skipped(String),
}

/// Verdict counts for one statement.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementTotals {
    pub statement: String,
    pub status: Option<Status>,
    pub vacuous: u64,
    pub vacuous_by_sigma: u64,
    pub confirmed: u64,
    pub violated: u64,
    /// Confirmed with zero conclusion slack.
    pub tight: u64,
}

impl StatementTotals {
    fn new(id: &str) -> StatementTotals {
        StatementTotals {
            statement: id.to_string(),
            status: lookup(id).map(|s| s.status),
            ..StatementTotals::default()
        }
    }

    fn add(&mut self, r: &CheckResult) {
        match r.verdict {
            Verdict::Vacuous => self.vacuous += 1,
            Verdict::VacuousBySigma => self.vacuous_by_sigma += 1,
            Verdict::Confirmed => self.confirmed += 1,
            Verdict::Violated => self.violated += 1,
        }
        if r.is_tight() {
            self.tight += 1;
        }
    }

    pub fn total(&self) -> u64 {
        self.vacuous + self.vacuous_by_sigma + self.confirmed + self.violated
    }

    pub fn non_vacuous(&self) -> u64 {
        self.confirmed + self.violated
    }
}

/// One non-vacuous result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    /// Position of the graph in the input stream.
    pub index: usize,
    pub graph6: String,
    pub statement: String,
    pub lambda: usize,
    /// Evaluated at λ > δ, outside the stated domain.
    pub beyond_delta: bool,
    pub verdict: Verdict,
    pub mode: Quantifier,
    pub hypothesis_margin: HypothesisMargin,
    pub conclusion_margin: Option<i64>,
    pub witness: Option<CycleSeq>,
}

/// A violated statement with everything needed to recheck it by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: usize,
    pub graph6: String,
    pub statement: String,
    pub status: Option<Status>,
    pub lambda: usize,
    pub beyond_delta: bool,
    pub witness: Option<CycleSeq>,
    pub witness_profile: Option<ResidualProfile>,
    pub conclusion_margin: Option<i64>,
    pub hypothesis_margin: HypothesisMargin,
    pub invariants: InvariantBundle,
    pub circumference: usize,
    pub longest_path: usize,
}

impl Counterexample {
    /// A violation of a proved statement inside its stated λ domain.
    pub fn is_proved_violation(&self) -> bool {
        self.status == Some(Status::Proved) && !self.beyond_delta
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightInstance {
    pub index: usize,
    pub graph6: String,
    pub statement: String,
    pub lambda: usize,
    pub beyond_delta: bool,
    /// The longest cycle attaining the bound.
    pub witness: Option<CycleSeq>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub index: usize,
    pub graph6: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema_version: u32,
    pub mode: Quantifier,
    pub statements: Vec<String>,
    pub graphs: usize,
    pub evaluated: usize,
    /// Totals at 1 ≤ λ ≤ δ (or the fixed λ), in statement order.
    pub totals: Vec<StatementTotals>,
    /// Totals at λ > δ; empty unless that range was requested.
    pub beyond_delta_totals: Vec<StatementTotals>,
    pub rows: Vec<ReportRow>,
    pub counterexamples: Vec<Counterexample>,
    pub tight_instances: Vec<TightInstance>,
    pub skipped: Vec<Skipped>,
}

/// One line of the JSON-lines form of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportLine {
    Header {
        schema_version: u32,
        mode: Quantifier,
        statements: Vec<String>,
        graphs: usize,
    },
    Row(ReportRow),
    Counterexample(Counterexample),
    Tight(TightInstance),
    Skipped(Skipped),
    Summary {
        evaluated: usize,
        totals: Vec<StatementTotals>,
        beyond_delta_totals: Vec<StatementTotals>,
    },
}

impl ScanReport {
    pub(crate) fn assemble(job: &ScanJob, graphs: &[Graph], outcomes: Vec<GraphOutcome>) -> ScanReport {
        let ids: Vec<String> = job.statements.iter().map(|s| s.id.to_string()).collect();
        let mut report = ScanReport {
            schema_version: SCHEMA_VERSION,
            mode: job.mode,
            totals: ids.iter().map(|id| StatementTotals::new(id)).collect(),
            beyond_delta_totals: if job.beyond_delta {
                ids.iter().map(|id| StatementTotals::new(id)).collect()
            } else {
                Vec::new()
            },
            statements: ids,
            graphs: graphs.len(),
            evaluated: 0,
            rows: Vec::new(),
            counterexamples: Vec::new(),
            tight_instances: Vec::new(),
            skipped: Vec::new(),
        };
        for (index, (g, outcome)) in graphs.iter().zip(outcomes).enumerate() {
            let graph6 = to_graph6(g);
            match outcome {
                GraphOutcome::Skipped(reason) => report.skipped.push(Skipped { index, graph6, reason }),
                GraphOutcome::Evaluated {
                    bundle,
                    analysis,
                    results,
                } => {
                    report.evaluated += 1;
                    for (r, beyond) in results {
                        report.record(index, &graph6, &bundle, &analysis, r, beyond);
                    }
                }
            }
        }
        report
    }

    fn record(
        &mut self,
        index: usize,
        graph6: &str,
        bundle: &InvariantBundle,
        analysis: &CycleAnalysis,
        r: CheckResult,
        beyond: bool,
    ) {
        let slot = self.statements.iter().position(|id| *id == r.statement).expect("statement in job");
        let totals = if beyond {
            &mut self.beyond_delta_totals
        } else {
            &mut self.totals
        };
        totals[slot].add(&r);
        if r.verdict.is_vacuous() {
            return;
        }
        if r.verdict == Verdict::Violated {
            let witness_profile = r
                .witness
                .as_ref()
                .and_then(|w| analysis.longest_cycles.iter().position(|c| c == w))
                .map(|i| analysis.profiles[i]);
            self.counterexamples.push(Counterexample {
                index,
                graph6: graph6.to_string(),
                statement: r.statement.clone(),
                status: lookup(&r.statement).map(|s| s.status),
                lambda: r.lambda,
                beyond_delta: beyond,
                witness: r.witness.clone(),
                witness_profile,
                conclusion_margin: r.conclusion_margin,
                hypothesis_margin: r.hypothesis_margin,
                invariants: bundle.clone(),
                circumference: analysis.circumference,
                longest_path: analysis.longest_path,
            });
        }
        if r.is_tight() {
            self.tight_instances.push(TightInstance {
                index,
                graph6: graph6.to_string(),
                statement: r.statement.clone(),
                lambda: r.lambda,
                beyond_delta: beyond,
                witness: r.witness.clone(),
            });
        }
        self.rows.push(ReportRow {
            index,
            graph6: graph6.to_string(),
            statement: r.statement,
            lambda: r.lambda,
            beyond_delta: beyond,
            verdict: r.verdict,
            mode: r.mode,
            hypothesis_margin: r.hypothesis_margin,
            conclusion_margin: r.conclusion_margin,
            witness: r.witness,
        });
    }

    pub(crate) fn retain_tight(&mut self) {
        self.rows
            .retain(|row| row.verdict == Verdict::Confirmed && row.conclusion_margin == Some(0));
    }

    /// Violations of proved statements within their stated domain.
    pub fn proved_violations(&self) -> impl Iterator<Item = &Counterexample> {
        self.counterexamples.iter().filter(|c| c.is_proved_violation())
    }

    /// Violations of open conjectures, and of anything evaluated beyond δ.
    pub fn open_violations(&self) -> impl Iterator<Item = &Counterexample> {
        self.counterexamples.iter().filter(|c| !c.is_proved_violation())
    }

    /// Totals for `id` in the stated domain.
    pub fn totals_for(&self, id: &str) -> Option<&StatementTotals> {
        self.totals.iter().find(|t| t.statement.eq_ignore_ascii_case(id))
    }

    /// 0 for a clean scan, 2 if a proved statement was violated, 4 if some
    /// graphs were skipped. A violation takes precedence over skips.
    pub fn exit_code(&self) -> i32 {
        if self.proved_violations().next().is_some() {
            2
        } else if !self.skipped.is_empty() {
            4
        } else {
            0
        }
    }

    pub fn lines(&self) -> Vec<ReportLine> {
        let mut out = vec![ReportLine::Header {
            schema_version: self.schema_version,
            mode: self.mode,
            statements: self.statements.clone(),
            graphs: self.graphs,
        }];
        out.extend(self.rows.iter().cloned().map(ReportLine::Row));
        out.extend(self.counterexamples.iter().cloned().map(ReportLine::Counterexample));
        out.extend(self.tight_instances.iter().cloned().map(ReportLine::Tight));
        out.extend(self.skipped.iter().cloned().map(ReportLine::Skipped));
        out.push(ReportLine::Summary {
            evaluated: self.evaluated,
            totals: self.totals.clone(),
            beyond_delta_totals: self.beyond_delta_totals.clone(),
        });
        out
    }

    pub fn write_json_lines<W: Write>(&self, mut w: W) -> io::Result<()> {
        for line in self.lines() {
            serde_json::to_writer(&mut w, &line)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn to_json_lines(&self) -> String {
        let mut buf = Vec::new();
        self.write_json_lines(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("serde_json emits UTF-8")
    }

    /// Rebuilds a report from its JSON-lines form.
    pub fn read_json_lines<R: BufRead>(r: R) -> io::Result<ScanReport> {
        let bad = |msg: &str| io::Error::new(io::ErrorKind::InvalidData, msg.to_string());
        let mut report: Option<ScanReport> = None;
        let mut done = false;
        for line in r.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let parsed: ReportLine = serde_json::from_str(&line)?;
            if done {
                return Err(bad("content after summary line"));
            }
            if let ReportLine::Header {
                schema_version,
                mode,
                statements,
                graphs,
            } = parsed
            {
                if report.is_some() {
                    return Err(bad("duplicate header"));
                }
                report = Some(ScanReport {
                    schema_version,
                    mode,
                    statements,
                    graphs,
                    evaluated: 0,
                    totals: Vec::new(),
                    beyond_delta_totals: Vec::new(),
                    rows: Vec::new(),
                    counterexamples: Vec::new(),
                    tight_instances: Vec::new(),
                    skipped: Vec::new(),
                });
                continue;
            }
            let rep = report.as_mut().ok_or_else(|| bad("missing header"))?;
            match parsed {
                ReportLine::Header { .. } => unreachable!(),
                ReportLine::Row(x) => rep.rows.push(x),
                ReportLine::Counterexample(x) => rep.counterexamples.push(x),
                ReportLine::Tight(x) => rep.tight_instances.push(x),
                ReportLine::Skipped(x) => rep.skipped.push(x),
                ReportLine::Summary {
                    evaluated,
                    totals,
                    beyond_delta_totals,
                } => {
                    rep.evaluated = evaluated;
                    rep.totals = totals;
                    rep.beyond_delta_totals = beyond_delta_totals;
                    done = true;
                }
            }
        }
        match (report, done) {
            (Some(r), true) => Ok(r),
            (None, _) => Err(bad("missing header")),
            (_, false) => Err(bad("missing summary line")),
        }
    }

    /// Human-readable summary: one line per statement plus counts of
    /// counterexamples, tight instances and skipped graphs.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "graphs {}  evaluated {}  skipped {}  mode {}",
            self.graphs,
            self.evaluated,
            self.skipped.len(),
            match self.mode {
                Quantifier::ForallLongest => "forall",
                Quantifier::ExistsLongest => "exists",
            }
        );
        write_totals(&mut out, &self.totals);
        if !self.beyond_delta_totals.is_empty() {
            let _ = writeln!(out, "\nbeyond δ (λ > δ):");
            write_totals(&mut out, &self.beyond_delta_totals);
        }
        let proved = self.proved_violations().count();
        let open = self.open_violations().count();
        let _ = writeln!(
            out,
            "\nproved violations {proved}  open violations {open}  tight instances {}",
            self.tight_instances.len()
        );
        for c in self.counterexamples.iter() {
            let tag = if c.is_proved_violation() {
                "PROVED-VIOLATION"
            } else {
                "OPEN-VIOLATION"
            };
            let witness = c.witness.as_ref().map_or("-".to_string(), |w| w.to_string());
            let _ = writeln!(out, "{tag} {} λ={} {} cycle {}", c.statement, c.lambda, c.graph6, witness);
        }
        for s in &self.skipped {
            let _ = writeln!(out, "SKIPPED #{} {}: {}", s.index, s.graph6, s.reason);
        }
        out
    }
}

fn write_totals(out: &mut String, totals: &[StatementTotals]) {
    let _ = writeln!(
        out,
        "{:<6} {:<6} {:>9} {:>9} {:>9} {:>8} {:>7} {:>9}",
        "id", "status", "vacuous", "vac-σ", "confirmed", "violated", "tight", "nonvac"
    );
    for t in totals {
        let status = match t.status {
            Some(Status::Proved) => "proved",
            Some(Status::Open) => "open",
            None => "?",
        };
        let _ = writeln!(
            out,
            "{:<6} {:<6} {:>9} {:>9} {:>9} {:>8} {:>7} {:>9}",
            t.statement,
            status,
            t.vacuous,
            t.vacuous_by_sigma,
            t.confirmed,
            t.violated,
            t.tight,
            permille(t.non_vacuous(), t.total())
        );
    }
}

/// `part/whole` as a percentage with one decimal, in integer arithmetic.
fn permille(part: u64, whole: u64) -> String {
    if whole == 0 {
        return "-".to_string();
    }
    let m = (part * 1000 + whole / 2) / whole;
    format!("{}.{}%", m / 10, m % 10)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::select;
    use crate::graph::NamedGraph;
    use crate::search::{scan, GraphSource, ScanJob};

    fn small_job() -> ScanJob {
        let graphs = vec![
            NamedGraph::Petersen.build().unwrap(),
            NamedGraph::CompleteBipartite(3, 4).build().unwrap(),
            NamedGraph::Complete(4).build().unwrap(),
        ];
        ScanJob::new(GraphSource::Graphs(graphs), select("all").unwrap())
    }

    #[test]
    fn json_lines_round_trip() {
        let report = scan(&small_job()).unwrap();
        let text = report.to_json_lines();
        let back = ScanReport::read_json_lines(text.as_bytes()).unwrap();
        assert_eq!(back, report);
        assert!(text.lines().next().unwrap().contains("\"schema_version\":1"));
    }

    #[test]
    fn totals_cover_every_evaluation() {
        let report = scan(&small_job()).unwrap();
        let non_vacuous: u64 = report.totals.iter().map(|t| t.non_vacuous()).sum();
        assert_eq!(non_vacuous as usize, report.rows.len());
        assert_eq!(report.evaluated, 3);
        assert!(report.skipped.is_empty());
    }

    #[test]
    fn k34_is_tight_for_dirac_bound() {
        let report = scan(&small_job()).unwrap();
        let k34 = to_graph6(&NamedGraph::CompleteBipartite(3, 4).build().unwrap());
        assert!(report
            .tight_instances
            .iter()
            .any(|t| t.graph6 == k34 && t.statement == "CL-e"));
    }

    #[test]
    fn permille_rounds() {
        assert_eq!(permille(1, 3), "33.3%");
        assert_eq!(permille(2, 3), "66.7%");
        assert_eq!(permille(0, 0), "-");
    }

    #[test]
    fn truncated_report_is_rejected() {
        let report = scan(&small_job()).unwrap();
        let text = report.to_json_lines();
        let cut: String = text.lines().take(2).map(|l| format!("{l}\n")).collect();
        assert!(ScanReport::read_json_lines(cut.as_bytes()).is_err());
    }
}
