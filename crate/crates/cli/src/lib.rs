//! The `cyclelab` command line. [`run`] does the work so that tests can
//! drive it with in-memory streams.

mod args;
mod records;

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::Path;
use std::time::Duration;

use clap::Parser;
use cyclelab::catalog::{
    catalog, evaluate, evaluate_beyond_delta, lambdas_for, select, sweep_identities, CheckResult, LambdaDomain,
    Quantifier, Statement, StatementRecord, Status, Verdict,
};
use cyclelab::graph::{from_graph6, read_graph6, to_graph6, ReadError};
use cyclelab::search::{find_tight, scan, GraphSource, LambdaPolicy, Limits, ScanJob, SearchError};
use cyclelab::{analyze_with, AnalysisOptions, Graph, NamedGraph, SCHEMA_VERSION};

pub use args::{Cli, Command, Format, Mode};
pub use records::{CheckRecord, GraphRecord, IdentityRecord, Record};

/// Exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const PROVED_VIOLATION: i32 = 2;
    pub const IO: i32 = 3;
    pub const SKIPPED: i32 = 4;
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with_args<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, stdin, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            code
        }
    }
}

pub fn run(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let outcome = match cli.command {
        Command::Analyze(a) => cmd_analyze(a, stdin, stdout, stderr),
        Command::Check(a) => cmd_check(a, stdin, stdout, stderr),
        Command::Scan(a) => cmd_scan(a, stdin, stdout, stderr),
        Command::Identities(a) => cmd_identities(a, stdout),
        Command::Catalog(a) => cmd_catalog(a, stdout),
    };
    let flushed = stdout.flush();
    match (outcome, flushed) {
        (Ok(code), Ok(())) => code,
        (Err(Failure::Usage(msg)), _) => {
            let _ = writeln!(stderr, "error: {msg}");
            exit::USAGE
        }
        (Err(Failure::Io(msg)), _) => {
            let _ = writeln!(stderr, "error: {msg}");
            exit::IO
        }
        (Ok(_), Err(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            exit::IO
        }
    }
}

fn quantifier(mode: Mode) -> Quantifier {
    match mode {
        Mode::Forall => Quantifier::ForallLongest,
        Mode::Exists => Quantifier::ExistsLongest,
    }
}

fn read_graph_file(path: &Path, stdin: &mut dyn Read) -> Result<Vec<Graph>, Failure> {
    let result = if path == Path::new("-") {
        read_graph6(BufReader::new(stdin))
    } else {
        let file = File::open(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        read_graph6(BufReader::new(file))
    };
    result.map_err(|e| match e {
        ReadError::Io(e) => Failure::Io(format!("{}: {e}", path.display())),
        e @ ReadError::Parse { .. } => Failure::Io(format!("{}: {e}", path.display())),
    })
}

fn load_graphs(source: &args::GraphSourceArgs, stdin: &mut dyn Read) -> Result<Vec<Graph>, Failure> {
    if let Some(path) = &source.input {
        return read_graph_file(path, stdin);
    }
    if let Some(text) = &source.graph6 {
        return from_graph6(text)
            .map(|g| vec![g])
            .map_err(|e| Failure::Usage(format!("--graph6: {e}")));
    }
    let spec = source.named.as_deref().expect("clap enforces one source");
    spec.parse::<NamedGraph>()
        .and_then(NamedGraph::build)
        .map(|g| vec![g])
        .map_err(|e| Failure::Usage(format!("--named: {e}")))
}

fn parse_lambda(text: &str) -> Result<LambdaPolicy, Failure> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(LambdaPolicy::AllInDomain);
    }
    let values = text
        .split(',')
        .map(|p| match p.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(Failure::Usage(format!("--lambda: {p:?} is not a positive integer"))),
            Ok(v) => Ok(v),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LambdaPolicy::Fixed(values))
}

fn parse_statements(text: &str) -> Result<Vec<&'static Statement>, Failure> {
    let chosen = select(text).map_err(|e| Failure::Usage(format!("--statements: {e}")))?;
    if chosen.is_empty() {
        return Err(Failure::Usage("--statements selects nothing".into()));
    }
    Ok(chosen)
}

fn analysis_options(limits: &args::LimitArgs) -> Result<AnalysisOptions, Failure> {
    if limits.budget_ms == Some(0) {
        return Err(Failure::Usage("--budget-ms must be positive".into()));
    }
    if limits.enum_cap == 0 {
        return Err(Failure::Usage("--enum-cap must be positive".into()));
    }
    Ok(AnalysisOptions {
        enumeration_cap: limits.enum_cap,
        budget: limits.budget_ms.map(Duration::from_millis),
    })
}

fn write_record(out: &mut dyn Write, record: &Record) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, record).map_err(|e| Failure::Io(e.to_string()))?;
    out.write_all(b"\n")?;
    Ok(())
}

fn header(out: &mut dyn Write, command: &str) -> Result<(), Failure> {
    write_record(
        out,
        &Record::Header {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
        },
    )
}

fn cmd_analyze(
    a: args::AnalyzeArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let options = analysis_options(&a.limits)?;
    let graphs = load_graphs(&a.source, stdin)?;
    if a.format == Format::Json {
        header(out, "analyze")?;
    }
    let mut code = exit::OK;
    for (index, g) in graphs.iter().enumerate() {
        let graph6 = to_graph6(g);
        let (bundle, cycles) = match analyze_with(g, &options) {
            Ok(x) => x,
            Err(e) => {
                writeln!(err, "skipped graph {index} ({graph6}): {e}")?;
                if a.format == Format::Json {
                    write_record(out, &Record::Skipped { index, graph6, reason: e.to_string() })?;
                }
                code = exit::SKIPPED;
                continue;
            }
        };
        let record = GraphRecord {
            index,
            graph6,
            hamiltonian: cycles.is_hamiltonian(bundle.n),
            circumference: cycles.circumference,
            longest_path: cycles.longest_path,
            longest_cycles: cycles.longest_cycles,
            profiles: cycles.profiles,
            invariants: bundle,
        };
        match a.format {
            Format::Json => write_record(out, &Record::Graph(record))?,
            Format::Table => out.write_all(analysis_table(&record).as_bytes())?,
        }
    }
    Ok(code)
}

fn analysis_table(r: &GraphRecord) -> String {
    let b = &r.invariants;
    let mut s = String::new();
    let _ = writeln!(s, "graph {}  {}", r.index, r.graph6);
    let sigma: Vec<String> = b.sigma.iter().map(u64::to_string).collect();
    let _ = writeln!(
        s,
        "  n {}  degrees {:?}\n  δ {}  κ {}  α {}  σ_1..σ_α {}",
        b.n,
        b.degree_sequence,
        b.min_degree,
        b.connectivity,
        b.independence_number,
        sigma.join(" ")
    );
    let _ = writeln!(
        s,
        "  circumference {}  longest path {}  hamiltonian {}  longest cycles {}",
        r.circumference,
        r.longest_path,
        if r.hamiltonian { "yes" } else { "no" },
        r.longest_cycles.len()
    );
    let mut counts: Vec<((usize, usize, usize), usize)> = Vec::new();
    for p in &r.profiles {
        let key = (p.p_bar, p.c_bar, p.largest_component);
        match counts.iter_mut().find(|(k, _)| *k == key) {
            Some((_, c)) => *c += 1,
            None => counts.push((key, 1)),
        }
    }
    counts.sort();
    let _ = writeln!(s, "  residual profiles (p̄, c̄, largest component): cycles");
    for ((p, c, comp), count) in counts {
        let _ = writeln!(s, "    ({p}, {c}, {comp}): {count}");
    }
    if let Some(first) = r.longest_cycles.first() {
        let _ = writeln!(s, "  first longest cycle {first}");
    }
    s
}

fn cmd_check(a: args::CheckArgs, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let options = analysis_options(&a.limits)?;
    let statements = parse_statements(&a.selection.statements)?;
    let policy = parse_lambda(&a.selection.lambda)?;
    let mode = quantifier(a.selection.mode);
    let graphs = load_graphs(&a.source, stdin)?;
    if a.format == Format::Json {
        header(out, "check")?;
    } else {
        writeln!(
            out,
            "{:<6} {:<6} {:>3} {:<17} {:>6} {:>8} {:>8} {:>10}  witness",
            "graph", "id", "λ", "verdict", "κ-slack", "deg-slack", "res-slack", "concl"
        )?;
    }
    let mut code = exit::OK;
    for (index, g) in graphs.iter().enumerate() {
        let graph6 = to_graph6(g);
        let (bundle, cycles) = match analyze_with(g, &options) {
            Ok(x) => x,
            Err(e) => {
                writeln!(err, "skipped graph {index} ({graph6}): {e}")?;
                if a.format == Format::Json {
                    write_record(out, &Record::Skipped { index, graph6, reason: e.to_string() })?;
                }
                code = code.max(exit::SKIPPED);
                continue;
            }
        };
        for s in &statements {
            let beyond = a.selection.beyond_delta.then_some(bundle.n);
            let domain = lambdas_for(s, bundle.min_degree, beyond);
            let lambdas: Vec<usize> = match &policy {
                LambdaPolicy::AllInDomain => domain,
                LambdaPolicy::Fixed(list) => {
                    for l in list.iter().filter(|l| !domain.contains(l)) {
                        if matches!(s.lambda_domain, LambdaDomain::UpToMinDegree) {
                            writeln!(err, "{}: λ = {l} is outside 1..={} on graph {index}", s.id, bundle.min_degree)?;
                        }
                    }
                    list.iter().copied().filter(|l| domain.contains(l)).collect()
                }
            };
            for lambda in lambdas {
                let beyond = matches!(s.lambda_domain, LambdaDomain::UpToMinDegree) && lambda > bundle.min_degree;
                let result = if beyond {
                    evaluate_beyond_delta(&bundle, &cycles, s, lambda, mode)
                } else {
                    evaluate(&bundle, &cycles, s, lambda, mode)
                }
                .map_err(|e| Failure::Usage(e.to_string()))?;
                if result.verdict == Verdict::Violated && s.status == Status::Proved && !beyond {
                    code = exit::PROVED_VIOLATION;
                }
                let record = CheckRecord {
                    index,
                    graph6: graph6.clone(),
                    beyond_delta: beyond,
                    result,
                };
                match a.format {
                    Format::Json => write_record(out, &Record::Check(record))?,
                    Format::Table => out.write_all(check_row(&record).as_bytes())?,
                }
            }
        }
    }
    Ok(code)
}

fn check_row(r: &CheckRecord) -> String {
    let c: &CheckResult = &r.result;
    let m = &c.hypothesis_margin;
    let dash = || "-".to_string();
    let verdict = if r.beyond_delta {
        format!("{}*", c.verdict)
    } else {
        c.verdict.to_string()
    };
    format!(
        "{:<6} {:<6} {:>3} {:<17} {:>6} {:>8} {:>8} {:>10}  {}\n",
        r.index,
        c.statement,
        c.lambda,
        verdict,
        m.connectivity,
        m.degree.map_or_else(dash, |d| d.to_string()),
        m.residual.map_or_else(dash, |d| d.to_string()),
        c.conclusion_margin.map_or_else(dash, |d| d.to_string()),
        c.witness.as_ref().map_or_else(dash, |w| w.to_string())
    )
}

fn cmd_scan(a: args::ScanArgs, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let statements = parse_statements(&a.selection.statements)?;
    let lambda_policy = parse_lambda(&a.selection.lambda)?;
    if a.budget_ms == 0 {
        return Err(Failure::Usage("--budget-ms must be positive".into()));
    }
    let workers = match a.workers {
        Some(0) => return Err(Failure::Usage("--workers must be positive".into())),
        Some(w) => w,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let source = match &a.input {
        Some(path) => GraphSource::Graphs(read_graph_file(path, stdin)?),
        None => GraphSource::Generated {
            n_min: a.n_min,
            n_max: a.n_max.expect("clap requires --n-max without --input"),
            connected: a.connected,
            min_degree: a.min_degree,
            dedup: !a.labeled,
        },
    };
    let job = ScanJob {
        source,
        statements,
        lambda_policy,
        beyond_delta: a.selection.beyond_delta,
        mode: quantifier(a.selection.mode),
        limits: Limits {
            budget: Some(Duration::from_millis(a.budget_ms)),
            enumeration_cap: a.enum_cap,
        },
        workers,
    };
    let run = if a.tight_only { find_tight(&job) } else { scan(&job) };
    let report = run.map_err(|e| match e {
        SearchError::Read { .. } | SearchError::Io(_) => Failure::Io(e.to_string()),
        e => Failure::Usage(e.to_string()),
    })?;
    let mut file;
    let sink: &mut dyn Write = match &a.output {
        Some(path) => {
            file = io::BufWriter::new(File::create(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?);
            &mut file
        }
        None => out,
    };
    match a.format {
        Format::Json => report.write_json_lines(&mut *sink)?,
        Format::Table => sink.write_all(report.summary_table().as_bytes())?,
    }
    sink.flush()?;
    for s in &report.skipped {
        writeln!(err, "skipped graph {} ({}): {}", s.index, s.graph6, s.reason)?;
    }
    let proved = report.proved_violations().count();
    if proved > 0 {
        writeln!(err, "{proved} violations of proved statements")?;
    }
    Ok(report.exit_code())
}

fn cmd_identities(a: args::IdentitiesArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.delta_max < 1 || a.n_max < 1 {
        return Err(Failure::Usage("--delta-max and --n-max must be positive".into()));
    }
    let sweep = sweep_identities(a.delta_max, a.n_max);
    let all_hold = sweep.all_hold();
    match a.format {
        Format::Json => {
            header(out, "identities")?;
            write_record(
                out,
                &Record::Identities(IdentityRecord {
                    delta_max: a.delta_max,
                    n_max: a.n_max,
                    all_hold,
                    sweep,
                }),
            )?;
        }
        Format::Table => {
            writeln!(
                out,
                "degree identity: {} cases (n ≤ {}, δ ≤ {}), {} failures",
                sweep.degree_cases,
                a.n_max,
                a.delta_max,
                sweep.degree_failures.len()
            )?;
            writeln!(
                out,
                "bound identity:  {} cases (δ ≤ {}), {} failures",
                sweep.bound_cases,
                a.delta_max,
                sweep.bound_failures.len()
            )?;
            for (n, d, mu) in &sweep.degree_failures {
                writeln!(out, "  degree identity fails at n={n} δ={d} μ={mu}")?;
            }
            for (d, l) in &sweep.bound_failures {
                writeln!(out, "  bound identity fails at δ={d} λ={l}")?;
            }
            writeln!(out, "{}", if all_hold { "all equivalences hold" } else { "some equivalences fail" })?;
        }
    }
    Ok(exit::OK)
}

fn cmd_catalog(a: args::CatalogArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    match a.format {
        Format::Json => {
            header(out, "catalog")?;
            for s in catalog() {
                write_record(out, &Record::Statement(StatementRecord::from(s)))?;
            }
        }
        Format::Table => {
            for s in catalog() {
                let status = match s.status {
                    Status::Proved => "proved",
                    Status::Open => "open",
                };
                let lambda = match s.lambda_domain {
                    LambdaDomain::Fixed(l) => format!("λ={l}"),
                    LambdaDomain::UpToMinDegree => "1≤λ≤δ".to_string(),
                };
                writeln!(out, "{:<5} {:<6} {:<7} {}", s.id, status, lambda, s.formula())?;
            }
        }
    }
    Ok(exit::OK)
}

/// Reads JSON lines produced by `analyze`, `check`, `identities` or `catalog`.
pub fn read_records<R: BufRead>(r: R) -> io::Result<Vec<Record>> {
    r.lines()
        .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
        .map(|l| serde_json::from_str(&l?).map_err(io::Error::from))
        .collect()
}
