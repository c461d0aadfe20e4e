//! Benchmark harness: every method on every graph, `iters` times, with the
//! cut sets cross-checked before any timing is reported.

use std::fmt::Write as _;
use std::path::Path;
use std::thread;
use std::time::{Duration, Instant};

use cutspace::generate::{random_connected, RandomSpec};
use cutspace::{relevant_cuts, Graph, Method, RelevantCutSet, Weight};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;
use crate::format::{parse_graph, parse_weight, write_graph};

type RunFn = dyn Fn(&Graph) -> cutspace::Result<RelevantCutSet> + Send + Sync;

/// A named enumeration routine. Tests build faulty ones to exercise the
/// disagreement path.
pub struct BenchMethod {
    pub name: String,
    pub run: Box<RunFn>,
}

impl BenchMethod {
    pub fn standard(method: Method) -> Self {
        BenchMethod {
            name: method.name().to_string(),
            run: Box::new(move |g| relevant_cuts(g, method)),
        }
    }

    pub fn custom<F>(name: &str, run: F) -> Self
    where
        F: Fn(&Graph) -> cutspace::Result<RelevantCutSet> + Send + Sync + 'static,
    {
        BenchMethod { name: name.to_string(), run: Box::new(run) }
    }
}

/// Parses `gus-t,gus-p,yeh`.
pub fn parse_methods(list: &str) -> Result<Vec<BenchMethod>, CliError> {
    let mut out: Vec<BenchMethod> = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let m: Method = name.parse().map_err(CliError::BadParams)?;
        if out.iter().any(|b| b.name == m.name()) {
            return Err(CliError::BadParams(format!("method {name} listed twice")));
        }
        out.push(BenchMethod::standard(m));
    }
    if out.is_empty() {
        return Err(CliError::BadParams("no methods given".into()));
    }
    Ok(out)
}

pub struct NamedGraph {
    pub id: String,
    pub graph: Graph,
}

/// Every regular file in `dir`, sorted by name.
pub fn load_corpus(dir: &Path) -> Result<Vec<NamedGraph>, CliError> {
    let mut paths = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let entry = entry?;
        if entry.file_type()?.is_file() {
            paths.push(entry.path());
        }
    }
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p)?;
            let graph = parse_graph(&text).map_err(|e| CliError::InFile {
                path: p.display().to_string(),
                inner: Box::new(e),
            })?;
            let id = p.file_name().unwrap().to_string_lossy().into_owned();
            Ok(NamedGraph { id, graph })
        })
        .collect()
}

/// `count,n,degree,w1:w2:...`
#[derive(Debug, Clone)]
pub struct RandomCorpus {
    pub count: usize,
    pub spec: RandomSpec,
}

impl RandomCorpus {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let bad = |why: &str| CliError::BadParams(format!("random spec {text:?}: {why}"));
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(bad("expected count,n,degree,weights"));
        }
        let num = |s: &str, what: &str| s.parse::<usize>().map_err(|_| bad(&format!("invalid {what}")));
        let count = num(parts[0], "count")?;
        let n = num(parts[1], "n")?;
        let degree = num(parts[2], "degree")?;
        if n < 2 {
            return Err(bad("n must be at least 2"));
        }
        if degree < 2 && n > 2 {
            return Err(bad("degree bound must be at least 2"));
        }
        let weights = parse_weight_set(parts[3]).map_err(|e| bad(&e))?;
        let mut spec = RandomSpec::chemical(n);
        spec.max_degree = degree;
        spec.weights = weights;
        Ok(RandomCorpus { count, spec })
    }

    pub fn generate(&self, seed: u64) -> Vec<NamedGraph> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..self.count)
            .map(|i| NamedGraph {
                id: format!("random-{i:04}"),
                graph: random_connected(&mut rng, &self.spec).expect("spec validated"),
            })
            .collect()
    }
}

/// `1:2:3`; each entry must be positive.
pub fn parse_weight_set(text: &str) -> Result<Vec<Weight>, String> {
    let mut out = Vec::new();
    for tok in text.split(':') {
        let w = parse_weight(tok)?;
        if w <= Weight::from_integer(0) {
            return Err(format!("weight {tok} is not positive"));
        }
        out.push(w);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub method: String,
    pub count: usize,
    /// Mean seconds per run.
    pub wall_time: f64,
    pub flow_calls: u64,
    pub iters: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodTotal {
    pub method: String,
    pub total_time: f64,
    pub fastest: usize,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    pub totals: Vec<MethodTotal>,
    pub graphs: usize,
    pub parallel: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct BenchConfig {
    pub iters: usize,
    /// Spread graphs over threads. Each method still runs single-threaded,
    /// but timings are no longer comparable.
    pub parallel: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig { iters: 5, parallel: false }
    }
}

pub fn run_bench(
    graphs: &[NamedGraph],
    methods: &[BenchMethod],
    cfg: BenchConfig,
) -> Result<BenchReport, CliError> {
    if methods.is_empty() {
        return Err(CliError::BadParams("no methods given".into()));
    }
    if cfg.iters == 0 {
        return Err(CliError::BadParams("--iters must be at least 1".into()));
    }
    let per_graph: Vec<Vec<BenchRecord>> = if cfg.parallel {
        let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(graphs.len().max(1));
        let chunk = graphs.len().div_ceil(workers).max(1);
        thread::scope(|scope| {
            let handles: Vec<_> = graphs
                .chunks(chunk)
                .map(|part| {
                    scope.spawn(move || {
                        part.iter()
                            .map(|g| bench_graph(g, methods, cfg.iters))
                            .collect::<Result<Vec<_>, _>>()
                    })
                })
                .collect();
            let mut out = Vec::new();
            for h in handles {
                out.extend(h.join().expect("bench worker panicked")?);
            }
            Ok::<_, CliError>(out)
        })?
    } else {
        graphs
            .iter()
            .map(|g| bench_graph(g, methods, cfg.iters))
            .collect::<Result<_, _>>()?
    };

    let mut totals: Vec<MethodTotal> = methods
        .iter()
        .map(|m| MethodTotal { method: m.name.clone(), total_time: 0.0, fastest: 0 })
        .collect();
    for recs in &per_graph {
        let mut best = 0;
        for (i, r) in recs.iter().enumerate() {
            totals[i].total_time += r.wall_time;
            if r.wall_time < recs[best].wall_time {
                best = i;
            }
        }
        totals[best].fastest += 1;
    }
    Ok(BenchReport {
        records: per_graph.into_iter().flatten().collect(),
        totals,
        graphs: graphs.len(),
        parallel: cfg.parallel,
    })
}

fn bench_graph(g: &NamedGraph, methods: &[BenchMethod], iters: usize) -> Result<Vec<BenchRecord>, CliError> {
    let mut reference: Option<(usize, RelevantCutSet)> = None;
    let mut records = Vec::with_capacity(methods.len());
    for (i, m) in methods.iter().enumerate() {
        let mut elapsed = Duration::ZERO;
        let mut last = None;
        for _ in 0..iters {
            let start = Instant::now();
            let set = (m.run)(&g.graph)?;
            elapsed += start.elapsed();
            check(g, methods, &mut reference, i, &set)?;
            last = Some(set);
        }
        let set = last.expect("iters >= 1");
        records.push(BenchRecord {
            graph_id: g.id.clone(),
            n: g.graph.n(),
            m: g.graph.m(),
            method: m.name.clone(),
            count: set.len(),
            wall_time: elapsed.as_secs_f64() / iters as f64,
            flow_calls: set.stats.flow_calls,
            iters,
        });
    }
    Ok(records)
}

fn check(
    g: &NamedGraph,
    methods: &[BenchMethod],
    reference: &mut Option<(usize, RelevantCutSet)>,
    i: usize,
    set: &RelevantCutSet,
) -> Result<(), CliError> {
    let Some((j, r)) = reference else {
        *reference = Some((i, set.clone()));
        return Ok(());
    };
    if r.same_cuts(set) {
        return Ok(());
    }
    let missing = r.iter().filter(|c| !set.contains(c)).count();
    let extra = set.iter().filter(|c| !r.contains(c)).count();
    Err(CliError::Disagreement {
        graph: g.id.clone(),
        detail: format!(
            "{} has {} cuts, {} has {} ({missing} missing, {extra} extra)",
            methods[*j].name,
            r.len(),
            methods[i].name,
            set.len()
        ),
        dump: write_graph(&g.graph),
    })
}

pub fn write_csv<W: std::io::Write>(records: &[BenchRecord], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(|e| CliError::Io(e.into()))?;
    }
    w.flush()?;
    Ok(())
}

/// Total time and fastest-method tally per method.
pub fn summary_table(report: &BenchReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graphs: {}", report.graphs);
    if report.parallel {
        let _ = writeln!(out, "note: --parallel run; timings are not comparable");
    }
    let _ = writeln!(out, "{:<10} {:>16} {:>16}", "method", "total time [s]", "fastest [graphs]");
    for t in &report.totals {
        let _ = writeln!(out, "{:<10} {:>16.6} {:>16}", t.method, t.total_time, t.fastest);
    }
    out
}
