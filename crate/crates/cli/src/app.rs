use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use cutspace::generate::{glued_trees, k2m, random_connected, RandomSpec};
use cutspace::{build_gomory_hu, relevant_cuts, Graph, Method};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bench::{
    load_corpus, parse_methods, parse_weight_set, run_bench, summary_table, write_csv, BenchConfig,
    RandomCorpus,
};
use crate::error::{exit, CliError};
use crate::format::{parse_graph, write_graph};
use crate::output::{cuts_json, cuts_text, tree_text};

#[derive(Debug, Parser)]
#[command(name = "cutspace", version, about = "Minimum cut bases and relevant cuts of weighted graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gomory-Hu cut tree as "child parent weight" lines.
    GomoryHu {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Append the canonical side of each tree-edge cut.
        #[arg(long)]
        with_cuts: bool,
    },
    /// All relevant cuts, one "weight <w> side <vertices>" line each.
    Relevant {
        input: PathBuf,
        #[arg(long, default_value = "gus-t")]
        method: Method,
        /// Non-decreasing weight, then lexicographic side.
        #[arg(long)]
        sort: bool,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time methods against each other on a corpus.
    Bench {
        /// Directory of graph files.
        #[arg(long, conflicts_with = "random", required_unless_present = "random")]
        corpus: Option<PathBuf>,
        /// "count,n,degree,w1:w2:..." generated graphs.
        #[arg(long)]
        random: Option<String>,
        #[arg(long, default_value = "gus-t,gus-p,yeh")]
        methods: String,
        #[arg(long, default_value_t = 5)]
        iters: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-graph records as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Spread graphs over threads; timings become incomparable.
        #[arg(long)]
        parallel: bool,
    },
    /// Write a fixture or random graph.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// Vertices (k2m, random) or leaves per tree (gluetree).
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, default_value = "1:2:3")]
        weights: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare every strategy with the exhaustive oracle.
    OracleCheck { input: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    K2m,
    Gluetree,
    Random,
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return e.exit_code();
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if let CliError::Disagreement { dump, .. } = &e {
                let _ = write!(stderr, "offending graph:\n{dump}");
            }
            e.exit_code()
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text)
}

fn emit(output: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::GomoryHu { input, output, with_cuts } => {
            let g = read_graph(&input)?;
            let tree = build_gomory_hu(&g);
            emit(output.as_deref(), &tree_text(&tree, with_cuts), stdout)?;
        }
        Command::Relevant { input, method, sort, json, output } => {
            let g = read_graph(&input)?;
            let set = relevant_cuts(&g, method)?;
            let text = if json { cuts_json(&g, &set, sort) } else { cuts_text(&set, sort) };
            emit(output.as_deref(), &text, stdout)?;
        }
        Command::Bench { corpus, random, methods, iters, seed, csv, parallel } => {
            let methods = parse_methods(&methods)?;
            let graphs = match (corpus, random) {
                (Some(dir), _) => load_corpus(&dir)?,
                (None, Some(spec)) => RandomCorpus::parse(&spec)?.generate(seed),
                (None, None) => unreachable!("clap requires one of --corpus/--random"),
            };
            let report = run_bench(&graphs, &methods, BenchConfig { iters, parallel })?;
            if let Some(path) = csv {
                write_csv(&report.records, std::fs::File::create(path)?)?;
            }
            stdout.write_all(summary_table(&report).as_bytes())?;
        }
        Command::Generate { family, n, seed, degree, weights, output } => {
            let g = generate(family, n, seed, degree, &weights)?;
            emit(output.as_deref(), &write_graph(&g), stdout)?;
        }
        Command::OracleCheck { input } => {
            let g = read_graph(&input)?;
            let oracle = relevant_cuts(&g, Method::Oracle)?;
            let mut bad = Vec::new();
            for m in [Method::GusT, Method::GusP, Method::Yeh] {
                let set = relevant_cuts(&g, m)?;
                let ok = set.same_cuts(&oracle);
                writeln!(stdout, "{m} {} {}", set.len(), if ok { "ok" } else { "MISMATCH" })?;
                if !ok {
                    bad.push(m.name());
                }
            }
            writeln!(stdout, "oracle {}", oracle.len())?;
            if !bad.is_empty() {
                return Err(CliError::Disagreement {
                    graph: input.display().to_string(),
                    detail: format!("{} differ from the oracle", bad.join(", ")),
                    dump: write_graph(&g),
                });
            }
        }
    }
    let _ = stderr.flush();
    Ok(exit::OK)
}

pub fn generate(family: Family, n: usize, seed: u64, degree: usize, weights: &str) -> Result<Graph, CliError> {
    match family {
        Family::K2m => {
            if n < 3 {
                return Err(CliError::BadParams(format!("k2m needs n >= 3, got {n}")));
            }
            Ok(k2m(n)?)
        }
        Family::Gluetree => {
            if n < 2 || !n.is_power_of_two() {
                return Err(CliError::BadParams(format!("gluetree needs a power of two >= 2, got {n}")));
            }
            Ok(glued_trees(n)?.graph)
        }
        Family::Random => {
            if n < 2 {
                return Err(CliError::BadParams(format!("random needs n >= 2, got {n}")));
            }
            if degree < 2 && n > 2 {
                return Err(CliError::BadParams("degree bound must be at least 2".into()));
            }
            let weights = parse_weight_set(weights).map_err(CliError::BadParams)?;
            let mut spec = RandomSpec::chemical(n);
            spec.max_degree = degree;
            spec.weights = weights;
            Ok(random_connected(&mut ChaCha8Rng::seed_from_u64(seed), &spec)?)
        }
    }
}
