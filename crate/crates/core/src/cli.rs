//! Command-line front end. [`run`] does all the work so that it can be
//! driven from tests; the binary only forwards process arguments.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerate::{binomial_bound, enumerate_important_with, Parallelism};
use crate::error::{Error, Result};
use crate::flow::min_separator;
use crate::format::GraphFile;
use crate::graph::{VertexId, VertexSet};
use crate::mwc::{lower_bound_m, solve_above_guarantee_with, MwcInstance};
use crate::oracle::corpus::{Corpus, Mode};
use crate::oracle::{oracle_important, oracle_isolating_sizes, oracle_min_multiway_cut};

#[derive(Debug, Parser)]
#[command(name = "impsep", version, about = "Important vertex separators and vertex multiway cut")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum X-Y separator size and one minimum separator
    Minsep {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// All important X-Y separators of excess at most K
    Important {
        file: PathBuf,
        #[arg(long = "max-excess", value_name = "K")]
        max_excess: usize,
        #[arg(long)]
        json: bool,
        /// Evaluate candidates on the calling thread only
        #[arg(long)]
        sequential: bool,
    },
    /// Decide whether a multiway cut of size at most m + K exists
    Mwc {
        file: PathBuf,
        #[arg(long, value_name = "K")]
        excess: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Brute-force reference answers
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Write instance files for test harnesses
    Corpus(CorpusArgs),
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Important separators of at most MAX_SIZE vertices
    Important {
        file: PathBuf,
        max_size: usize,
        #[arg(long)]
        json: bool,
    },
    /// Minimum multiway cut; with --excess, a decision against m + K
    Mwc {
        file: PathBuf,
        #[arg(long, value_name = "K")]
        excess: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CorpusMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Args)]
struct CorpusArgs {
    #[arg(long)]
    seed: u64,
    /// Largest number of vertices
    #[arg(long)]
    n: usize,
    /// Number of instances; exhaustive mode emits all when omitted
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, value_enum)]
    mode: CorpusMode,
    /// Smallest number of vertices (random mode)
    #[arg(long = "min-n", default_value_t = 2)]
    min_n: usize,
    /// Edge probability (random mode)
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Terminal set size (random mode), 0 for none
    #[arg(long, default_value_t = 3)]
    terminals: usize,
    /// Prefer pairwise non-adjacent terminals (random mode)
    #[arg(long = "separated-terminals")]
    separated_terminals: bool,
    /// Directory for one file per instance; standard output otherwise
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    No = 1,
    Failure = 2,
}

#[derive(Debug, Serialize)]
struct SeparatorJson {
    vertices: Vec<VertexId>,
    excess: usize,
}

#[derive(Debug, Serialize)]
struct ImportantJson {
    n: usize,
    r: usize,
    max_excess: usize,
    count: usize,
    bound: String,
    separators: Vec<SeparatorJson>,
}

#[derive(Debug, Serialize)]
struct MinsepJson {
    n: usize,
    r: usize,
    separator: Vec<VertexId>,
}

#[derive(Debug, Serialize)]
struct MwcJson {
    n: usize,
    m: usize,
    terminal: VertexId,
    excess: Option<usize>,
    feasible: bool,
    cut: Option<Vec<VertexId>>,
}

fn load(path: &PathBuf) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
    GraphFile::parse(&text)
}

fn ids_line(set: &VertexSet) -> String {
    set.iter().map(VertexId::to_string).collect::<Vec<_>>().join(" ")
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    let text = serde_json::to_string(value).expect("plain data serializes");
    writeln!(out, "{text}")
}

fn sort_canonical(sets: &mut [VertexSet]) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

fn write_separators(out: &mut dyn Write, n: usize, r: usize, k: usize, sets: &[VertexSet], json: bool) -> std::io::Result<()> {
    let bound = binomial_bound(n, k);
    if json {
        let separators = sets.iter().map(|s| SeparatorJson { vertices: s.iter().copied().collect(), excess: s.len() - r }).collect();
        // the bound can exceed what JSON numbers represent exactly
        let doc = ImportantJson { n, r, max_excess: k, count: sets.len(), bound: bound.to_string(), separators };
        return json_line(out, &doc);
    }
    for s in sets {
        writeln!(out, "{}", ids_line(s))?;
    }
    writeln!(out, "count {}", sets.len())?;
    writeln!(out, "bound {bound}")
}

fn write_mwc(out: &mut dyn Write, doc: &MwcJson, json: bool) -> std::io::Result<()> {
    if json {
        return json_line(out, doc);
    }
    match &doc.cut {
        Some(cut) if doc.feasible => {
            let ids: Vec<String> = cut.iter().map(VertexId::to_string).collect();
            writeln!(out, "{}", ["YES".to_string()].into_iter().chain(ids).collect::<Vec<_>>().join(" "))?;
        }
        _ => writeln!(out, "NO")?,
    }
    writeln!(out, "m {}", doc.m)?;
    writeln!(out, "terminal {}", doc.terminal)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<Status> {
    let io = |e: std::io::Error| Error::invalid(format!("write failed: {e}"));
    match cli.command {
        Command::Minsep { file, json } => {
            let f = load(&file)?;
            let (x, y) = f.source_target()?;
            let k = min_separator(&f.graph, x, y)?;
            if json {
                let doc = MinsepJson { n: f.graph.vertex_count(), r: k.len(), separator: k.cut().iter().copied().collect() };
                json_line(out, &doc).map_err(io)?;
            } else {
                writeln!(out, "size {}", k.len()).map_err(io)?;
                writeln!(out, "{}", ids_line(k.cut())).map_err(io)?;
            }
            Ok(Status::Success)
        }
        Command::Important { file, max_excess, json, sequential } => {
            let f = load(&file)?;
            let (x, y) = f.source_target()?;
            let mode = if sequential { Parallelism::Sequential } else { Parallelism::Parallel };
            let found = enumerate_important_with(&f.graph, x, y, max_excess, mode)?;
            let r = found[0].len();
            let mut sets: Vec<VertexSet> = found.into_iter().map(|s| s.into_cut()).collect();
            sort_canonical(&mut sets);
            write_separators(out, f.graph.vertex_count(), r, max_excess, &sets, json).map_err(io)?;
            Ok(Status::Success)
        }
        Command::Mwc { file, excess, json, sequential } => {
            let f = load(&file)?;
            let inst = MwcInstance::new(f.graph.clone(), f.terminal_set()?.clone())?;
            let (m, terminal) = lower_bound_m(&inst)?;
            let mode = if sequential { Parallelism::Sequential } else { Parallelism::Parallel };
            let cert = solve_above_guarantee_with(&inst, excess, mode)?;
            let doc = MwcJson {
                n: f.graph.vertex_count(),
                m,
                terminal,
                excess: Some(excess),
                feasible: cert.is_some(),
                cut: cert.map(|c| c.into_cut().into_iter().collect()),
            };
            write_mwc(out, &doc, json).map_err(io)?;
            Ok(if doc.feasible { Status::Success } else { Status::No })
        }
        Command::Oracle(OracleCommand::Important { file, max_size, json }) => {
            let f = load(&file)?;
            let (x, y) = f.source_target()?;
            let all = oracle_important(&f.graph, x, y, f.graph.vertex_count())?;
            let Some(r) = all.iter().map(VertexSet::len).min() else {
                return Err(Error::NoSeparatorExists);
            };
            let mut sets: Vec<VertexSet> = all.into_iter().filter(|s| s.len() <= max_size).collect();
            sort_canonical(&mut sets);
            write_separators(out, f.graph.vertex_count(), r, max_size.saturating_sub(r), &sets, json).map_err(io)?;
            Ok(Status::Success)
        }
        Command::Oracle(OracleCommand::Mwc { file, excess, json }) => {
            let f = load(&file)?;
            let inst = MwcInstance::new(f.graph.clone(), f.terminal_set()?.clone())?;
            let Some((size, cert)) = oracle_min_multiway_cut(&inst)? else {
                let ts: Vec<VertexId> = inst.terminals().iter().copied().collect();
                let (u, v) = ts
                    .iter()
                    .flat_map(|&u| ts.iter().map(move |&v| (u, v)))
                    .find(|&(u, v)| u < v && inst.graph().is_adjacent(u, v))
                    .expect("infeasible only with adjacent terminals");
                return Err(Error::AdjacentTerminals(u, v));
            };
            let sizes = oracle_isolating_sizes(&inst)?;
            let (mut m, mut terminal) = (0, sizes[0].0);
            for (t, s) in sizes {
                let s = s.expect("terminals are not adjacent");
                if s > m {
                    (m, terminal) = (s, t);
                }
            }
            let feasible = excess.is_none_or(|k| size <= m + k);
            let doc = MwcJson {
                n: f.graph.vertex_count(),
                m,
                terminal,
                excess,
                feasible,
                cut: feasible.then(|| cert.cut().iter().copied().collect()),
            };
            write_mwc(out, &doc, json).map_err(io)?;
            Ok(if feasible { Status::Success } else { Status::No })
        }
        Command::Corpus(args) => {
            let mode = match args.mode {
                CorpusMode::Exhaustive => Mode::Exhaustive,
                CorpusMode::Random => Mode::Random,
            };
            let corpus = Corpus {
                seed: args.seed,
                mode,
                n: args.n,
                min_n: args.min_n,
                edge_prob: args.p,
                count: args.count.unwrap_or(if mode == Mode::Random { 100 } else { 0 }),
                terminals: args.terminals,
                separated_terminals: args.separated_terminals,
            };
            let mut files = corpus.instances()?;
            if let (Mode::Exhaustive, Some(c)) = (mode, args.count) {
                files.truncate(c);
            }
            match &args.out {
                Some(dir) => {
                    std::fs::create_dir_all(dir).map_err(|e| Error::invalid(format!("cannot create {}: {e}", dir.display())))?;
                    for (i, f) in files.iter().enumerate() {
                        let path = dir.join(format!("instance-{i:06}.txt"));
                        std::fs::write(&path, format!("c seed {} index {i}\n{f}", args.seed))
                            .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?;
                    }
                    writeln!(out, "wrote {} instances to {}", files.len(), dir.display()).map_err(io)?;
                }
                None => {
                    for (i, f) in files.iter().enumerate() {
                        write!(out, "c seed {} index {i}\n{f}", args.seed).map_err(io)?;
                    }
                }
            }
            Ok(Status::Success)
        }
    }
}

/// Parses `args` (program name first), runs the command and reports errors
/// on `err`.
pub fn run<'a, I, T>(args: I, out: &'a mut dyn Write, err: &'a mut dyn Write) -> Status
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { Status::Failure } else { Status::Success };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return status;
        }
    };
    match execute(cli, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            Status::Failure
        }
    }
}
