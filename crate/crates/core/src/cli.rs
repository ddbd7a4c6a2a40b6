//! Command-line front end.
//!
//! Every command writes its artifact to `--output` (or stdout). Failures are
//! reported as `error[<code>]: <message>` with a distinct exit status per
//! error class; a negative verdict (say, a family that is not G-intersecting)
//! is a successful run.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::{cycle_formula, render_table, BoundReport, Decimal};
use crate::error::{Error, Result};
use crate::family::{
    augment_clique_family, build_clique_family, build_cycle_extremal, check_cross_condition,
    cover_number, find_violation, neighborhood_hypergraph, Hypergraph,
};
use crate::graph::Graph;
use crate::solver::{
    solve_exact, sweep_cycle, verify_extremal_structure, SolveOptions, SweepMode,
    DEFAULT_VERTEX_BUDGET, SWEEP_CSV_HEADER,
};
use crate::vertex_set::VertexSet;

/// Builtin graph families, written `name:n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Empty(usize),
    Cycle(usize),
    Path(usize),
    Complete(usize),
}

impl GraphSpec {
    pub fn build(self) -> Result<Graph> {
        match self {
            GraphSpec::Empty(n) => Graph::empty(n),
            GraphSpec::Cycle(n) => Graph::cycle(n),
            GraphSpec::Path(n) => Graph::path(n),
            GraphSpec::Complete(n) => Graph::complete(n),
        }
    }

    /// `(n, Δ, ω)` without building the graph, so bounds work past 64 vertices.
    pub fn parameters(self) -> Result<(u64, u64, u64)> {
        let (n, delta, omega) = match self {
            GraphSpec::Empty(n) if n >= 1 => (n, 0, 1),
            GraphSpec::Cycle(3) => (3, 2, 3),
            GraphSpec::Cycle(n) if n >= 4 => (n, 2, 2),
            GraphSpec::Path(1) => (1, 0, 1),
            GraphSpec::Path(2) => (2, 1, 2),
            GraphSpec::Path(n) if n >= 3 => (n, 2, 2),
            GraphSpec::Complete(n) if n >= 1 => (n, n - 1, n),
            other => return Err(Error::invalid(format!("graph {other:?} is too small"))),
        };
        Ok((n as u64, delta as u64, omega as u64))
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, n) = s
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("graph {s:?} must look like cycle:8")))?;
        let n: usize = n
            .parse()
            .map_err(|_| Error::invalid(format!("graph {s:?}: {n:?} is not a vertex count")))?;
        match name {
            "empty" => Ok(GraphSpec::Empty(n)),
            "cycle" => Ok(GraphSpec::Cycle(n)),
            "path" => Ok(GraphSpec::Path(n)),
            "complete" => Ok(GraphSpec::Complete(n)),
            other => Err(Error::invalid(format!(
                "unknown graph family {other:?} (expected empty, cycle, path or complete)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Builtin(GraphSpec),
    File(PathBuf),
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph> {
        match self {
            GraphSource::Builtin(spec) => spec.build(),
            GraphSource::File(path) => Graph::parse_edge_list(&read(path)?),
        }
    }

    fn parameters(&self) -> Result<(u64, u64, u64, bool)> {
        match self {
            GraphSource::Builtin(spec) => {
                let (n, delta, omega) = spec.parameters()?;
                Ok((n, delta, omega, matches!(spec, GraphSpec::Cycle(_))))
            }
            GraphSource::File(_) => {
                let g = self.load()?;
                let (omega, _) = g.clique_number();
                Ok((g.n() as u64, g.max_degree() as u64, omega as u64, self.is_cycle(&g)))
            }
        }
    }

    fn is_cycle(&self, g: &Graph) -> bool {
        match self {
            GraphSource::Builtin(GraphSpec::Cycle(_)) => true,
            GraphSource::Builtin(_) => false,
            GraphSource::File(_) => g.n() >= 3 && *g == Graph::cycle(g.n()).expect("n >= 3"),
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

/// Inclusive range written `lo..hi` or as a single value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for Span {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::invalid(format!("{s:?} is not a range like 8..10")))
        };
        let span = match s.split_once("..") {
            Some((lo, hi)) => Span {
                lo: num(lo)?,
                hi: num(hi.trim_start_matches('='))?,
            },
            None => {
                let v = num(s)?;
                Span { lo: v, hi: v }
            }
        };
        if span.lo > span.hi {
            return Err(Error::invalid(format!("range {s:?} is empty")));
        }
        Ok(span)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    /// Every k-set meeting a clique
    Clique,
    /// The cycle construction on C_n
    CycleExtremal,
    /// Clique family plus greedily added pair supersets
    Augmented,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    BoundsOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Bound {
        graph: GraphSource,
        k: usize,
        constant_c: Option<Decimal>,
    },
    Construct {
        family: FamilyKind,
        graph: GraphSource,
        k: usize,
        clique: Option<VertexSet>,
    },
    Verify {
        graph: GraphSource,
        hypergraph: PathBuf,
    },
    Tau {
        hypergraph: PathBuf,
    },
    Solve {
        graph: GraphSource,
        k: usize,
    },
    Sweep {
        n: Span,
        k: Span,
        mode: SweepMode,
    },
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
    pub workers: usize,
    pub budget: usize,
}

#[derive(Debug, Parser)]
#[command(name = "gintersect", version, about = "Exact tools for G-intersecting uniform families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,

    /// Output format (sweep defaults to csv, everything else to text)
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write the artifact here instead of stdout
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Search threads for the exact solver
    #[arg(long, global = true, env = "GINTERSECT_WORKERS", default_value_t = 1)]
    pub workers: usize,

    /// Largest C(n,k) the exact solver will take on
    #[arg(long, global = true, env = "GINTERSECT_BUDGET", default_value_t = DEFAULT_VERTEX_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Builtin graph: empty:n, cycle:n, path:n or complete:n
    #[arg(long)]
    pub graph: Option<String>,

    /// Edge-list file ("n m" header, then "u v" lines)
    #[arg(long)]
    pub graph_file: Option<PathBuf>,
}

impl GraphArgs {
    fn source(&self) -> Result<GraphSource> {
        match (&self.graph, &self.graph_file) {
            (Some(spec), None) => Ok(GraphSource::Builtin(spec.parse()?)),
            (None, Some(path)) => Ok(GraphSource::File(path.clone())),
            (Some(_), Some(_)) => Err(Error::invalid("give either --graph or --graph-file, not both")),
            (None, None) => Err(Error::invalid("a graph is required (--graph or --graph-file)")),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Evaluate every bound and threshold for (G, k)
    Bound {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: usize,
        /// Constant C for the k < C sqrt(n) check
        #[arg(long = "c")]
        constant_c: Option<String>,
    },
    /// Write a clique, cycle or augmented family in hypergraph text format
    Construct {
        #[arg(long, value_enum)]
        family: FamilyKind,
        #[command(flatten)]
        graph: GraphArgs,
        /// Cycle length (shorthand for --graph cycle:N)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
        /// Clique as comma-separated vertices; defaults to the first maximum clique
        #[arg(long)]
        clique: Option<String>,
    },
    /// Check a hypergraph file against a graph
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        hypergraph: PathBuf,
    },
    /// Cover number of a hypergraph file
    Tau {
        #[arg(long)]
        hypergraph: PathBuf,
    },
    /// Exact N(G,k) with a witness and structure report
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: usize,
    },
    /// Sweep the cycle formula (and optionally exact values) over a grid
    Sweep {
        /// Cycle lengths, LO..HI or a single value
        #[arg(long)]
        n: String,
        /// Uniformities, LO..HI or a single value
        #[arg(long)]
        k: String,
        #[arg(long, value_enum, default_value_t = ModeArg::BoundsOnly)]
        mode: ModeArg,
    },
}

fn parse_clique(s: &str) -> Result<VertexSet> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("clique {s:?} must be comma-separated vertices")))
        })
        .try_fold(VertexSet::EMPTY, |mut acc, v| {
            let v = v?;
            if v >= crate::vertex_set::MAX_VERTICES {
                return Err(Error::invalid(format!("vertex {v} out of range")));
            }
            acc.insert(v);
            Ok(acc)
        })
}

impl Cli {
    /// Validates the parsed arguments into a [`RunConfig`].
    pub fn into_config(self) -> Result<RunConfig> {
        if self.workers == 0 {
            return Err(Error::invalid("--workers must be at least 1"));
        }
        let default_format = match self.command {
            CliCommand::Sweep { .. } => OutputFormat::Csv,
            _ => OutputFormat::Text,
        };
        let command = match self.command {
            CliCommand::Bound { graph, k, constant_c } => Command::Bound {
                graph: graph.source()?,
                k,
                constant_c: constant_c.map(|c| c.parse()).transpose()?,
            },
            CliCommand::Construct {
                family,
                graph,
                n,
                k,
                clique,
            } => {
                let graph = match (n, graph.graph.is_some() || graph.graph_file.is_some()) {
                    (Some(n), false) => GraphSource::Builtin(GraphSpec::Cycle(n)),
                    (Some(_), true) => {
                        return Err(Error::invalid("--n is shorthand for --graph cycle:N; give one or the other"))
                    }
                    (None, _) => graph.source()?,
                };
                if family == FamilyKind::CycleExtremal
                    && !matches!(graph, GraphSource::Builtin(GraphSpec::Cycle(_)))
                {
                    return Err(Error::invalid("cycle-extremal needs a cycle (--n N or --graph cycle:N)"));
                }
                Command::Construct {
                    family,
                    graph,
                    k,
                    clique: clique.as_deref().map(parse_clique).transpose()?,
                }
            }
            CliCommand::Verify { graph, hypergraph } => Command::Verify {
                graph: graph.source()?,
                hypergraph,
            },
            CliCommand::Tau { hypergraph } => Command::Tau { hypergraph },
            CliCommand::Solve { graph, k } => Command::Solve {
                graph: graph.source()?,
                k,
            },
            CliCommand::Sweep { n, k, mode } => Command::Sweep {
                n: n.parse()?,
                k: k.parse()?,
                mode: match mode {
                    ModeArg::Exact => SweepMode::Exact,
                    ModeArg::BoundsOnly => SweepMode::BoundsOnly,
                },
            },
        };
        Ok(RunConfig {
            command,
            format: self.format.unwrap_or(default_format),
            output: self.output,
            workers: self.workers,
            budget: self.budget,
        })
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn unsupported(format: OutputFormat, command: &str) -> Error {
    Error::invalid(format!("{command} does not support --format {format:?}").to_lowercase())
}

/// Runs one command. `out` receives the artifact unless the config names an
/// output file.
pub fn run(config: &RunConfig, stdout: &mut dyn Write) -> Result<()> {
    let opts = SolveOptions {
        workers: config.workers,
        budget: config.budget,
    };
    match &config.command {
        Command::Bound { graph, k, constant_c } => {
            let (n, delta, omega, cycle) = graph.parameters()?;
            let report = BoundReport::evaluate(n, *k as u64, delta, omega, cycle, constant_c.clone())?;
            emit(config, stdout, |out| match config.format {
                OutputFormat::Text => Ok(write!(out, "{}", report.to_table())?),
                OutputFormat::Json => write_json(out, &serde_json::to_value(&report).map_err(io::Error::from)?),
                OutputFormat::Csv => Err(unsupported(config.format, "bound")),
            })
        }
        Command::Construct {
            family,
            graph,
            k,
            clique,
        } => {
            let g = graph.load()?;
            let h = match family {
                FamilyKind::CycleExtremal => build_cycle_extremal(g.n(), *k)?,
                FamilyKind::Clique | FamilyKind::Augmented => {
                    let clique = match clique {
                        Some(c) => *c,
                        None => g.clique_number().1[0],
                    };
                    if *family == FamilyKind::Clique {
                        build_clique_family(&g, clique, *k)?
                    } else {
                        augment_clique_family(&g, clique, *k)?
                    }
                }
            };
            let valid = find_violation(&g, &h).is_none();
            let family_name = family.to_possible_value().expect("no skipped variants");
            let summary = [
                format!("family: {}", family_name.get_name()),
                format!("size: {}", h.len()),
                format!("G-intersecting: {}", yes_no(valid)),
            ];
            match config.format {
                OutputFormat::Text => {
                    // comment lines keep the file readable by the hypergraph parser
                    let mut text = String::new();
                    for line in &summary {
                        text.push_str(&format!("# {line}\n"));
                    }
                    text.push_str(&h.to_text());
                    if let Some(path) = &config.output {
                        fs::write(path, text)?;
                        for line in &summary {
                            writeln!(stdout, "{line}")?;
                        }
                        writeln!(stdout, "written: {}", path.display())?;
                    } else {
                        write!(stdout, "{text}")?;
                    }
                    Ok(())
                }
                OutputFormat::Json => emit(config, stdout, |out| {
                    write_json(
                        out,
                        &json!({
                            "family": family_name.get_name(),
                            "n": h.ground_n(),
                            "k": h.uniform_k(),
                            "size": h.len().to_string(),
                            "g_intersecting": valid,
                            "edges": h.edges().iter().map(|e| e.to_vec()).collect::<Vec<_>>(),
                        }),
                    )
                }),
                OutputFormat::Csv => Err(unsupported(config.format, "construct")),
            }
        }
        Command::Verify { graph, hypergraph } => {
            let g = graph.load()?;
            let h = Hypergraph::parse(&read(hypergraph)?)?;
            if h.ground_n() != g.n() {
                return Err(Error::invalid(format!(
                    "hypergraph is on {} vertices but the graph has {}",
                    h.ground_n(),
                    g.n()
                )));
            }
            let violation = find_violation(&g, &h);
            let f = neighborhood_hypergraph(&g, &h);
            let tau = cover_number(&f)?;
            let cross = check_cross_condition(&g, &h);
            let report = match h.uniform_k() {
                Some(k) if k >= 1 => {
                    let (omega, _) = g.clique_number();
                    Some(BoundReport::evaluate(
                        g.n() as u64,
                        k as u64,
                        g.max_degree() as u64,
                        omega as u64,
                        graph.is_cycle(&g),
                        None,
                    )?)
                }
                _ => None,
            };
            let size = num_bigint::BigUint::from(h.len());
            let within = |b: &num_bigint::BigUint| size <= *b;
            emit(config, stdout, |out| match config.format {
                OutputFormat::Text => {
                    let mut rows = vec![
                        ("G-intersecting".to_string(), yes_no(violation.is_none()).to_string()),
                        ("size".into(), h.len().to_string()),
                        ("tau(F)".into(), tau.0.to_string()),
                        ("tau_cover".into(), tau.1.to_string()),
                        ("cross_condition".into(), yes_no(cross).to_string()),
                    ];
                    if let Some((x, y)) = violation {
                        rows.push(("violating_pair".into(), format!("{x} {y}")));
                    }
                    if let Some(r) = &report {
                        rows.push(("ekr".into(), r.ekr.to_string()));
                        rows.push(("theorem2".into(), r.theorem2.to_string()));
                        rows.push(("within_theorem2".into(), yes_no(within(&r.theorem2)).to_string()));
                        if let Some(cf) = &r.cycle_formula {
                            rows.push(("cycle_formula".into(), cf.to_string()));
                        }
                    }
                    Ok(write!(out, "{}", render_table(&rows))?)
                }
                OutputFormat::Json => write_json(
                    out,
                    &json!({
                        "g_intersecting": violation.is_none(),
                        "violating_pair": violation.map(|(x, y)| vec![x.to_vec(), y.to_vec()]),
                        "size": h.len().to_string(),
                        "tau": tau.0.to_string(),
                        "tau_cover": tau.1.to_vec(),
                        "cross_condition": cross,
                        "within_theorem2": report.as_ref().map(|r| within(&r.theorem2)),
                        "bounds": report,
                    }),
                ),
                OutputFormat::Csv => Err(unsupported(config.format, "verify")),
            })
        }
        Command::Tau { hypergraph } => {
            let h = Hypergraph::parse(&read(hypergraph)?)?;
            let (tau, cover) = cover_number(&h)?;
            emit(config, stdout, |out| match config.format {
                OutputFormat::Text => Ok(writeln!(out, "tau: {tau}\ncover: {cover}")?),
                OutputFormat::Json => write_json(
                    out,
                    &json!({ "tau": tau.to_string(), "cover": cover.to_vec(), "edges": h.len().to_string() }),
                ),
                OutputFormat::Csv => Err(unsupported(config.format, "tau")),
            })
        }
        Command::Solve { graph, k } => {
            let g = graph.load()?;
            let result = solve_exact(&g, *k, &opts)?;
            let structure = verify_extremal_structure(&g, *k, &result);
            let formula = if graph.is_cycle(&g) {
                cycle_formula(g.n() as u64, *k as u64).ok()
            } else {
                None
            };
            emit(config, stdout, |out| match config.format {
                OutputFormat::Text => {
                    let mut rows = vec![
                        ("n".to_string(), g.n().to_string()),
                        ("k".into(), k.to_string()),
                        ("value".into(), result.value.to_string()),
                        ("nodes".into(), result.stats.nodes.to_string()),
                        ("wall_time_ms".into(), format!("{:.3}", result.stats.wall_time.as_secs_f64() * 1e3)),
                        ("omega".into(), structure.omega.to_string()),
                        ("delta".into(), structure.delta.to_string()),
                        ("maximum_cliques".into(), structure.maximum_cliques.len().to_string()),
                        (
                            "qualifying_cliques".into(),
                            structure
                                .qualifying_cliques
                                .iter()
                                .map(|c| c.to_string())
                                .collect::<Vec<_>>()
                                .join(" "),
                        ),
                        ("any_qualifies".into(), yes_no(structure.any_qualifies).to_string()),
                        (
                            "theorem2".into(),
                            structure.theorem2_bound.as_ref().map_or("-".into(), |b| b.to_string()),
                        ),
                        (
                            "within_theorem2".into(),
                            structure.within_theorem2.map_or("-", yes_no).to_string(),
                        ),
                        ("lemma1_ok".into(), structure.lemma1_ok.to_string()),
                        ("lemma2_ok".into(), structure.lemma2_ok.to_string()),
                    ];
                    if let Some(f) = &formula {
                        rows.push(("cycle_formula".into(), f.to_string()));
                    }
                    write!(out, "{}", render_table(&rows))?;
                    writeln!(out, "witness:")?;
                    for e in result.witness.edges() {
                        writeln!(out, "  {e}")?;
                    }
                    Ok(())
                }
                OutputFormat::Json => {
                    let mut v = serde_json::to_value(&result).map_err(io::Error::from)?;
                    v["structure"] = serde_json::to_value(&structure).map_err(io::Error::from)?;
                    v["cycle_formula"] = json!(formula.map(|f| f.to_string()));
                    write_json(out, &v)
                }
                OutputFormat::Csv => Err(unsupported(config.format, "solve")),
            })
        }
        Command::Sweep { n, k, mode } => emit(config, stdout, |out| {
            let ranges = ((n.lo, n.hi), (k.lo, k.hi));
            match config.format {
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(out);
                    w.write_record(SWEEP_CSV_HEADER).map_err(csv_err)?;
                    w.flush()?;
                    sweep_cycle(ranges.0, ranges.1, *mode, &opts, |row| {
                        w.write_record(row.csv_record()).map_err(csv_err)?;
                        Ok(w.flush()?)
                    })
                }
                OutputFormat::Json => sweep_cycle(ranges.0, ranges.1, *mode, &opts, |row| {
                    // one object per line so rows can be consumed while the sweep runs
                    serde_json::to_writer(&mut *out, row).map_err(io::Error::from)?;
                    writeln!(out)?;
                    Ok(out.flush()?)
                }),
                OutputFormat::Text => {
                    writeln!(out, "{}", SWEEP_CSV_HEADER.join("\t"))?;
                    sweep_cycle(ranges.0, ranges.1, *mode, &opts, |row| {
                        writeln!(out, "{}", row.csv_record().join("\t"))?;
                        Ok(out.flush()?)
                    })
                }
            }
        }),
    }
}

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Io(io::Error::other(format!("{other:?}"))),
    }
}

// Sends the artifact to the output file when one is configured, else to `stdout`.
fn emit<F>(config: &RunConfig, stdout: &mut dyn Write, body: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    match &config.output {
        Some(_) => {
            let mut out = open_output(&config.output)?;
            body(&mut *out)?;
            out.flush()?;
        }
        None => {
            body(stdout)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> Result<RunConfig> {
        let mut full = vec!["gintersect"];
        full.extend_from_slice(args);
        Cli::try_parse_from(full)
            .map_err(|e| Error::invalid(e.to_string()))?
            .into_config()
    }

    fn run_to_string(args: &[&str]) -> Result<String> {
        let cfg = config(args)?;
        let mut buf = Vec::new();
        run(&cfg, &mut buf)?;
        Ok(String::from_utf8(buf).unwrap())
    }

    #[test]
    fn graph_specs() {
        assert_eq!("cycle:8".parse::<GraphSpec>().unwrap(), GraphSpec::Cycle(8));
        assert_eq!("complete:3".parse::<GraphSpec>().unwrap(), GraphSpec::Complete(3));
        assert!("wheel:5".parse::<GraphSpec>().is_err());
        assert!("cycle".parse::<GraphSpec>().is_err());
        assert!("cycle:x".parse::<GraphSpec>().is_err());
    }

    #[test]
    fn builtin_parameters_match_graphs() {
        for n in 1..=12 {
            for spec in [GraphSpec::Empty(n), GraphSpec::Cycle(n), GraphSpec::Path(n), GraphSpec::Complete(n)] {
                let Ok(g) = spec.build() else { continue };
                let (omega, _) = g.clique_number();
                assert_eq!(
                    spec.parameters().unwrap(),
                    (n as u64, g.max_degree() as u64, omega as u64),
                    "{spec:?}"
                );
            }
        }
    }

    #[test]
    fn spans() {
        assert_eq!("8..10".parse::<Span>().unwrap(), Span { lo: 8, hi: 10 });
        assert_eq!("8..=10".parse::<Span>().unwrap(), Span { lo: 8, hi: 10 });
        assert_eq!("5".parse::<Span>().unwrap(), Span { lo: 5, hi: 5 });
        assert!("10..8".parse::<Span>().is_err());
        assert!("a..b".parse::<Span>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(config(&["solve", "--k", "2"]).is_err());
        assert!(config(&["solve", "--graph", "cycle:5", "--graph-file", "x", "--k", "2"]).is_err());
        assert!(config(&["solve", "--graph", "cycle:5", "--k", "2", "--workers", "0"]).is_err());
        assert!(config(&["construct", "--family", "cycle-extremal", "--graph", "path:8", "--k", "2"]).is_err());
        let cfg = config(&["sweep", "--n", "8..10", "--k", "2"]).unwrap();
        assert_eq!(cfg.format, OutputFormat::Csv);
        let cfg = config(&["solve", "--graph", "cycle:8", "--k", "2"]).unwrap();
        assert_eq!(cfg.format, OutputFormat::Text);
        assert_eq!(
            cfg.command,
            Command::Solve {
                graph: GraphSource::Builtin(GraphSpec::Cycle(8)),
                k: 2
            }
        );
    }

    #[test]
    fn bound_table_mentions_cycle_formula() {
        let text = run_to_string(&["bound", "--graph", "cycle:100", "--k", "5"]).unwrap();
        let expected = cycle_formula(100, 5).unwrap().to_string();
        assert!(text.lines().any(|l| l.starts_with("cycle_formula") && l.ends_with(&expected)), "{text}");
    }

    #[test]
    fn tau_rejects_csv() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("h.txt");
        fs::write(&path, "3 2 0\n0 1\n1 2\n").unwrap();
        let p = path.to_str().unwrap();
        assert_eq!(run_to_string(&["tau", "--hypergraph", p]).unwrap(), "tau: 1\ncover: {1}\n");
        assert!(run_to_string(&["tau", "--hypergraph", p, "--format", "csv"]).is_err());
    }
}
