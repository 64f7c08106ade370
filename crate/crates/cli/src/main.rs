//! `orbital`: build orbital networks, measure them and run parameter sweeps.

mod lists;
mod reproduce;
mod sweep;

use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orbital_core::experiments::{
    check_bipartite_proposition, check_symmetry_proposition, component_matrix, squaring_structure,
    DEFAULT_ISO_BUDGET, DEFAULT_MATRIX_BUDGET,
};
use orbital_core::formats::{
    edge_list_string, export_dot, load_edge_list, save_edge_list, stats_to_json, write_sweep_csv,
    write_sweep_csv_to,
};
use orbital_core::metrics::{ClusteringConvention, PathConvention};
use orbital_core::{
    build_orbital_graph, compute_stats, generate_baseline, parse_map_list, BaselineModel,
    BaselineSpec, Modulus, OrbitalGraph, StatsOptions,
};

#[derive(Parser, Debug)]
#[command(name = "orbital", version, about = "Orbital networks on Z_n: construction, statistics and sweeps")]
struct Cli {
    /// Worker threads; output never depends on this.
    #[arg(long, global = true, env = "ORBITAL_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the graph of a map family and write it as an edge list or DOT.
    Generate {
        #[arg(long)]
        n: u64,
        /// Maps separated by ';', e.g. "x^2+1;x^2+2".
        #[arg(long)]
        maps: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
    /// Print the statistics of one graph as JSON.
    Stats {
        /// Edge-list file to measure instead of a map family.
        #[arg(long = "in", conflicts_with_all = ["n", "maps"])]
        input: Option<PathBuf>,
        #[arg(long, requires = "maps")]
        n: Option<u64>,
        #[arg(long, requires = "n")]
        maps: Option<String>,
        #[command(flatten)]
        metrics: MetricArgs,
    },
    /// Run a named experiment and write its table as CSV.
    Sweep(sweep::SweepArgs),
    /// Generate a seeded random comparison graph and print its statistics.
    Baseline {
        /// er(n,p), ws(n,k,p), ba(n,k) or perm(n,d).
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also save the graph as an edge list.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        metrics: MetricArgs,
    },
    /// Component counts of x^2+a, x^2+b on Z_n for all pairs a <= b.
    Matrix {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MATRIX_BUDGET)]
        budget: u64,
    },
    /// Check a structural statement on one instance and print the verdict.
    ///
    /// Exits with status 1 when the statement fails on the instance.
    Check {
        #[arg(long, value_enum)]
        proposition: Proposition,
        #[arg(long)]
        n: u64,
        /// Quadratic shifts, e.g. "2,6,16".
        #[arg(long, required_if_eq_any = [("proposition", "1"), ("proposition", "2")])]
        shifts: Option<String>,
        /// Search-node budget for isomorphism tests.
        #[arg(long, default_value_t = DEFAULT_ISO_BUDGET)]
        budget: u64,
    },
    /// Regenerate the data behind one of the reference figures.
    Reproduce(reproduce::ReproduceArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GraphFormat {
    Edges,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Proposition {
    /// Even shifts on even n: two isomorphic halves.
    #[value(name = "1")]
    Symmetry,
    /// Odd shifts on even n: bipartite, hence triangle free.
    #[value(name = "2")]
    Bipartite,
    /// Fixed points and cycle lengths of x -> x^2.
    Squaring,
}

#[derive(clap::Args, Debug, Clone)]
struct MetricArgs {
    /// Skip clique counts, curvature and dimension.
    #[arg(long)]
    fast: bool,
    /// Clustering coefficient used for lambda.
    #[arg(long, value_enum, default_value_t = ClusteringArg::Global)]
    clustering: ClusteringArg,
    /// Average path lengths over the largest component only.
    #[arg(long)]
    largest_component: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ClusteringArg {
    Global,
    MeanLocal,
}

impl MetricArgs {
    fn options(&self) -> StatsOptions {
        let base = if self.fast { StatsOptions::fast() } else { StatsOptions::default() };
        StatsOptions {
            clustering_convention: match self.clustering {
                ClusteringArg::Global => ClusteringConvention::Global,
                ClusteringArg::MeanLocal => ClusteringConvention::MeanLocal,
            },
            path_convention: if self.largest_component {
                PathConvention::LargestComponent
            } else {
                PathConvention::AllReachable
            },
            ..base
        }
    }
}

/// Failure of a command, mapped to the process exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flag values; exit status 2.
    Usage(String),
    /// The computation itself failed or a checked statement is false; exit status 1.
    Domain(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<orbital_core::Error> for CliError {
    fn from(e: orbital_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            log::warn!("could not size the worker pool: {e}");
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("orbital: {e}");
            ExitCode::from(match e {
                CliError::Usage(_) => 2,
                CliError::Domain(_) => 1,
            })
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Generate { n, maps, out, format } => {
            let g = orbital_graph(n, &maps)?;
            match (out, format) {
                (Some(path), GraphFormat::Edges) => save_edge_list(&g, &path)?,
                (Some(path), GraphFormat::Dot) => export_dot(&g, &path)?,
                (None, GraphFormat::Edges) => emit(&edge_list_string(&g))?,
                (None, GraphFormat::Dot) => emit(&orbital_core::formats::dot_string(&g))?,
            }
            Ok(())
        }
        Command::Stats { input, n, maps, metrics } => {
            let g = match (input, n, maps) {
                (Some(path), _, _) => {
                    let load = load_edge_list(&path)?;
                    if load.self_loops + load.duplicates > 0 {
                        eprintln!(
                            "orbital: dropped {} self-loops and {} repeated edges",
                            load.self_loops, load.duplicates
                        );
                    }
                    load.graph
                }
                (None, Some(n), Some(maps)) => orbital_graph(n, &maps)?,
                _ => return Err(CliError::Usage("give either --in FILE or --n N --maps SPECS".into())),
            };
            emit(&stats_to_json(&compute_stats(&g, &metrics.options())))
        }
        Command::Sweep(args) => sweep::run(args),
        Command::Baseline { spec, seed, out, metrics } => {
            let model: BaselineModel = spec.parse().map_err(|e: orbital_core::Error| CliError::Usage(e.to_string()))?;
            let g = generate_baseline(&BaselineSpec { model, seed })?;
            if let Some(path) = out {
                save_edge_list(&g, &path)?;
            }
            emit(&stats_to_json(&compute_stats(&g, &metrics.options())))
        }
        Command::Matrix { n, out, budget } => {
            let result = component_matrix(n, budget)?.to_sweep();
            write_table(&result, out.as_deref())
        }
        Command::Check { proposition, n, shifts, budget } => {
            let shifts = match shifts {
                Some(s) => lists::parse_u64_list(&s)?,
                None => Vec::new(),
            };
            let (json, holds) = match proposition {
                Proposition::Symmetry => {
                    let v = check_symmetry_proposition(n, &shifts, budget)?;
                    (to_json(&v), v.holds())
                }
                Proposition::Bipartite => {
                    let v = check_bipartite_proposition(n, &shifts)?;
                    (to_json(&v), v.holds())
                }
                Proposition::Squaring => {
                    let s = squaring_structure(n)?;
                    (to_json(&s), s.fixed_points_match() && s.cycle_lengths_explained())
                }
            };
            emit(&json)?;
            if holds {
                Ok(())
            } else {
                Err(CliError::Domain(format!("the statement fails for n = {n}")))
            }
        }
        Command::Reproduce(args) => reproduce::run(args),
    }
}

fn orbital_graph(n: u64, maps: &str) -> CliResult<OrbitalGraph> {
    let modulus = Modulus::new(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let specs = parse_map_list(maps, modulus).map_err(|e| CliError::Usage(format!("--maps: {e}")))?;
    Ok(build_orbital_graph(modulus, &specs)?)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("verdicts always serialize");
    s.push('\n');
    s
}

fn emit(text: &str) -> CliResult<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

/// CSV to `out`, or to stdout when no path is given.
fn write_table(result: &orbital_core::SweepResult, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => write_sweep_csv(result, path)?,
        None => write_sweep_csv_to(result, io::stdout().lock())?,
    }
    Ok(())
}
