//! The `sweep` subcommand: every experiment addressable by name.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::ValueEnum;
use orbital_core::experiments::{
    alpha_sweep, average_degree_sweep, clustering_decay_sweep, collatz_connectivity, component_matrix,
    connectivity_sweep, lcc_sweep, minimal_diameter_sweep, Checkpoint, ConnectivityOptions, LccFamily,
    SweepRunner, DEFAULT_MATRIX_BUDGET,
};
use orbital_core::{ShiftSpace, StatsOptions, SweepResult};

use crate::lists::{parse_f64_list, parse_u64_list};
use crate::{write_table, CliError, CliResult};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "snake_case")]
pub enum Experiment {
    /// Fraction of shift sets whose quadratic maps connect Z_p (keys: d, p_max, space, composite).
    Connectivity,
    /// Smallest diameter over all shift sets (keys: d, n).
    MinDiameter,
    /// Mean length-cluster coefficient of a random family (keys: family, d, n, samples).
    Lcc,
    /// Component counts for all shift pairs (keys: n, budget).
    ComponentMatrix,
    /// Connectivity of the Collatz-type map pair (keys: n_max).
    Collatz,
    /// Mean global clustering of random quadratic families (keys: d, n, samples).
    ClusteringDecay,
    /// Mean degree of two quadratic maps over all shift pairs (keys: n).
    AverageDegree,
    /// Statistics of x+1 with floor-power maps (keys: n, alpha, d, full).
    Alpha,
}

impl Experiment {
    fn keys(self) -> &'static [&'static str] {
        match self {
            Experiment::Connectivity => &["d", "p_max", "space", "composite"],
            Experiment::MinDiameter => &["d", "n"],
            Experiment::Lcc => &["family", "d", "n", "samples"],
            Experiment::ComponentMatrix => &["n", "budget"],
            Experiment::Collatz => &["n_max"],
            Experiment::ClusteringDecay => &["d", "n", "samples"],
            Experiment::AverageDegree => &["n"],
            Experiment::Alpha => &["n", "alpha", "d", "full"],
        }
    }
}

#[derive(clap::Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    experiment: Experiment,
    /// Experiment parameters as KEY=VALUE; repeat the flag or separate with ';'.
    #[arg(long = "params", value_name = "KEY=VALUE")]
    params: Vec<String>,
    /// Generator count.
    #[arg(long)]
    d: Option<String>,
    /// Modulus or list of moduli, e.g. 131, 2,3,5 or 10..=100:10.
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    p_max: Option<String>,
    #[arg(long)]
    n_max: Option<String>,
    #[arg(long)]
    samples: Option<String>,
    /// perm, quadratic or quadratic_exhaustive.
    #[arg(long)]
    family: Option<String>,
    /// Exponents, e.g. 1.0..=2.0:0.1.
    #[arg(long)]
    alpha: Option<String>,
    /// distinct or ordered.
    #[arg(long)]
    space: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write CSV here instead of stdout; also enables the resumable checkpoint.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Parameter points between checkpoint writes.
    #[arg(long, default_value_t = 64)]
    checkpoint_every: usize,
}

struct Params {
    map: BTreeMap<String, String>,
}

impl Params {
    fn collect(args: &SweepArgs) -> CliResult<Params> {
        let mut map = BTreeMap::new();
        for item in args.params.iter().flat_map(|p| p.split(';')).map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("parameter `{item}` is not KEY=VALUE")))?;
            map.insert(k.trim().replace('-', "_"), v.trim().to_string());
        }
        let flags = [
            ("d", &args.d),
            ("n", &args.n),
            ("p_max", &args.p_max),
            ("n_max", &args.n_max),
            ("samples", &args.samples),
            ("family", &args.family),
            ("alpha", &args.alpha),
            ("space", &args.space),
        ];
        for (k, v) in flags {
            if let Some(v) = v {
                if map.insert(k.to_string(), v.clone()).is_some_and(|old| &old != v) {
                    return Err(CliError::Usage(format!("`{k}` given twice with different values")));
                }
            }
        }
        let allowed = args.experiment.keys();
        if let Some(k) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(CliError::Usage(format!(
                "`{k}` is not a parameter of this experiment (expected {})",
                allowed.join(", ")
            )));
        }
        Ok(Params { map })
    }

    fn text(&self, key: &str) -> CliResult<&str> {
        self.map
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| CliError::Usage(format!("missing parameter `{key}`")))
    }

    fn list(&self, key: &str) -> CliResult<Vec<u64>> {
        parse_u64_list(self.text(key)?)
    }

    fn int(&self, key: &str) -> CliResult<u64> {
        match self.list(key)?.as_slice() {
            [v] => Ok(*v),
            _ => Err(CliError::Usage(format!("`{key}` takes a single integer"))),
        }
    }

    fn int_or(&self, key: &str, default: u64) -> CliResult<u64> {
        if self.map.contains_key(key) {
            self.int(key)
        } else {
            Ok(default)
        }
    }

    fn flag(&self, key: &str) -> CliResult<bool> {
        match self.map.get(key).map(String::as_str) {
            None | Some("false") | Some("0") => Ok(false),
            Some("true") | Some("1") => Ok(true),
            Some(other) => Err(CliError::Usage(format!("`{key}={other}` is not a boolean"))),
        }
    }
}

pub fn run(args: SweepArgs) -> CliResult<()> {
    let params = Params::collect(&args)?;
    let runner = match &args.out {
        Some(out) => SweepRunner::with_checkpoint(Checkpoint::for_output(out, args.checkpoint_every)),
        None => SweepRunner::default(),
    };
    let result = execute(args.experiment, &params, args.seed, &runner)?;
    write_table(&result, args.out.as_deref())?;
    runner.finish()?;
    Ok(())
}

fn execute(experiment: Experiment, p: &Params, seed: u64, runner: &SweepRunner) -> CliResult<SweepResult> {
    let d = || p.int("d").map(|d| d as usize);
    let result = match experiment {
        Experiment::Connectivity => {
            let space = match p.map.get("space").map(String::as_str) {
                None | Some("distinct") => ShiftSpace::Distinct,
                Some("ordered") => ShiftSpace::OrderedWithRepetition,
                Some(other) => return Err(CliError::Usage(format!("unknown space `{other}`, expected distinct or ordered"))),
            };
            let opts = ConnectivityOptions { space, allow_composite: p.flag("composite")? };
            connectivity_sweep(d()?, p.int("p_max")?, opts, runner)?
        }
        Experiment::MinDiameter => minimal_diameter_sweep(d()?, &p.list("n")?, runner)?,
        Experiment::Lcc => {
            let d = p.int_or("d", 2)? as usize;
            let family = match p.map.get("family").map(String::as_str) {
                None | Some("perm") => LccFamily::RandomPermutations { d },
                Some("quadratic") => LccFamily::Quadratic { d },
                Some("quadratic_exhaustive") => LccFamily::QuadraticExhaustive { d },
                Some(other) => {
                    return Err(CliError::Usage(format!(
                        "unknown family `{other}`, expected perm, quadratic or quadratic_exhaustive"
                    )))
                }
            };
            lcc_sweep(family, &p.list("n")?, p.int_or("samples", 100)? as usize, seed, runner)?
        }
        Experiment::ComponentMatrix => component_matrix(p.int("n")?, p.int_or("budget", DEFAULT_MATRIX_BUDGET)?)?.to_sweep(),
        Experiment::Collatz => collatz_connectivity(p.int("n_max")?, runner)?,
        Experiment::ClusteringDecay => {
            clustering_decay_sweep(d()?, &p.list("n")?, p.int_or("samples", 100)? as usize, seed, runner)?
        }
        Experiment::AverageDegree => average_degree_sweep(&p.list("n")?, runner)?,
        Experiment::Alpha => {
            let opts = if p.flag("full")? { StatsOptions::default() } else { StatsOptions::fast() };
            alpha_sweep(p.int("n")?, &parse_f64_list(p.text("alpha")?)?, d()?, &opts, runner)?
        }
    };
    Ok(result)
}
