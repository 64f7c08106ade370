//! The `reproduce` subcommand: data files behind the reference figures.
//!
//! * `fig1`: statistics and edge lists of x^2+226 on Z_1001 and x^2+1, x^2+2 on Z_2000.
//! * `fig2`: the same for x^2+1, x^2+31, x^2+51 on Z_2000 and 2^x+11, 3^x+5 on Z_2002.
//! * `fig7`: one instance of each random comparison model plus a seed-averaged summary.
//! * `fig8`: mean length-cluster coefficient of two random permutations against n.

use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use orbital_core::experiments::{lcc_sweep, LccFamily, SweepRunner};
use orbital_core::formats::{save_edge_list, write_stats_json, write_sweep_csv};
use orbital_core::{
    build_orbital_graph, compute_stats, generate_baseline, parse_map_list, BaselineModel, BaselineSpec, Cell,
    Modulus, StatsOptions, SweepProvenance, SweepResult,
};
use rayon::prelude::*;

use crate::lists::parse_u64_list;
use crate::{CliError, CliResult};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig7,
    Fig8,
}

#[derive(clap::Args, Debug)]
pub struct ReproduceArgs {
    #[arg(long, value_enum)]
    figure: Figure,
    /// Output directory, created if missing.
    #[arg(long)]
    out: PathBuf,
    /// First seed of the random figures.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Seeds per model for fig7, samples per n for fig8.
    #[arg(long)]
    samples: Option<usize>,
    /// Moduli for fig8.
    #[arg(long, default_value = "20..=1000:20")]
    n: String,
}

const FIG7_MODELS: [(&str, &str); 4] = [
    ("perm", "perm(1001,2)"),
    ("er", "er(1001,0.0098)"),
    ("ws", "ws(1001,8,0.2)"),
    ("ba", "ba(1001,4)"),
];

pub fn run(args: ReproduceArgs) -> CliResult<()> {
    fs::create_dir_all(&args.out)?;
    match args.figure {
        Figure::Fig1 => {
            orbital_pair(&args.out, "fig1a", 1001, "x^2+226")?;
            orbital_pair(&args.out, "fig1b", 2000, "x^2+1;x^2+2")
        }
        Figure::Fig2 => {
            orbital_pair(&args.out, "fig2a", 2000, "x^2+1;x^2+31;x^2+51")?;
            orbital_pair(&args.out, "fig2b", 2002, "2^x+11;3^x+5")
        }
        Figure::Fig7 => baselines(&args.out, args.seed, args.samples.unwrap_or(10)),
        Figure::Fig8 => {
            let result = lcc_sweep(
                LccFamily::RandomPermutations { d: 2 },
                &parse_u64_list(&args.n)?,
                args.samples.unwrap_or(100),
                args.seed,
                &SweepRunner::default(),
            )?;
            write_sweep_csv(&result, &args.out.join("fig8.csv"))?;
            Ok(())
        }
    }
}

fn orbital_pair(dir: &Path, name: &str, n: u64, maps: &str) -> CliResult<()> {
    let modulus = Modulus::new(n)?;
    let g = build_orbital_graph(modulus, &parse_map_list(maps, modulus)?)?;
    write_stats_json(&compute_stats(&g, &StatsOptions::default()), &dir.join(format!("{name}.json")))?;
    save_edge_list(&g, &dir.join(format!("{name}.edges")))?;
    Ok(())
}

fn baselines(dir: &Path, first_seed: u64, samples: usize) -> CliResult<()> {
    if samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    let mut summary = SweepResult::new(
        "baselines",
        &["model"],
        &["seeds", "avg_degree", "mu", "nu_global", "lambda_of_means", "mean_lambda", "undefined"],
        SweepProvenance {
            maps: FIG7_MODELS.iter().map(|(_, s)| s.to_string()).collect(),
            ..SweepProvenance::new(Some(first_seed))
        },
    );
    for (name, text) in FIG7_MODELS {
        let model: BaselineModel = text.parse()?;
        let records = (first_seed..first_seed + samples as u64)
            .into_par_iter()
            .map(|seed| {
                let g = generate_baseline(&BaselineSpec { model, seed })?;
                Ok(compute_stats(&g, &StatsOptions::fast()))
            })
            .collect::<orbital_core::Result<Vec<_>>>()?;
        write_stats_json(&records[0], &dir.join(format!("fig7_{name}.json")))?;
        let k = records.len() as f64;
        let mean = |f: &dyn Fn(&orbital_core::StatsRecord) -> f64| records.iter().map(f).sum::<f64>() / k;
        let degree = mean(&|r| r.avg_degree);
        let mu = mean(&|r| r.mu.unwrap_or(f64::NAN));
        let nu = mean(&|r| r.nu_global);
        let lambdas: Vec<f64> = records.iter().filter_map(|r| r.lambda).collect();
        let lambda_of_means = if nu > 0.0 && nu < 1.0 { Some(-mu / nu.ln()) } else { None };
        let mean_lambda = (!lambdas.is_empty()).then(|| lambdas.iter().sum::<f64>() / lambdas.len() as f64);
        summary.rows.push(orbital_core::SweepRow {
            params: vec![Cell::from(name)],
            values: vec![
                Cell::from(samples),
                degree.into(),
                mu.into(),
                nu.into(),
                Cell::opt_f64(lambda_of_means),
                Cell::opt_f64(mean_lambda),
                Cell::from(records.len() - lambdas.len()),
            ],
        });
    }
    summary.sort_rows();
    write_sweep_csv(&summary, &dir.join("fig7.csv"))?;
    Ok(())
}
