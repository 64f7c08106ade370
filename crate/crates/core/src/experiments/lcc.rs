//! Expected length-cluster coefficient over random or enumerated map families.
//!
//! Sample parameters are drawn up front from a ChaCha8 stream seeded with the
//! caller's seed and selecting stream `n`, so each modulus gets its own
//! reproducible sequence. Graphs are then evaluated in parallel and
//! aggregated in sample order.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::baselines::{generate_baseline, BaselineModel, BaselineSpec};
use crate::error::{Error, Result};
use crate::experiments::runner::SweepRunner;
use crate::experiments::{shift_tuples, Cell, ShiftSpace, SweepProvenance, SweepResult};
use crate::metrics::{clustering, distance_summary, length_cluster, PathConvention};
use crate::modring::{MapSpec, Modulus};
use crate::orbital::{build_orbital_graph, OrbitalGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum LccFamily {
    /// `d` seeded uniform random permutations.
    RandomPermutations { d: usize },
    /// `d` distinct quadratic shifts drawn uniformly.
    Quadratic { d: usize },
    /// Every set of `d` distinct quadratic shifts; the sample count is ignored.
    QuadraticExhaustive { d: usize },
}

impl LccFamily {
    fn label(&self) -> String {
        match self {
            LccFamily::RandomPermutations { d } => format!("{d} random permutations"),
            LccFamily::Quadratic { d } => format!("x^2+a, {d} random distinct shifts"),
            LccFamily::QuadraticExhaustive { d } => format!("x^2+a, all {d}-sets of shifts"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LccEstimate {
    pub mean: f64,
    /// Standard error of the mean; 0 for a single usable sample.
    pub stderr: f64,
    pub used: usize,
    /// Graphs whose coefficient is undefined.
    pub skipped: usize,
}

/// Length-cluster coefficient of one graph, `None` when undefined.
pub fn graph_lambda(g: &OrbitalGraph) -> Option<f64> {
    let mu = distance_summary(g, PathConvention::AllReachable).ok()?.mean;
    length_cluster(mu, clustering(g).global).ok()
}

enum Sample {
    Permutations(u64),
    Shifts(Vec<u32>),
}

fn draw_samples(family: LccFamily, n: u64, samples: usize, seed: u64) -> Result<Vec<Sample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(n);
    Ok(match family {
        LccFamily::RandomPermutations { .. } => (0..samples).map(|_| Sample::Permutations(rng.gen())).collect(),
        LccFamily::Quadratic { d } => {
            if d == 0 || d as u64 > n {
                return Err(Error::InvalidParameter(format!("cannot pick {d} distinct shifts in Z_{n}")));
            }
            (0..samples)
                .map(|_| {
                    let mut s: Vec<u32> = index::sample(&mut rng, n as usize, d).into_iter().map(|i| i as u32).collect();
                    s.sort_unstable();
                    Sample::Shifts(s)
                })
                .collect()
        }
        LccFamily::QuadraticExhaustive { d } => {
            if d == 0 || d as u64 > n {
                return Err(Error::InvalidParameter(format!("cannot pick {d} distinct shifts in Z_{n}")));
            }
            shift_tuples(n as u32, d, ShiftSpace::Distinct).chunks(d).map(|c| Sample::Shifts(c.to_vec())).collect()
        }
    })
}

/// Mean and standard error of the length-cluster coefficient over a family.
pub fn lcc_expectation(family: LccFamily, n: u64, samples: usize, seed: u64) -> Result<LccEstimate> {
    if samples == 0 {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    let modulus = Modulus::new(n)?;
    let draws = draw_samples(family, n, samples, seed)?;
    let lambdas: Vec<Option<f64>> = draws
        .par_iter()
        .map(|s| {
            let g = match (s, family) {
                (Sample::Permutations(seed), LccFamily::RandomPermutations { d }) => generate_baseline(&BaselineSpec {
                    model: BaselineModel::RandomPermutations { n: n as usize, d },
                    seed: *seed,
                })?,
                (Sample::Shifts(shifts), _) => {
                    let specs: Vec<MapSpec> = shifts.iter().map(|&a| MapSpec::Quadratic { a: a as u64 }).collect();
                    build_orbital_graph(modulus, &specs)?
                }
                _ => unreachable!("sample kind follows the family"),
            };
            Ok(graph_lambda(&g))
        })
        .collect::<Result<_>>()?;
    let values: Vec<f64> = lambdas.iter().flatten().copied().collect();
    let skipped = lambdas.len() - values.len();
    if values.is_empty() {
        return Err(Error::AllSamplesUndefined(skipped));
    }
    let k = values.len() as f64;
    let mean = values.iter().sum::<f64>() / k;
    let stderr = if values.len() < 2 {
        0.0
    } else {
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0);
        (var / k).sqrt()
    };
    Ok(LccEstimate { mean, stderr, used: values.len(), skipped })
}

/// [`lcc_expectation`] for each `n`; moduli where every graph is undefined
/// produce empty mean and error cells.
pub fn lcc_sweep(family: LccFamily, ns: &[u64], samples: usize, seed: u64, runner: &SweepRunner) -> Result<SweepResult> {
    let template = SweepResult::new(
        "lcc",
        &["n"],
        &["mean_lambda", "stderr", "used", "skipped"],
        SweepProvenance { maps: vec![family.label()], ..SweepProvenance::new(Some(seed)) },
    );
    let points = ns.iter().map(|&n| vec![Cell::from(n)]).collect();
    runner.run(template, points, |p| {
        let n = p[0].as_i64().unwrap_or(0) as u64;
        match lcc_expectation(family, n, samples, seed) {
            Ok(e) => Ok(vec![e.mean.into(), e.stderr.into(), e.used.into(), e.skipped.into()]),
            Err(Error::AllSamplesUndefined(k)) => Ok(vec![Cell::Missing, Cell::Missing, 0usize.into(), k.into()]),
            Err(e) => Err(e),
        }
    })
}
