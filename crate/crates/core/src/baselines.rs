//! Seeded random comparison models.
//!
//! Each graph draws from one ChaCha8 stream seeded with the spec's seed. Draw
//! order per model:
//!
//! * Erdős–Rényi: one `f64` per pair `(i, j)`, `i < j`, in lexicographic order.
//! * Watts–Strogatz: for each ring offset `1..=k/2`, then each vertex `i`, one
//!   `f64` decides rewiring of `(i, i + offset)`; a rewired edge draws new
//!   endpoints with `gen_range` over `u64` until one is neither `i` nor a
//!   current neighbor.
//! * Barabási–Albert: starting from `K_{k+1}`, each arriving vertex draws
//!   indices into the endpoint list until it holds `k` distinct targets.
//! * Random permutations: `d` generator seeds are drawn as `u64` and fed to
//!   [`MapSpec::Permutation`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modring::{MapSpec, Modulus};
use crate::orbital::{build_orbital_graph, OrbitalGraph, Provenance};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum BaselineModel {
    ErdosRenyi { n: usize, p: f64 },
    /// `k` is the (even) ring-lattice degree, `p` the rewiring probability.
    WattsStrogatz { n: usize, k: usize, p: f64 },
    /// `k` edges per arriving vertex.
    BarabasiAlbert { n: usize, k: usize },
    RandomPermutations { n: usize, d: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BaselineSpec {
    pub model: BaselineModel,
    pub seed: u64,
}

impl BaselineModel {
    pub fn vertex_count(&self) -> usize {
        match *self {
            BaselineModel::ErdosRenyi { n, .. }
            | BaselineModel::WattsStrogatz { n, .. }
            | BaselineModel::BarabasiAlbert { n, .. }
            | BaselineModel::RandomPermutations { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidParameter(m.to_string()));
        let prob_ok = |p: f64| (0.0..=1.0).contains(&p);
        match *self {
            BaselineModel::ErdosRenyi { p, .. } if !prob_ok(p) => bad("probability outside [0, 1]"),
            BaselineModel::WattsStrogatz { p, .. } if !prob_ok(p) => bad("probability outside [0, 1]"),
            BaselineModel::WattsStrogatz { n, k, .. } if k % 2 == 1 || k >= n => {
                bad("ring degree must be even and below n")
            }
            BaselineModel::BarabasiAlbert { n, k } if k == 0 || k >= n => {
                bad("edges per vertex must satisfy 1 <= k < n")
            }
            BaselineModel::RandomPermutations { n, d } if d == 0 || n == 0 => {
                bad("need n >= 1 and at least one permutation")
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for BaselineModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaselineModel::ErdosRenyi { n, p } => write!(f, "er({n},{p})"),
            BaselineModel::WattsStrogatz { n, k, p } => write!(f, "ws({n},{k},{p})"),
            BaselineModel::BarabasiAlbert { n, k } => write!(f, "ba({n},{k})"),
            BaselineModel::RandomPermutations { n, d } => write!(f, "perm({n},{d})"),
        }
    }
}

impl FromStr for BaselineModel {
    type Err = Error;

    /// `er(n,p)`, `ws(n,k,p)`, `ba(n,k)` or `perm(n,d)`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let syntax = |position: usize, message: &str| Error::Syntax { position, message: message.into() };
        let open = compact.find('(').ok_or_else(|| syntax(0, "expected '('"))?;
        if !compact.ends_with(')') {
            return Err(syntax(compact.len(), "expected ')'"));
        }
        let name = &compact[..open];
        let args: Vec<&str> = compact[open + 1..compact.len() - 1].split(',').collect();
        let int = |i: usize| -> Result<usize> {
            args.get(i)
                .and_then(|a| a.parse().ok())
                .ok_or_else(|| syntax(open + 1, "expected an integer argument"))
        };
        let real = |i: usize| -> Result<f64> {
            args.get(i)
                .and_then(|a| a.parse().ok())
                .ok_or_else(|| syntax(open + 1, "expected a real argument"))
        };
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(syntax(open + 1, &format!("{name} takes {k} arguments")))
            }
        };
        let model = match name {
            "er" => {
                arity(2)?;
                BaselineModel::ErdosRenyi { n: int(0)?, p: real(1)? }
            }
            "ws" => {
                arity(3)?;
                BaselineModel::WattsStrogatz { n: int(0)?, k: int(1)?, p: real(2)? }
            }
            "ba" => {
                arity(2)?;
                BaselineModel::BarabasiAlbert { n: int(0)?, k: int(1)? }
            }
            "perm" => {
                arity(2)?;
                BaselineModel::RandomPermutations { n: int(0)?, d: int(1)? }
            }
            _ => return Err(syntax(0, "unknown model, expected er, ws, ba or perm")),
        };
        model.validate()?;
        Ok(model)
    }
}

pub fn generate_baseline(spec: &BaselineSpec) -> Result<OrbitalGraph> {
    spec.model.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut provenance = Provenance {
        modulus: None,
        maps: Vec::new(),
        seed: Some(spec.seed),
        source: Some(spec.model.to_string()),
    };
    let g = match spec.model {
        BaselineModel::ErdosRenyi { n, p } => erdos_renyi(n, p, &mut rng)?,
        BaselineModel::WattsStrogatz { n, k, p } => watts_strogatz(n, k, p, &mut rng)?,
        BaselineModel::BarabasiAlbert { n, k } => barabasi_albert(n, k, &mut rng)?,
        BaselineModel::RandomPermutations { n, d } => {
            let modulus = Modulus::new(n as u64)?;
            let maps: Vec<MapSpec> =
                (0..d).map(|_| MapSpec::Permutation { seed: rng.gen::<u64>() }).collect();
            let g = build_orbital_graph(modulus, &maps)?;
            provenance.modulus = Some(n as u64);
            provenance.maps = maps;
            g
        }
    };
    Ok(g.with_provenance(provenance))
}

fn erdos_renyi(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<OrbitalGraph> {
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            if rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    OrbitalGraph::from_edges(n, edges)
}

fn watts_strogatz(n: usize, k: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<OrbitalGraph> {
    let mut adj: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
    for i in 0..n {
        for off in 1..=k / 2 {
            let j = (i + off) % n;
            adj[i].insert(j as u32);
            adj[j].insert(i as u32);
        }
    }
    for off in 1..=k / 2 {
        for i in 0..n {
            if rng.gen::<f64>() >= p {
                continue;
            }
            if adj[i].len() >= n - 1 {
                continue;
            }
            let v = ((i + off) % n) as u32;
            let w = loop {
                let w = rng.gen_range(0..n as u64) as u32;
                if w as usize != i && !adj[i].contains(&w) {
                    break w;
                }
            };
            adj[i].remove(&v);
            adj[v as usize].remove(&(i as u32));
            adj[i].insert(w);
            adj[w as usize].insert(i as u32);
        }
    }
    let edges: Vec<(u32, u32)> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, s)| s.iter().map(move |&v| (u as u32, v)))
        .collect();
    OrbitalGraph::from_edges(n, edges)
}

fn barabasi_albert(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<OrbitalGraph> {
    let mut edges = Vec::new();
    let mut endpoints: Vec<u32> = Vec::new();
    for i in 0..=k as u32 {
        for j in i + 1..=k as u32 {
            edges.push((i, j));
            endpoints.extend([i, j]);
        }
    }
    let mut targets = BTreeSet::new();
    for v in k as u32 + 1..n as u32 {
        targets.clear();
        while targets.len() < k {
            let idx = rng.gen_range(0..endpoints.len() as u64) as usize;
            targets.insert(endpoints[idx]);
        }
        for &t in &targets {
            edges.push((v, t));
            endpoints.extend([v, t]);
        }
    }
    OrbitalGraph::from_edges(n, edges)
}
