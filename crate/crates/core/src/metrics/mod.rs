//! Graph quantities measured on a single [`OrbitalGraph`].

pub mod cliques;
pub mod clustering;
pub mod components;
pub mod curvature;
pub mod degree;
pub mod dimension;
pub mod distance;

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

pub use cliques::{clique_vector, euler_characteristic, CliqueVector, DEFAULT_CLIQUE_BUDGET};
pub use clustering::{
    clustering, clustering_with, length_cluster, triangle_count, Clustering, ClusteringConvention,
};
pub use components::{betti, component_count, two_coloring, UnionFind};
pub use curvature::{curvature, curvature_sum};
pub use degree::{degree_stats, DegreeStats};
pub use dimension::{inductive_dimension, DEFAULT_DIMENSION_BUDGET};
pub use distance::{
    characteristic_path_length, diameter, distance_summary, nsw_estimate, DistanceSummary,
    PathConvention,
};

use crate::orbital::{OrbitalGraph, Provenance};

/// Knobs for [`compute_stats`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StatsOptions {
    pub path_convention: PathConvention,
    /// Coefficient used for `lambda`.
    pub clustering_convention: ClusteringConvention,
    /// Leave degree < 2 vertices out of the mean local coefficient.
    pub exclude_low_degree: bool,
    /// Skip clique counts, Euler characteristic and curvature.
    pub skip_cliques: bool,
    pub skip_dimension: bool,
    pub clique_budget: u64,
    pub dimension_budget: u64,
}

impl Default for StatsOptions {
    fn default() -> Self {
        StatsOptions {
            path_convention: PathConvention::AllReachable,
            clustering_convention: ClusteringConvention::Global,
            exclude_low_degree: false,
            skip_cliques: false,
            skip_dimension: false,
            clique_budget: DEFAULT_CLIQUE_BUDGET,
            dimension_budget: DEFAULT_DIMENSION_BUDGET,
        }
    }
}

impl StatsOptions {
    /// Path lengths and clustering only.
    pub fn fast() -> Self {
        StatsOptions { skip_cliques: true, skip_dimension: true, ..Default::default() }
    }
}

/// Full metric bundle for one graph. Undefined quantities are `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub n: usize,
    pub edges: usize,
    pub avg_degree: f64,
    pub degree_variance: f64,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub mu: Option<f64>,
    pub median_mu: Option<f64>,
    pub nu_mean: f64,
    pub nu_global: f64,
    pub lambda: Option<f64>,
    pub diameter: Option<u32>,
    pub radius: Option<u32>,
    pub connected: bool,
    pub cliques: Option<Vec<u64>>,
    pub chi: Option<i64>,
    pub curvature_sum: Option<f64>,
    pub dimension: Option<f64>,
    pub b0: usize,
    pub b1: usize,
    pub nsw: Option<f64>,
    pub provenance: Provenance,
}

impl StatsRecord {
    /// Clustering value selected by `convention`.
    pub fn nu(&self, convention: ClusteringConvention) -> f64 {
        match convention {
            ClusteringConvention::Global => self.nu_global,
            ClusteringConvention::MeanLocal => self.nu_mean,
        }
    }
}

pub fn compute_stats(g: &OrbitalGraph, opts: &StatsOptions) -> StatsRecord {
    let n = g.vertex_count();
    let deg = degree_stats(g);
    let cl = clustering_with(g, opts.exclude_low_degree);
    let dist = distance_summary(g, opts.path_convention).ok();
    let (b0, b1) = betti(g);
    let mu = dist.as_ref().map(|d| d.mean);
    let lambda = mu.and_then(|mu| length_cluster(mu, cl.value(opts.clustering_convention)).ok());
    let nsw = dist
        .as_ref()
        .and_then(|d| distance::nsw_from(n, deg.average, d.mean_second_neighbors).ok());

    let (cliques, chi, curvature_sum) = if opts.skip_cliques {
        (None, None, None)
    } else {
        match clique_vector(g, None, opts.clique_budget) {
            Ok(cv) => {
                let chi = euler_characteristic(&cv).ok();
                let ks = curvature_sum(g, opts.clique_budget)
                    .ok()
                    .and_then(|k| k.to_f64());
                (Some(cv.counts().to_vec()), chi, ks)
            }
            Err(e) => {
                log::warn!("clique enumeration skipped: {e}");
                (None, None, None)
            }
        }
    };
    let dimension = if opts.skip_dimension {
        None
    } else {
        match inductive_dimension(g, opts.dimension_budget) {
            Ok(d) => d.to_f64(),
            Err(e) => {
                log::warn!("inductive dimension skipped: {e}");
                None
            }
        }
    };

    StatsRecord {
        n,
        edges: g.edge_count(),
        avg_degree: deg.average,
        degree_variance: deg.variance,
        degree_histogram: deg.histogram,
        mu,
        median_mu: dist.as_ref().map(|d| d.median),
        nu_mean: cl.mean_local,
        nu_global: cl.global,
        lambda,
        diameter: dist.as_ref().map(|d| d.diameter),
        radius: dist.as_ref().map(|d| d.radius),
        connected: b0 <= 1,
        cliques,
        chi,
        curvature_sum,
        dimension,
        b0,
        b1,
        nsw,
        provenance: g.provenance().clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_for_small_graph() {
        let k4 = OrbitalGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = compute_stats(&k4, &StatsOptions::default());
        assert_eq!(r.cliques.as_deref(), Some(&[4, 6, 4, 1][..]));
        assert_eq!(r.chi, Some(1));
        assert_eq!(r.curvature_sum, Some(1.0));
        assert_eq!(r.dimension, Some(3.0));
        assert_eq!((r.b0, r.b1), (1, 3));
        assert_eq!(r.diameter, Some(1));
        assert_eq!(r.nu_global, 1.0);
        assert_eq!(r.lambda, None);
    }

    #[test]
    fn edgeless_record() {
        let g = OrbitalGraph::from_edges(3, []).unwrap();
        let r = compute_stats(&g, &StatsOptions::fast());
        assert_eq!((r.mu, r.diameter, r.lambda), (None, None, None));
        assert!(!r.connected);
        assert_eq!(r.b0, 3);
    }
}
