//! Triangle-based clustering coefficients and the length-cluster coefficient.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbital::OrbitalGraph;

/// Which clustering coefficient feeds the length-cluster coefficient.
///
/// Calibrated against the reference graphs: the global transitivity
/// reproduces the published values, the mean local coefficient does not.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClusteringConvention {
    #[default]
    Global,
    MeanLocal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Clustering {
    /// Average over vertices of the local coefficient.
    pub mean_local: f64,
    /// `3 * triangles / paths of length two`.
    pub global: f64,
    pub triangles: u64,
    pub two_paths: u64,
}

impl Clustering {
    pub fn value(&self, convention: ClusteringConvention) -> f64 {
        match convention {
            ClusteringConvention::Global => self.global,
            ClusteringConvention::MeanLocal => self.mean_local,
        }
    }
}

/// Triangles through each vertex, from sorted-neighbor intersections.
pub fn triangles_per_vertex(g: &OrbitalGraph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut t = vec![0u64; n];
    for u in 0..n as u32 {
        let nu = g.neighbors(u);
        for &v in nu.iter().filter(|&&v| v > u) {
            let nv = g.neighbors(v);
            // common neighbors w > v close triangle (u, v, w) exactly once
            let hi_u = &nu[nu.partition_point(|&w| w <= v)..];
            let hi_v = &nv[nv.partition_point(|&w| w <= v)..];
            let mut i = 0;
            let mut j = 0;
            while i < hi_u.len() && j < hi_v.len() {
                match hi_u[i].cmp(&hi_v[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        t[u as usize] += 1;
                        t[v as usize] += 1;
                        t[hi_u[i] as usize] += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    t
}

pub fn triangle_count(g: &OrbitalGraph) -> u64 {
    triangles_per_vertex(g).iter().sum::<u64>() / 3
}

/// Both coefficients; vertices of degree below two count as zero in the mean.
pub fn clustering(g: &OrbitalGraph) -> Clustering {
    clustering_with(g, false)
}

/// With `exclude_low_degree`, vertices of degree below two are left out of
/// the mean instead of contributing zero.
pub fn clustering_with(g: &OrbitalGraph, exclude_low_degree: bool) -> Clustering {
    let t = triangles_per_vertex(g);
    let mut local_sum = 0.0;
    let mut counted = 0usize;
    let mut two_paths = 0u64;
    for (v, &tv) in t.iter().enumerate() {
        let d = g.degree(v as u32) as u64;
        let pairs = d * d.saturating_sub(1) / 2;
        two_paths += pairs;
        if pairs > 0 {
            local_sum += tv as f64 / pairs as f64;
            counted += 1;
        } else if !exclude_low_degree {
            counted += 1;
        }
    }
    let triangles = t.iter().sum::<u64>() / 3;
    Clustering {
        mean_local: if counted == 0 { 0.0 } else { local_sum / counted as f64 },
        global: if two_paths == 0 { 0.0 } else { 3.0 * triangles as f64 / two_paths as f64 },
        triangles,
        two_paths,
    }
}

/// `lambda = -mu / ln(nu)`, defined for `0 < nu < 1`.
pub fn length_cluster(mu: f64, nu: f64) -> Result<f64> {
    if nu > 0.0 && nu < 1.0 && mu >= 0.0 {
        Ok(-mu / nu.ln())
    } else {
        Err(Error::UndefinedLambda { nu })
    }
}
