//! Shortest-path statistics from one BFS per source vertex.
//!
//! Nothing quadratic in `n` is stored: each source keeps a small distance
//! histogram, and sources are reduced in vertex order so floating sums do not
//! depend on the thread count.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::components::component_labels;
use crate::orbital::OrbitalGraph;

/// Which vertices contribute to path-length averages.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathConvention {
    /// Every vertex with at least one reachable partner, averaging over the
    /// partners it can reach.
    #[default]
    AllReachable,
    /// Only vertices of the largest component (ties go to the component
    /// holding the smallest vertex).
    LargestComponent,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceSummary {
    /// Characteristic path length: mean over sources of the mean distance to
    /// reachable other vertices.
    pub mean: f64,
    /// Median of the multiset of distances between ordered reachable pairs.
    pub median: f64,
    /// Largest finite eccentricity.
    pub diameter: u32,
    /// Smallest eccentricity among contributing sources.
    pub radius: u32,
    pub connected: bool,
    /// Average over all vertices of the number of vertices at distance exactly 2.
    pub mean_second_neighbors: f64,
}

/// Per-source BFS result.
#[derive(Debug, Clone, Default)]
pub(crate) struct SourceStats {
    pub reached: usize,
    pub distance_sum: u64,
    pub eccentricity: u32,
    /// `histogram[d]` = number of vertices at distance `d >= 1`
    pub histogram: Vec<u64>,
}

/// Reusable BFS buffers.
#[derive(Debug, Clone)]
pub(crate) struct BfsScratch {
    dist: Vec<u32>,
    queue: VecDeque<u32>,
    touched: Vec<u32>,
}

impl BfsScratch {
    pub fn new(n: usize) -> Self {
        BfsScratch { dist: vec![u32::MAX; n], queue: VecDeque::new(), touched: Vec::new() }
    }
}

pub(crate) fn bfs_source(g: &OrbitalGraph, s: u32, scratch: &mut BfsScratch) -> SourceStats {
    let BfsScratch { dist, queue, touched } = scratch;
    let mut out = SourceStats::default();
    dist[s as usize] = 0;
    touched.push(s);
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v as usize];
        for &w in g.neighbors(v) {
            if dist[w as usize] == u32::MAX {
                let dw = dv + 1;
                dist[w as usize] = dw;
                touched.push(w);
                queue.push_back(w);
                out.reached += 1;
                out.distance_sum += dw as u64;
                if out.histogram.len() <= dw as usize {
                    out.histogram.resize(dw as usize + 1, 0);
                }
                out.histogram[dw as usize] += 1;
                out.eccentricity = dw;
            }
        }
    }
    for &t in touched.iter() {
        dist[t as usize] = u32::MAX;
    }
    touched.clear();
    out
}

/// BFS distances from `s`; `u32::MAX` marks unreachable vertices.
pub fn bfs_distances(g: &OrbitalGraph, s: u32) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.vertex_count()];
    let mut queue = VecDeque::from([s]);
    dist[s as usize] = 0;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = dist[v as usize] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub(crate) fn all_sources(g: &OrbitalGraph) -> Vec<SourceStats> {
    let n = g.vertex_count();
    (0..n as u32)
        .into_par_iter()
        .map_init(|| BfsScratch::new(n), |scratch, s| bfs_source(g, s, scratch))
        .collect()
}

fn median_of_histogram(hist: &[u64]) -> f64 {
    let total: u64 = hist.iter().sum();
    let kth = |k: u64| -> usize {
        let mut acc = 0;
        for (d, &c) in hist.iter().enumerate() {
            acc += c;
            if acc > k {
                return d;
            }
        }
        hist.len() - 1
    };
    if total % 2 == 1 {
        kth(total / 2) as f64
    } else {
        (kth(total / 2 - 1) + kth(total / 2)) as f64 / 2.0
    }
}

pub fn distance_summary(g: &OrbitalGraph, convention: PathConvention) -> Result<DistanceSummary> {
    if g.edge_count() == 0 {
        return Err(Error::Undefined("characteristic path length"));
    }
    let n = g.vertex_count();
    let per_source = all_sources(g);
    let included: Vec<bool> = match convention {
        PathConvention::AllReachable => vec![true; n],
        PathConvention::LargestComponent => {
            let (count, labels) = component_labels(g);
            let mut sizes = vec![0usize; count];
            for &l in &labels {
                sizes[l as usize] += 1;
            }
            // first maximum wins, i.e. the component with the smallest vertex
            let best = (0..count).fold(0, |b, c| if sizes[c] > sizes[b] { c } else { b }) as u32;
            labels.iter().map(|&l| l == best).collect()
        }
    };

    let mut mean_sum = 0.0;
    let mut contributing = 0usize;
    let mut hist: Vec<u64> = Vec::new();
    let mut diameter = 0;
    let mut radius = u32::MAX;
    let mut second = 0u64;
    for (s, st) in per_source.iter().enumerate() {
        second += st.histogram.get(2).copied().unwrap_or(0);
        diameter = diameter.max(st.eccentricity);
        if !included[s] || st.reached == 0 {
            continue;
        }
        contributing += 1;
        mean_sum += st.distance_sum as f64 / st.reached as f64;
        radius = radius.min(st.eccentricity);
        if hist.len() < st.histogram.len() {
            hist.resize(st.histogram.len(), 0);
        }
        for (d, &c) in st.histogram.iter().enumerate() {
            hist[d] += c;
        }
    }
    Ok(DistanceSummary {
        mean: mean_sum / contributing as f64,
        median: median_of_histogram(&hist),
        diameter,
        radius,
        connected: per_source[0].reached + 1 == n,
        mean_second_neighbors: second as f64 / n as f64,
    })
}

/// `(mu, median)` under the default convention.
pub fn characteristic_path_length(g: &OrbitalGraph) -> Result<(f64, f64)> {
    distance_summary(g, PathConvention::AllReachable).map(|s| (s.mean, s.median))
}

/// `(diameter, is_connected)`; the diameter is the largest finite eccentricity.
pub fn diameter(g: &OrbitalGraph) -> Result<(u32, bool)> {
    if g.edge_count() == 0 {
        return Err(Error::Undefined("diameter"));
    }
    let n = g.vertex_count();
    let stats = all_sources(g);
    let ecc = stats.iter().map(|s| s.eccentricity).max().unwrap_or(0);
    Ok((ecc, stats[0].reached + 1 == n))
}

/// Newman–Strogatz–Watts estimate `1 + ln(n/d) / ln(d2/d)`.
pub fn nsw_estimate(g: &OrbitalGraph) -> Result<f64> {
    let summary = distance_summary(g, PathConvention::AllReachable)?;
    nsw_from(g.vertex_count(), 2.0 * g.edge_count() as f64 / g.vertex_count() as f64, summary.mean_second_neighbors)
}

pub(crate) fn nsw_from(n: usize, d: f64, d2: f64) -> Result<f64> {
    if d <= 0.0 || d2 <= d {
        return Err(Error::Undefined("small-world estimate"));
    }
    Ok(1.0 + (n as f64 / d).ln() / (d2 / d).ln())
}
