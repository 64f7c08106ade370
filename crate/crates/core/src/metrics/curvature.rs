//! Vertex curvature from clique counts of unit spheres.
//!
//! `K(x) = sum_{k >= 0} (-1)^k V_{k-1}(x) / (k + 1)` with `V_{-1} = 1` and
//! `V_j(x)` the number of `K_{j+1}` subgraphs of the sphere `S(x)`. With the
//! `1/(k+1)` weights the curvatures add up to the Euler characteristic.

use num_rational::Ratio;

use crate::error::Result;
use crate::metrics::cliques::CliqueCounter;
use crate::orbital::OrbitalGraph;

pub fn curvature(g: &OrbitalGraph, x: u32, budget: u64) -> Result<Ratio<i64>> {
    let mut counter = CliqueCounter::new(g, None, budget);
    vertex_curvature(&mut counter, g, x)
}

fn vertex_curvature(counter: &mut CliqueCounter<'_>, g: &OrbitalGraph, x: u32) -> Result<Ratio<i64>> {
    counter.run(g.neighbors(x))?;
    let mut k = Ratio::from_integer(1);
    for (i, &c) in counter.counts.iter().enumerate() {
        // i-th entry counts cliques with i + 1 vertices in the sphere
        let size = i as i64 + 1;
        let term = Ratio::new(c as i64, size + 1);
        if size % 2 == 1 {
            k -= term;
        } else {
            k += term;
        }
    }
    Ok(k)
}

/// Curvature of every vertex.
pub fn curvatures(g: &OrbitalGraph, budget: u64) -> Result<Vec<Ratio<i64>>> {
    let mut counter = CliqueCounter::new(g, None, budget);
    (0..g.vertex_count() as u32).map(|x| vertex_curvature(&mut counter, g, x)).collect()
}

pub fn curvature_sum(g: &OrbitalGraph, budget: u64) -> Result<Ratio<i64>> {
    Ok(curvatures(g, budget)?.into_iter().sum())
}
