//! Smallest diameter reachable with `d` quadratic shift maps on `Z_n`.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;

use crate::error::Result;
use crate::experiments::runner::SweepRunner;
use crate::experiments::{shift_tuples, squares, Cell, ShiftSpace, SweepProvenance, SweepResult};
use crate::metrics::diameter;
use crate::modring::{MapSpec, Modulus};
use crate::orbital::build_orbital_graph;

const DISCONNECTED: u32 = u32::MAX;

/// Adjacency of `x -> x^2 + a` families without building a simple graph:
/// forward images come from the square table, backward ones from its
/// preimage lists.
struct SquareAdjacency {
    n: u32,
    sq: Vec<u32>,
    root_offsets: Vec<usize>,
    roots: Vec<u32>,
}

impl SquareAdjacency {
    fn new(n: u32) -> Self {
        let sq = squares(n);
        let mut root_offsets = vec![0usize; n as usize + 1];
        for &s in &sq {
            root_offsets[s as usize + 1] += 1;
        }
        for i in 0..n as usize {
            root_offsets[i + 1] += root_offsets[i];
        }
        let mut fill = root_offsets.clone();
        let mut roots = vec![0u32; n as usize];
        for (x, &s) in sq.iter().enumerate() {
            roots[fill[s as usize]] = x as u32;
            fill[s as usize] += 1;
        }
        SquareAdjacency { n, sq, root_offsets, roots }
    }

    #[inline]
    fn sqrt(&self, r: u32) -> &[u32] {
        &self.roots[self.root_offsets[r as usize]..self.root_offsets[r as usize + 1]]
    }

    /// Eccentricity of `s`, or `None` once it is certain to be `>= cutoff`
    /// or the graph is disconnected.
    fn bounded_eccentricity(&self, shifts: &[u32], s: u32, cutoff: u32, dist: &mut [u32], queue: &mut VecDeque<u32>) -> Option<u32> {
        let n = self.n;
        dist.fill(u32::MAX);
        queue.clear();
        dist[s as usize] = 0;
        queue.push_back(s);
        let mut reached = 1u32;
        let mut ecc = 0;
        while let Some(v) = queue.pop_front() {
            let dv = dist[v as usize];
            if dv + 1 >= cutoff {
                // anything still unreached is at distance >= cutoff
                if reached < n {
                    return None;
                }
                continue;
            }
            for &a in shifts {
                let f = self.sq[v as usize] + a;
                let r = if v >= a { v - a } else { v + n - a };
                for w in std::iter::once(if f >= n { f - n } else { f }).chain(self.sqrt(r).iter().copied()) {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = dv + 1;
                        ecc = dv + 1;
                        queue.push_back(w);
                        reached += 1;
                    }
                }
            }
        }
        (reached == n).then_some(ecc)
    }
}

/// Minimal diameter over all `d`-subsets of distinct shifts, with pruning.
///
/// `None` means every graph in the family is disconnected. Subsets have
/// size `min(d, n)`. A tuple is abandoned as soon as one BFS shows it is
/// disconnected or cannot beat the best diameter found so far, so the
/// result is exact.
pub fn minimal_diameter(n: u64, d: usize) -> Option<u32> {
    assert!(n >= 1 && n <= u32::MAX as u64 / 2, "modulus out of range");
    let n = n as u32;
    if n == 1 {
        return Some(0);
    }
    let d = d.clamp(1, n as usize);
    let adj = SquareAdjacency::new(n);
    let tuples = shift_tuples(n, d, ShiftSpace::Distinct);
    let best = AtomicU32::new(DISCONNECTED);
    tuples.par_chunks(d).for_each_init(
        || (vec![u32::MAX; n as usize], VecDeque::new()),
        |(dist, queue), shifts| {
            let mut diam = 0;
            for s in 0..n {
                let cutoff = best.load(Ordering::Relaxed);
                match adj.bounded_eccentricity(shifts, s, cutoff, dist, queue) {
                    Some(e) => diam = diam.max(e),
                    None => return,
                }
            }
            best.fetch_min(diam, Ordering::Relaxed);
        },
    );
    let b = best.into_inner();
    (b != DISCONNECTED).then_some(b)
}

/// Reference implementation: build each graph and take its diameter.
pub fn minimal_diameter_exhaustive(n: u64, d: usize) -> Result<Option<u32>> {
    let m = Modulus::new(n)?;
    if n == 1 {
        return Ok(Some(0));
    }
    let d = d.clamp(1, n as usize);
    let mut best: Option<u32> = None;
    for shifts in shift_tuples(n as u32, d, ShiftSpace::Distinct).chunks(d) {
        let specs: Vec<MapSpec> = shifts.iter().map(|&a| MapSpec::Quadratic { a: a as u64 }).collect();
        let g = build_orbital_graph(m, &specs)?;
        if let Ok((diam, true)) = diameter(&g) {
            best = Some(best.map_or(diam, |b| b.min(diam)));
        }
    }
    Ok(best)
}

/// `r_d(n)` for each `n` in `ns`; an all-disconnected family is written as `inf`.
pub fn minimal_diameter_sweep(d: usize, ns: &[u64], runner: &SweepRunner) -> Result<SweepResult> {
    let template = SweepResult::new(
        "min_diameter",
        &["n", "d"],
        &["diameter"],
        SweepProvenance { maps: vec![format!("x^2+a, {d} distinct shifts")], ..SweepProvenance::new(None) },
    );
    let points = ns.iter().map(|&n| vec![Cell::from(n), Cell::from(d)]).collect();
    runner.run(template, points, |p| {
        let n = p[0].as_i64().unwrap_or(0) as u64;
        if n < 2 {
            return Err(crate::Error::InvalidParameter(format!("minimal diameter needs n >= 2, got {n}")));
        }
        Ok(vec![minimal_diameter(n, d).map_or(Cell::Float(f64::INFINITY), Cell::from)])
    })
}
