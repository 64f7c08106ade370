//! Complete-subgraph counts and the Euler characteristic of the Whitney complex.
//!
//! Enumeration extends each clique by candidates taken from sorted neighbor
//! intersections, so every clique is produced once with its vertices in
//! ascending order. The cost is exponential in the clique number in the worst
//! case, which is why every call carries a node budget.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbital::OrbitalGraph;

/// Default number of enumerated cliques before giving up.
pub const DEFAULT_CLIQUE_BUDGET: u64 = 200_000_000;

/// `counts[k]` is the number of `K_{k+1}` subgraphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueVector {
    counts: Vec<u64>,
    complete: bool,
}

impl CliqueVector {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// False when a size cap cut off larger cliques.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Size of the largest clique found.
    pub fn clique_number(&self) -> usize {
        self.counts.iter().rposition(|&c| c > 0).map_or(0, |k| k + 1)
    }

    pub fn get(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }
}

pub(crate) struct CliqueCounter<'g> {
    g: &'g OrbitalGraph,
    /// `counts[s - 1]` = cliques of size `s` found inside the candidate root set
    pub counts: Vec<u64>,
    max_size: usize,
    pub truncated: bool,
    budget: u64,
    visited: u64,
    levels: Vec<Vec<u32>>,
}

impl<'g> CliqueCounter<'g> {
    pub fn new(g: &'g OrbitalGraph, max_size: Option<usize>, budget: u64) -> Self {
        CliqueCounter {
            g,
            counts: Vec::new(),
            max_size: max_size.unwrap_or(usize::MAX),
            truncated: false,
            budget,
            visited: 0,
            levels: Vec::new(),
        }
    }

    /// Count every clique whose vertices all lie in `roots` (ascending).
    pub fn run(&mut self, roots: &[u32]) -> Result<()> {
        self.counts.clear();
        self.truncated = false;
        self.extend(roots, 0)
    }

    fn extend(&mut self, cand: &[u32], depth: usize) -> Result<()> {
        if cand.is_empty() {
            return Ok(());
        }
        if depth == self.max_size {
            self.truncated = true;
            return Ok(());
        }
        if self.counts.len() <= depth {
            self.counts.resize(depth + 1, 0);
        }
        if self.levels.len() <= depth {
            self.levels.resize_with(depth + 1, Vec::new);
        }
        for (i, &w) in cand.iter().enumerate() {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.counts[depth] += 1;
            let mut next = std::mem::take(&mut self.levels[depth]);
            next.clear();
            let rest = &cand[i + 1..];
            let nw = self.g.neighbors(w);
            let (mut a, mut b) = (0, 0);
            while a < rest.len() && b < nw.len() {
                match rest[a].cmp(&nw[b]) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        next.push(rest[a]);
                        a += 1;
                        b += 1;
                    }
                }
            }
            let r = self.extend(&next, depth + 1);
            self.levels[depth] = next;
            r?;
        }
        Ok(())
    }
}

/// Clique counts `c_0 ..= c_{k_max}`; `None` enumerates up to the clique number.
pub fn clique_vector(g: &OrbitalGraph, k_max: Option<usize>, budget: u64) -> Result<CliqueVector> {
    let all: Vec<u32> = (0..g.vertex_count() as u32).collect();
    let mut counter = CliqueCounter::new(g, k_max.map(|k| k + 1), budget);
    counter.run(&all)?;
    let mut counts = counter.counts;
    if let Some(k) = k_max {
        counts.resize(k + 1, 0);
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(CliqueVector { counts, complete: !counter.truncated })
}

/// `sum (-1)^k c_k`.
pub fn euler_characteristic(cliques: &CliqueVector) -> Result<i64> {
    if !cliques.complete {
        return Err(Error::TruncatedCliques(cliques.counts.len()));
    }
    Ok(cliques
        .counts
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum())
}
