//! Component counts for every pair of quadratic shifts.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::experiments::{squares, Cell, SweepProvenance, SweepResult, SweepRow};
use crate::metrics::UnionFind;

/// Default cap on the number of unordered shift pairs evaluated.
pub const DEFAULT_MATRIX_BUDGET: u64 = 50_000_000;

/// Symmetric table: entry `(a, b)` is the number of components of the graph
/// generated by `x^2 + a` and `x^2 + b` on `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentMatrix {
    pub n: usize,
    /// Row-major `n x n`.
    pub counts: Vec<u32>,
}

impl ComponentMatrix {
    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.counts[a * self.n + b]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|a| (a..self.n).all(|b| self.get(a, b) == self.get(b, a)))
    }

    /// Long-form table with one row per `a <= b`.
    pub fn to_sweep(&self) -> SweepResult {
        let mut r = SweepResult::new(
            "component_matrix",
            &["n", "a", "b"],
            &["components"],
            SweepProvenance { maps: vec!["x^2+a".into(), "x^2+b".into()], ..SweepProvenance::new(None) },
        );
        for a in 0..self.n {
            for b in a..self.n {
                r.rows.push(SweepRow {
                    params: vec![Cell::from(self.n), Cell::from(a), Cell::from(b)],
                    values: vec![Cell::from(self.get(a, b))],
                });
            }
        }
        r
    }
}

fn shift_components(sq: &[u32], shifts: &[u32], uf: &mut UnionFind) -> u32 {
    let n = sq.len() as u32;
    uf.reset(sq.len());
    for &a in shifts {
        for (x, &s) in sq.iter().enumerate() {
            let y = s + a;
            uf.union(x as u32, if y >= n { y - n } else { y });
        }
    }
    uf.component_count() as u32
}

/// Components of the graph generated by `x^2 + a` and `x^2 + b` on `Z_n`.
pub fn pair_component_count(n: u64, a: u64, b: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if n > u32::MAX as u64 / 2 {
        return Err(Error::TooManyVertices(n));
    }
    let sq = squares(n as u32);
    let mut uf = UnionFind::new(n as usize);
    Ok(shift_components(&sq, &[(a % n) as u32, (b % n) as u32], &mut uf))
}

/// Full matrix; fails when the `n (n + 1) / 2` pairs exceed `budget`.
pub fn component_matrix(n: u64, budget: u64) -> Result<ComponentMatrix> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let pairs = n.saturating_mul(n + 1) / 2;
    if pairs > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    let n = n as usize;
    let sq = squares(n as u32);
    let upper: Vec<Vec<u32>> = (0..n as u32)
        .into_par_iter()
        .map_init(
            || UnionFind::new(n),
            |uf, a| (a..n as u32).map(|b| shift_components(&sq, &[a, b], uf)).collect(),
        )
        .collect();
    let mut counts = vec![0u32; n * n];
    for (a, row) in upper.iter().enumerate() {
        for (k, &c) in row.iter().enumerate() {
            let b = a + k;
            counts[a * n + b] = c;
            counts[b * n + a] = c;
        }
    }
    Ok(ComponentMatrix { n, counts })
}
