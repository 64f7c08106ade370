//! Inductive dimension: `dim(empty) = -1`, `dim(G) = 1 + mean_x dim(S(x))`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::orbital::OrbitalGraph;

pub const DEFAULT_DIMENSION_BUDGET: u64 = 20_000_000;

struct DimensionSolver<'g> {
    g: &'g OrbitalGraph,
    memo: HashMap<Vec<u32>, BigRational>,
    budget: u64,
    evaluations: u64,
}

impl DimensionSolver<'_> {
    /// Dimension of the subgraph induced on `set` (ascending).
    fn dim(&mut self, set: &[u32]) -> Result<BigRational> {
        match set.len() {
            0 => return Ok(-BigRational::one()),
            1 => return Ok(BigRational::zero()),
            _ => {}
        }
        if let Some(d) = self.memo.get(set) {
            return Ok(d.clone());
        }
        self.evaluations += 1;
        if self.evaluations > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let mut total = BigRational::zero();
        let mut sphere = Vec::new();
        for &x in set {
            sphere.clear();
            let nx = self.g.neighbors(x);
            let (mut a, mut b) = (0, 0);
            while a < set.len() && b < nx.len() {
                match set[a].cmp(&nx[b]) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        sphere.push(set[a]);
                        a += 1;
                        b += 1;
                    }
                }
            }
            total += self.dim(&sphere)?;
        }
        let d = BigRational::one() + total / BigRational::from_integer(BigInt::from(set.len()));
        self.memo.insert(set.to_vec(), d.clone());
        Ok(d)
    }
}

/// Exact inductive dimension; the budget caps distinct subgraph evaluations.
pub fn inductive_dimension(g: &OrbitalGraph, budget: u64) -> Result<BigRational> {
    let all: Vec<u32> = (0..g.vertex_count() as u32).collect();
    inductive_dimension_of(g, &all, budget)
}

/// Dimension of the subgraph induced on `vertices` (ascending, distinct).
pub fn inductive_dimension_of(g: &OrbitalGraph, vertices: &[u32], budget: u64) -> Result<BigRational> {
    let mut solver = DimensionSolver { g, memo: HashMap::new(), budget, evaluations: 0 };
    solver.dim(vertices)
}
