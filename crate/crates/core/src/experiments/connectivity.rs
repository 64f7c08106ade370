//! Probability that `d` quadratic shift maps generate a connected graph.
//!
//! Connectivity is decided with a union-find over the generated arcs; no
//! graph is materialized. The forest for a shift prefix is shared by every
//! tuple extending it, and once a prefix is connected all of its extensions
//! are counted as connected without further work.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::experiments::runner::SweepRunner;
use crate::experiments::{binomial, squares, Cell, ShiftSpace, SweepProvenance, SweepResult};
use crate::metrics::UnionFind;
use crate::modring::is_prime;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityOptions {
    pub space: ShiftSpace,
    /// Allow composite moduli.
    pub allow_composite: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityCount {
    pub connected: u64,
    pub total: u64,
}

impl ConnectivityCount {
    /// `C(p)` as an exact fraction. An empty space counts as probability 0.
    pub fn probability(&self) -> Ratio<u64> {
        if self.total == 0 {
            Ratio::from_integer(0)
        } else {
            Ratio::new(self.connected, self.total)
        }
    }
}

struct Walker<'a> {
    n: u32,
    d: usize,
    space: ShiftSpace,
    sq: &'a [u32],
    /// forest after fixing `levels[i]` shifts is `levels[i]`
    levels: Vec<UnionFind>,
}

impl Walker<'_> {
    fn remaining(&self, depth: usize, last: u32) -> u64 {
        let left = (self.d - depth) as u64;
        match self.space {
            ShiftSpace::Distinct => binomial((self.n - last - 1) as u64, left),
            ShiftSpace::OrderedWithRepetition => (self.n as u64).pow(left as u32),
        }
    }

    /// Count (connected, total) tuples below a prefix of length `depth`
    /// whose last shift is `last`; `levels[depth]` holds its forest.
    fn walk(&mut self, depth: usize, last: u32) -> (u64, u64) {
        if depth == self.d {
            let c = (self.levels[depth].component_count() == 1) as u64;
            return (c, 1);
        }
        if self.levels[depth].component_count() == 1 {
            let r = self.remaining(depth, last);
            return (r, r);
        }
        let start = match self.space {
            ShiftSpace::Distinct => last + 1,
            ShiftSpace::OrderedWithRepetition => 0,
        };
        let (mut conn, mut total) = (0, 0);
        for a in start..self.n {
            self.apply(depth, a);
            let (c, t) = self.walk(depth + 1, a);
            conn += c;
            total += t;
        }
        (conn, total)
    }

    fn apply(&mut self, depth: usize, a: u32) {
        let (lo, hi) = self.levels.split_at_mut(depth + 1);
        let next = &mut hi[0];
        next.clone_from_forest(&lo[depth]);
        let n = self.n;
        for (x, &s) in self.sq.iter().enumerate() {
            let y = if s + a >= n { s + a - n } else { s + a };
            next.union(x as u32, y);
        }
    }
}

/// Exact connectivity count over all shift tuples of length `d` on `Z_p`.
pub fn connectivity_probability(p: u64, d: usize, opts: ConnectivityOptions) -> Result<ConnectivityCount> {
    if !opts.allow_composite && !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 0 || p > u32::MAX as u64 / 2 {
        return Err(Error::InvalidParameter(format!("modulus {p} out of range")));
    }
    if d == 0 {
        return Err(Error::InvalidParameter("need at least one map".into()));
    }
    let n = p as u32;
    let sq = squares(n);
    let firsts: Vec<u32> = (0..n).collect();
    let (connected, total) = firsts
        .par_iter()
        .map_init(
            || Walker {
                n,
                d,
                space: opts.space,
                sq: &sq,
                levels: (0..=d).map(|_| UnionFind::new(n as usize)).collect(),
            },
            |w, &a| {
                w.apply(0, a);
                w.walk(1, a)
            },
        )
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    Ok(ConnectivityCount { connected, total })
}

/// `C(p)` for every prime `p <= p_max`.
pub fn connectivity_sweep(
    d: usize,
    p_max: u64,
    opts: ConnectivityOptions,
    runner: &SweepRunner,
) -> Result<SweepResult> {
    let template = SweepResult::new(
        "connectivity",
        &["p", "d"],
        &["connected", "total", "probability"],
        SweepProvenance { maps: vec![format!("x^2+a, {d} shifts, {:?}", opts.space)], ..SweepProvenance::new(None) },
    );
    let points = (2..=p_max)
        .filter(|&p| opts.allow_composite || is_prime(p))
        .map(|p| vec![Cell::from(p), Cell::from(d)])
        .collect();
    runner.run(template, points, |params| {
        let p = params[0].as_i64().unwrap_or(0) as u64;
        let c = connectivity_probability(p, d, opts)?;
        let prob = if c.total == 0 { 0.0 } else { c.connected as f64 / c.total as f64 };
        Ok(vec![c.connected.into(), c.total.into(), prob.into()])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_primes_by_hand() {
        let c = connectivity_probability(2, 1, Default::default()).unwrap();
        assert_eq!(c.probability(), Ratio::new(1, 2));
        let c = connectivity_probability(2, 2, Default::default()).unwrap();
        assert_eq!((c.connected, c.total), (1, 1));
    }

    #[test]
    fn composite_needs_flag() {
        assert_eq!(connectivity_probability(15, 2, Default::default()), Err(Error::NotPrime(15)));
        let opts = ConnectivityOptions { allow_composite: true, ..Default::default() };
        assert!(connectivity_probability(15, 2, opts).is_ok());
    }

    #[test]
    fn ordered_space_size() {
        let opts = ConnectivityOptions { space: ShiftSpace::OrderedWithRepetition, ..Default::default() };
        let c = connectivity_probability(7, 2, opts).unwrap();
        assert_eq!(c.total, 49);
        let d = connectivity_probability(7, 2, Default::default()).unwrap();
        assert_eq!(d.total, 21);
    }

    #[test]
    fn sweep_rows() {
        let r = connectivity_sweep(1, 13, Default::default(), &SweepRunner::default()).unwrap();
        assert_eq!(r.rows.len(), 6);
    }
}
