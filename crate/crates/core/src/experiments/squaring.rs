//! Orbit structure of the pure squaring map `x -> x^2` on `Z_n`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::modring::{factor_summary, mul_mod, multiplicative_order, Modulus};

/// A cycle length together with an odd divisor `d` of the Carmichael
/// function whose multiplicative order of 2 equals it, if one exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleLengthCheck {
    pub length: u64,
    pub witness_divisor: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquaringStructure {
    pub n: u64,
    pub fixed_points: Vec<u64>,
    /// `2^omega(n)`.
    pub expected_fixed_points: u64,
    /// Cycle length -> number of distinct cycles of that length.
    pub cycles: BTreeMap<u64, u64>,
    pub carmichael: u64,
    pub checks: Vec<CycleLengthCheck>,
}

impl SquaringStructure {
    pub fn fixed_points_match(&self) -> bool {
        self.fixed_points.len() as u64 == self.expected_fixed_points
    }

    /// Every cycle length has an order-of-2 witness.
    pub fn cycle_lengths_explained(&self) -> bool {
        self.checks.iter().all(|c| c.witness_divisor.is_some())
    }
}

fn odd_divisors(m: u64) -> Vec<u64> {
    let mut odd = m;
    while odd > 0 && odd.is_multiple_of(2) {
        odd /= 2;
    }
    let mut out: Vec<u64> = (1..)
        .take_while(|&i| i * i <= odd)
        .filter(|&i| odd.is_multiple_of(i))
        .flat_map(|i| [i, odd / i])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn squaring_structure(n: u64) -> Result<SquaringStructure> {
    Modulus::new(n)?;
    let summary = factor_summary(n)?;
    let size = n as usize;
    let next = |x: u64| mul_mod(x, x, n);

    // 0 unvisited, 1 on the current walk, 2 finished
    let mut state = vec![0u8; size];
    let mut cycles = BTreeMap::new();
    let mut fixed_points = Vec::new();
    let mut walk = Vec::new();
    for start in 0..n {
        let mut x = start;
        while state[x as usize] == 0 {
            state[x as usize] = 1;
            walk.push(x);
            x = next(x);
        }
        if state[x as usize] == 1 {
            let len = walk.len() - walk.iter().position(|&w| w == x).unwrap();
            *cycles.entry(len as u64).or_insert(0) += 1;
            if len == 1 {
                fixed_points.push(x);
            }
        }
        for &w in &walk {
            state[w as usize] = 2;
        }
        walk.clear();
    }
    fixed_points.sort_unstable();

    let lambda = summary.carmichael;
    let divisors = odd_divisors(lambda);
    let checks = cycles
        .keys()
        .map(|&t| CycleLengthCheck {
            length: t,
            witness_divisor: divisors.iter().copied().find(|&d| {
                Modulus::new(d).and_then(|m| multiplicative_order(2, m)).ok() == Some(t)
            }),
        })
        .collect();
    Ok(SquaringStructure {
        n,
        fixed_points,
        expected_fixed_points: 1u64 << summary.omega,
        cycles,
        carmichael: lambda,
        checks,
    })
}
