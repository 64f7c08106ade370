//! Parameter sweeps over `n` or the map family.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::experiments::runner::SweepRunner;
use crate::experiments::{
    shift_tuples, squares, stats_cells, tuple_count, Cell, ShiftSpace, SweepProvenance, SweepResult,
    STATS_COLUMNS,
};
use crate::metrics::{clustering, compute_stats, StatsOptions, UnionFind};
use crate::modring::{is_prime, mul_mod, MapSpec, Modulus};
use crate::orbital::{build_orbital_graph, digraph_view};

fn modulus_of(cell: &Cell) -> Result<Modulus> {
    let n = cell.as_i64().filter(|&v| v > 0).ok_or_else(|| Error::InvalidParameter(format!("bad modulus {cell}")))?;
    Modulus::new(n as u64)
}

fn quadratic(shifts: &[u32]) -> Vec<MapSpec> {
    shifts.iter().map(|&a| MapSpec::Quadratic { a: a as u64 }).collect()
}

/// Components of the graph generated by `3x + 1` and `2x` for `2 <= n <= n_max`.
///
/// A disconnected `n` is logged as an error and kept in the table.
pub fn collatz_connectivity(n_max: u64, runner: &SweepRunner) -> Result<SweepResult> {
    if n_max < 2 {
        return Err(Error::InvalidParameter("n_max must be at least 2".into()));
    }
    let template = SweepResult::new(
        "collatz",
        &["n"],
        &["components", "connected"],
        SweepProvenance { maps: vec!["3x+1".into(), "2x".into()], ..SweepProvenance::new(None) },
    );
    let points = (2..=n_max).map(|n| vec![Cell::from(n)]).collect();
    runner.run(template, points, |p| {
        let n = modulus_of(&p[0])?.get();
        let mut uf = UnionFind::new(n as usize);
        for x in 0..n {
            uf.union(x as u32, ((mul_mod(3, x, n) + 1) % n) as u32);
            uf.union(x as u32, mul_mod(2, x, n) as u32);
        }
        let c = uf.component_count();
        if c != 1 {
            log::error!("3x+1, 2x on Z_{n} is disconnected: {c} components");
        }
        Ok(vec![c.into(), (c == 1).into()])
    })
}

/// Shift tuples used for one modulus: all of them when there are at most
/// `samples`, otherwise `samples` uniform draws.
fn tuples_for(n: u32, d: usize, samples: usize, seed: u64) -> (Vec<u32>, bool) {
    if tuple_count(n as u64, d, ShiftSpace::Distinct) <= samples as u64 {
        return (shift_tuples(n, d, ShiftSpace::Distinct), true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(n as u64);
    let mut out = Vec::with_capacity(samples * d);
    for _ in 0..samples {
        let mut s: Vec<u32> = index::sample(&mut rng, n as usize, d).into_iter().map(|i| i as u32).collect();
        s.sort_unstable();
        out.extend(s);
    }
    (out, false)
}

/// Solutions `x` of `(x^2 + a)^2 + a = x^2 + b (mod n)`.
fn two_step_coincidences(sq: &[u32], n: u64, a: u64, b: u64) -> u64 {
    sq.iter()
        .filter(|&&s| {
            let y = (s as u64 + a) % n;
            (mul_mod(y, y, n) + a) % n == (s as u64 + b) % n
        })
        .count() as u64
}

/// Mean global clustering of `d`-shift graphs as `n` grows.
///
/// Each row also carries `n` times the mean, so a `c/n` decay shows up as a
/// flat column, and the mean number of solutions of
/// `(x^2 + a)^2 + a = x^2 + b` over ordered pairs of distinct shifts in a tuple.
pub fn clustering_decay_sweep(d: usize, ns: &[u64], samples: usize, seed: u64, runner: &SweepRunner) -> Result<SweepResult> {
    if d < 2 || samples == 0 {
        return Err(Error::InvalidParameter("need d >= 2 and at least one sample".into()));
    }
    let template = SweepResult::new(
        "clustering_decay",
        &["n", "d"],
        &["mean_nu_global", "n_times_nu", "mean_coincidences", "tuples", "exhaustive"],
        SweepProvenance { maps: vec![format!("x^2+a, {d} distinct shifts")], ..SweepProvenance::new(Some(seed)) },
    );
    let points = ns.iter().map(|&n| vec![Cell::from(n), Cell::from(d)]).collect();
    runner.run(template, points, |p| {
        let m = modulus_of(&p[0])?;
        let n = m.get();
        if (n as usize) < d {
            return Err(Error::InvalidParameter(format!("Z_{n} has fewer than {d} shifts")));
        }
        let (tuples, exhaustive) = tuples_for(n as u32, d, samples, seed);
        let sq = squares(n as u32);
        let (mut nu, mut coincide, mut count) = (0.0, 0u64, 0usize);
        for t in tuples.chunks(d) {
            nu += clustering(&build_orbital_graph(m, &quadratic(t))?).global;
            for &a in t {
                for &b in t.iter().filter(|&&b| b != a) {
                    coincide += two_step_coincidences(&sq, n, a as u64, b as u64);
                }
            }
            count += 1;
        }
        let mean = nu / count as f64;
        Ok(vec![
            mean.into(),
            (mean * n as f64).into(),
            (coincide as f64 / count as f64).into(),
            count.into(),
            exhaustive.into(),
        ])
    })
}

/// Mean average degree over all pairs `a < b` of quadratic shifts.
///
/// The shortfall from 4 is fully explained by self-loops and arcs that
/// repeat an existing edge, whose per-pair means are reported alongside.
pub fn average_degree_sweep(ns: &[u64], runner: &SweepRunner) -> Result<SweepResult> {
    let template = SweepResult::new(
        "average_degree",
        &["n"],
        &["mean_degree", "deviation", "mean_self_loops", "mean_coincidences", "pairs", "prime"],
        SweepProvenance { maps: vec!["x^2+a".into(), "x^2+b".into()], ..SweepProvenance::new(None) },
    );
    let points = ns.iter().map(|&n| vec![Cell::from(n)]).collect();
    runner.run(template, points, |p| {
        let m = modulus_of(&p[0])?;
        let n = m.get();
        if n < 2 {
            return Err(Error::InvalidParameter("need n >= 2".into()));
        }
        let (mut degree, mut loops, mut repeats, mut pairs) = (0.0, 0u64, 0u64, 0u64);
        for t in shift_tuples(n as u32, 2, ShiftSpace::Distinct).chunks(2) {
            let view = digraph_view(m, &quadratic(t))?;
            let l = view.self_loop_count() as u64;
            let r = view.coinciding_arc_count() as u64;
            degree += 2.0 * (2 * n - l - r) as f64 / n as f64;
            loops += l;
            repeats += r;
            pairs += 1;
        }
        let mean = degree / pairs as f64;
        Ok(vec![
            mean.into(),
            (mean - 4.0).into(),
            (loops as f64 / pairs as f64).into(),
            (repeats as f64 / pairs as f64).into(),
            pairs.into(),
            is_prime(n).into(),
        ])
    })
}

/// Statistics of the graph generated by `x + 1` and `floor(x^alpha) + i`
/// for `2 <= i <= d`, one row per exponent.
pub fn alpha_sweep(n: u64, alphas: &[f64], d: usize, opts: &StatsOptions, runner: &SweepRunner) -> Result<SweepResult> {
    let m = Modulus::new(n)?;
    if d == 0 {
        return Err(Error::InvalidParameter("need at least one map".into()));
    }
    let template = SweepResult::new(
        "alpha",
        &["n", "alpha", "d"],
        &STATS_COLUMNS,
        SweepProvenance { maps: vec!["x+1".into(), format!("floor(x^alpha)+i, 2 <= i <= {d}")], ..SweepProvenance::new(None) },
    );
    let points = alphas.iter().map(|&a| vec![Cell::from(n), Cell::Float(a), Cell::from(d)]).collect();
    runner.run(template, points, |p| {
        let alpha = p[1].as_f64().unwrap_or(f64::NAN);
        let mut maps = vec![MapSpec::Affine { a: 1, b: 1 }];
        maps.extend((2..=d as u64).map(|c| MapSpec::FloorPower { alpha, c }));
        let g = build_orbital_graph(m, &maps)?;
        Ok(stats_cells(&compute_stats(&g, opts)))
    })
}
