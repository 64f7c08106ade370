//! Parameter sweeps, conjecture probes and proposition checkers.
//!
//! Shift-tuple probability spaces default to unordered tuples of distinct
//! shifts; [`ShiftSpace::OrderedWithRepetition`] is the sensitivity variant.

pub mod connectivity;
pub mod diameter;
pub mod isomorphism;
pub mod lcc;
pub mod matrix;
pub mod propositions;
pub mod runner;
pub mod squaring;
pub mod sweeps;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::metrics::StatsRecord;
use crate::modring::mul_mod;

pub use connectivity::{connectivity_probability, connectivity_sweep, ConnectivityCount, ConnectivityOptions};
pub use diameter::{minimal_diameter, minimal_diameter_exhaustive, minimal_diameter_sweep};
pub use isomorphism::{find_isomorphism, is_isomorphism, IsoOutcome, DEFAULT_ISO_BUDGET};
pub use lcc::{graph_lambda, lcc_expectation, lcc_sweep, LccEstimate, LccFamily};
pub use matrix::{component_matrix, pair_component_count, ComponentMatrix, DEFAULT_MATRIX_BUDGET};
pub use propositions::{
    check_bipartite_proposition, check_symmetry_proposition, BipartiteVerdict, Conjugation,
    SymmetryVerdict,
};
pub use runner::{Checkpoint, SweepRunner};
pub use squaring::{squaring_structure, CycleLengthCheck, SquaringStructure};
pub use sweeps::{alpha_sweep, average_degree_sweep, clustering_decay_sweep, collatz_connectivity};

/// One CSV/JSON cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Missing,
}

impl Cell {
    pub fn opt_f64(v: Option<f64>) -> Cell {
        v.map_or(Cell::Missing, Cell::Float)
    }

    pub fn opt_int<T: Into<i64>>(v: Option<T>) -> Cell {
        v.map_or(Cell::Missing, |x| Cell::Int(x.into()))
    }

    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            Cell::Int(v) => Some(v as f64),
            Cell::Float(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match *self {
            Cell::Int(v) => Some(v),
            _ => None,
        }
    }

    /// Inverse of `Display` up to the Int/Float distinction of integral floats.
    pub fn parse(s: &str) -> Cell {
        if s.is_empty() {
            Cell::Missing
        } else if let Ok(v) = s.parse::<i64>() {
            Cell::Int(v)
        } else if let Ok(v) = s.parse::<f64>() {
            Cell::Float(v)
        } else {
            Cell::Text(s.to_string())
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Cell::Int(_) | Cell::Float(_) => 0,
            Cell::Text(_) => 1,
            Cell::Missing => 2,
        }
    }

    pub fn total_cmp(&self, other: &Cell) -> Ordering {
        match (self, other) {
            (Cell::Int(a), Cell::Int(b)) => a.cmp(b),
            (Cell::Text(a), Cell::Text(b)) => a.cmp(b),
            (a, b) if a.rank() == 0 && b.rank() == 0 => {
                a.as_f64().unwrap().total_cmp(&b.as_f64().unwrap())
            }
            (a, b) => a.rank().cmp(&b.rank()),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Float(v) => write!(f, "{v}"),
            Cell::Text(s) => f.write_str(s),
            Cell::Missing => Ok(()),
        }
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub params: Vec<Cell>,
    pub values: Vec<Cell>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SweepProvenance {
    pub seed: Option<u64>,
    pub version: String,
    /// Left empty unless explicitly requested, so reruns are byte-identical.
    pub timestamp: Option<String>,
    /// Generator maps or model descriptors involved, in text form.
    pub maps: Vec<String>,
}

impl SweepProvenance {
    pub fn new(seed: Option<u64>) -> Self {
        SweepProvenance {
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: None,
            maps: Vec::new(),
        }
    }
}

/// Table of parameter tuples and their outcomes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub experiment: String,
    pub param_names: Vec<String>,
    pub value_names: Vec<String>,
    pub rows: Vec<SweepRow>,
    pub provenance: SweepProvenance,
}

impl SweepResult {
    pub fn new(experiment: &str, param_names: &[&str], value_names: &[&str], provenance: SweepProvenance) -> Self {
        SweepResult {
            experiment: experiment.to_string(),
            param_names: param_names.iter().map(|s| s.to_string()).collect(),
            value_names: value_names.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            provenance,
        }
    }

    pub fn sort_rows(&mut self) {
        self.rows.sort_by(|a, b| {
            a.params
                .iter()
                .zip(&b.params)
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        });
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        if let Some(i) = self.param_names.iter().position(|c| c == name) {
            return Some(self.rows.iter().map(|r| &r.params[i]).collect());
        }
        let i = self.value_names.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| &r.values[i]).collect())
    }

    /// Row whose parameters equal `params`.
    pub fn row(&self, params: &[Cell]) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.params.len() == params.len() && r.params.iter().zip(params).all(|(a, b)| a.total_cmp(b).is_eq()))
    }
}

/// How shift tuples are drawn from `Z_n`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftSpace {
    /// Unordered tuples of distinct shifts.
    #[default]
    Distinct,
    OrderedWithRepetition,
}

/// All shift tuples of length `d`, flattened (`chunks(d)` gives the tuples).
pub fn shift_tuples(n: u32, d: usize, space: ShiftSpace) -> Vec<u32> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(n: u32, d: usize, space: ShiftSpace, start: u32, cur: &mut Vec<u32>, out: &mut Vec<u32>) {
        if cur.len() == d {
            out.extend_from_slice(cur);
            return;
        }
        let lo = if space == ShiftSpace::Distinct { start } else { 0 };
        for a in lo..n {
            cur.push(a);
            rec(n, d, space, a + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, d, space, 0, &mut cur, &mut out);
    out
}

/// Number of tuples in the space.
pub fn tuple_count(n: u64, d: usize, space: ShiftSpace) -> u64 {
    match space {
        ShiftSpace::Distinct => binomial(n, d as u64),
        ShiftSpace::OrderedWithRepetition => n.pow(d as u32),
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `x^2 mod n` for every residue.
pub(crate) fn squares(n: u32) -> Vec<u32> {
    (0..n as u64).map(|x| mul_mod(x, x, n as u64) as u32).collect()
}

/// Column names produced by [`stats_cells`].
pub const STATS_COLUMNS: [&str; 15] = [
    "vertices", "edges", "avg_degree", "mu", "median_mu", "nu_mean", "nu_global", "lambda",
    "diameter", "connected", "chi", "curvature_sum", "dimension", "b0", "b1",
];

pub fn stats_cells(r: &StatsRecord) -> Vec<Cell> {
    vec![
        r.n.into(),
        r.edges.into(),
        r.avg_degree.into(),
        Cell::opt_f64(r.mu),
        Cell::opt_f64(r.median_mu),
        r.nu_mean.into(),
        r.nu_global.into(),
        Cell::opt_f64(r.lambda),
        Cell::opt_int(r.diameter),
        r.connected.into(),
        Cell::opt_int(r.chi),
        Cell::opt_f64(r.curvature_sum),
        Cell::opt_f64(r.dimension),
        r.b0.into(),
        r.b1.into(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_spaces() {
        let t = shift_tuples(4, 2, ShiftSpace::Distinct);
        assert_eq!(t.chunks(2).count() as u64, tuple_count(4, 2, ShiftSpace::Distinct));
        assert_eq!(&t[..4], &[0, 1, 0, 2]);
        let o = shift_tuples(3, 2, ShiftSpace::OrderedWithRepetition);
        assert_eq!(o.len(), 18);
        assert_eq!(binomial(229, 3), 1_975_354);
        assert_eq!(binomial(2, 3), 0);
    }

    #[test]
    fn cell_parse_display() {
        for s in ["", "12", "-3", "0.25", "inf", "abc"] {
            assert_eq!(Cell::parse(s).to_string(), s);
        }
        assert_eq!(Cell::Float(3.0).to_string(), "3");
        assert!(Cell::Int(2).total_cmp(&Cell::Float(2.5)).is_lt());
    }

    #[test]
    fn rows_sort_by_params() {
        let mut r = SweepResult::new("t", &["n"], &["v"], SweepProvenance::new(None));
        for n in [5i64, 2, 9] {
            r.rows.push(SweepRow { params: vec![n.into()], values: vec![Cell::Missing] });
        }
        r.sort_rows();
        let ns: Vec<i64> = r.column("n").unwrap().iter().map(|c| c.as_i64().unwrap()).collect();
        assert_eq!(ns, vec![2, 5, 9]);
    }
}
