//! Orbital networks: finite simple graphs generated by families of arithmetic
//! maps on `Z_n`, together with the graph statistics, random baselines and
//! parameter sweeps used to study them.
//!
//! ```
//! use orbital_core::{build_orbital_graph, parse_map_list, Modulus};
//! use orbital_core::metrics::{compute_stats, StatsOptions};
//!
//! let n = Modulus::new(1001).unwrap();
//! let maps = parse_map_list("x^2+226", n).unwrap();
//! let g = build_orbital_graph(n, &maps).unwrap();
//! let stats = compute_stats(&g, &StatsOptions::fast());
//! assert_eq!(stats.diameter, Some(14));
//! ```

pub mod baselines;
pub mod error;
pub mod experiments;
pub mod formats;
pub mod metrics;
pub mod modring;
pub mod orbital;

pub use baselines::{generate_baseline, BaselineModel, BaselineSpec};
pub use error::{Error, Result};
pub use experiments::{Cell, ShiftSpace, SweepProvenance, SweepResult, SweepRow};
pub use metrics::{compute_stats, StatsOptions, StatsRecord};
pub use modring::{
    apply_map, factor_summary, multiplicative_order, parse_map_list, parse_map_spec,
    seeded_permutation, squaring_fixed_points, FactorizationSummary, MapSpec, Modulus,
};
pub use orbital::{
    build_orbital_graph, digraph_view, maps_are_invertible, realize_as_orbital, DigraphView,
    OrbitalGraph, Provenance,
};
