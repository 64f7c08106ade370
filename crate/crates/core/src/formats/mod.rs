//! On-disk formats: sweep CSV, stats JSON, edge lists and DOT.
//!
//! Writers take a path and replace the file; the `*_string` / `*_to`
//! variants produce the same bytes in memory.

pub mod csv;
pub mod dot;
pub mod edgelist;
pub mod json;

pub use self::csv::{parse_sweep_csv, read_sweep_csv, sweep_csv_string, write_sweep_csv, write_sweep_csv_to};
pub use dot::{dot_string, export_dot};
pub use edgelist::{load_edge_list, parse_edge_list, save_edge_list, edge_list_string, EdgeListLoad};
pub use json::{read_stats_json, stats_from_json, stats_to_json, write_stats_json};
