//! Graphviz output.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::Result;
use crate::orbital::OrbitalGraph;

/// Undirected DOT text. Isolated vertices get node statements; every other
/// vertex appears through its edges, listed in ascending order.
pub fn dot_string(g: &OrbitalGraph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() as u32 {
        if g.degree(v) == 0 {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn export_dot(g: &OrbitalGraph, path: &Path) -> Result<()> {
    fs::write(path, dot_string(g))?;
    Ok(())
}
