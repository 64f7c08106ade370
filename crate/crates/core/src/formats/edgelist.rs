//! Plain edge lists: one `u v` pair of non-negative integers per line.
//!
//! Lines starting with `#` or `%` are comments, except `# vertices: N`,
//! which fixes the vertex count so isolated vertices survive a round trip.
//! Columns after the second (weights, timestamps) are ignored. Without the
//! directive, ids that do not already form `0..=max` are compacted in
//! ascending order and the original ids are kept in [`EdgeListLoad::labels`].

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::orbital::{OrbitalGraph, Provenance};

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeListLoad {
    pub graph: OrbitalGraph,
    /// Original id of each vertex when ids were compacted.
    pub labels: Option<Vec<u64>>,
    pub self_loops: usize,
    pub duplicates: usize,
}

fn directive(line: &str) -> Option<&str> {
    let rest = line.strip_prefix('#')?.trim_start();
    rest.strip_prefix("vertices:").map(str::trim)
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListLoad> {
    let mut declared: Option<u64> = None;
    let mut pairs: Vec<(u64, u64)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let bad = |m: String| Error::Parse { line: i + 1, message: m };
        if let Some(v) = directive(line) {
            declared = Some(v.parse().map_err(|_| bad(format!("bad vertex count `{v}`")))?);
            continue;
        }
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut cols = line.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty());
        let mut id = |what: &str| -> Result<u64> {
            let tok = cols.next().ok_or_else(|| bad(format!("missing {what} endpoint")))?;
            tok.parse().map_err(|_| bad(format!("`{tok}` is not a vertex id")))
        };
        let u = id("first")?;
        let v = id("second")?;
        if let Some(n) = declared {
            if u >= n || v >= n {
                return Err(bad(format!("vertex id beyond declared count {n}")));
            }
        }
        pairs.push((u, v));
    }

    let ids: BTreeSet<u64> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    let dense = declared.is_some() || ids.last().is_none_or(|&m| m + 1 == ids.len() as u64);
    let (n, labels) = if dense {
        (declared.unwrap_or_else(|| ids.last().map_or(0, |&m| m + 1)), None)
    } else {
        (ids.len() as u64, Some(ids.iter().copied().collect::<Vec<_>>()))
    };
    if n > u32::MAX as u64 {
        return Err(Error::TooManyVertices(n));
    }
    let index = |x: u64| -> u32 {
        match &labels {
            Some(l) => l.binary_search(&x).expect("id collected above") as u32,
            None => x as u32,
        }
    };
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
    let mut self_loops = 0;
    for &(u, v) in &pairs {
        if u == v {
            self_loops += 1;
        } else {
            let (a, b) = (index(u), index(v));
            edges.push((a.min(b), a.max(b)));
        }
    }
    let graph = OrbitalGraph::from_edges(n as usize, edges.iter().copied())?;
    let duplicates = edges.len() - graph.edge_count();
    if self_loops + duplicates > 0 {
        log::warn!("edge list: dropped {self_loops} self-loops and {duplicates} repeated edges");
    }
    Ok(EdgeListLoad { graph, labels, self_loops, duplicates })
}

pub fn load_edge_list(path: &Path) -> Result<EdgeListLoad> {
    let mut load = parse_edge_list(&fs::read_to_string(path)?)?;
    let provenance = Provenance { source: Some(path.display().to_string()), ..Provenance::default() };
    load.graph = load.graph.with_provenance(provenance);
    Ok(load)
}

pub fn edge_list_string(g: &OrbitalGraph) -> String {
    let mut out = String::new();
    let p = g.provenance();
    if let Some(m) = p.modulus {
        let maps: Vec<String> = p.maps.iter().map(|s| s.to_string()).collect();
        writeln!(out, "# modulus {m}, maps {}", maps.join(";")).unwrap();
    }
    if let Some(s) = &p.source {
        writeln!(out, "# source {s}").unwrap();
    }
    if let Some(seed) = p.seed {
        writeln!(out, "# seed {seed}").unwrap();
    }
    writeln!(out, "# vertices: {}", g.vertex_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn save_edge_list(g: &OrbitalGraph, path: &Path) -> Result<()> {
    fs::write(path, edge_list_string(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph() {
        let l = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(l.graph.vertex_count(), 3);
        assert_eq!(l.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(l.labels, None);
    }

    #[test]
    fn loops_and_repeats_counted() {
        let l = parse_edge_list("% konect style\n0 1\n1 1\n1 0 0.5\n").unwrap();
        assert_eq!((l.self_loops, l.duplicates), (1, 1));
        assert_eq!(l.graph.edge_count(), 1);
    }

    #[test]
    fn sparse_ids_compacted() {
        let l = parse_edge_list("10 20\n20 35\n").unwrap();
        assert_eq!(l.labels, Some(vec![10, 20, 35]));
        assert_eq!(l.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn directive_keeps_isolated_vertices() {
        let g = OrbitalGraph::from_edges(5, [(0, 3)]).unwrap();
        let back = parse_edge_list(&edge_list_string(&g)).unwrap();
        assert_eq!(back.graph, g);
        assert!(matches!(parse_edge_list("# vertices: 2\n0 2\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn malformed_line_number() {
        match parse_edge_list("0 1\n\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_edge_list("7\n"), Err(Error::Parse { line: 1, .. })));
    }
}
