//! Graph isomorphism by colour refinement and budgeted backtracking.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::orbital::OrbitalGraph;

/// Default cap on backtracking nodes.
pub const DEFAULT_ISO_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum IsoOutcome {
    /// `map[v]` is the image of vertex `v` of the first graph.
    Isomorphic { map: Vec<u32> },
    /// Refinement or a complete search ruled out every bijection.
    NotIsomorphic,
    /// Search stopped before reaching a decision.
    BudgetExhausted,
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic { .. })
    }
}

/// Stable colouring of the disjoint union `g ⊔ h`; returns the colours of
/// each side, numbered consistently.
fn refine(g: &OrbitalGraph, h: &OrbitalGraph) -> (Vec<u32>, Vec<u32>) {
    let ng = g.vertex_count();
    let nbrs = |v: usize| -> Vec<usize> {
        if v < ng {
            g.neighbors(v as u32).iter().map(|&w| w as usize).collect()
        } else {
            h.neighbors((v - ng) as u32).iter().map(|&w| w as usize + ng).collect()
        }
    };
    let total = ng + h.vertex_count();
    let adj: Vec<Vec<usize>> = (0..total).map(nbrs).collect();
    let mut colour: Vec<u32> = adj.iter().map(|a| a.len() as u32).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = adj
            .iter()
            .enumerate()
            .map(|(v, a)| {
                let mut m: Vec<u32> = a.iter().map(|&w| colour[w]).collect();
                m.sort_unstable();
                (colour[v], m)
            })
            .collect();
        let mut ids = BTreeMap::new();
        for s in &sigs {
            let next = ids.len() as u32;
            ids.entry(s).or_insert(next);
        }
        let count = ids.len();
        colour = sigs.iter().map(|s| ids[s]).collect();
        if count == classes {
            break;
        }
        classes = count;
    }
    let h_col = colour.split_off(ng);
    (colour, h_col)
}

fn histogram(c: &[u32]) -> BTreeMap<u32, usize> {
    let mut m = BTreeMap::new();
    for &x in c {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

struct Search<'a> {
    g: &'a OrbitalGraph,
    h: &'a OrbitalGraph,
    cg: Vec<u32>,
    ch: Vec<u32>,
    order: Vec<u32>,
    map: Vec<u32>,
    inverse: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn consistent(&self, v: u32, w: u32) -> bool {
        let mut mapped = 0;
        for &u in self.g.neighbors(v) {
            let fu = self.map[u as usize];
            if fu != u32::MAX {
                if !self.h.has_edge(w, fu) {
                    return false;
                }
                mapped += 1;
            }
        }
        let mapped_h = self.h.neighbors(w).iter().filter(|&&x| self.inverse[x as usize] != u32::MAX).count();
        mapped == mapped_h
    }

    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn extend(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let v = self.order[depth];
        let want = self.cg[v as usize];
        for w in 0..self.h.vertex_count() as u32 {
            if self.ch[w as usize] != want || self.inverse[w as usize] != u32::MAX || !self.consistent(v, w) {
                continue;
            }
            self.map[v as usize] = w;
            self.inverse[w as usize] = v;
            match self.extend(depth + 1) {
                Some(false) => {}
                other => return other,
            }
            self.map[v as usize] = u32::MAX;
            self.inverse[w as usize] = u32::MAX;
        }
        Some(false)
    }
}

/// Vertices in an order that keeps the placed set connected where possible,
/// preferring rare colours.
fn search_order(g: &OrbitalGraph, colour: &[u32]) -> Vec<u32> {
    let n = g.vertex_count();
    let hist = histogram(colour);
    let mut placed = vec![false; n];
    let mut touching = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (touching[v] == 0, hist[&colour[v]], std::cmp::Reverse(touching[v]), v))
            .unwrap();
        placed[v] = true;
        order.push(v as u32);
        for &w in g.neighbors(v as u32) {
            touching[w as usize] += 1;
        }
    }
    order
}

/// Decide whether `g` and `h` are isomorphic within `budget` search nodes.
pub fn find_isomorphism(g: &OrbitalGraph, h: &OrbitalGraph, budget: u64) -> IsoOutcome {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return IsoOutcome::NotIsomorphic;
    }
    let (cg, ch) = refine(g, h);
    if histogram(&cg) != histogram(&ch) {
        return IsoOutcome::NotIsomorphic;
    }
    let order = search_order(g, &cg);
    let mut s = Search {
        g,
        h,
        cg,
        ch,
        order,
        map: vec![u32::MAX; n],
        inverse: vec![u32::MAX; n],
        nodes: 0,
        budget,
    };
    match s.extend(0) {
        Some(true) => IsoOutcome::Isomorphic { map: s.map },
        Some(false) => IsoOutcome::NotIsomorphic,
        None => IsoOutcome::BudgetExhausted,
    }
}

/// Whether `map` carries the edge set of `g` exactly onto that of `h`.
pub fn is_isomorphism(g: &OrbitalGraph, h: &OrbitalGraph, map: &[u32]) -> bool {
    if map.len() != g.vertex_count() || g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut seen = vec![false; map.len()];
    if !map.iter().all(|&w| (w as usize) < seen.len() && !std::mem::replace(&mut seen[w as usize], true)) {
        return false;
    }
    g.edges().all(|(u, v)| h.has_edge(map[u as usize], map[v as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32, perm: &[u32]) -> OrbitalGraph {
        OrbitalGraph::from_edges(n as usize, (0..n).map(|i| (perm[i as usize], perm[((i + 1) % n) as usize]))).unwrap()
    }

    #[test]
    fn relabelled_cycle() {
        let g = cycle(6, &[0, 1, 2, 3, 4, 5]);
        let h = cycle(6, &[3, 5, 1, 0, 2, 4]);
        match find_isomorphism(&g, &h, DEFAULT_ISO_BUDGET) {
            IsoOutcome::Isomorphic { map } => assert!(is_isomorphism(&g, &h, &map)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hexagon_vs_two_triangles() {
        // same degree sequence, refinement alone cannot tell them apart
        let g = cycle(6, &[0, 1, 2, 3, 4, 5]);
        let h = OrbitalGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(find_isomorphism(&g, &h, DEFAULT_ISO_BUDGET), IsoOutcome::NotIsomorphic);
    }

    #[test]
    fn tiny_budget() {
        let g = cycle(6, &[0, 1, 2, 3, 4, 5]);
        let h = OrbitalGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(find_isomorphism(&g, &h, 2), IsoOutcome::BudgetExhausted);
    }

    #[test]
    fn different_degrees() {
        let g = OrbitalGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = OrbitalGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(find_isomorphism(&g, &h, DEFAULT_ISO_BUDGET), IsoOutcome::NotIsomorphic);
    }
}
