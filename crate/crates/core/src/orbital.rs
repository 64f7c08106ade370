//! Orbital networks: the simple graph of a family of maps on `Z_n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modring::{map_images, MapSpec, Modulus};

/// Where a graph came from.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub modulus: Option<u64>,
    pub maps: Vec<MapSpec>,
    pub seed: Option<u64>,
    /// Free-form origin for graphs not built from maps, e.g. `ws(1001,8,0.2)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

/// Immutable finite simple graph on `0..n` in compressed sparse row form.
///
/// Neighbor lists are sorted and duplicate free; there are no self-loops.
/// Equality compares `n` and adjacency only, never provenance.
#[derive(Debug, Clone)]
pub struct OrbitalGraph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    provenance: Provenance,
}

impl PartialEq for OrbitalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.offsets == other.offsets && self.neighbors == other.neighbors
    }
}

impl Eq for OrbitalGraph {}

fn vertex_count(n: u64) -> Result<usize> {
    if n > u32::MAX as u64 {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(n as usize)
    }
}

impl OrbitalGraph {
    /// Simple graph from an arbitrary pair list; loops and repeats are dropped.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        vertex_count(n as u64)?;
        let mut arcs: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u != v {
                arcs.push((u, v));
                arcs.push((v, u));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &arcs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let neighbors = arcs.into_iter().map(|(_, v)| v).collect();
        Ok(OrbitalGraph { offsets, neighbors, provenance: Provenance::default() })
    }

    /// Graph generated by explicit map tables (`tables[i][x] = T_i(x)`).
    pub fn from_tables(n: usize, tables: &[Vec<u32>]) -> Result<Self> {
        for t in tables {
            if t.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "map table has {} entries, expected {n}",
                    t.len()
                )));
            }
        }
        Self::from_edges(
            n,
            tables.iter().flat_map(|t| t.iter().enumerate().map(|(x, &y)| (x as u32, y))),
        )
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.vertex_count() as u32)
            .flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count() as u32).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Subgraph induced on `vertices` (sorted, distinct), relabelled `0..k`
    /// in the given order.
    pub fn induced(&self, vertices: &[u32]) -> OrbitalGraph {
        let mut index = vec![u32::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v as usize] = i as u32;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.neighbors(v)
                .iter()
                .filter(|&&w| index[w as usize] != u32::MAX)
                .map(move |&w| (i as u32, index[w as usize]))
        });
        OrbitalGraph::from_edges(vertices.len(), edges.collect::<Vec<_>>())
            .expect("induced subgraph indices are in range")
    }
}

fn check_specs(n: Modulus, specs: &[MapSpec]) -> Result<()> {
    if specs.is_empty() {
        return Err(Error::EmptySpecList);
    }
    if specs.iter().any(MapSpec::is_henon) && n.square_side().is_none() {
        return Err(Error::NonSquareHenon(n.get()));
    }
    vertex_count(n.get())?;
    Ok(())
}

fn image_tables(n: Modulus, specs: &[MapSpec]) -> Result<Vec<Vec<u32>>> {
    check_specs(n, specs)?;
    specs
        .iter()
        .map(|s| {
            let s = s.normalized(n)?;
            Ok(map_images(&s, n)?.into_iter().map(|y| y as u32).collect())
        })
        .collect()
}

/// The orbital network of `specs` acting on `Z_n`.
///
/// Hénon specs need `n = m^2`; vertex `x + m y` stands for `(x, y)`.
pub fn build_orbital_graph(n: Modulus, specs: &[MapSpec]) -> Result<OrbitalGraph> {
    let tables = image_tables(n, specs)?;
    let provenance = Provenance {
        modulus: Some(n.get()),
        maps: specs.iter().map(|s| s.normalized(n)).collect::<Result<_>>()?,
        seed: None,
        source: None,
    };
    Ok(OrbitalGraph::from_tables(n.get() as usize, &tables)?.with_provenance(provenance))
}

/// One arc `from -> to` contributed by generator `generator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: u32,
    pub to: u32,
    pub generator: usize,
}

/// Functional digraph of a map family, self-loops and repeats retained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigraphView {
    n: usize,
    images: Vec<Vec<u32>>,
}

impl DigraphView {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn generator_count(&self) -> usize {
        self.images.len()
    }

    /// `T_i(x)` for generator `i`.
    pub fn image(&self, generator: usize, x: u32) -> u32 {
        self.images[generator][x as usize]
    }

    pub fn table(&self, generator: usize) -> &[u32] {
        &self.images[generator]
    }

    /// Generator-major arc list.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.images.iter().enumerate().flat_map(|(generator, t)| {
            t.iter().enumerate().map(move |(x, &to)| Arc { from: x as u32, to, generator })
        })
    }

    pub fn self_loop_count(&self) -> usize {
        self.arcs().filter(|a| a.from == a.to).count()
    }

    /// Non-loop arcs that repeat an undirected pair already contributed by
    /// another arc.
    pub fn coinciding_arc_count(&self) -> usize {
        let mut pairs: Vec<(u32, u32)> = self
            .arcs()
            .filter(|a| a.from != a.to)
            .map(|a| (a.from.min(a.to), a.from.max(a.to)))
            .collect();
        let total = pairs.len();
        pairs.sort_unstable();
        pairs.dedup();
        total - pairs.len()
    }
}

pub fn digraph_view(n: Modulus, specs: &[MapSpec]) -> Result<DigraphView> {
    Ok(DigraphView { n: n.get() as usize, images: image_tables(n, specs)? })
}

/// Map tables realizing `g` as an orbital network.
///
/// With `d` the maximum degree, `T_i(x)` is the `i`-th smallest neighbor of
/// `x` when `x` has one and `x` itself otherwise.
pub fn realize_as_orbital(g: &OrbitalGraph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    (0..g.max_degree())
        .map(|i| {
            (0..n as u32).map(|x| g.neighbors(x).get(i).copied().unwrap_or(x)).collect()
        })
        .collect()
}

/// Whether every map is a bijection of `Z_n`, by counting distinct images.
pub fn maps_are_invertible(n: Modulus, specs: &[MapSpec]) -> bool {
    let nv = n.get() as usize;
    specs.iter().all(|s| {
        let Ok(images) = s.normalized(n).and_then(|s| map_images(&s, n)) else {
            return false;
        };
        let mut seen = vec![false; nv];
        images.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn quadratic_on_z5() {
        let g = build_orbital_graph(m(5), &[MapSpec::Quadratic { a: 1 }]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 4)]);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn single_vertex() {
        let g = build_orbital_graph(m(1), &[MapSpec::Quadratic { a: 0 }, MapSpec::Affine { a: 3, b: 2 }])
            .unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn spec_errors() {
        assert_eq!(build_orbital_graph(m(5), &[]), Err(Error::EmptySpecList));
        assert_eq!(
            build_orbital_graph(m(10), &[MapSpec::Henon { c: 1, b: 1 }]),
            Err(Error::NonSquareHenon(10))
        );
    }

    #[test]
    fn henon_graph_on_square() {
        let g = build_orbital_graph(m(49), &[MapSpec::Henon { c: 3, b: 1 }]).unwrap();
        assert_eq!(g.vertex_count(), 49);
        assert!(maps_are_invertible(m(49), &[MapSpec::Henon { c: 3, b: 1 }]));
        assert!(!maps_are_invertible(m(49), &[MapSpec::Henon { c: 3, b: 0 }]));
    }

    #[test]
    fn digraph_examples() {
        let d = digraph_view(m(11), &[MapSpec::Quadratic { a: 3 }, MapSpec::Quadratic { a: 2 }]).unwrap();
        assert_eq!(d.arcs().count(), 22);
        let id = digraph_view(m(5), &[MapSpec::Affine { a: 1, b: 0 }]).unwrap();
        assert_eq!(id.self_loop_count(), 5);
        let sq = digraph_view(m(7), &[MapSpec::Quadratic { a: 0 }]).unwrap();
        assert_eq!(sq.table(0), &[0, 1, 4, 2, 2, 4, 1]);
    }

    #[test]
    fn realize_examples() {
        let k2 = OrbitalGraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(realize_as_orbital(&k2), vec![vec![1, 0]]);

        let star = OrbitalGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = realize_as_orbital(&star);
        assert_eq!(t, vec![vec![1, 0, 0, 0], vec![2, 1, 2, 3], vec![3, 1, 2, 3]]);
        assert_eq!(OrbitalGraph::from_tables(4, &t).unwrap(), star);

        let empty = OrbitalGraph::from_edges(6, []).unwrap();
        assert!(realize_as_orbital(&empty).is_empty());
    }

    #[test]
    fn invertibility_examples() {
        assert!(maps_are_invertible(m(10), &[MapSpec::Affine { a: 1, b: 1 }]));
        assert!(!maps_are_invertible(m(5), &[MapSpec::Quadratic { a: 1 }]));
        assert!(maps_are_invertible(m(37), &[MapSpec::Permutation { seed: 5 }]));
    }

    #[test]
    fn induced_relabels() {
        let g = OrbitalGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let h = g.induced(&[1, 2, 3]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
