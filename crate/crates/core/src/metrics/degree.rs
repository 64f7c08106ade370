use std::collections::BTreeMap;

use crate::orbital::OrbitalGraph;

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeStats {
    /// `2 |E| / |V|`
    pub average: f64,
    /// degree -> number of vertices with that degree
    pub histogram: BTreeMap<usize, usize>,
    /// population variance of the degree sequence
    pub variance: f64,
}

pub fn degree_stats(g: &OrbitalGraph) -> DegreeStats {
    let n = g.vertex_count();
    let mut histogram = BTreeMap::new();
    for v in 0..n as u32 {
        *histogram.entry(g.degree(v)).or_insert(0) += 1;
    }
    let average = if n == 0 { 0.0 } else { 2.0 * g.edge_count() as f64 / n as f64 };
    let variance = if n == 0 {
        0.0
    } else {
        histogram
            .iter()
            .map(|(&d, &c)| c as f64 * (d as f64 - average).powi(2))
            .sum::<f64>()
            / n as f64
    };
    DegreeStats { average, histogram, variance }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph() {
        let k4 = OrbitalGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = degree_stats(&k4);
        assert_eq!(s.average, 3.0);
        assert_eq!(s.histogram, BTreeMap::from([(3, 4)]));
        assert_eq!(s.variance, 0.0);
    }

    #[test]
    fn star_variance() {
        let star = OrbitalGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = degree_stats(&star);
        assert_eq!(s.average, 1.5);
        // degrees 3,1,1,1: mean 1.5, squared deviations 2.25 + 3 * 0.25
        assert!((s.variance - 0.75).abs() < 1e-12);
    }
}
