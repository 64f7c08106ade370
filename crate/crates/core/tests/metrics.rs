use proptest::prelude::*;

use orbital_core::metrics::{
    betti, characteristic_path_length, clique_vector, clustering, component_count, degree_stats,
    euler_characteristic, inductive_dimension, nsw_estimate, triangle_count, DEFAULT_CLIQUE_BUDGET,
    DEFAULT_DIMENSION_BUDGET,
};
use orbital_core::modring::is_prime;
use orbital_core::{build_orbital_graph, parse_map_list, MapSpec, Modulus, OrbitalGraph};

fn quadratics(n: u64, shifts: &[u64]) -> OrbitalGraph {
    let specs: Vec<MapSpec> = shifts.iter().map(|&a| MapSpec::Quadratic { a: a % n }).collect();
    build_orbital_graph(Modulus::new(n).unwrap(), &specs).unwrap()
}

/// Degrees lie in 2..=6 except at fixed points of one of the maps, whose
/// dropped self-loop can leave a single neighbor.
#[test]
fn two_quadratics_on_primes_have_degrees_two_to_six_off_fixed_points() {
    let mut bad = Vec::new();
    let mut with_loops = 0;
    for p in (2..=101).filter(|&p| is_prime(p)) {
        for a in 0..p {
            for b in a + 1..p {
                let g = quadratics(p, &[a, b]);
                let fixed = |v: u64| (v * v + a) % p == v || (v * v + b) % p == v;
                let mut low = false;
                for v in 0..p {
                    let deg = g.degree(v as u32);
                    let loop_degree = deg + fixed(v) as usize;
                    if !(1..=6).contains(&deg) || !(2..=6).contains(&loop_degree) {
                        bad.push((p, a, b, v, deg));
                    }
                    low |= deg == 1;
                }
                with_loops += low as usize;
            }
        }
    }
    assert!(bad.is_empty(), "{} vertices out of range, first {:?}", bad.len(), bad.first());
    assert!(with_loops > 0);
}

#[test]
fn nsw_estimate_on_two_quadratics() {
    let n = Modulus::new(2000).unwrap();
    let g = build_orbital_graph(n, &parse_map_list("x^2+1;x^2+2", n).unwrap()).unwrap();
    let (mu, _) = characteristic_path_length(&g).unwrap();
    let est = nsw_estimate(&g).unwrap();
    assert!(est > mu / 2.0 && est < mu * 2.0, "estimate {est}, measured {mu}");
}

fn complete_components(g: &OrbitalGraph) -> bool {
    (0..g.vertex_count() as u32).all(|v| {
        let nb = g.neighbors(v);
        nb.iter().all(|&u| nb.iter().all(|&w| u == w || g.has_edge(u, w)))
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = OrbitalGraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n as u32, 0..n as u32), 0..2 * n)
            .prop_map(move |e| OrbitalGraph::from_edges(n, e).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dimension_at_most_generators_plus_one(n in 2u64..=200, shifts in prop::collection::vec(0u64..200, 1..=3)) {
        let g = quadratics(n, &shifts);
        let dim = inductive_dimension(&g, DEFAULT_DIMENSION_BUDGET).unwrap();
        prop_assert!(dim <= num_rational::BigRational::from_integer((shifts.len() as i64 + 1).into()), "{}", dim);
    }

    #[test]
    fn clustering_in_unit_interval(g in graph(30)) {
        let c = clustering(&g);
        prop_assert!((0.0..=1.0).contains(&c.global));
        prop_assert!((0.0..=1.0).contains(&c.mean_local));
        if c.two_paths > 0 {
            prop_assert_eq!(c.global == 1.0, complete_components(&g));
        }
    }

    #[test]
    fn triangle_free_euler_characteristic(g in graph(40)) {
        prop_assume!(triangle_count(&g) == 0);
        let chi = euler_characteristic(&clique_vector(&g, None, DEFAULT_CLIQUE_BUDGET).unwrap()).unwrap();
        let (b0, b1) = betti(&g);
        prop_assert_eq!(chi, g.vertex_count() as i64 - g.edge_count() as i64);
        prop_assert_eq!(chi, b0 as i64 - b1 as i64);
        prop_assert_eq!(b0, component_count(&g));
    }

    #[test]
    fn degrees_sum_to_twice_the_edges(g in graph(60)) {
        let d = degree_stats(&g);
        let total: usize = (0..g.vertex_count() as u32).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        prop_assert!((d.average * g.vertex_count() as f64 - total as f64).abs() < 1e-9);
    }
}
