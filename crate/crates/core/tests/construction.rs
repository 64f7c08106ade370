use std::collections::BTreeSet;

use proptest::prelude::*;

use orbital_core::modring::{carmichael, gcd, pow_mod};
use orbital_core::{
    apply_map, build_orbital_graph, digraph_view, generate_baseline, multiplicative_order, BaselineModel,
    BaselineSpec, MapSpec, Modulus,
};

fn spec() -> impl Strategy<Value = MapSpec> {
    prop_oneof![
        any::<u64>().prop_map(|a| MapSpec::Quadratic { a }),
        (any::<u64>(), any::<u64>()).prop_map(|(a, b)| MapSpec::Affine { a, b }),
        (any::<u64>(), any::<u64>()).prop_map(|(g, c)| MapSpec::Exponential { g, c }),
        (1u32..=3, any::<u64>()).prop_map(|(k, c)| MapSpec::FloorPower { alpha: k as f64 + 0.5, c }),
        any::<u64>().prop_map(|seed| MapSpec::Permutation { seed }),
    ]
}

#[test]
fn multiplicative_order_divides_carmichael() {
    for n in 2..=500u64 {
        let lambda = carmichael(n).unwrap();
        let m = Modulus::new(n).unwrap();
        for g in (1..n).filter(|&g| gcd(g, n) == 1) {
            let order = multiplicative_order(g, m).unwrap();
            assert_eq!(lambda % order, 0, "ord_{n}({g}) = {order}, carmichael {lambda}");
            assert_eq!(pow_mod(g, order, n), 1);
        }
    }
}

#[test]
fn integer_floor_powers_are_exact() {
    for n in 1..=10_000u64 {
        let m = Modulus::new(n).unwrap();
        for x in 0..n {
            for k in [1u32, 2, 3] {
                let exact = (0..k).fold(1u128, |acc, _| acc * x as u128) % n as u128;
                let got = apply_map(&MapSpec::FloorPower { alpha: k as f64, c: 0 }, x, m).unwrap();
                assert_eq!(got as u128, exact, "floor(x^{k}) for x = {x}, n = {n}");
            }
        }
    }
}

#[test]
fn unrewired_small_world_is_the_circulant_of_shift_maps() {
    for (n, d) in [(100u64, 2usize), (101, 3), (1001, 4)] {
        let m = Modulus::new(n).unwrap();
        let shifts: Vec<MapSpec> = (1..=d as u64).map(|b| MapSpec::Affine { a: 1, b }).collect();
        let floors: Vec<MapSpec> = std::iter::once(MapSpec::Affine { a: 1, b: 1 })
            .chain((2..=d as u64).map(|c| MapSpec::FloorPower { alpha: 1.0, c }))
            .collect();
        let ring = generate_baseline(&BaselineSpec {
            model: BaselineModel::WattsStrogatz { n: n as usize, k: 2 * d, p: 0.0 },
            seed: 5,
        })
        .unwrap();
        assert_eq!(ring, build_orbital_graph(m, &shifts).unwrap());
        assert_eq!(ring, build_orbital_graph(m, &floors).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn images_are_residues(n in 1u64..=u64::MAX, s in spec(), x in any::<u64>()) {
        prop_assume!(!matches!(s, MapSpec::Permutation { .. } | MapSpec::FloorPower { .. }) || n <= 5000);
        let m = Modulus::new(n).unwrap();
        let x = x % n;
        if let Ok(y) = apply_map(&s, x, m) {
            prop_assert!(y < n);
        }
    }

    #[test]
    fn distinct_quadratic_shifts_never_agree(n in 2u64..=u64::MAX, a in any::<u64>(), b in any::<u64>(), x in any::<u64>()) {
        let (a, b, x) = (a % n, b % n, x % n);
        prop_assume!(a != b);
        let m = Modulus::new(n).unwrap();
        prop_assert_ne!(apply_map(&MapSpec::Quadratic { a }, x, m).unwrap(), apply_map(&MapSpec::Quadratic { a: b }, x, m).unwrap());
    }

    #[test]
    fn edges_bounded_by_generators(n in 1u64..=300, specs in prop::collection::vec(spec(), 1..=4)) {
        let m = Modulus::new(n).unwrap();
        let g = build_orbital_graph(m, &specs).unwrap();
        prop_assert!(g.edge_count() <= specs.len() * n as usize);
        prop_assert!(2.0 * g.edge_count() as f64 / n as f64 <= 2.0 * specs.len() as f64);
    }

    #[test]
    fn spec_order_is_irrelevant(n in 1u64..=300, mut specs in prop::collection::vec(spec(), 1..=4), rot in 0usize..4) {
        let m = Modulus::new(n).unwrap();
        let g = build_orbital_graph(m, &specs).unwrap();
        let k = rot % specs.len();
        specs.rotate_left(k);
        specs.reverse();
        prop_assert_eq!(build_orbital_graph(m, &specs).unwrap(), g);
    }

    #[test]
    fn edge_deficit_is_loops_plus_coincidences(n in 1u64..=300, shifts in prop::collection::vec(any::<u64>(), 1..=3)) {
        let m = Modulus::new(n).unwrap();
        let specs: Vec<MapSpec> = shifts.iter().map(|&a| MapSpec::Quadratic { a }).collect();
        let g = build_orbital_graph(m, &specs).unwrap();
        let view = digraph_view(m, &specs).unwrap();
        let d = specs.len();
        prop_assert_eq!(g.edge_count(), d * n as usize - view.self_loop_count() - view.coinciding_arc_count());

        let mut seen = BTreeSet::new();
        let (mut loops, mut repeats) = (0, 0);
        for s in &specs {
            for x in 0..n {
                let y = apply_map(s, x, m).unwrap();
                if y == x {
                    loops += 1;
                } else if !seen.insert((x.min(y), x.max(y))) {
                    repeats += 1;
                }
            }
        }
        prop_assert_eq!((view.self_loop_count(), view.coinciding_arc_count()), (loops, repeats));
    }
}
