//! Machine checks of the parity results for quadratic shift families on even `n`.
//!
//! Even shifts preserve parity, so the even and odd residues never meet; for
//! `n mod 8 != 0` an explicit translation conjugates the two halves. Odd
//! shifts flip parity, so the graph is bipartite along residue parity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::experiments::isomorphism::{find_isomorphism, is_isomorphism, IsoOutcome};
use crate::metrics::{clustering, component_count, two_coloring};
use crate::modring::{MapSpec, Modulus};
use crate::orbital::{build_orbital_graph, OrbitalGraph};

/// The translation `x -> x + offset` tested as a conjugacy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conjugation {
    pub offset: u64,
    /// Parity class on which commutation is required; `None` means all of `Z_n`.
    pub domain_parity: Option<u8>,
    /// `phi(T(x)) = T(phi(x))` for every map and every `x` in the domain.
    pub commutes: bool,
    /// `phi` carries the edges of the domain class exactly onto the other class.
    pub maps_edges: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetryVerdict {
    pub n: u64,
    pub shifts: Vec<u64>,
    /// No edge joins an even residue to an odd one.
    pub classes_separated: bool,
    pub components: usize,
    pub conjugation: Option<Conjugation>,
    /// Isomorphism between the even and odd halves.
    pub isomorphism: IsoOutcome,
}

impl SymmetryVerdict {
    /// Everything the proposition predicts for this `n` was confirmed.
    pub fn holds(&self) -> bool {
        self.classes_separated
            && match &self.conjugation {
                Some(c) => c.commutes && c.maps_edges && self.isomorphism.is_isomorphic(),
                None => true,
            }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BipartiteVerdict {
    pub n: u64,
    pub shifts: Vec<u64>,
    /// Every edge joins residues of different parity.
    pub parity_coloring_valid: bool,
    /// A proper two-colouring exists.
    pub bipartite: bool,
    pub triangles: u64,
    pub nu_global: f64,
    pub even: Vec<u32>,
    pub odd: Vec<u32>,
}

impl BipartiteVerdict {
    pub fn holds(&self) -> bool {
        self.parity_coloring_valid && self.bipartite && self.triangles == 0 && self.nu_global == 0.0
    }
}

fn check_shifts(n: u64, shifts: &[u64], parity: u64) -> Result<Modulus> {
    let m = Modulus::new(n)?;
    if !n.is_multiple_of(2) {
        return Err(Error::Precondition(format!("n = {n} is odd")));
    }
    if shifts.is_empty() {
        return Err(Error::EmptySpecList);
    }
    let want = if parity == 0 { "even" } else { "odd" };
    if let Some(a) = shifts.iter().find(|&&a| (a % n) % 2 != parity) {
        return Err(Error::Precondition(format!("shift {a} is not {want}")));
    }
    Ok(m)
}

fn shift_graph(m: Modulus, shifts: &[u64]) -> Result<OrbitalGraph> {
    let specs: Vec<MapSpec> = shifts.iter().map(|&a| MapSpec::Quadratic { a }).collect();
    build_orbital_graph(m, &specs)
}

fn invert(map: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; map.len()];
    for (i, &j) in map.iter().enumerate() {
        inv[j as usize] = i as u32;
    }
    inv
}

fn parity_class(n: u64, p: u64) -> Vec<u32> {
    (p..n).step_by(2).map(|x| x as u32).collect()
}

/// Verify the component-symmetry statement for even shifts on even `n`.
///
/// For `n = 2, 6 mod 8` the translation by `n/2` commutes with every map;
/// for `n = 4 mod 8` the translation by `n/4` commutes on one parity class
/// and maps it onto the other. When `8 | n` no translation is predicted and
/// a general isomorphism search with `iso_budget` nodes is run instead.
pub fn check_symmetry_proposition(n: u64, shifts: &[u64], iso_budget: u64) -> Result<SymmetryVerdict> {
    let m = check_shifts(n, shifts, 0)?;
    let g = shift_graph(m, shifts)?;
    let classes_separated = g.edges().all(|(u, v)| (u ^ v) & 1 == 0);
    let halves = [g.induced(&parity_class(n, 0)), g.induced(&parity_class(n, 1))];

    let (offset, domain) = match n % 8 {
        2 | 6 => (Some(n / 2), None),
        4 => (Some(n / 4), Some(((n - 4) / 8 % 2) as u8)),
        _ => (None, None),
    };
    let mut even_to_odd = None;
    let conjugation = offset.map(|off| {
        let phi = |x: u64| (x + off) % n;
        let sq = |x: u64| (x as u128 * x as u128 % n as u128) as u64;
        let commutes = (0..n)
            .filter(|x| domain.is_none_or(|p| x % 2 == p as u64))
            .all(|x| shifts.iter().all(|&a| phi((sq(x) + a) % n) == (sq(phi(x)) + a) % n));
        // an unrestricted translation is checked from the even class
        let from = domain.unwrap_or(0) as u64;
        let to = (from + off) % 2;
        let map: Vec<u32> = parity_class(n, from).iter().map(|&x| (phi(x as u64) / 2) as u32).collect();
        let maps_edges = to != from && is_isomorphism(&halves[from as usize], &halves[to as usize], &map);
        if maps_edges {
            even_to_odd = Some(if from == 0 { map } else { invert(&map) });
        }
        Conjugation { offset: off, domain_parity: domain, commutes, maps_edges }
    });
    let isomorphism = match even_to_odd {
        Some(map) => IsoOutcome::Isomorphic { map },
        None => find_isomorphism(&halves[0], &halves[1], iso_budget),
    };

    Ok(SymmetryVerdict {
        n,
        shifts: shifts.to_vec(),
        classes_separated,
        components: component_count(&g),
        conjugation,
        isomorphism,
    })
}

/// Verify the bipartiteness statement for odd shifts on even `n`.
pub fn check_bipartite_proposition(n: u64, shifts: &[u64]) -> Result<BipartiteVerdict> {
    let m = check_shifts(n, shifts, 1)?;
    let g = shift_graph(m, shifts)?;
    let cl = clustering(&g);
    let parity_coloring_valid = g.edges().all(|(u, v)| (u ^ v) & 1 == 1);
    Ok(BipartiteVerdict {
        n,
        shifts: shifts.to_vec(),
        parity_coloring_valid,
        bipartite: two_coloring(&g).is_some(),
        triangles: cl.triangles,
        nu_global: cl.global,
        even: parity_class(n, 0),
        odd: parity_class(n, 1),
    })
}
