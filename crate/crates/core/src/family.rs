//! Family partition of the ideals by support, the weighted clique set and the
//! complement-reuse coloring that together show `ω(G(Z_n)) = χ(G(Z_n))`.
//!
//! Every vertex lies in exactly one family `F_S` (all ideals with support
//! exactly `S`). The weight `W(S) = prod_{i in S} n_i` counts the ideals of
//! the family, before the unit ideal is removed from the full support.
//! Choosing, for each complementary pair `{S, S^c}`, the heavier side gives a
//! clique, and each unchosen family can borrow the colors of its complement.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{support_vertex_count, Graph, IdealCode, Support};
use crate::number::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Family {
    pub support: Support,
    pub weight: u64,
    pub vertex_count: u64,
}

impl Family {
    pub fn new(support: Support, sig: &Signature) -> Self {
        Family {
            support,
            weight: weight(support, sig),
            vertex_count: support_vertex_count(support, sig),
        }
    }
}

/// `W(S) = prod_{i in S} n_i`; the empty support has weight 1 as an empty
/// product but never appears as a family.
pub fn weight(support: Support, sig: &Signature) -> u64 {
    support
        .indices()
        .map(|i| u64::from(sig.exponents()[i]))
        .product()
}

pub fn family_of(code: &IdealCode, sig: &Signature) -> Family {
    Family::new(code.support(sig), sig)
}

/// The family over the complementary support. Complementing the full support
/// yields the empty support, whose family has no vertices.
pub fn complement(family: &Family, sig: &Signature) -> Family {
    let support = family.support.complement(sig.len());
    if support.is_empty() {
        Family {
            support,
            weight: 0,
            vertex_count: 0,
        }
    } else {
        Family::new(support, sig)
    }
}

/// Supports whose families form the clique `C_1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSet {
    /// Chosen supports in increasing bit order.
    pub chosen: Vec<Support>,
    /// Complementary pairs of equal weight, chosen member first.
    pub tie_pairs: Vec<(Support, Support)>,
}

impl CliqueSet {
    pub fn contains(&self, support: Support) -> bool {
        self.chosen.binary_search(&support).is_ok()
    }
}

/// For each complementary pair the strictly heavier support is chosen; on a
/// tie the member containing the last component (largest exponent) is
/// chosen. Tied chosen supports therefore all share that component and
/// pairwise intersect. The full support is always chosen.
pub fn build_clique_set(sig: &Signature) -> CliqueSet {
    let m = sig.len();
    let full = Support::full(m);
    let last = m - 1;
    let mut chosen = vec![];
    let mut tie_pairs = vec![];
    for bits in 1..=full.bits() {
        let s = Support::from_bits(bits);
        if s == full {
            chosen.push(s);
            continue;
        }
        let c = s.complement(m);
        let (ws, wc) = (weight(s, sig), weight(c, sig));
        if ws > wc {
            chosen.push(s);
        } else if ws == wc && s.contains(last) {
            chosen.push(s);
            tie_pairs.push((s, c));
        }
    }
    CliqueSet { chosen, tie_pairs }
}

/// Vertex ids (canonical order) of the union of the chosen families.
pub fn clique_members(cs: &CliqueSet, graph: &Graph) -> Vec<usize> {
    (0..graph.vertex_count())
        .filter(|&v| cs.contains(graph.support(v)))
        .collect()
}

/// Clique number from the family construction, without building the graph.
pub fn omega(sig: &Signature) -> u64 {
    build_clique_set(sig)
        .chosen
        .iter()
        .map(|&s| support_vertex_count(s, sig))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub omega: usize,
    pub chi: usize,
    /// Clique vertex ids in canonical order.
    pub clique: Vec<usize>,
    /// `colors[v]` is the color of vertex `v`, in `0..chi`.
    pub colors: Vec<usize>,
}

/// Colors the clique `C_1` with `0..|C_1|` in canonical order, then gives the
/// `k`-th member of each unchosen family `H` the color of the `k`-th member
/// of `H^c`.
pub fn build_coloring(graph: &Graph) -> Result<ColoringCertificate> {
    let sig = graph.signature();
    let m = sig.len();
    let cs = build_clique_set(sig);
    let clique = clique_members(&cs, graph);

    const UNSET: usize = usize::MAX;
    let mut colors = vec![UNSET; graph.vertex_count()];
    for (color, &v) in clique.iter().enumerate() {
        colors[v] = color;
    }

    let mut by_support: std::collections::BTreeMap<Support, Vec<usize>> = Default::default();
    for v in 0..graph.vertex_count() {
        by_support.entry(graph.support(v)).or_default().push(v);
    }
    for (&support, members) in &by_support {
        if cs.contains(support) {
            continue;
        }
        let partner = support.complement(m);
        if !cs.contains(partner) {
            return Err(Error::Internal(format!(
                "neither {support} nor its complement {partner} is chosen"
            )));
        }
        let donors = by_support.get(&partner).map(Vec::as_slice).unwrap_or(&[]);
        if members.len() > donors.len() {
            return Err(Error::Internal(format!(
                "family {support} has {} members but its complement only {}",
                members.len(),
                donors.len()
            )));
        }
        for (&v, &donor) in members.iter().zip(donors) {
            colors[v] = colors[donor];
        }
    }

    debug_assert!(colors.iter().all(|&c| c != UNSET));
    Ok(ColoringCertificate {
        omega: clique.len(),
        chi: clique.len(),
        clique,
        colors,
    })
}

/// Checks the certificate against the graph: clique pairwise adjacent, every
/// vertex colored within `0..chi`, no monochromatic edge, `chi` colors
/// actually used and `|clique| = omega = chi`.
pub fn validate(cert: &ColoringCertificate, graph: &Graph) -> bool {
    let adj = graph.adjacency();
    if cert.chi > cert.colors.len() || cert.colors.len() != graph.vertex_count() {
        return false;
    }
    let mut used = vec![false; cert.chi];
    for &c in &cert.colors {
        match used.get_mut(c) {
            Some(slot) => *slot = true,
            None => return false,
        }
    }
    cert.clique.len() == cert.omega
        && cert.omega == cert.chi
        && used.iter().all(|&u| u)
        && adj.is_clique(&cert.clique)
        && adj.is_proper_coloring(&cert.colors)
}
