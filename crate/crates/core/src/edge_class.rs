//! Edge-chromatic class of `G(Z_n)` decided from the signature alone, plus
//! degree and edge-count audits of the lemma hypotheses behind each case.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::{build_graph, edge_count, max_degree};
use crate::number::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Class1,
    Class2,
    /// No edges: `χ' = Δ = 0`.
    Trivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    PrimePowerOdd,
    PrimePowerEven,
    TwoPrimesNull,
    SquarefreeCase1,
    AllEvenExponentsCase2,
    MixedCase3,
    EmptyGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeClassReport {
    pub delta: u64,
    pub classification: Classification,
    pub reason: CaseTag,
    pub chromatic_index: u64,
}

/// `m = 1` gives `K_{n_1 - 1}`: class 2 exactly for odd order at least 3.
/// Squarefree `m = 2` is the edgeless two-vertex graph. Every other
/// signature is class 1.
pub fn classify(sig: &Signature) -> EdgeClassReport {
    use CaseTag::*;
    use Classification::*;
    let e = sig.exponents();
    let (classification, reason) = match e {
        [n1] if *n1 <= 2 => (Trivial, EmptyGraph),
        [n1] if n1 % 2 == 0 => (Class2, PrimePowerEven),
        [_] => (Class1, PrimePowerOdd),
        [1, 1] => (Trivial, TwoPrimesNull),
        _ if sig.is_squarefree() => (Class1, SquarefreeCase1),
        _ if e.iter().all(|x| x % 2 == 0) => (Class1, AllEvenExponentsCase2),
        _ => (Class1, MixedCase3),
    };
    let delta = max_degree(sig);
    let chromatic_index = match classification {
        Class1 => delta,
        Class2 => delta + 1,
        Trivial => 0,
    };
    EdgeClassReport {
        delta,
        classification,
        reason,
        chromatic_index,
    }
}

/// Where the classification departs from the convention that an edgeless
/// exceptional graph has `χ' = Δ + 1`.
pub fn convention_note(sig: &Signature) -> Option<&'static str> {
    match sig.exponents() {
        [1, 1] => Some(
            "edgeless two-vertex graph reported trivial (chi' = 0); \
             the literature convention lists it as chi' = Delta + 1",
        ),
        [2] => Some(
            "single-vertex graph reported trivial (chi' = 0); \
             the even prime-power rule would give chi' = Delta + 1",
        ),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case1Audit {
    pub delta: usize,
    pub max_degree_vertices: usize,
    /// Every maximum-degree vertex `u` has a neighbor `v` with
    /// `Δ - d(v) + 2 > max_degree_vertices`.
    pub holds: bool,
}

/// Degree audit for squarefree `m >= 3`, on the built graph. `None` when
/// the signature is outside that case.
pub fn case1_precondition_check(sig: &Signature) -> Result<Option<Case1Audit>> {
    if !sig.is_squarefree() || sig.len() < 3 {
        return Ok(None);
    }
    let g = build_graph(sig)?;
    let adj = g.adjacency();
    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| adj.degree(v)).collect();
    let delta = degrees.iter().copied().max().unwrap_or(0);
    let tops: Vec<usize> = (0..degrees.len())
        .filter(|&v| degrees[v] == delta)
        .collect();
    let count = tops.len();
    let holds = tops.iter().all(|&u| {
        adj.neighbors(u)
            .ones()
            .any(|v| delta + 2 - degrees[v] > count)
    });
    Ok(Some(Case1Audit {
        delta,
        max_degree_vertices: count,
        holds,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case2Deficit {
    pub vertex_count: u64,
    /// `|V| = 2s + 1`.
    pub s: u64,
    /// `2s^2 + s`, the size of `K_{2s+1}`.
    pub complete_edges: u128,
    pub edge_count: u128,
    pub missing_edges: u128,
    /// `missing_edges > s`, so the graph has at most `2s^2` edges.
    pub holds: bool,
}

/// Edge deficit against the complete graph when every exponent is even.
/// Missing edges are the pairs of vertices with disjoint supports.
pub fn case2_edge_deficit(sig: &Signature) -> Option<Case2Deficit> {
    if sig.exponents().iter().any(|e| e % 2 == 1) {
        return None;
    }
    let vertex_count = sig.vertex_count();
    let s = (vertex_count - 1) / 2;
    let v = u128::from(vertex_count);
    let complete_edges = v * (v - 1) / 2;
    let edge_count = edge_count(sig);
    let missing = complete_edges - edge_count;
    Some(Case2Deficit {
        vertex_count,
        s,
        complete_edges,
        edge_count,
        missing_edges: missing,
        holds: missing > u128::from(s),
    })
}
