//! The analysis report: every constructed value for one instance, optionally
//! checked against the exact oracles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::closed_forms::{all_formulas, FormulaResult};
use crate::edge_class::{classify, convention_note, Classification, EdgeClassReport};
use crate::error::{Error, Result};
use crate::family::{build_coloring, omega, validate};
use crate::lattice::{build_graph_capped, edge_count, max_degree, Labeling, DEFAULT_VERTEX_CAP};
use crate::number::{factorize, signature_of, Factorization, Signature};
use crate::oracles::{
    chromatic_exact, edge_class_exact, is_proper_edge_coloring, max_clique_exact, EdgeClass,
    EdgeClassResult, OracleBudget, Outcome, Undecided,
};

/// Embedded in every emitted artifact.
pub const VERSION: &str = concat!("idealgraph ", env!("CARGO_PKG_VERSION"));

/// An instance is given either as `n` or directly as a signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    N(u64),
    Signature(Signature),
}

impl Instance {
    pub fn resolve(&self) -> Result<(Option<Factorization>, Signature)> {
        match self {
            Instance::N(n) => {
                let f = factorize(*n)?;
                let sig = signature_of(&f);
                Ok((Some(f), sig))
            }
            Instance::Signature(s) => Ok((None, s.clone())),
        }
    }

    pub fn labeling(&self) -> Result<Labeling> {
        Ok(match self.resolve()?.0 {
            Some(f) => Labeling::for_factorization(&f),
            None => Labeling::Exponents,
        })
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::N(n) => write!(f, "n={n}"),
            Instance::Signature(s) => write!(f, "signature=[{s}]"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Ok,
    Failed,
}

/// An oracle answer or the reason it was not computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleValue {
    Value(u64),
    Undecided(Undecided),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleEdgeValue {
    Value {
        class: EdgeClass,
        delta: u64,
        chromatic_index: u64,
    },
    Undecided(Undecided),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSection {
    pub budget_vertices: usize,
    pub budget_edge_vertices: usize,
    pub budget_edges: usize,
    pub budget_seconds: u64,
    pub omega: OracleValue,
    pub chi: OracleValue,
    pub edge_class: OracleEdgeValue,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub version: String,
    pub n: Option<u64>,
    /// Primes in component order; divisor labels are built from these.
    pub primes: Option<Vec<u64>>,
    pub signature: Signature,
    pub vertex_count: u64,
    pub edge_count: u128,
    pub max_degree: u64,
    pub omega: u64,
    pub chi: u64,
    pub weakly_perfect: bool,
    pub formulas: Vec<FormulaResult>,
    pub edge_class: EdgeClassReport,
    pub oracle: Option<OracleSection>,
    pub notes: Vec<String>,
    pub status: Status,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub oracle: bool,
    pub clique_budget: OracleBudget,
    pub edge_budget: OracleBudget,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            oracle: false,
            clique_budget: OracleBudget::VERTEX_DEFAULT,
            edge_budget: OracleBudget::EDGE_DEFAULT,
        }
    }
}

/// True when the signature-level classification and an exact edge-class
/// result describe the same chromatic index. Edgeless graphs are reported
/// trivial and decided class 1 with `χ' = 0` by the oracle.
pub fn edge_class_agrees(report: &EdgeClassReport, exact: &EdgeClassResult) -> bool {
    let class_ok = match report.classification {
        Classification::Trivial => exact.chromatic_index == 0,
        Classification::Class1 => exact.class == EdgeClass::Class1 && exact.chromatic_index > 0,
        Classification::Class2 => exact.class == EdgeClass::Class2,
    };
    class_ok
        && report.delta == exact.delta as u64
        && report.chromatic_index == exact.chromatic_index as u64
}

pub fn analyze(instance: &Instance, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let (factorization, sig) = instance.resolve()?;
    let mut notes = vec![];
    let mut status = Status::Ok;

    let omega_value = omega(&sig);
    let vertex_count = sig.vertex_count();
    // the coloring is only materialized when the graph fits
    let graph = if vertex_count <= DEFAULT_VERTEX_CAP as u64 {
        Some(build_graph_capped(&sig, DEFAULT_VERTEX_CAP)?)
    } else {
        notes.push(format!(
            "graph has {vertex_count} vertices; coloring not materialized, chi taken from the construction"
        ));
        None
    };
    let cert = graph.as_ref().map(build_coloring).transpose()?;
    let chi_value = match (&cert, &graph) {
        (Some(c), Some(g)) => {
            if !validate(c, g) {
                status = Status::Failed;
                notes.push("constructed clique/coloring certificate failed validation".into());
            }
            if c.omega as u64 != omega_value {
                status = Status::Failed;
                notes.push(format!(
                    "clique has {} members but the family count gives {omega_value}",
                    c.omega
                ));
            }
            c.chi as u64
        }
        _ => omega_value,
    };

    let formulas = all_formulas(&sig);
    for f in formulas.iter().filter(|f| f.applicable) {
        if f.value != Some(omega_value) {
            status = Status::Failed;
            notes.push(format!(
                "formula {} gives {:?}, construction gives {omega_value}",
                f.name, f.value
            ));
        }
    }

    let edge_class = classify(&sig);
    if let Some(note) = convention_note(&sig) {
        notes.push(note.to_owned());
    }

    let oracle = if opts.oracle {
        let section = run_oracles(
            graph.as_ref(),
            &sig,
            omega_value,
            chi_value,
            &edge_class,
            opts,
        );
        if !section.agrees {
            status = Status::Failed;
            notes.push("oracle disagrees with the constructed values".into());
        }
        Some(section)
    } else {
        None
    };

    Ok(AnalysisReport {
        version: VERSION.to_owned(),
        n: factorization.as_ref().map(Factorization::n),
        primes: factorization.as_ref().map(Factorization::component_primes),
        vertex_count,
        edge_count: edge_count(&sig),
        max_degree: max_degree(&sig),
        omega: omega_value,
        chi: chi_value,
        weakly_perfect: omega_value == chi_value,
        formulas,
        edge_class,
        oracle,
        notes,
        status,
        signature: sig,
    })
}

fn run_oracles(
    graph: Option<&crate::lattice::Graph>,
    sig: &Signature,
    omega_value: u64,
    chi_value: u64,
    edge_class: &EdgeClassReport,
    opts: &AnalyzeOptions,
) -> OracleSection {
    let too_big = |limit: usize| Undecided::TooManyVertices {
        vertices: usize::try_from(sig.vertex_count()).unwrap_or(usize::MAX),
        limit,
    };
    let cb = &opts.clique_budget;
    let eb = &opts.edge_budget;

    let mut coloring_ok = true;
    let (omega_o, chi_o) = match graph {
        Some(g) => match max_clique_exact(g.adjacency(), cb) {
            Outcome::Decided(c) => {
                let lower = c.omega.min(chi_value as usize);
                let chi = match chromatic_exact(g.adjacency(), lower, chi_value as usize, cb) {
                    Outcome::Decided(r) => {
                        coloring_ok = g.adjacency().is_proper_coloring(&r.colors);
                        OracleValue::Value(r.chi as u64)
                    }
                    Outcome::Undecided(u) => OracleValue::Undecided(u),
                };
                (OracleValue::Value(c.omega as u64), chi)
            }
            Outcome::Undecided(u) => (OracleValue::Undecided(u.clone()), OracleValue::Undecided(u)),
        },
        None => (
            OracleValue::Undecided(too_big(cb.max_vertices)),
            OracleValue::Undecided(too_big(cb.max_vertices)),
        ),
    };

    let mut edge_ok = true;
    let edge_o = match graph {
        Some(g) => match edge_class_exact(g.adjacency(), eb) {
            Outcome::Decided(r) => {
                edge_ok = edge_class_agrees(edge_class, &r)
                    && is_proper_edge_coloring(g.adjacency(), &r.coloring);
                OracleEdgeValue::Value {
                    class: r.class,
                    delta: r.delta as u64,
                    chromatic_index: r.chromatic_index as u64,
                }
            }
            Outcome::Undecided(u) => OracleEdgeValue::Undecided(u),
        },
        None => OracleEdgeValue::Undecided(too_big(eb.max_vertices)),
    };

    let value_ok = |v: &OracleValue, expected: u64| match v {
        OracleValue::Value(x) => *x == expected,
        OracleValue::Undecided(_) => true,
    };
    let agrees =
        value_ok(&omega_o, omega_value) && value_ok(&chi_o, chi_value) && coloring_ok && edge_ok;
    OracleSection {
        budget_vertices: cb.max_vertices,
        budget_edge_vertices: eb.max_vertices,
        budget_edges: eb.max_edges,
        budget_seconds: cb.time_limit.as_secs(),
        omega: omega_o,
        chi: chi_o,
        edge_class: edge_o,
        agrees,
    }
}

/// Parses an instance given as a decimal `n`.
impl FromStr for Instance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse::<u64>()
            .map(Instance::N)
            .map_err(|_| Error::Parse(format!("expected a positive integer, got {s:?}")))
    }
}
