//! Self-contained certificate files: a maximum clique, a proper coloring with
//! as many colors, and optionally an optimal edge coloring, all keyed by
//! vertex label. A certificate can be re-loaded and checked against a freshly
//! built graph without trusting anything else in the file.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::edge_class::{classify, EdgeClassReport};
use crate::error::{Error, Result};
use crate::family::{build_coloring, validate, ColoringCertificate};
use crate::lattice::{build_graph, Graph, Labeling};
use crate::number::{factorize, signature_of, Signature};
use crate::oracles::{
    edge_class_exact, is_proper_edge_coloring, EdgeColoring, OracleBudget, Outcome,
};
use crate::report::{edge_class_agrees, Instance, VERSION};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColor {
    pub vertex: String,
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColor {
    pub u: String,
    pub v: String,
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub version: String,
    pub n: Option<u64>,
    pub signature: Signature,
    pub omega: usize,
    pub chi: usize,
    pub clique: Vec<String>,
    /// One entry per vertex, in canonical vertex order.
    pub colors: Vec<VertexColor>,
    pub edge_class: EdgeClassReport,
    /// Present when the exact edge-class search finished within budget.
    pub edge_coloring: Option<Vec<EdgeColor>>,
}

impl CertificateFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))
    }

    /// Rebuilds the graph from `n` (or the signature) and checks every claim
    /// in the file against it.
    pub fn verify(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Certificate(msg));
        let labeling = match self.n {
            Some(n) => {
                let f = factorize(n)?;
                if signature_of(&f) != self.signature {
                    return bad(format!(
                        "signature [{}] does not match n = {n}",
                        self.signature
                    ));
                }
                Labeling::for_factorization(&f)
            }
            None => Labeling::Exponents,
        };
        let graph = build_graph(&self.signature)?;
        let index: HashMap<String, usize> = graph
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, c)| (labeling.label(c), i))
            .collect();
        let lookup = |label: &str| {
            index
                .get(label)
                .copied()
                .ok_or_else(|| Error::Certificate(format!("unknown vertex {label:?}")))
        };

        if self.colors.len() != graph.vertex_count() {
            return bad(format!(
                "{} colored vertices, graph has {}",
                self.colors.len(),
                graph.vertex_count()
            ));
        }
        let mut colors = vec![usize::MAX; graph.vertex_count()];
        for entry in &self.colors {
            let v = lookup(&entry.vertex)?;
            if colors[v] != usize::MAX {
                return bad(format!("vertex {:?} colored twice", entry.vertex));
            }
            colors[v] = entry.color;
        }
        let clique = self
            .clique
            .iter()
            .map(|l| lookup(l))
            .collect::<Result<Vec<usize>>>()?;
        let cert = ColoringCertificate {
            omega: self.omega,
            chi: self.chi,
            clique,
            colors,
        };
        if !validate(&cert, &graph) {
            return bad("clique or coloring is invalid".into());
        }

        if self.edge_class != classify(&self.signature) {
            return bad("edge class does not match the classification".into());
        }
        if let Some(entries) = &self.edge_coloring {
            let coloring: EdgeColoring = entries
                .iter()
                .map(|e| {
                    let (u, v) = (lookup(&e.u)?, lookup(&e.v)?);
                    Ok(((u.min(v), u.max(v)), e.color))
                })
                .collect::<Result<_>>()?;
            if !is_proper_edge_coloring(graph.adjacency(), &coloring) {
                return bad("edge coloring is not proper".into());
            }
            let palette = coloring
                .iter()
                .map(|&(_, c)| c.saturating_add(1))
                .max()
                .unwrap_or(0);
            if palette as u64 > self.edge_class.chromatic_index {
                return bad(format!(
                    "edge coloring uses colors up to {palette}, chromatic index is {}",
                    self.edge_class.chromatic_index
                ));
            }
        }
        Ok(())
    }
}

fn label_all(graph: &Graph, labeling: &Labeling) -> Vec<String> {
    graph.vertices().iter().map(|c| labeling.label(c)).collect()
}

/// Builds the certificate for an instance. The edge coloring is included
/// when the exact edge-class search decides within `edge_budget`.
pub fn certify(instance: &Instance, edge_budget: &OracleBudget) -> Result<CertificateFile> {
    let (factorization, sig) = instance.resolve()?;
    let labeling = instance.labeling()?;
    let graph = build_graph(&sig)?;
    let labels = label_all(&graph, &labeling);
    let cert = build_coloring(&graph)?;
    if !validate(&cert, &graph) {
        return Err(Error::Internal(
            "constructed certificate failed validation".into(),
        ));
    }
    let edge_class = classify(&sig);
    let edge_coloring = match edge_class_exact(graph.adjacency(), edge_budget) {
        Outcome::Decided(r) => {
            if !edge_class_agrees(&edge_class, &r) {
                return Err(Error::Internal(format!(
                    "exact edge class {:?} (chi' = {}) disagrees with the classification",
                    r.class, r.chromatic_index
                )));
            }
            Some(
                r.coloring
                    .iter()
                    .map(|&((u, v), color)| EdgeColor {
                        u: labels[u].clone(),
                        v: labels[v].clone(),
                        color,
                    })
                    .collect(),
            )
        }
        Outcome::Undecided(_) => None,
    };
    Ok(CertificateFile {
        version: VERSION.to_owned(),
        n: factorization.map(|f| f.n()),
        signature: sig,
        omega: cert.omega,
        chi: cert.chi,
        clique: cert.clique.iter().map(|&v| labels[v].clone()).collect(),
        colors: cert
            .colors
            .iter()
            .enumerate()
            .map(|(v, &color)| VertexColor {
                vertex: labels[v].clone(),
                color,
            })
            .collect(),
        edge_class,
        edge_coloring,
    })
}
