//! Graph export as Graphviz DOT or as a JSON adjacency list.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::{build_graph, Labeling};
use crate::report::{Instance, VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportVertex {
    pub id: usize,
    pub label: String,
    pub exponents: Vec<u32>,
    /// 0-based component indices where the exponent is nonzero.
    pub support: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub version: String,
    pub n: Option<u64>,
    pub signature: Vec<u32>,
    /// `"divisor"` or `"exponents"`.
    pub labeling: String,
    pub vertices: Vec<ExportVertex>,
    /// `adjacency[id]` lists the neighbors of `id` in ascending order.
    pub adjacency: Vec<Vec<usize>>,
}

pub fn graph_document(instance: &Instance) -> Result<GraphDocument> {
    let (factorization, sig) = instance.resolve()?;
    let labeling = instance.labeling()?;
    let graph = build_graph(&sig)?;
    let adj = graph.adjacency();
    let vertices = graph
        .vertices()
        .iter()
        .enumerate()
        .map(|(id, code)| ExportVertex {
            id,
            label: labeling.label(code),
            exponents: code.exponents().to_vec(),
            support: graph.support(id).indices().collect(),
        })
        .collect();
    Ok(GraphDocument {
        version: VERSION.to_owned(),
        n: factorization.map(|f| f.n()),
        signature: sig.exponents().to_vec(),
        labeling: match labeling {
            Labeling::Divisors(_) => "divisor",
            Labeling::Exponents => "exponents",
        }
        .to_owned(),
        vertices,
        adjacency: (0..graph.vertex_count())
            .map(|v| adj.neighbors(v).ones().collect())
            .collect(),
    })
}

pub fn to_dot(doc: &GraphDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "// {}", doc.version);
    out.push_str("graph G {\n");
    for v in &doc.vertices {
        let _ = writeln!(out, "  v{} [label=\"{}\"];", v.id, v.label);
    }
    for (u, nbrs) in doc.adjacency.iter().enumerate() {
        for &v in nbrs.iter().filter(|&&v| v > u) {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
    }
    out.push_str("}\n");
    out
}

pub fn export(instance: &Instance, format: Format) -> Result<String> {
    let doc = graph_document(instance)?;
    Ok(match format {
        Format::Dot => to_dot(&doc),
        Format::Json => serde_json::to_string_pretty(&doc).expect("document serializes") + "\n",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_dot(s: &str) -> (usize, usize) {
        let nodes = s.lines().filter(|l| l.contains("[label=")).count();
        let edges = s.lines().filter(|l| l.contains(" -- ")).count();
        (nodes, edges)
    }

    #[test]
    fn dot_examples() {
        let d = export(&Instance::N(12), Format::Dot).unwrap();
        assert_eq!(count_dot(&d), (4, 4));
        assert!(d.contains("label=\"6\""));
        assert_eq!(
            count_dot(&export(&Instance::N(6), Format::Dot).unwrap()),
            (2, 0)
        );
        let k4 = export(&Instance::Signature("5".parse().unwrap()), Format::Dot).unwrap();
        assert_eq!(count_dot(&k4), (4, 6));
        assert!(k4.contains("label=\"[1]\""));
    }

    #[test]
    fn json_adjacency_is_symmetric() {
        let text = export(&Instance::N(60), Format::Json).unwrap();
        let doc: GraphDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.vertices.len(), 10);
        assert_eq!(doc.labeling, "divisor");
        for (u, nbrs) in doc.adjacency.iter().enumerate() {
            for &v in nbrs {
                assert!(doc.adjacency[v].contains(&u));
            }
        }
    }
}
