//! Intersection graphs of ideals of `Z_n`.
//!
//! The graph `G(Z_n)` has the proper nontrivial ideals of `Z_n` as vertices,
//! two of them adjacent when they intersect in a nonzero ideal. This crate
//! builds the graph from the exponent signature of `n`, computes its clique
//! and chromatic numbers through the family-partition construction and the
//! closed-form special cases, classifies its edge-chromatic class, and checks
//! all of it against exact search.

pub mod bitgraph;
pub mod certificate;
pub mod closed_forms;
pub mod edge_class;
pub mod error;
pub mod export;
pub mod family;
pub mod lattice;
pub mod number;
pub mod oracles;
pub mod report;
pub mod sweep;

pub use error::{Error, Result};
pub use lattice::{build_graph, Graph, IdealCode, Support};
pub use number::{factorize, signature_of, Factorization, Signature};
