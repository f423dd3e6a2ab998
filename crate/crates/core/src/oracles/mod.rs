//! Exact brute-force ground truth for clique number, chromatic number and
//! edge-chromatic class. Every search runs under an [`OracleBudget`] and
//! reports [`Outcome::Undecided`] rather than a guess when it runs out.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

mod chromatic;
mod clique;
mod edge;

pub use chromatic::{chromatic_exact, ChromaticResult};
pub use clique::{max_clique_exact, CliqueResult};
pub use edge::{
    edge_class_exact, greedy_edge_coloring, is_proper_edge_coloring, EdgeClass, EdgeClassResult,
    EdgeColoring,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    pub max_vertices: usize,
    /// Only consulted by the edge-class search.
    pub max_edges: usize,
    pub time_limit: Duration,
}

impl OracleBudget {
    /// 200 vertices, 30 s: clique and vertex-coloring searches.
    pub const VERTEX_DEFAULT: OracleBudget = OracleBudget {
        max_vertices: 200,
        max_edges: usize::MAX,
        time_limit: Duration::from_secs(30),
    };

    /// 24 vertices, 80 edges, 30 s: edge-coloring search.
    pub const EDGE_DEFAULT: OracleBudget = OracleBudget {
        max_vertices: 24,
        max_edges: 80,
        time_limit: Duration::from_secs(30),
    };
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self::VERTEX_DEFAULT
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum Undecided {
    TooManyVertices { vertices: usize, limit: usize },
    TooManyEdges { edges: usize, limit: usize },
    DegreeTooLarge { delta: usize, limit: usize },
    TimeLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Decided(T),
    Undecided(Undecided),
}

impl<T> Outcome<T> {
    pub fn decided(self) -> Option<T> {
        match self {
            Outcome::Decided(t) => Some(t),
            Outcome::Undecided(_) => None,
        }
    }

    pub fn as_decided(&self) -> Option<&T> {
        match self {
            Outcome::Decided(t) => Some(t),
            Outcome::Undecided(_) => None,
        }
    }
}

/// Wall-clock limit polled every few thousand search nodes.
pub(crate) struct Deadline {
    end: Instant,
    ticks: u32,
    expired: bool,
}

impl Deadline {
    pub(crate) fn new(limit: Duration) -> Self {
        Deadline {
            end: Instant::now() + limit,
            ticks: 0,
            expired: false,
        }
    }

    pub(crate) fn expired(&mut self) -> bool {
        if !self.expired {
            self.ticks = self.ticks.wrapping_add(1);
            if self.ticks.is_multiple_of(4096) && Instant::now() >= self.end {
                self.expired = true;
            }
        }
        self.expired
    }
}

pub(crate) fn check_vertices(n: usize, budget: &OracleBudget) -> Option<Undecided> {
    (n > budget.max_vertices).then_some(Undecided::TooManyVertices {
        vertices: n,
        limit: budget.max_vertices,
    })
}
