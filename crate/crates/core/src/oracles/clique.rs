use fixedbitset::FixedBitSet;

use super::{check_vertices, Deadline, OracleBudget, Outcome, Undecided};
use crate::bitgraph::BitGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub omega: usize,
    /// Vertex ids of a maximum clique, ascending.
    pub witness: Vec<usize>,
}

/// Exact maximum clique by branch and bound over bit-vector candidate sets,
/// bounded by greedy coloring of the candidates (Tomita-style). Vertices are
/// renumbered by descending degree so that bit order is the branching order.
pub fn max_clique_exact(g: &BitGraph, budget: &OracleBudget) -> Outcome<CliqueResult> {
    let n = g.vertex_count();
    if let Some(u) = check_vertices(n, budget) {
        return Outcome::Undecided(u);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let rows: Vec<FixedBitSet> = order
        .iter()
        .map(|&v| {
            let mut row = FixedBitSet::with_capacity(n);
            row.extend(g.neighbors(v).ones().map(|w| pos[w]));
            row
        })
        .collect();

    let mut search = Search {
        rows: &rows,
        best: Vec::new(),
        current: Vec::new(),
        deadline: Deadline::new(budget.time_limit),
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(all);

    if search.deadline.expired {
        return Outcome::Undecided(Undecided::TimeLimit);
    }
    let mut witness: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    Outcome::Decided(CliqueResult {
        omega: witness.len(),
        witness,
    })
}

struct Search<'a> {
    rows: &'a [FixedBitSet],
    best: Vec<usize>,
    current: Vec<usize>,
    deadline: Deadline,
}

impl Search<'_> {
    /// Greedy sequential coloring of `candidates`; returns vertices in color
    /// order with the color number (1-based) of each.
    fn color_sort(&self, candidates: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(candidates.count_ones(..));
        let mut uncolored = candidates.clone();
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.ones().next() {
                q.set(v, false);
                uncolored.set(v, false);
                q.difference_with(&self.rows[v]);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, mut candidates: FixedBitSet) {
        let sorted = self.color_sort(&candidates);
        for &(v, color) in sorted.iter().rev() {
            if self.deadline.expired() || self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(&self.rows[v]);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.set(v, false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega(g: &BitGraph) -> CliqueResult {
        max_clique_exact(g, &OracleBudget::VERTEX_DEFAULT)
            .decided()
            .unwrap()
    }

    /// Subset enumeration, for cross-checking on tiny graphs.
    fn brute_omega(g: &BitGraph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter_map(|mask| {
                let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                g.is_clique(&vs).then_some(vs.len())
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_graphs() {
        assert_eq!(omega(&BitGraph::complete(4)).omega, 4);
        assert_eq!(omega(&BitGraph::new(2)).omega, 1);
        assert_eq!(omega(&BitGraph::new(0)).omega, 0);
        let c5 = omega(&BitGraph::cycle(5));
        assert_eq!(c5.omega, 2);
        assert!(BitGraph::cycle(5).is_clique(&c5.witness));
    }

    #[test]
    fn matches_subset_enumeration() {
        // deterministic pseudo-random graphs on 12 vertices
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for _ in 0..40 {
            let mut g = BitGraph::new(12);
            for u in 0..12 {
                for v in u + 1..12 {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state % 100 < 55 {
                        g.add_edge(u, v);
                    }
                }
            }
            let r = omega(&g);
            assert_eq!(r.omega, brute_omega(&g));
            assert!(g.is_clique(&r.witness));
        }
    }

    #[test]
    fn budget_is_respected() {
        let budget = OracleBudget {
            max_vertices: 3,
            ..OracleBudget::VERTEX_DEFAULT
        };
        assert_eq!(
            max_clique_exact(&BitGraph::complete(4), &budget),
            Outcome::Undecided(Undecided::TooManyVertices {
                vertices: 4,
                limit: 3
            })
        );
    }
}
