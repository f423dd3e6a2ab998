use super::{check_vertices, Deadline, OracleBudget, Outcome, Undecided};
use crate::bitgraph::BitGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    /// A proper coloring with exactly `chi` colors, `colors[v] in 0..chi`.
    pub colors: Vec<usize>,
    /// Color counts `k` shown infeasible by exhaustive search, ascending.
    /// Together with `colors` this certifies `chi`, unless `chi == lower`,
    /// in which case the caller's lower bound carries the proof.
    pub refuted: Vec<usize>,
}

/// Exact chromatic number by iterative deepening from `lower` up to `upper`:
/// each `k` is settled by DSATUR-ordered backtracking, and the first
/// feasible `k` is returned together with its coloring.
///
/// `lower` must be a valid lower bound (typically a clique size) and
/// `upper` the size of some known proper coloring.
pub fn chromatic_exact(
    g: &BitGraph,
    lower: usize,
    upper: usize,
    budget: &OracleBudget,
) -> Outcome<ChromaticResult> {
    assert!(
        lower <= upper,
        "lower bound {lower} exceeds upper bound {upper}"
    );
    let n = g.vertex_count();
    if let Some(u) = check_vertices(n, budget) {
        return Outcome::Undecided(u);
    }
    if n == 0 {
        return Outcome::Decided(ChromaticResult {
            chi: 0,
            colors: vec![],
            refuted: vec![],
        });
    }

    let mut deadline = Deadline::new(budget.time_limit);
    let mut refuted = vec![];
    // a claimed upper bound that turns out wrong only widens the search
    for k in lower.max(1)..=n.max(upper) {
        match k_colorable(g, k, &mut deadline) {
            Some(colors) => {
                return Outcome::Decided(ChromaticResult {
                    chi: colors.iter().max().map_or(0, |&c| c + 1),
                    colors,
                    refuted,
                })
            }
            None if deadline.expired => return Outcome::Undecided(Undecided::TimeLimit),
            None => refuted.push(k),
        }
    }
    unreachable!("n colors always suffice")
}

struct Dsatur<'a> {
    g: &'a BitGraph,
    k: usize,
    colors: Vec<Option<usize>>,
    /// `blocked[v][c]`: colored neighbors of `v` holding color `c`.
    blocked: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    degree: Vec<usize>,
}

impl Dsatur<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.degree[v], std::cmp::Reverse(v)))
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
        for w in self.g.neighbors(v).ones() {
            self.blocked[w][c] += 1;
            if self.blocked[w][c] == 1 {
                self.saturation[w] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        for w in self.g.neighbors(v).ones() {
            self.blocked[w][c] -= 1;
            if self.blocked[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// `used` is the number of distinct colors in play; a fresh color is
    /// only ever `used` itself, since unused colors are interchangeable.
    fn solve(&mut self, used: usize, deadline: &mut Deadline) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        if deadline.expired() {
            return false;
        }
        for c in 0..(used + 1).min(self.k) {
            if self.blocked[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            if self.solve(used.max(c + 1), deadline) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

fn k_colorable(g: &BitGraph, k: usize, deadline: &mut Deadline) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut state = Dsatur {
        g,
        k,
        colors: vec![None; n],
        blocked: vec![vec![0; k]; n],
        saturation: vec![0; n],
        degree: (0..n).map(|v| g.degree(v)).collect(),
    };
    state.solve(0, deadline).then(|| {
        state
            .colors
            .into_iter()
            .map(|c| c.expect("all colored"))
            .collect()
    })
}
