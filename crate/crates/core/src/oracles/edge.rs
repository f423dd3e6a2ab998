use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{check_vertices, Deadline, OracleBudget, Outcome, Undecided};
use crate::bitgraph::BitGraph;

/// `((u, v), color)` with `u < v`, sorted by edge.
pub type EdgeColoring = Vec<((usize, usize), usize)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeClass {
    /// `χ'(G) = Δ(G)`.
    Class1,
    /// `χ'(G) = Δ(G) + 1`.
    Class2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassResult {
    pub class: EdgeClass,
    pub delta: usize,
    pub chromatic_index: usize,
    /// Proper coloring with `chromatic_index` colors.
    pub coloring: EdgeColoring,
}

/// True when every edge of `g` appears exactly once, only edges of `g`
/// appear, and no two edges sharing an endpoint share a color.
pub fn is_proper_edge_coloring(g: &BitGraph, coloring: &EdgeColoring) -> bool {
    if coloring.len() != g.edge_count() {
        return false;
    }
    let mut seen_edge = std::collections::HashSet::new();
    let mut seen_color = std::collections::HashSet::new();
    coloring.iter().all(|&((u, v), c)| {
        let (a, b) = (u.min(v), u.max(v));
        a != b
            && b < g.vertex_count()
            && g.has_edge(a, b)
            && seen_edge.insert((a, b))
            && seen_color.insert((a, c))
            && seen_color.insert((b, c))
    })
}

/// Decides whether a proper `Δ`-edge-coloring exists by exhaustive
/// backtracking. Edges are taken most-constrained first (fewest free colors,
/// then highest endpoint degree); the edges at one maximum-degree vertex are
/// precolored `0..Δ`; and a color class can never exceed `floor(|V|/2)`
/// edges, which prunes overfull subproblems. When no `Δ`-coloring exists the
/// Vizing-style greedy coloring supplies the `Δ + 1` witness.
pub fn edge_class_exact(g: &BitGraph, budget: &OracleBudget) -> Outcome<EdgeClassResult> {
    let n = g.vertex_count();
    if let Some(u) = check_vertices(n, budget) {
        return Outcome::Undecided(u);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > budget.max_edges {
        return Outcome::Undecided(Undecided::TooManyEdges {
            edges: edges.len(),
            limit: budget.max_edges,
        });
    }
    let delta = g.max_degree();
    if edges.is_empty() {
        return Outcome::Decided(EdgeClassResult {
            class: EdgeClass::Class1,
            delta: 0,
            chromatic_index: 0,
            coloring: vec![],
        });
    }
    if delta >= 128 {
        return Outcome::Undecided(Undecided::DegreeTooLarge { delta, limit: 127 });
    }

    let mut search = EdgeSearch {
        edges: &edges,
        k: delta,
        matching_cap: n / 2,
        degree: (0..n).map(|v| g.degree(v)).collect(),
        used_at: vec![0u128; n],
        class_size: vec![0; delta],
        colors: vec![None; edges.len()],
        remaining: edges.len(),
        deadline: Deadline::new(budget.time_limit),
    };

    // colors at a maximum-degree vertex are all distinct; fix them
    let hub = (0..n)
        .find(|&v| g.degree(v) == delta)
        .expect("nonempty graph");
    let mut next = 0;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if u == hub || v == hub {
            search.assign(i, next);
            next += 1;
        }
    }

    if search.solve(delta) {
        let coloring = edges
            .iter()
            .zip(&search.colors)
            .map(|(&e, c)| (e, c.expect("complete coloring")))
            .collect();
        return Outcome::Decided(EdgeClassResult {
            class: EdgeClass::Class1,
            delta,
            chromatic_index: delta,
            coloring,
        });
    }
    if search.deadline.expired {
        return Outcome::Undecided(Undecided::TimeLimit);
    }
    let coloring = greedy_edge_coloring(g);
    debug_assert!(coloring.iter().all(|&(_, c)| c <= delta));
    Outcome::Decided(EdgeClassResult {
        class: EdgeClass::Class2,
        delta,
        chromatic_index: delta + 1,
        coloring,
    })
}

struct EdgeSearch<'a> {
    edges: &'a [(usize, usize)],
    k: usize,
    matching_cap: usize,
    degree: Vec<usize>,
    used_at: Vec<u128>,
    class_size: Vec<usize>,
    colors: Vec<Option<usize>>,
    remaining: usize,
    deadline: Deadline,
}

impl EdgeSearch<'_> {
    fn assign(&mut self, e: usize, c: usize) {
        let (u, v) = self.edges[e];
        self.colors[e] = Some(c);
        self.used_at[u] |= 1 << c;
        self.used_at[v] |= 1 << c;
        self.class_size[c] += 1;
        self.remaining -= 1;
    }

    fn unassign(&mut self, e: usize, c: usize) {
        let (u, v) = self.edges[e];
        self.colors[e] = None;
        self.used_at[u] &= !(1 << c);
        self.used_at[v] &= !(1 << c);
        self.class_size[c] -= 1;
        self.remaining += 1;
    }

    fn free_mask(&self, e: usize) -> u128 {
        let (u, v) = self.edges[e];
        ((1u128 << self.k) - 1) & !(self.used_at[u] | self.used_at[v])
    }

    /// `used`: colors `>= used` have not appeared anywhere yet.
    fn solve(&mut self, used: usize) -> bool {
        if self.remaining == 0 {
            return true;
        }
        if self.deadline.expired() {
            return false;
        }
        let spare: usize = self
            .class_size
            .iter()
            .map(|&s| self.matching_cap.saturating_sub(s))
            .sum();
        if self.remaining > spare {
            return false;
        }
        let mut pick = None;
        let mut best = (u32::MAX, 0usize);
        for e in 0..self.edges.len() {
            if self.colors[e].is_some() {
                continue;
            }
            let free = self.free_mask(e).count_ones();
            if free == 0 {
                return false;
            }
            let (u, v) = self.edges[e];
            let key = (free, self.degree[u] + self.degree[v]);
            if key.0 < best.0 || (key.0 == best.0 && key.1 > best.1) {
                best = key;
                pick = Some(e);
            }
        }
        let e = pick.expect("an uncolored edge remains");
        let mut free = self.free_mask(e);
        while free != 0 {
            let c = free.trailing_zeros() as usize;
            free &= free - 1;
            if c > used {
                break;
            }
            if self.class_size[c] >= self.matching_cap {
                continue;
            }
            self.assign(e, c);
            if self.solve(used.max(c + 1)) {
                return true;
            }
            self.unassign(e, c);
        }
        false
    }
}

/// Misra-Gries constructive edge coloring with at most `Δ + 1` colors.
pub fn greedy_edge_coloring(g: &BitGraph) -> EdgeColoring {
    let n = g.vertex_count();
    let palette = g.max_degree() + 1;
    let mut mg = MisraGries {
        at: vec![HashMap::new(); n],
        color: HashMap::new(),
        palette,
    };
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for &(x, f) in &edges {
        mg.color_edge(g, x, f);
    }
    let mut out: EdgeColoring = edges.iter().map(|&e| (e, mg.color[&e])).collect();
    out.sort_unstable();
    out
}

struct MisraGries {
    /// `at[v][c]`: the neighbor joined to `v` by the edge of color `c`.
    at: Vec<HashMap<usize, usize>>,
    color: HashMap<(usize, usize), usize>,
    palette: usize,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl MisraGries {
    fn is_free(&self, v: usize, c: usize) -> bool {
        !self.at[v].contains_key(&c)
    }

    fn free_color(&self, v: usize) -> usize {
        (0..self.palette)
            .find(|&c| self.is_free(v, c))
            .expect("a vertex of degree <= Δ always misses a color among Δ + 1")
    }

    fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.color.get(&key(u, v)).copied()
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        self.color.insert(key(u, v), c);
        self.at[u].insert(c, v);
        self.at[v].insert(c, u);
    }

    fn clear(&mut self, u: usize, v: usize) {
        if let Some(c) = self.color.remove(&key(u, v)) {
            self.at[u].remove(&c);
            self.at[v].remove(&c);
        }
    }

    fn color_edge(&mut self, g: &BitGraph, x: usize, f: usize) {
        // maximal fan at x starting with the uncolored edge x-f
        let mut fan = vec![f];
        let mut in_fan = std::collections::HashSet::from([f]);
        loop {
            let last = *fan.last().expect("fan is nonempty");
            let next = g.neighbors(x).ones().find(|&w| {
                !in_fan.contains(&w) && self.get(x, w).is_some_and(|c| self.is_free(last, c))
            });
            match next {
                Some(w) => {
                    fan.push(w);
                    in_fan.insert(w);
                }
                None => break,
            }
        }

        let c = self.free_color(x);
        let d = self.free_color(*fan.last().expect("fan is nonempty"));

        // invert the cd-path that starts at x (its first edge has color d)
        let mut path = vec![];
        let (mut cur, mut want) = (x, d);
        while let Some(&y) = self.at[cur].get(&want) {
            path.push((cur, y, want));
            cur = y;
            want = if want == d { c } else { d };
        }
        for &(u, v, _) in &path {
            self.clear(u, v);
        }
        for &(u, v, col) in &path {
            self.set(u, v, if col == d { c } else { d });
        }

        // longest prefix of the fan that is still a fan, first member free on d
        let mut w = 0;
        for (i, &v) in fan.iter().enumerate() {
            if i > 0 {
                let still_fan = self
                    .get(x, v)
                    .is_some_and(|col| self.is_free(fan[i - 1], col));
                if !still_fan {
                    break;
                }
            }
            if self.is_free(v, d) {
                w = i;
                break;
            }
        }

        // rotate the prefix fan[0..=w] and finish with color d on x-fan[w]
        let shifted: Vec<usize> = (0..w)
            .map(|i| {
                self.get(x, fan[i + 1])
                    .expect("fan edges beyond the first are colored")
            })
            .collect();
        for &v in &fan[1..=w] {
            self.clear(x, v);
        }
        for (i, &col) in shifted.iter().enumerate() {
            self.set(x, fan[i], col);
        }
        self.set(x, fan[w], d);
    }
}
