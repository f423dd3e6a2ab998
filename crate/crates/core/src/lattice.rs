//! Ideals of `Z_n` as exponent vectors and the intersection graph `G(Z_n)`.
//!
//! By the Chinese remainder theorem every ideal of `Z_n` is `d Z_n` for a
//! divisor `d = prod p_i^{a_i}` with `0 <= a_i <= n_i`. Component `i` of the
//! ideal is zero exactly when `a_i = n_i`. Two ideals meet in a nonzero ideal
//! iff some component is nonzero in both, i.e. iff their supports intersect.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitgraph::BitGraph;
use crate::error::{Error, Result};
use crate::number::{Factorization, Signature};

/// Default upper bound on the number of vertices a [`Graph`] may have.
pub const DEFAULT_VERTEX_CAP: usize = 4096;

/// Set of component indices, bit `i` standing for component `i` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Support(u32);

impl Support {
    pub const EMPTY: Support = Support(0);

    pub fn from_bits(bits: u32) -> Self {
        Support(bits)
    }

    /// All components of a signature with `m` entries.
    pub fn full(m: usize) -> Self {
        Support(((1u64 << m) - 1) as u32)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersects(self, other: Support) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: Support) -> Support {
        Support(self.0 | other.0)
    }

    /// Complement within the `m` components.
    pub fn complement(self, m: usize) -> Support {
        Support(!self.0 & Support::full(m).0)
    }

    /// Component indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }
}

/// Displays 1-based indices, e.g. `{1,3}`.
impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

/// Exponent vector `(a_1, ..., a_m)` of the ideal `(prod p_i^{a_i}) Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IdealCode(Vec<u32>);

impl IdealCode {
    pub fn new(exponents: Vec<u32>, sig: &Signature) -> Result<Self> {
        if exponents.len() != sig.len() || exponents.iter().zip(sig.exponents()).any(|(a, n)| a > n)
        {
            return Err(Error::CodeMismatch(exponents));
        }
        Ok(IdealCode(exponents))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Components that are nonzero, i.e. `a_i < n_i`.
    pub fn support(&self, sig: &Signature) -> Support {
        let bits = self
            .0
            .iter()
            .zip(sig.exponents())
            .enumerate()
            .filter(|(_, (a, n))| a < n)
            .fold(0u32, |acc, (i, _)| acc | 1 << i);
        Support(bits)
    }

    /// True for every code except the unit ideal (all zeros) and the zero
    /// ideal (equal to the signature).
    pub fn is_vertex(&self, sig: &Signature) -> bool {
        self.0.iter().any(|&a| a > 0) && self.0.as_slice() != sig.exponents()
    }

    /// The generator `prod p_i^{a_i}` given primes in signature order.
    pub fn divisor(&self, primes: &[u64]) -> u64 {
        self.0.iter().zip(primes).map(|(&a, &p)| p.pow(a)).product()
    }
}

impl fmt::Display for IdealCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `dZ_n ∩ eZ_n = lcm(d, e)Z_n`: componentwise maximum of exponents.
pub fn intersect(a: &IdealCode, b: &IdealCode) -> IdealCode {
    assert_eq!(
        a.0.len(),
        b.0.len(),
        "ideal codes from different signatures"
    );
    IdealCode(a.0.iter().zip(&b.0).map(|(&x, &y)| x.max(y)).collect())
}

/// `I ~ J` iff `I ∩ J != 0`. Irreflexive: `I == J` is an error.
pub fn adjacent(a: &IdealCode, b: &IdealCode, sig: &Signature) -> Result<bool> {
    for code in [a, b] {
        if code.0.len() != sig.len() || code.0.iter().zip(sig.exponents()).any(|(x, n)| x > n) {
            return Err(Error::CodeMismatch(code.0.clone()));
        }
    }
    if a == b {
        return Err(Error::SelfAdjacency);
    }
    Ok(a.support(sig).intersects(b.support(sig)))
}

/// All proper nontrivial ideals in lexicographic order of exponent vectors.
pub fn vertices(sig: &Signature) -> impl Iterator<Item = IdealCode> + '_ {
    let bounds = sig.exponents();
    let mut cur: Option<Vec<u32>> = Some(vec![0; bounds.len()]);
    std::iter::from_fn(move || {
        let out = cur.take()?;
        let mut next = out.clone();
        // odometer increment, last component fastest
        let mut i = next.len();
        let advanced = loop {
            if i == 0 {
                break false;
            }
            i -= 1;
            if next[i] < bounds[i] {
                next[i] += 1;
                next[i + 1..].fill(0);
                break true;
            }
        };
        if advanced {
            cur = Some(next);
        }
        Some(IdealCode(out))
    })
    .filter(move |c| c.is_vertex(sig))
}

pub fn enumerate_vertices(sig: &Signature) -> Vec<IdealCode> {
    vertices(sig).collect()
}

/// `prod_{i not in S} (n_i + 1)`: ideals whose support avoids `support`
/// (including the zero ideal).
fn codes_avoiding(support: Support, sig: &Signature) -> u64 {
    sig.exponents()
        .iter()
        .enumerate()
        .filter(|&(i, _)| !support.contains(i))
        .map(|(_, &e)| u64::from(e) + 1)
        .product()
}

/// Degree of `code` without building the graph: every vertex except itself
/// and the nonzero ideals supported off its support.
pub fn degree_closed_form(code: &IdealCode, sig: &Signature) -> u64 {
    degree_of_support(code.support(sig), sig)
}

pub(crate) fn degree_of_support(support: Support, sig: &Signature) -> u64 {
    sig.vertex_count() - codes_avoiding(support, sig)
}

/// Number of vertices whose support is exactly `support` (the unit ideal is
/// excluded from the full support).
pub fn support_vertex_count(support: Support, sig: &Signature) -> u64 {
    if support.is_empty() {
        return 0;
    }
    let w: u64 = support
        .indices()
        .map(|i| u64::from(sig.exponents()[i]))
        .product();
    if support == Support::full(sig.len()) {
        w - 1
    } else {
        w
    }
}

/// Maximum degree `Δ(G(Z_n))`; zero for graphs without vertices.
pub fn max_degree(sig: &Signature) -> u64 {
    let m = sig.len();
    (1..=Support::full(m).bits())
        .map(Support::from_bits)
        .filter(|&s| support_vertex_count(s, sig) > 0)
        .map(|s| degree_of_support(s, sig))
        .max()
        .unwrap_or(0)
}

/// Number of edges of `G(Z_n)`: half the degree sum, grouped by support.
pub fn edge_count(sig: &Signature) -> u128 {
    let m = sig.len();
    let twice: u128 = (1..=Support::full(m).bits())
        .map(Support::from_bits)
        .filter(|&s| support_vertex_count(s, sig) > 0)
        .map(|s| u128::from(support_vertex_count(s, sig)) * u128::from(degree_of_support(s, sig)))
        .sum();
    twice / 2
}

/// How vertices are rendered in exports and certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Labeling {
    /// Decimal divisor, primes listed in signature order.
    Divisors(Vec<u64>),
    /// Bracketed exponent vector, e.g. `[0,2]`.
    Exponents,
}

impl Labeling {
    pub fn for_factorization(f: &Factorization) -> Self {
        Labeling::Divisors(f.component_primes())
    }

    pub fn label(&self, code: &IdealCode) -> String {
        match self {
            Labeling::Divisors(primes) => code.divisor(primes).to_string(),
            Labeling::Exponents => code.to_string(),
        }
    }
}

/// `G(Z_n)` for a signature, vertices in canonical (lexicographic) order.
#[derive(Debug, Clone)]
pub struct Graph {
    signature: Signature,
    vertices: Vec<IdealCode>,
    supports: Vec<Support>,
    adjacency: BitGraph,
}

impl Graph {
    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn vertices(&self) -> &[IdealCode] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn support(&self, v: usize) -> Support {
        self.supports[v]
    }

    pub fn adjacency(&self) -> &BitGraph {
        &self.adjacency
    }

    pub fn index_of(&self, code: &IdealCode) -> Option<usize> {
        self.vertices.binary_search(code).ok()
    }
}

pub fn build_graph(sig: &Signature) -> Result<Graph> {
    build_graph_capped(sig, DEFAULT_VERTEX_CAP)
}

pub fn build_graph_capped(sig: &Signature, cap: usize) -> Result<Graph> {
    let count = sig.vertex_count();
    if count > cap as u64 {
        return Err(Error::GraphTooLarge {
            vertices: count,
            cap,
        });
    }
    let vertices = enumerate_vertices(sig);
    let supports: Vec<Support> = vertices.iter().map(|c| c.support(sig)).collect();
    let mut adjacency = BitGraph::new(vertices.len());
    for (u, &su) in supports.iter().enumerate() {
        for (v, &sv) in supports.iter().enumerate().skip(u + 1) {
            if su.intersects(sv) {
                adjacency.add_edge(u, v);
            }
        }
    }
    Ok(Graph {
        signature: sig.clone(),
        vertices,
        supports,
        adjacency,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{factorize, signature_of};

    fn sig(v: &[u32]) -> Signature {
        Signature::new(v.to_vec()).unwrap()
    }

    fn code(v: &[u32], s: &Signature) -> IdealCode {
        IdealCode::new(v.to_vec(), s).unwrap()
    }

    /// Element-level subgroup `dZ_n` as a membership table.
    fn subgroup(d: u64, n: u64) -> Vec<bool> {
        let mut member = vec![false; n as usize];
        let mut k = 0;
        loop {
            member[k as usize] = true;
            k = (k + d) % n;
            if k == 0 {
                break;
            }
        }
        member
    }

    fn meet_is_zero(d: u64, e: u64, n: u64) -> bool {
        let a = subgroup(d, n);
        let b = subgroup(e, n);
        (1..n as usize).all(|x| !(a[x] && b[x]))
    }

    #[test]
    fn z12_vertices() {
        let f = factorize(12).unwrap();
        let s = signature_of(&f);
        let labels = Labeling::for_factorization(&f);
        let vs = enumerate_vertices(&s);
        let divs: Vec<String> = vs.iter().map(|c| labels.label(c)).collect();
        // codes (0,1),(0,2),(1,0),(1,1) over primes [3,2]
        assert_eq!(divs, vec!["2", "4", "3", "6"]);
        assert!(enumerate_vertices(&sig(&[1])).is_empty());
        assert_eq!(enumerate_vertices(&sig(&[1, 1, 1])).len(), 6);
    }

    #[test]
    fn intersections_match_subgroups() {
        let s = sig(&[1, 2]);
        let meet = intersect(&code(&[1, 0], &s), &code(&[0, 2], &s));
        assert_eq!(meet.exponents(), &[1, 2]);
        assert!(!meet.is_vertex(&s));
        assert!(meet_is_zero(3, 4, 12));

        let s3 = sig(&[1, 1, 1]);
        let meet = intersect(&code(&[1, 0, 0], &s3), &code(&[0, 1, 0], &s3));
        assert_eq!(meet.exponents(), &[1, 1, 0]);
        assert!(!meet_is_zero(2, 3, 30));
        let i = code(&[0, 1], &s);
        assert_eq!(intersect(&i, &i), i);
    }

    #[test]
    fn adjacency_examples() {
        let f = factorize(12).unwrap();
        let s = signature_of(&f);
        // primes [3, 2]: divisor 2 = (0,1), 6 = (1,1), 3 = (1,0), 4 = (0,2)
        assert!(adjacent(&code(&[0, 1], &s), &code(&[1, 1], &s), &s).unwrap());
        assert!(!adjacent(&code(&[1, 0], &s), &code(&[0, 2], &s), &s).unwrap());
        let s30 = sig(&[1, 1, 1]);
        // primes [2,3,5]: 2 = (1,0,0), 15 = (0,1,1)
        assert!(!adjacent(&code(&[1, 0, 0], &s30), &code(&[0, 1, 1], &s30), &s30).unwrap());
        assert_eq!(
            adjacent(&code(&[0, 1], &s), &code(&[0, 1], &s), &s),
            Err(Error::SelfAdjacency)
        );
    }

    #[test]
    fn z12_graph_edges() {
        let f = factorize(12).unwrap();
        let g = build_graph(&signature_of(&f)).unwrap();
        let labels = Labeling::for_factorization(&f);
        let mut edges: Vec<(u64, u64)> = g
            .adjacency()
            .edges()
            .map(|(u, v)| {
                let a: u64 = labels.label(&g.vertices()[u]).parse().unwrap();
                let b: u64 = labels.label(&g.vertices()[v]).parse().unwrap();
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        assert_eq!(edges, vec![(2, 3), (2, 4), (2, 6), (3, 6)]);
        // brute force against element-level intersections
        for (u, a) in g.vertices().iter().enumerate() {
            for (v, b) in g.vertices().iter().enumerate() {
                if u != v {
                    let d = a.divisor(&[3, 2]);
                    let e = b.divisor(&[3, 2]);
                    assert_eq!(g.adjacency().has_edge(u, v), !meet_is_zero(d, e, 12));
                }
            }
        }
    }

    #[test]
    fn special_shapes() {
        let g = build_graph(&sig(&[1, 1])).unwrap();
        assert_eq!((g.vertex_count(), g.adjacency().edge_count()), (2, 0));
        let g = build_graph(&sig(&[5])).unwrap();
        assert_eq!((g.vertex_count(), g.adjacency().edge_count()), (4, 6));
        for v in [&[1, 1][..], &[5], &[1, 2], &[2, 2, 3], &[1, 1, 1, 1]] {
            let s = sig(v);
            let g = build_graph(&s).unwrap();
            assert_eq!(edge_count(&s), g.adjacency().edge_count() as u128);
        }
    }

    #[test]
    fn degrees() {
        let f = factorize(30).unwrap();
        let s = signature_of(&f);
        let primes = f.component_primes();
        let two = enumerate_vertices(&s)
            .into_iter()
            .find(|c| c.divisor(&primes) == 2)
            .unwrap();
        assert_eq!(degree_closed_form(&two, &s), 4);
        for c in enumerate_vertices(&s)
            .iter()
            .filter(|c| c.support(&s).len() == 2)
        {
            assert_eq!(degree_closed_form(c, &s), 4);
        }
        let f = factorize(12).unwrap();
        let s = signature_of(&f);
        let primes = f.component_primes();
        let three = enumerate_vertices(&s)
            .into_iter()
            .find(|c| c.divisor(&primes) == 3)
            .unwrap();
        assert_eq!(degree_closed_form(&three, &s), 2);

        assert_eq!(max_degree(&sig(&[1, 1, 1])), 4);
        assert_eq!(max_degree(&sig(&[1, 1])), 0);
        assert_eq!(max_degree(&sig(&[2, 2])), 6);
        assert_eq!(max_degree(&sig(&[1])), 0);
        assert_eq!(max_degree(&sig(&[2])), 0);
    }

    #[test]
    fn graph_cap() {
        let s = sig(&[3, 3, 3, 3, 3, 3, 3]);
        assert!(matches!(
            build_graph(&s),
            Err(Error::GraphTooLarge {
                vertices: 16382,
                cap: 4096
            })
        ));
    }

    #[test]
    fn code_validation() {
        let s = sig(&[1, 2]);
        assert!(IdealCode::new(vec![2, 0], &s).is_err());
        assert!(IdealCode::new(vec![0], &s).is_err());
        assert_eq!(Support::from_bits(0b101).to_string(), "{1,3}");
        assert_eq!(
            Support::from_bits(0b101).complement(3),
            Support::from_bits(0b010)
        );
    }
}
