//! Strategies and checks shared by the property suite and the acceptance
//! runner.

use idealgraph::family::{build_clique_set, build_coloring, validate, weight};
use idealgraph::lattice::{adjacent, build_graph, degree_closed_form, intersect};
use idealgraph::{factorize, signature_of, Error, IdealCode, Signature, Support};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const CASES: u32 = 1000;
const GRAPH_LIMIT: u64 = 500;

type Check = Result<(), TestCaseError>;

pub fn signature() -> impl Strategy<Value = Signature> {
    prop::collection::vec(1u32..=5, 1..=6).prop_map(|v| Signature::new(v).unwrap())
}

/// A signature with three arbitrary ideal codes of it, possibly trivial.
pub fn signature_with_codes() -> impl Strategy<Value = (Signature, [IdealCode; 3])> {
    (
        signature(),
        prop::array::uniform3(prop::collection::vec(any::<u32>(), 6)),
    )
        .prop_map(|(sig, seeds)| {
            let code = |seed: &Vec<u32>| {
                let exps = sig
                    .exponents()
                    .iter()
                    .zip(seed)
                    .map(|(&e, &r)| r % (e + 1))
                    .collect();
                IdealCode::new(exps, &sig).unwrap()
            };
            let codes = [code(&seeds[0]), code(&seeds[1]), code(&seeds[2])];
            (sig, codes)
        })
}

pub fn small_n_with_seeds() -> impl Strategy<Value = (u64, u32, u32)> {
    (2u64..=10_000, any::<u32>(), any::<u32>())
}

pub fn signature_with_masks() -> impl Strategy<Value = (Signature, u32, u32)> {
    (signature(), any::<u32>(), any::<u32>())
}

pub fn exponents_with_order() -> impl Strategy<Value = (Vec<u32>, Vec<u64>)> {
    (
        prop::collection::vec(1u32..=4, 1..=4),
        Just(vec![2u64, 3, 5, 7]).prop_shuffle(),
    )
}

/// Elements of the ideal `dZ_n`.
fn ideal_elements(d: u64, n: u64) -> Vec<bool> {
    let mut member = vec![false; n as usize];
    let mut x = 0;
    loop {
        member[x as usize] = true;
        x = (x + d) % n;
        if x == 0 {
            return member;
        }
    }
}

pub fn adjacency_symmetric_and_irreflexive((sig, [a, b, _]): (Signature, [IdealCode; 3])) -> Check {
    prop_assume!(a.is_vertex(&sig) && b.is_vertex(&sig));
    prop_assert_eq!(adjacent(&a, &a, &sig), Err(Error::SelfAdjacency));
    if a != b {
        prop_assert_eq!(adjacent(&a, &b, &sig), adjacent(&b, &a, &sig));
        let meet_nonzero = intersect(&a, &b).support(&sig) != Support::EMPTY;
        prop_assert_eq!(adjacent(&a, &b, &sig).unwrap(), meet_nonzero);
    }
    Ok(())
}

pub fn intersect_is_a_semilattice((_, [a, b, c]): (Signature, [IdealCode; 3])) -> Check {
    prop_assert_eq!(intersect(&a, &b), intersect(&b, &a));
    prop_assert_eq!(
        intersect(&intersect(&a, &b), &c),
        intersect(&a, &intersect(&b, &c))
    );
    prop_assert_eq!(intersect(&a, &a), a);
    Ok(())
}

/// The lcm rule against the actual subgroups of `Z_n`.
pub fn intersect_matches_element_sets((n, s1, s2): (u64, u32, u32)) -> Check {
    let f = factorize(n).unwrap();
    let sig = signature_of(&f);
    let primes = f.component_primes();
    let pick = |seed: u32| {
        let mut r = seed;
        let exps = sig
            .exponents()
            .iter()
            .map(|&e| {
                let x = r % (e + 1);
                r /= e + 1;
                x
            })
            .collect();
        IdealCode::new(exps, &sig).unwrap()
    };
    let (a, b) = (pick(s1), pick(s2));
    let ea = ideal_elements(a.divisor(&primes), n);
    let eb = ideal_elements(b.divisor(&primes), n);
    let meet: Vec<bool> = ea.iter().zip(&eb).map(|(&x, &y)| x && y).collect();
    prop_assert_eq!(meet, ideal_elements(intersect(&a, &b).divisor(&primes), n));
    Ok(())
}

pub fn weight_is_multiplicative((sig, s, t): (Signature, u32, u32)) -> Check {
    let full = Support::full(sig.len()).bits();
    let s = Support::from_bits(s & full);
    let t = Support::from_bits(t & full & !s.bits());
    prop_assert_eq!(weight(s.union(t), &sig), weight(s, &sig) * weight(t, &sig));
    Ok(())
}

/// Chosen supports pairwise intersect; exactly one of each complementary
/// pair is chosen, the strictly heavier one when weights differ.
pub fn chosen_supports_pairwise_intersect(sig: Signature) -> Check {
    let m = sig.len();
    let cs = build_clique_set(&sig);
    for (i, &s) in cs.chosen.iter().enumerate() {
        for &t in &cs.chosen[i..] {
            prop_assert!(s.intersects(t), "{} and {} are disjoint", s, t);
        }
    }
    prop_assert!(cs.contains(Support::full(m)));
    for bits in 1..(1u32 << m) - 1 {
        let s = Support::from_bits(bits);
        let c = s.complement(m);
        prop_assert!(cs.contains(s) != cs.contains(c));
        if weight(s, &sig) > weight(c, &sig) {
            prop_assert!(cs.contains(s));
        }
    }
    Ok(())
}

pub fn degrees_match_closed_form(sig: Signature) -> Check {
    prop_assume!(sig.vertex_count() <= GRAPH_LIMIT);
    let g = build_graph(&sig).unwrap();
    let adj = g.adjacency();
    let full = Support::full(sig.len());
    for (v, code) in g.vertices().iter().enumerate() {
        prop_assert_eq!(adj.degree(v) as u64, degree_closed_form(code, &sig));
        if g.support(v) == full {
            prop_assert_eq!(adj.degree(v), g.vertex_count() - 1);
        }
    }
    Ok(())
}

pub fn constructed_certificate_validates(sig: Signature) -> Check {
    prop_assume!(sig.vertex_count() <= GRAPH_LIMIT);
    let g = build_graph(&sig).unwrap();
    let cert = build_coloring(&g).unwrap();
    prop_assert!(validate(&cert, &g));
    prop_assert_eq!(cert.omega, cert.chi);
    Ok(())
}

pub fn signature_ignores_prime_order((exps, order): (Vec<u32>, Vec<u64>)) -> Check {
    let n = |primes: &[u64]| {
        exps.iter()
            .zip(primes)
            .try_fold(1u64, |acc, (&e, &p)| acc.checked_mul(p.checked_pow(e)?))
    };
    let (Some(a), Some(b)) = (n(&[2, 3, 5, 7]), n(&order)) else {
        return Ok(());
    };
    let sa = signature_of(&factorize(a).unwrap());
    prop_assert_eq!(&sa, &signature_of(&factorize(b).unwrap()));
    prop_assert_eq!(sa, Signature::new(exps.clone()).unwrap());
    Ok(())
}
