//! Explicit clique/chromatic numbers for special signatures. Each formula
//! checks its own hypothesis and reports "not applicable" instead of a value
//! outside it.

use serde::{Deserialize, Serialize};

use crate::family::weight;
use crate::lattice::Support;
use crate::number::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaResult {
    pub name: String,
    pub applicable: bool,
    pub value: Option<u64>,
}

impl FormulaResult {
    fn new(name: &str, value: Option<u64>) -> Self {
        FormulaResult {
            name: name.to_owned(),
            applicable: value.is_some(),
            value,
        }
    }
}

fn prod(xs: &[u32]) -> u64 {
    xs.iter().map(|&x| u64::from(x)).product()
}

/// `sum_{|S| >= k} W(S) - 1`: vertices with at least `k` nonzero components
/// (the unit ideal is dropped).
fn count_support_at_least(sig: &Signature, k: usize) -> u64 {
    // elementary symmetric polynomials of the exponents
    let mut e = vec![0u64; sig.len() + 1];
    e[0] = 1;
    for &x in sig.exponents() {
        for j in (1..e.len()).rev() {
            e[j] += e[j - 1] * u64::from(x);
        }
    }
    e[k..].iter().sum::<u64>() - 1
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn all_equal(sig: &Signature) -> Option<u64> {
    let first = sig.exponents()[0];
    sig.exponents()
        .iter()
        .all(|&e| e == first)
        .then_some(u64::from(first))
}

/// `m = 1`: `K_{n_1 - 1}`.
pub fn omega_prime_power(sig: &Signature) -> FormulaResult {
    let value = (sig.len() == 1).then(|| u64::from(sig.exponents()[0]) - 1);
    FormulaResult::new("prime_power", value)
}

/// `m = 2`: `n_2 (n_1 + 1) - 1`.
pub fn omega_two_primes(sig: &Signature) -> FormulaResult {
    let value = match *sig.exponents() {
        [a, b] => Some(u64::from(b) * (u64::from(a) + 1) - 1),
        _ => None,
    };
    FormulaResult::new("two_primes", value)
}

/// Squarefree `n` (equivalently a product of `m` fields): `2^(m-1) - 1`.
pub fn omega_squarefree(sig: &Signature) -> FormulaResult {
    let value = sig.is_squarefree().then(|| (1u64 << (sig.len() - 1)) - 1);
    FormulaResult::new("squarefree", value)
}

/// Dominant last exponent, `n_m >= prod_{i<m} n_i`:
/// `n_m prod_{i<m} (n_i + 1) - 1`.
pub fn omega_dominant(sig: &Signature) -> FormulaResult {
    let (last, rest) = sig
        .exponents()
        .split_last()
        .expect("signature is non-empty");
    let value = (u64::from(*last) >= prod(rest))
        .then(|| u64::from(*last) * rest.iter().map(|&x| u64::from(x) + 1).product::<u64>() - 1);
    FormulaResult::new("dominant_exponent", value)
}

/// Odd `m > 1` with the largest `floor(m/2)` exponents multiplying to at most
/// the product of the rest: vertices with at most `floor(m/2)` zero
/// components.
pub fn omega_odd_m(sig: &Signature) -> FormulaResult {
    let m = sig.len();
    let e = sig.exponents();
    let half = m / 2;
    let value = (m > 1 && m % 2 == 1 && prod(&e[m - half..]) <= prod(&e[..m - half]))
        .then(|| count_support_at_least(sig, m - half));
    FormulaResult::new("odd_m", value)
}

/// Odd `m`, all exponents `α`: `sum_{i=0}^{floor(m/2)} C(m,i) α^(m-i) - 1`.
pub fn omega_odd_equal(sig: &Signature) -> FormulaResult {
    let m = sig.len() as u64;
    let value = all_equal(sig).filter(|_| m % 2 == 1).map(|alpha| {
        (0..=m / 2)
            .map(|i| binomial(m, i) * alpha.pow((m - i) as u32))
            .sum::<u64>()
            - 1
    });
    FormulaResult::new("odd_equal", value)
}

/// Even `m > 2` with the largest `m/2 - 1` exponents multiplying to at most
/// the product of the smallest `m/2 + 1`: vertices with at most `m/2 - 1`
/// zero components, plus one family from each tied complementary pair of
/// size `m/2`.
///
/// The hypothesis alone does not force the balanced pairs to tie (for
/// `[2,2,2,3]` none of them do, and the heavier member of each pair belongs
/// to the maximum clique). The formula is only reported when every balanced
/// pair is tied.
pub fn omega_even_m(sig: &Signature) -> FormulaResult {
    let m = sig.len();
    let e = sig.exponents();
    if m <= 2 || m % 2 == 1 || prod(&e[m - (m / 2 - 1)..]) > prod(&e[..m / 2 + 1]) {
        return FormulaResult::new("even_m", None);
    }
    let last = m - 1;
    let mut tied_weight = 0u64;
    for bits in 1..=Support::full(m).bits() {
        let s = Support::from_bits(bits);
        if s.len() != m / 2 || !s.contains(last) {
            continue;
        }
        let (ws, wc) = (weight(s, sig), weight(s.complement(m), sig));
        if ws != wc {
            return FormulaResult::new("even_m", None);
        }
        tied_weight += ws;
    }
    let value = count_support_at_least(sig, m / 2 + 1) + tied_weight;
    FormulaResult::new("even_m", Some(value))
}

/// Even `m`, all exponents `α`:
/// `sum_{i=0}^{m/2-1} C(m,i) α^(m-i) + C(m,m/2) α^(m/2) / 2 - 1`.
pub fn omega_even_equal(sig: &Signature) -> FormulaResult {
    let m = sig.len() as u64;
    let value = all_equal(sig).filter(|_| m.is_multiple_of(2)).map(|alpha| {
        let heavy: u64 = (0..m / 2)
            .map(|i| binomial(m, i) * alpha.pow((m - i) as u32))
            .sum();
        heavy + binomial(m, m / 2) * alpha.pow((m / 2) as u32) / 2 - 1
    });
    FormulaResult::new("even_equal", value)
}

/// Every formula, in a fixed order.
pub fn all_formulas(sig: &Signature) -> Vec<FormulaResult> {
    vec![
        omega_prime_power(sig),
        omega_two_primes(sig),
        omega_squarefree(sig),
        omega_dominant(sig),
        omega_odd_m(sig),
        omega_odd_equal(sig),
        omega_even_m(sig),
        omega_even_equal(sig),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(v: &[u32]) -> Signature {
        Signature::new(v.to_vec()).unwrap()
    }

    fn val(r: FormulaResult) -> Option<u64> {
        assert_eq!(r.applicable, r.value.is_some());
        r.value
    }

    #[test]
    fn prime_power() {
        assert_eq!(val(omega_prime_power(&sig(&[5]))), Some(4));
        assert_eq!(val(omega_prime_power(&sig(&[2]))), Some(1));
        assert_eq!(val(omega_prime_power(&sig(&[1]))), Some(0));
        assert_eq!(val(omega_prime_power(&sig(&[1, 1]))), None);
    }

    #[test]
    fn two_primes() {
        assert_eq!(val(omega_two_primes(&sig(&[1, 2]))), Some(3));
        assert_eq!(val(omega_two_primes(&sig(&[2, 2]))), Some(5));
        assert_eq!(val(omega_two_primes(&sig(&[1, 1]))), Some(1));
        assert_eq!(val(omega_two_primes(&sig(&[1, 1, 1]))), None);
    }

    #[test]
    fn squarefree() {
        assert_eq!(val(omega_squarefree(&sig(&[1, 1, 1]))), Some(3));
        assert_eq!(val(omega_squarefree(&sig(&[1, 1]))), Some(1));
        assert_eq!(val(omega_squarefree(&sig(&[1, 1, 1, 1]))), Some(7));
        assert_eq!(val(omega_squarefree(&sig(&[1, 2]))), None);
    }

    #[test]
    fn dominant() {
        assert_eq!(val(omega_dominant(&sig(&[1, 1, 2]))), Some(7));
        assert_eq!(val(omega_dominant(&sig(&[1, 2]))), Some(3));
        assert_eq!(val(omega_dominant(&sig(&[2, 2, 5]))), Some(44));
        assert_eq!(val(omega_dominant(&sig(&[2, 2, 3]))), None);
    }

    #[test]
    fn odd() {
        assert_eq!(val(omega_odd_m(&sig(&[1, 1, 1]))), Some(3));
        assert_eq!(val(omega_odd_m(&sig(&[2, 2, 2]))), Some(19));
        assert_eq!(val(omega_odd_m(&sig(&[1, 1, 5]))), None);
        assert_eq!(val(omega_odd_m(&sig(&[3]))), None);
        assert_eq!(val(omega_odd_equal(&sig(&[2, 2, 2]))), Some(19));
        assert_eq!(val(omega_odd_equal(&sig(&[1, 1, 1]))), Some(3));
        assert_eq!(val(omega_odd_equal(&sig(&[1, 1, 1, 1, 1]))), Some(15));
        assert_eq!(val(omega_odd_equal(&sig(&[1, 1, 2]))), None);
    }

    #[test]
    fn even() {
        assert_eq!(val(omega_even_m(&sig(&[1, 1, 1, 1]))), Some(7));
        assert_eq!(val(omega_even_m(&sig(&[2, 2, 2, 2]))), Some(59));
        assert_eq!(val(omega_even_m(&sig(&[1, 1, 1, 3]))), None);
        assert_eq!(val(omega_even_m(&sig(&[2, 2, 2, 3]))), None);
        assert_eq!(val(omega_even_m(&sig(&[1, 1]))), None);
        assert_eq!(val(omega_even_equal(&sig(&[1, 1]))), Some(1));
        assert_eq!(val(omega_even_equal(&sig(&[2, 2]))), Some(5));
        assert_eq!(val(omega_even_equal(&sig(&[1, 1, 1, 1]))), Some(7));
        assert_eq!(val(omega_even_equal(&sig(&[2, 2, 2, 2]))), Some(59));
    }

    #[test]
    fn unbalanced_pairs_break_the_tie_sum() {
        // hypothesis of the even-m count holds for [2,2,2,3] ...
        let s = sig(&[2, 2, 2, 3]);
        let e = s.exponents();
        assert!(prod(&e[3..]) <= prod(&e[..3]));
        // ... but counting only tied balanced pairs falls short of the
        // family-construction clique, which takes the heavier member of each
        let tied_only = count_support_at_least(&s, 3);
        assert_eq!(tied_only, 12 + 12 + 12 + 8 + 24 - 1);
        assert_eq!(crate::family::omega(&s), tied_only + 3 * 6);
    }
}
