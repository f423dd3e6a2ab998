//! Factorization of `n` and the exponent signature that fixes `G(Z_n)` up to
//! isomorphism.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of prime components a signature may carry. Families are
/// indexed by subsets of the components, so this bounds `2^m`.
pub const MAX_COMPONENTS: usize = 20;

/// Prime factorization `n = p_1^e_1 ... p_k^e_k` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from `(prime, exponent)` pairs in any order.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u32)>) -> Result<Self> {
        let mut factors: Vec<(u64, u32)> = pairs.into_iter().collect();
        factors.sort_unstable();
        if factors.is_empty() {
            return Err(Error::InvalidFactorization("no prime factors".into()));
        }
        let mut n: u64 = 1;
        for (i, &(p, e)) in factors.iter().enumerate() {
            if e == 0 {
                return Err(Error::InvalidFactorization(format!(
                    "exponent of {p} is zero"
                )));
            }
            if !is_prime(p) {
                return Err(Error::InvalidFactorization(format!("{p} is not prime")));
            }
            if i > 0 && factors[i - 1].0 == p {
                return Err(Error::InvalidFactorization(format!("prime {p} repeated")));
            }
            n = p
                .checked_pow(e)
                .and_then(|q| n.checked_mul(q))
                .ok_or_else(|| Error::InvalidFactorization("product exceeds 64 bits".into()))?;
        }
        Ok(Self { n, factors })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Primes listed in signature order: ascending exponent, ties broken by
    /// the smaller prime. Component `i` of an ideal code refers to the `i`-th
    /// prime of this list.
    pub fn component_primes(&self) -> Vec<u64> {
        let mut by_exp = self.factors.clone();
        by_exp.sort_by_key(|&(p, e)| (e, p));
        by_exp.into_iter().map(|(p, _)| p).collect()
    }
}

/// Sorted exponent multiset `n_1 <= ... <= n_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Signature(Vec<u32>);

impl Signature {
    /// Accepts exponents in any order. Rejects empty lists, zero exponents,
    /// more than [`MAX_COMPONENTS`] components, and signatures whose ideal
    /// count `prod(n_i + 1)` does not fit in 64 bits.
    pub fn new(mut exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidSignature("empty exponent list".into()));
        }
        if exponents.contains(&0) {
            return Err(Error::InvalidSignature("exponents must be positive".into()));
        }
        if exponents.len() > MAX_COMPONENTS {
            return Err(Error::InvalidSignature(format!(
                "{} components, at most {MAX_COMPONENTS} supported",
                exponents.len()
            )));
        }
        exponents
            .iter()
            .try_fold(1u64, |acc, &e| acc.checked_mul(u64::from(e) + 1))
            .ok_or_else(|| Error::InvalidSignature("ideal count exceeds 64 bits".into()))?;
        exponents.sort_unstable();
        Ok(Self(exponents))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Number of prime components `m`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of ideals of `Z_n`, including `0` and `Z_n` itself.
    pub fn ideal_count(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e) + 1).product()
    }

    /// `|I(Z_n)^*| = prod(n_i + 1) - 2`.
    pub fn vertex_count(&self) -> u64 {
        self.ideal_count() - 2
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e == 1)
    }
}

impl TryFrom<Vec<u32>> for Signature {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Signature::new(v)
    }
}

impl From<Signature> for Vec<u32> {
    fn from(s: Signature) -> Self {
        s.0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses `"1,2,3"`, optionally wrapped in brackets.
impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(trimmed);
        let exps = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent {tok:?} in signature")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Signature::new(exps)
    }
}

pub fn signature_of(f: &Factorization) -> Signature {
    // prod(e_i + 1) <= n and a u64 has at most 15 distinct prime factors
    Signature::new(f.factors.iter().map(|&(_, e)| e).collect())
        .expect("factorization of a u64 has a representable signature")
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::NoProperIdeals(n));
    }
    let mut primes = Vec::new();
    let mut rest = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while rest.is_multiple_of(p) {
            primes.push(p);
            rest /= p;
        }
    }
    let mut stack = vec![rest];
    while let Some(x) = stack.pop() {
        if x == 1 {
            continue;
        }
        if is_prime(x) {
            primes.push(x);
            continue;
        }
        let d = pollard_brent(x);
        stack.push(d);
        stack.push(x / d);
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { n, factors })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs (first twelve prime bases).
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Returns a nontrivial divisor of the odd composite `n` (Brent's variant of
/// Pollard rho, deterministic sequence of increments).
fn pollard_brent(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
        let mut q = 1u64;
        let mut g = 1u64;
        let mut r = 1u64;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("some increment always splits a composite")
}
