//! Prime factorizations, divisors and exponent vectors.
//!
//! A subgroup `<d>` of `Z_n` is identified with the divisor `d`, and `d` in
//! turn with its exponent vector relative to the factorization of `n`.
//! Everything downstream reduces lattice operations to coordinatewise
//! `min`/`max` on these vectors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    n: u64,
    factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    /// Number of distinct prime divisors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.exponent).collect()
    }

    /// Exponents sorted in descending order. Closed-form classifications only
    /// ever look at this multiset.
    pub fn exponent_signature(&self) -> Vec<u32> {
        let mut e = self.exponents();
        e.sort_unstable_by(|a, b| b.cmp(a));
        e
    }

    pub fn divisor_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| u64::from(f.exponent) + 1)
            .product()
    }

    pub fn is_prime_power(&self) -> bool {
        self.omega() == 1
    }

    /// All divisors of `n` in ascending order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for f in &self.factors {
            let mut next = Vec::with_capacity(divs.len() * (f.exponent as usize + 1));
            for &d in &divs {
                let mut pk = 1u64;
                for _ in 0..=f.exponent {
                    next.push(d * pk);
                    pk *= f.prime;
                }
            }
            divs = next;
        }
        divs.sort_unstable();
        divs
    }

    pub fn divides(&self, d: u64) -> bool {
        d != 0 && self.n.is_multiple_of(d)
    }
}

/// Factorizes `n` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut exponent = 0;
            while m.is_multiple_of(p) {
                m /= p;
                exponent += 1;
            }
            factors.push(PrimePower { prime: p, exponent });
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push(PrimePower {
            prime: m,
            exponent: 1,
        });
    }
    Ok(Factorization { n, factors })
}

/// Divisors `d` with `1 < d < n`, ascending. Each generates exactly one
/// proper nontrivial subgroup of `Z_n`.
pub fn proper_nontrivial_divisors(f: &Factorization) -> Vec<u64> {
    f.divisors()
        .into_iter()
        .filter(|&d| d != 1 && d != f.n)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reconstruct(&self, f: &Factorization) -> u64 {
        f.factors
            .iter()
            .zip(&self.0)
            .map(|(pp, &r)| pp.prime.pow(r))
            .product()
    }

    /// True when coordinate `i` sits at the full exponent `alpha_i`.
    pub fn is_full_at(&self, f: &Factorization, i: usize) -> bool {
        self.0[i] == f.factors[i].exponent
    }

    pub fn has_full_coordinate(&self, f: &Factorization) -> bool {
        (0..self.0.len()).any(|i| self.is_full_at(f, i))
    }

    pub fn has_zero_coordinate(&self) -> bool {
        self.0.contains(&0)
    }
}

pub fn exponent_vector(d: u64, f: &Factorization) -> Result<ExponentVector> {
    if !f.divides(d) {
        return Err(Error::NotADivisor { d, n: f.n });
    }
    let mut m = d;
    let exps = f
        .factors
        .iter()
        .map(|pp| {
            let mut r = 0;
            while m.is_multiple_of(pp.prime) {
                m /= pp.prime;
                r += 1;
            }
            r
        })
        .collect();
    Ok(ExponentVector(exps))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
