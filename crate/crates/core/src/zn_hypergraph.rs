//! Intersection and co-maximal hypergraphs of `Z_n` over the divisor model.
//!
//! The subgroup `<d>` of `Z_n` (for `d | n`) has order `n / d`. Two such
//! subgroups intersect trivially iff `lcm(d1, d2) = n`, and their sum is all
//! of `Z_n` iff `gcd(d1, d2) = 1`. Both tests run on exponent vectors.

use serde::{Deserialize, Serialize};

use crate::arith::{exponent_vector, proper_nontrivial_divisors, ExponentVector, Factorization};
use crate::error::{Error, Result};
use crate::hypergraph::{enumerate_maximal_edges, Hypergraph};

/// Hypergraph whose vertex labels are generator divisors.
pub type ZnHypergraph = Hypergraph<u64>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SubgroupOfZn {
    generator: u64,
    exponents: ExponentVector,
    order: u64,
}

impl SubgroupOfZn {
    /// The subgroup `<d>`; `d` must be a proper nontrivial divisor of `n`.
    pub fn new(d: u64, f: &Factorization) -> Result<Self> {
        let exponents = exponent_vector(d, f)?;
        if d == 1 || d == f.n() {
            return Err(Error::NotProperDivisor { d, n: f.n() });
        }
        Ok(SubgroupOfZn {
            generator: d,
            exponents,
            order: f.n() / d,
        })
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn exponents(&self) -> &ExponentVector {
        &self.exponents
    }

    pub fn order(&self) -> u64 {
        self.order
    }
}

fn proper_exponents(d: u64, f: &Factorization) -> Result<ExponentVector> {
    SubgroupOfZn::new(d, f).map(|s| s.exponents)
}

fn meets_trivially(a: &ExponentVector, b: &ExponentVector, f: &Factorization) -> bool {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .zip(f.factors())
        .all(|((&r, &s), pp)| r.max(s) == pp.exponent)
}

fn coprime(a: &ExponentVector, b: &ExponentVector) -> bool {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .all(|(&r, &s)| r.min(s) == 0)
}

/// `<d1> ∩ <d2> = {0}` in `Z_n`, i.e. `lcm(d1, d2) = n`.
pub fn trivially_intersects(d1: u64, d2: u64, f: &Factorization) -> Result<bool> {
    let a = proper_exponents(d1, f)?;
    let b = proper_exponents(d2, f)?;
    Ok(meets_trivially(&a, &b, f))
}

/// `<d1> + <d2> = Z_n`, i.e. `gcd(d1, d2) = 1`.
pub fn comaximal(d1: u64, d2: u64, f: &Factorization) -> Result<bool> {
    let a = proper_exponents(d1, f)?;
    let b = proper_exponents(d2, f)?;
    Ok(coprime(&a, &b))
}

/// Vertices of the intersection hypergraph: proper nontrivial subgroups whose
/// exponent vector is full in at least one coordinate.
pub fn vertex_set(f: &Factorization) -> Vec<SubgroupOfZn> {
    if f.omega() < 2 {
        return Vec::new();
    }
    proper_nontrivial_divisors(f)
        .into_iter()
        .map(|d| SubgroupOfZn::new(d, f).expect("proper divisor"))
        .filter(|s| s.exponents.has_full_coordinate(f))
        .collect()
}

fn build_from(
    subgroups: Vec<SubgroupOfZn>,
    related: impl Fn(&ExponentVector, &ExponentVector) -> bool,
) -> ZnHypergraph {
    let edges = enumerate_maximal_edges(subgroups.len(), |i, j| {
        related(&subgroups[i].exponents, &subgroups[j].exponents)
    });
    Hypergraph::new(subgroups.into_iter().map(|s| s.generator).collect(), edges)
}

pub fn build_intersection_hypergraph(f: &Factorization) -> ZnHypergraph {
    build_from(vertex_set(f), |a, b| meets_trivially(a, b, f))
}

/// Vertices are picked by the definition directly: a subgroup qualifies when
/// some other proper nontrivial subgroup is comaximal with it.
pub fn build_comaximal_hypergraph(f: &Factorization) -> ZnHypergraph {
    let all: Vec<SubgroupOfZn> = proper_nontrivial_divisors(f)
        .into_iter()
        .map(|d| SubgroupOfZn::new(d, f).expect("proper divisor"))
        .collect();
    let vertices: Vec<SubgroupOfZn> = all
        .iter()
        .filter(|s| all.iter().any(|t| coprime(&s.exponents, &t.exponents)))
        .cloned()
        .collect();
    build_from(vertices, coprime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorize, gcd, lcm};

    fn f(n: u64) -> Factorization {
        factorize(n).unwrap()
    }

    fn edge_labels(h: &ZnHypergraph) -> Vec<Vec<u64>> {
        h.edge_labels()
            .into_iter()
            .map(|e| e.into_iter().copied().collect())
            .collect()
    }

    #[test]
    fn relation_examples() {
        assert!(trivially_intersects(4, 3, &f(12)).unwrap());
        assert!(!trivially_intersects(3, 6, &f(12)).unwrap());
        assert!(trivially_intersects(6, 10, &f(30)).unwrap());
        assert!(comaximal(4, 3, &f(12)).unwrap());
        assert!(!comaximal(2, 6, &f(12)).unwrap());
        assert!(!comaximal(6, 10, &f(30)).unwrap());
    }

    #[test]
    fn relations_reject_bad_input() {
        assert_eq!(
            trivially_intersects(5, 3, &f(12)),
            Err(Error::NotADivisor { d: 5, n: 12 })
        );
        assert_eq!(
            comaximal(12, 3, &f(12)),
            Err(Error::NotProperDivisor { d: 12, n: 12 })
        );
        assert_eq!(
            comaximal(1, 3, &f(12)),
            Err(Error::NotProperDivisor { d: 1, n: 12 })
        );
    }

    #[test]
    fn relations_agree_with_lcm_and_gcd() {
        for n in 2..=600u64 {
            let fac = f(n);
            let divs = proper_nontrivial_divisors(&fac);
            for &a in &divs {
                for &b in &divs {
                    assert_eq!(trivially_intersects(a, b, &fac).unwrap(), lcm(a, b) == n);
                    assert_eq!(comaximal(a, b, &fac).unwrap(), gcd(a, b) == 1);
                }
            }
        }
    }

    #[test]
    fn vertex_set_examples() {
        let gens = |n| {
            vertex_set(&f(n))
                .iter()
                .map(|s| s.generator())
                .collect::<Vec<_>>()
        };
        assert_eq!(gens(12), vec![3, 4, 6]);
        assert!(gens(8).is_empty());
        assert_eq!(gens(30), vec![2, 3, 5, 6, 10, 15]);
        let s = &vertex_set(&f(12))[0];
        assert_eq!(s.order() * s.generator(), 12);
    }

    #[test]
    fn vertex_set_matches_pair_search() {
        for n in 2..=10_000u64 {
            let fac = f(n);
            let divs = proper_nontrivial_divisors(&fac);
            let brute: Vec<u64> = divs
                .iter()
                .copied()
                .filter(|&d| divs.iter().any(|&e| lcm(d, e) == n))
                .collect();
            let got: Vec<u64> = vertex_set(&fac).iter().map(|s| s.generator()).collect();
            assert_eq!(got, brute, "n = {n}");
        }
    }

    #[test]
    fn intersection_examples() {
        let h6 = build_intersection_hypergraph(&f(6));
        assert_eq!(h6.vertices(), &[2, 3]);
        assert_eq!(edge_labels(&h6), vec![vec![2, 3]]);

        let h12 = build_intersection_hypergraph(&f(12));
        assert_eq!(h12.vertices(), &[3, 4, 6]);
        assert_eq!(edge_labels(&h12), vec![vec![3, 4], vec![4, 6]]);

        let h30 = build_intersection_hypergraph(&f(30));
        assert_eq!(
            edge_labels(&h30),
            vec![vec![2, 15], vec![3, 10], vec![5, 6], vec![6, 10, 15]]
        );

        assert!(build_intersection_hypergraph(&f(9)).is_empty());
        assert!(build_intersection_hypergraph(&f(1)).is_empty());
    }

    #[test]
    fn comaximal_examples() {
        let h6 = build_comaximal_hypergraph(&f(6));
        assert_eq!(edge_labels(&h6), vec![vec![2, 3]]);
        assert!(build_comaximal_hypergraph(&f(4)).is_empty());
        let h12 = build_comaximal_hypergraph(&f(12));
        assert_eq!(h12.vertices(), &[2, 3, 4]);
        assert_eq!(edge_labels(&h12), vec![vec![2, 3], vec![3, 4]]);
    }

    #[test]
    fn edges_are_maximal_trivially_intersecting_families() {
        for n in 2..=2000u64 {
            let fac = f(n);
            let h = build_intersection_hypergraph(&fac);
            assert!(h.is_well_formed() || h.is_empty(), "n = {n}");
            for e in edge_labels(&h) {
                for (i, &a) in e.iter().enumerate() {
                    for &b in &e[i + 1..] {
                        assert_eq!(lcm(a, b), n);
                    }
                }
                let extendable = h
                    .vertices()
                    .iter()
                    .filter(|v| !e.contains(v))
                    .any(|&v| e.iter().all(|&a| lcm(a, v) == n));
                assert!(!extendable, "n = {n}, edge {e:?}");
            }
        }
    }

    #[test]
    fn emptiness_and_single_edge() {
        for n in 2..=10_000u64 {
            let fac = f(n);
            let h = build_intersection_hypergraph(&fac);
            assert_eq!(h.is_empty(), fac.omega() <= 1, "n = {n}");
            let pq = fac.exponent_signature() == [1, 1];
            assert_eq!(h.edge_count() == 1, pq, "n = {n}");
        }
    }

    #[test]
    fn construction_is_deterministic() {
        for n in [30u64, 360, 2310] {
            assert_eq!(
                build_intersection_hypergraph(&f(n)),
                build_intersection_hypergraph(&f(n))
            );
        }
    }
}
