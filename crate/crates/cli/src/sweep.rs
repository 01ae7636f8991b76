use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use znhg_core::arith::{factorize, Factorization};
use znhg_core::classify::{predict, Classification};
use znhg_core::metrics::{
    chromatic_number, constructive_two_coloring, diameter, find_isomorphism, girth, has_host_tree,
    is_isomorphism, is_star,
};
use znhg_core::topology::{hypergraph_planar, incidence_graph};
use znhg_core::zn_hypergraph::{
    build_comaximal_hypergraph, build_intersection_hypergraph, ZnHypergraph,
};

#[derive(
    Debug,
    Clone,
    Copy,
    PartialEq,
    Eq,
    PartialOrd,
    Ord,
    Hash,
    Serialize,
    Deserialize,
    clap::ValueEnum,
)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Diameter,
    Girth,
    Chromatic,
    Star,
    Hypertree,
    Planarity,
    SingleEdge,
    Emptiness,
    Iso,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Diameter,
        Check::Girth,
        Check::Chromatic,
        Check::Star,
        Check::Hypertree,
        Check::Planarity,
        Check::SingleEdge,
        Check::Emptiness,
        Check::Iso,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Diameter => "diameter",
            Check::Girth => "girth",
            Check::Chromatic => "chromatic",
            Check::Star => "star",
            Check::Hypertree => "hypertree",
            Check::Planarity => "planarity",
            Check::SingleEdge => "single-edge",
            Check::Emptiness => "emptiness",
            Check::Iso => "iso",
        }
    }

    pub fn parse(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s)
    }

    /// Emptiness and single-edge are statements about every `n`; the rest
    /// only concern nonempty hypergraphs.
    fn applies_to(self, f: &Factorization) -> bool {
        matches!(self, Check::Emptiness | Check::SingleEdge) || f.omega() >= 2
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub n: u64,
    pub check: Check,
    pub computed: String,
    pub predicted: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check: Check,
    pub checked: u64,
    pub agreed: u64,
    pub findings: u64,
    /// Host-tree searches beyond the vertex limit; excluded from the other
    /// counts.
    pub unknown: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema: String,
    pub lo: u64,
    pub hi: u64,
    pub host_tree_limit: usize,
    pub summaries: Vec<CheckSummary>,
    pub findings: Vec<Finding>,
}

enum Outcome {
    Agree,
    Disagree { computed: String, predicted: String },
    Unknown,
}

fn compare<T: PartialEq + fmt::Display>(computed: T, predicted: T) -> Outcome {
    if computed == predicted {
        Outcome::Agree
    } else {
        Outcome::Disagree {
            computed: computed.to_string(),
            predicted: predicted.to_string(),
        }
    }
}

fn run_check(
    check: Check,
    f: &Factorization,
    h: &ZnHypergraph,
    p: &Classification,
    host_tree_limit: usize,
) -> Outcome {
    match check {
        Check::Diameter => compare(diameter(h), p.diameter),
        Check::Girth => {
            let predicted = p.girth.map_or("undefined".to_string(), |g| g.to_string());
            compare(girth(h).to_string(), predicted)
        }
        Check::Chromatic => {
            let chi = chromatic_number(h) as u32;
            match constructive_two_coloring(f, h) {
                Ok(_) => compare(chi, p.chromatic),
                Err(e) => Outcome::Disagree {
                    computed: format!("{chi}; {e}"),
                    predicted: p.chromatic.to_string(),
                },
            }
        }
        Check::Star => compare(is_star(h), p.star),
        Check::Hypertree => match has_host_tree(h, host_tree_limit).as_bool() {
            Some(found) => compare(found, p.hypertree),
            None => Outcome::Unknown,
        },
        Check::Planarity => {
            let result = hypergraph_planar(h);
            if !result.verify(&incidence_graph(h)) {
                return Outcome::Disagree {
                    computed: "unverified certificate".into(),
                    predicted: p.planar.to_string(),
                };
            }
            compare(result.is_planar(), p.planar)
        }
        Check::SingleEdge => compare(h.edge_count() == 1, p.single_edge),
        Check::Emptiness => compare(h.is_empty(), p.is_empty),
        Check::Iso => {
            let co = build_comaximal_hypergraph(f);
            let iso = find_isomorphism(h, &co).is_some_and(|phi| is_isomorphism(h, &co, &phi));
            compare(iso, true)
        }
    }
}

fn sweep_one(n: u64, checks: &[Check], host_tree_limit: usize) -> Vec<(Check, Outcome)> {
    let f = factorize(n).expect("n >= 2");
    let p = predict(&f);
    let h = build_intersection_hypergraph(&f);
    checks
        .iter()
        .filter(|c| c.applies_to(&f))
        .map(|&c| (c, run_check(c, &f, &h, &p, host_tree_limit)))
        .collect()
}

/// Runs `checks` for every `n` in `lo..=hi`. `jobs = 0` uses all cores.
/// The result does not depend on `jobs`.
pub fn sweep(
    lo: u64,
    hi: u64,
    checks: &[Check],
    host_tree_limit: usize,
    jobs: usize,
) -> SweepReport {
    assert!(
        2 <= lo && lo <= hi,
        "sweep range must satisfy 2 <= lo <= hi"
    );
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let per_n: Vec<Vec<(Check, Outcome)>> = pool.install(|| {
        (lo..=hi)
            .into_par_iter()
            .map(|n| sweep_one(n, &checks, host_tree_limit))
            .collect()
    });

    let mut summaries: Vec<CheckSummary> = checks
        .iter()
        .map(|&check| CheckSummary {
            check,
            checked: 0,
            agreed: 0,
            findings: 0,
            unknown: 0,
        })
        .collect();
    let mut findings = Vec::new();
    for (n, outcomes) in (lo..=hi).zip(per_n) {
        for (check, outcome) in outcomes {
            let s = summaries
                .iter_mut()
                .find(|s| s.check == check)
                .expect("summary per check");
            match outcome {
                Outcome::Agree => {
                    s.checked += 1;
                    s.agreed += 1;
                }
                Outcome::Disagree {
                    computed,
                    predicted,
                } => {
                    s.checked += 1;
                    s.findings += 1;
                    findings.push(Finding {
                        n,
                        check,
                        computed,
                        predicted,
                    });
                }
                Outcome::Unknown => s.unknown += 1,
            }
        }
    }
    SweepReport {
        schema: crate::schema_tag(),
        lo,
        hi,
        host_tree_limit,
        summaries,
        findings,
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            out,
            "sweep n = {}..={} (host-tree limit {})",
            self.lo, self.hi, self.host_tree_limit
        )?;
        writeln!(
            out,
            "{:<12} {:>8} {:>8} {:>8} {:>8}",
            "check", "checked", "agreed", "findings", "unknown"
        )?;
        for s in &self.summaries {
            writeln!(
                out,
                "{:<12} {:>8} {:>8} {:>8} {:>8}",
                s.check.name(),
                s.checked,
                s.agreed,
                s.findings,
                s.unknown
            )?;
        }
        if self.findings.is_empty() {
            writeln!(out, "findings: none")?;
        } else {
            writeln!(out, "findings: {}", self.findings.len())?;
            for f in &self.findings {
                writeln!(
                    out,
                    "  n = {}: {} computed {} predicted {}",
                    f.n, f.check, f.computed, f.predicted
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean() {
        let r = sweep(2, 300, &Check::ALL, 9, 2);
        assert!(r.findings.is_empty(), "{r}");
        let empt = r
            .summaries
            .iter()
            .find(|s| s.check == Check::Emptiness)
            .unwrap();
        assert_eq!(empt.checked, 299);
    }

    #[test]
    fn independent_of_thread_count() {
        let checks = [Check::Hypertree, Check::Planarity, Check::Girth];
        let a = sweep(2, 400, &checks, 7, 1);
        let b = sweep(2, 400, &checks, 7, 4);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), b.to_string());
        let ht = a
            .summaries
            .iter()
            .find(|s| s.check == Check::Hypertree)
            .unwrap();
        assert!(ht.unknown > 0);
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(Check::parse(c.name()), Some(c));
        }
        assert_eq!(Check::parse("nope"), None);
    }
}
