use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use znhg_core::arith::{factorize, Factorization, PrimePower};
use znhg_core::classify::{predict, Classification};
use znhg_core::metrics::{
    chromatic_number, constructive_two_coloring, diameter, girth, has_host_tree, is_star, Diameter,
    GirthValue,
};
use znhg_core::topology::{hypergraph_planar, incidence_graph, KuratowskiKind, PlanarityResult};
use znhg_core::zn_hypergraph::{build_intersection_hypergraph, ZnHypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HostTreeVerdict {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlanarityKind {
    #[serde(rename = "planar")]
    Planar,
    /// Nonplanar, witnessed by a subdivision of `K5`.
    K5,
    /// Nonplanar, witnessed by a subdivision of `K3,3`.
    K33,
}

impl PlanarityKind {
    pub fn is_planar(self) -> bool {
        self == PlanarityKind::Planar
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerificationMode {
    Computed,
    FormulaOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputedInvariants {
    pub is_empty: bool,
    pub single_edge: bool,
    pub diameter: Diameter,
    pub girth: GirthValue,
    pub chromatic: u32,
    pub constructive_coloring_proper: bool,
    pub star: bool,
    pub hypertree: HostTreeVerdict,
    pub planarity: PlanarityKind,
    /// The planarity certificate (rotation system or Kuratowski witness)
    /// passed its independent check.
    pub certificate_verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCheck {
    pub field: String,
    pub verified: VerificationMode,
    /// Present only when both a computed and a predicted value exist.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub n: u64,
    pub factorization: Vec<PrimePower>,
    pub vertices: Vec<u64>,
    pub edges: Vec<Vec<u64>>,
    pub computed: ComputedInvariants,
    pub predicted: Classification,
    pub checks: Vec<FieldCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notices: Vec<String>,
}

impl AnalysisReport {
    pub fn findings(&self) -> impl Iterator<Item = &FieldCheck> {
        self.checks.iter().filter(|c| c.agrees == Some(false))
    }

    pub fn has_findings(&self) -> bool {
        self.findings().next().is_some()
    }
}

pub fn edge_labels(h: &ZnHypergraph) -> Vec<Vec<u64>> {
    h.edge_labels()
        .into_iter()
        .map(|e| e.into_iter().copied().collect())
        .collect()
}

pub fn compute(f: &Factorization, h: &ZnHypergraph, host_tree_limit: usize) -> ComputedInvariants {
    let planarity = hypergraph_planar(h);
    let certificate_verified = planarity.verify(&incidence_graph(h));
    ComputedInvariants {
        is_empty: h.is_empty(),
        single_edge: h.edge_count() == 1,
        diameter: diameter(h),
        girth: girth(h),
        chromatic: chromatic_number(h) as u32,
        constructive_coloring_proper: h.is_empty() || constructive_two_coloring(f, h).is_ok(),
        star: is_star(h),
        hypertree: match has_host_tree(h, host_tree_limit).as_bool() {
            Some(true) => HostTreeVerdict::Yes,
            Some(false) => HostTreeVerdict::No,
            None => HostTreeVerdict::Unknown,
        },
        planarity: match planarity {
            PlanarityResult::Planar(_) => PlanarityKind::Planar,
            PlanarityResult::Nonplanar(w) => match w.kind {
                KuratowskiKind::K5 => PlanarityKind::K5,
                KuratowskiKind::K33 => PlanarityKind::K33,
            },
        },
        certificate_verified,
    }
}

fn field_checks(c: &ComputedInvariants, p: &Classification) -> Vec<FieldCheck> {
    use VerificationMode::*;
    let check = |field: &str, agrees: Option<bool>| FieldCheck {
        field: field.to_string(),
        verified: Computed,
        agrees,
    };
    let formula = |field: &str| FieldCheck {
        field: field.to_string(),
        verified: FormulaOnly,
        agrees: None,
    };
    // On the empty hypergraph the remaining invariants are conventions,
    // not predictions.
    let live = |agrees: bool| (!p.is_empty).then_some(agrees);
    let hypertree = match c.hypertree {
        HostTreeVerdict::Unknown => None,
        v => live((v == HostTreeVerdict::Yes) == p.hypertree),
    };
    vec![
        check("is_empty", Some(c.is_empty == p.is_empty)),
        check("single_edge", Some(c.single_edge == p.single_edge)),
        check("diameter", Some(c.diameter == p.diameter)),
        check("girth", live(Some(c.girth) == p.girth)),
        check(
            "chromatic",
            Some(c.chromatic == p.chromatic && c.constructive_coloring_proper),
        ),
        check("star", live(c.star == p.star)),
        check("hypertree", hypertree),
        check(
            "planar",
            live(c.planarity.is_planar() == p.planar && c.certificate_verified),
        ),
        formula("genus_one"),
        formula("crosscap_one"),
        formula("toroidal"),
        formula("projective"),
    ]
}

pub fn analyze(n: u64, host_tree_limit: usize) -> znhg_core::Result<AnalysisReport> {
    let f = factorize(n)?;
    let h = build_intersection_hypergraph(&f);
    let computed = compute(&f, &h, host_tree_limit);
    let predicted = predict(&f);
    let checks = field_checks(&computed, &predicted);
    let mut notices = Vec::new();
    if predicted.is_empty {
        notices.push(format!(
            "{n} is 1 or a prime power: the hypergraph is empty and only emptiness, \
             single_edge, diameter and chromatic are compared"
        ));
    }
    if computed.hypertree == HostTreeVerdict::Unknown {
        notices.push(format!(
            "{} vertices exceed the host-tree search limit of {host_tree_limit}",
            h.vertex_count()
        ));
    }
    Ok(AnalysisReport {
        schema: crate::schema_tag(),
        n,
        factorization: f.factors().to_vec(),
        vertices: h.vertices().to_vec(),
        edges: edge_labels(&h),
        computed,
        predicted,
        checks,
        notices,
    })
}

fn factorization_text(factors: &[PrimePower]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|p| match p.exponent {
            1 => p.prime.to_string(),
            e => format!("{}^{e}", p.prime),
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn sets(items: &[Vec<u64>]) -> String {
    let parts: Vec<String> = items
        .iter()
        .map(|e| {
            let inner: Vec<String> = e.iter().map(u64::to_string).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    parts.join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            out,
            "n = {} = {}",
            self.n,
            factorization_text(&self.factorization)
        )?;
        for notice in &self.notices {
            writeln!(out, "note: {notice}")?;
        }
        let vs: Vec<String> = self.vertices.iter().map(u64::to_string).collect();
        let vertex_line = format!("vertices ({}): {}", vs.len(), vs.join(" "));
        let edge_line = format!("hyperedges ({}): {}", self.edges.len(), sets(&self.edges));
        writeln!(out, "{}", vertex_line.trim_end())?;
        writeln!(out, "{}", edge_line.trim_end())?;
        writeln!(out)?;

        let c = &self.computed;
        let p = &self.predicted;
        let girth_p = p.girth.map_or("undefined".to_string(), |g| g.to_string());
        let planarity = match c.planarity {
            PlanarityKind::Planar => "planar".to_string(),
            PlanarityKind::K5 => "nonplanar (K5 subdivision)".to_string(),
            PlanarityKind::K33 => "nonplanar (K3,3 subdivision)".to_string(),
        };
        let hypertree = match c.hypertree {
            HostTreeVerdict::Yes => "yes",
            HostTreeVerdict::No => "no",
            HostTreeVerdict::Unknown => "unknown",
        };
        let rows: Vec<(&str, String, String)> = vec![
            (
                "is_empty",
                yes_no(c.is_empty).into(),
                yes_no(p.is_empty).into(),
            ),
            (
                "single_edge",
                yes_no(c.single_edge).into(),
                yes_no(p.single_edge).into(),
            ),
            ("diameter", c.diameter.to_string(), p.diameter.to_string()),
            ("girth", c.girth.to_string(), girth_p),
            (
                "chromatic",
                c.chromatic.to_string(),
                p.chromatic.to_string(),
            ),
            ("star", yes_no(c.star).into(), yes_no(p.star).into()),
            ("hypertree", hypertree.into(), yes_no(p.hypertree).into()),
            ("planar", planarity, yes_no(p.planar).into()),
            ("genus_one", "-".into(), yes_no(p.genus_one).into()),
            ("crosscap_one", "-".into(), yes_no(p.crosscap_one).into()),
            ("toroidal", "-".into(), yes_no(p.toroidal).into()),
            ("projective", "-".into(), yes_no(p.projective).into()),
        ];
        writeln!(
            out,
            "{:<13} {:<28} {:<10} status",
            "field", "computed", "predicted"
        )?;
        for ((field, computed, predicted), check) in rows.into_iter().zip(&self.checks) {
            let status = match (check.verified, check.agrees) {
                (VerificationMode::FormulaOnly, _) => "formula-only",
                (_, Some(true)) => "agrees",
                (_, Some(false)) => "FINDING",
                (_, None) => "not compared",
            };
            let mut line = String::new();
            write!(line, "{field:<13} {computed:<28} {predicted:<10} {status}")?;
            writeln!(out, "{}", line.trim_end())?;
        }
        Ok(())
    }
}
