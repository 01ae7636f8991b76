use std::fmt;

use serde::{Deserialize, Serialize};

use znhg_core::finite_groups::{
    build_hypergraphs_for_group, cyclic, dihedral, FiniteGroup, GroupHypergraph,
};
use znhg_core::metrics::{find_isomorphism, is_isomorphism};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Dihedral,
    Cyclic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupHypergraphSummary {
    /// Each vertex as its list of element names.
    pub vertices: Vec<String>,
    /// Hyperedges as vertex indices.
    pub edges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub schema: String,
    pub kind: GroupKind,
    pub n: usize,
    pub order: usize,
    pub subgroups: usize,
    pub intersection: GroupHypergraphSummary,
    pub comaximal: GroupHypergraphSummary,
    pub isomorphic: bool,
    /// Image of each intersection vertex in the co-maximal hypergraph.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
}

fn summarize(g: &FiniteGroup, h: &GroupHypergraph) -> GroupHypergraphSummary {
    GroupHypergraphSummary {
        vertices: h.vertices().iter().map(|s| g.describe(s)).collect(),
        edges: h.edges().to_vec(),
    }
}

pub fn group_report(kind: GroupKind, n: usize) -> znhg_core::Result<GroupReport> {
    let g = match kind {
        GroupKind::Dihedral => dihedral(n)?,
        GroupKind::Cyclic => cyclic(n)?,
    };
    let subgroups = znhg_core::finite_groups::all_subgroups(&g)?.len();
    let (a, b) = build_hypergraphs_for_group(&g)?;
    let witness = find_isomorphism(&a, &b).filter(|phi| is_isomorphism(&a, &b, phi));
    Ok(GroupReport {
        schema: crate::schema_tag(),
        kind,
        n,
        order: g.order(),
        subgroups,
        intersection: summarize(&g, &a),
        comaximal: summarize(&g, &b),
        isomorphic: witness.is_some(),
        witness,
    })
}

fn write_hypergraph(
    out: &mut fmt::Formatter<'_>,
    title: &str,
    h: &GroupHypergraphSummary,
) -> fmt::Result {
    writeln!(
        out,
        "{title}: {} vertices, {} hyperedges",
        h.vertices.len(),
        h.edges.len()
    )?;
    for (i, e) in h.edges.iter().enumerate() {
        let members: Vec<&str> = e.iter().map(|&v| h.vertices[v].as_str()).collect();
        writeln!(out, "  e{i} = [{}]", members.join(" "))?;
    }
    Ok(())
}

impl fmt::Display for GroupReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GroupKind::Dihedral => format!("D_{}", self.n),
            GroupKind::Cyclic => format!("Z_{}", self.n),
        };
        writeln!(
            out,
            "{name}: order {}, {} subgroups",
            self.order, self.subgroups
        )?;
        write_hypergraph(out, "intersection", &self.intersection)?;
        write_hypergraph(out, "co-maximal", &self.comaximal)?;
        writeln!(out, "isomorphic: {}", self.isomorphic)
    }
}
