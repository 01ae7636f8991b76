use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use znhg_core::topology::{incidence_graph, SimpleGraph};
use znhg_core::zn_hypergraph::ZnHypergraph;

use crate::report::edge_labels;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Hypergraph,
    Incidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphDocument {
    pub schema: String,
    pub n: u64,
    pub vertices: Vec<u64>,
    pub edges: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Subgroup,
    Hyperedge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: String,
    pub kind: NodeKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceDocument {
    pub schema: String,
    pub n: u64,
    pub nodes: Vec<Node>,
    /// Pairs of node ids, subgroup first.
    pub links: Vec<[String; 2]>,
}

pub fn hypergraph_document(n: u64, h: &ZnHypergraph) -> HypergraphDocument {
    HypergraphDocument {
        schema: crate::schema_tag(),
        n,
        vertices: h.vertices().to_vec(),
        edges: edge_labels(h),
    }
}

pub fn incidence_document(n: u64, h: &ZnHypergraph) -> IncidenceDocument {
    let g = incidence_graph(h);
    let nv = h.vertex_count();
    let nodes = (0..g.vertex_count())
        .map(|i| Node {
            id: g.label(i),
            kind: if i < nv {
                NodeKind::Subgroup
            } else {
                NodeKind::Hyperedge
            },
        })
        .collect();
    let links = g.edges().map(|(u, v)| [g.label(u), g.label(v)]).collect();
    IncidenceDocument {
        schema: crate::schema_tag(),
        n,
        nodes,
        links,
    }
}

fn dot_of_incidence(
    name: &str,
    g: &SimpleGraph,
    subgroup_nodes: usize,
    edge_labels: &[String],
) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for i in 0..g.vertex_count() {
        let id = g.label(i);
        if i < subgroup_nodes {
            let label = id.trim_start_matches('v');
            writeln!(out, "  \"{id}\" [shape=circle, label=\"{label}\"];").unwrap();
        } else {
            let label = &edge_labels[i - subgroup_nodes];
            writeln!(out, "  \"{id}\" [shape=square, label=\"{label}\"];").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  \"{}\" -- \"{}\";", g.label(u), g.label(v)).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn to_dot(n: u64, h: &ZnHypergraph, target: Target) -> String {
    let g = incidence_graph(h);
    let labels: Vec<String> = match target {
        // Hyperedge nodes carry their member set.
        Target::Hypergraph => edge_labels(h)
            .iter()
            .map(|e| {
                let parts: Vec<String> = e.iter().map(u64::to_string).collect();
                format!("{{{}}}", parts.join(","))
            })
            .collect(),
        Target::Incidence => (0..h.edge_count()).map(|i| format!("e{i}")).collect(),
    };
    let name = match target {
        Target::Hypergraph => format!("hypergraph_{n}"),
        Target::Incidence => format!("incidence_{n}"),
    };
    dot_of_incidence(&name, &g, h.vertex_count(), &labels)
}

pub fn to_json(n: u64, h: &ZnHypergraph, target: Target) -> String {
    match target {
        Target::Hypergraph => serde_json::to_string(&hypergraph_document(n, h)),
        Target::Incidence => serde_json::to_string(&incidence_document(n, h)),
    }
    .expect("documents serialize")
}
