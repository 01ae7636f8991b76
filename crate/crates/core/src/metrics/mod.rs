//! Exact structural invariants of hypergraphs.
//!
//! Paths are measured on the primal graph: one primal step is one hyperedge
//! of a hypergraph path. Cycles are measured on the incidence graph, where a
//! hypergraph cycle of length `k` is an incidence cycle of length `2k`.

mod coloring;
mod host_tree;
mod isomorphism;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::hypergraph::Hypergraph;
use crate::topology::{incidence_graph, SimpleGraph};
use crate::Result;

pub use coloring::{chromatic_number, constructive_two_coloring, is_proper_coloring};
pub use host_tree::{has_host_tree, is_host_tree, HostTreeResult, DEFAULT_HOST_TREE_LIMIT};
pub use isomorphism::{find_isomorphism, is_isomorphism, isomorphic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GirthValue {
    Finite(u32),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diameter {
    /// The empty hypergraph.
    Undefined,
    Finite(u32),
    /// Some pair of vertices is disconnected.
    Infinite,
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(k) => write!(f, "{k}"),
            GirthValue::Infinite => f.write_str("infinite"),
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Undefined => f.write_str("undefined"),
            Diameter::Finite(k) => write!(f, "{k}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

/// Integer-or-keyword JSON encoding shared by the invariant enums.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum NumberOrWord {
    Number(u32),
    Word(String),
}

impl Serialize for GirthValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GirthValue::Finite(k) => NumberOrWord::Number(*k),
            GirthValue::Infinite => NumberOrWord::Word("infinite".into()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GirthValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match NumberOrWord::deserialize(d)? {
            NumberOrWord::Number(k) => Ok(GirthValue::Finite(k)),
            NumberOrWord::Word(w) if w == "infinite" => Ok(GirthValue::Infinite),
            NumberOrWord::Word(w) => Err(serde::de::Error::custom(format!("bad girth {w:?}"))),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(k) => NumberOrWord::Number(*k),
            other => NumberOrWord::Word(other.to_string()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Diameter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match NumberOrWord::deserialize(d)? {
            NumberOrWord::Number(k) => Ok(Diameter::Finite(k)),
            NumberOrWord::Word(w) => match w.as_str() {
                "undefined" => Ok(Diameter::Undefined),
                "infinite" => Ok(Diameter::Infinite),
                _ => Err(serde::de::Error::custom(format!("bad diameter {w:?}"))),
            },
        }
    }
}

fn bfs_distances(adj: &[Vec<usize>], source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].expect("queued vertices have a distance");
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn is_connected<L>(h: &Hypergraph<L>) -> bool {
    if h.vertex_count() <= 1 {
        return true;
    }
    bfs_distances(&h.primal_adjacency(), 0)
        .iter()
        .all(Option::is_some)
}

/// Number of hyperedges on a shortest path from `u` to `v`, or `None` when
/// they are disconnected.
pub fn distance<L>(h: &Hypergraph<L>, u: usize, v: usize) -> Result<Option<u32>> {
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    Ok(bfs_distances(&h.primal_adjacency(), u)[v])
}

pub fn diameter<L>(h: &Hypergraph<L>) -> Diameter {
    if h.vertex_count() == 0 {
        return Diameter::Undefined;
    }
    let adj = h.primal_adjacency();
    let mut best = 0;
    for s in 0..h.vertex_count() {
        for d in bfs_distances(&adj, s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Diameter::Infinite,
            }
        }
    }
    Diameter::Finite(best)
}

/// Half the length of a shortest cycle of the incidence graph.
pub fn girth<L: fmt::Display>(h: &Hypergraph<L>) -> GirthValue {
    girth_of_incidence(&incidence_graph(h))
}

pub fn girth_of_incidence(g: &SimpleGraph) -> GirthValue {
    match g.shortest_cycle() {
        Some(len) => GirthValue::Finite((len / 2) as u32),
        None => GirthValue::Infinite,
    }
}

/// Some vertex lies on every hyperedge. Vacuously true without edges.
pub fn is_star<L>(h: &Hypergraph<L>) -> bool {
    let Some((first, rest)) = h.edges().split_first() else {
        return true;
    };
    first
        .iter()
        .any(|v| rest.iter().all(|e| e.binary_search(v).is_ok()))
}
