//! Simple graphs, incidence graphs of hypergraphs, and certified planarity.

mod kuratowski;
mod planarity;

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Display;

use crate::hypergraph::Hypergraph;

pub use kuratowski::{KuratowskiKind, KuratowskiWitness};
pub use planarity::{is_planar, planar_embedding, PlanarityResult, RotationSystem};

/// Undirected graph without loops or parallel edges. Edges are stored as
/// `(min, max)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            vertex_count,
            edges: BTreeSet::new(),
            labels: None,
        }
    }

    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut g = SimpleGraph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        SimpleGraph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Self {
        SimpleGraph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n)))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count);
        self.labels = Some(labels);
        self
    }

    /// Inserts `{u, v}`; returns false if it was already present.
    ///
    /// Panics on self-loops and out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at {u}");
        assert!(
            u < self.vertex_count && v < self.vertex_count,
            "endpoint out of range"
        );
        self.edges.insert((u.min(v), u.max(v)))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        self.edges.remove(&(u.min(v), u.max(v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Sorted neighbour lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.vertex_count <= other.vertex_count && self.edges.is_subset(&other.edges)
    }

    /// Component index of every vertex, and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        for s in 0..self.vertex_count {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().1 == self.vertex_count
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count > 0 && self.is_connected() && self.edge_count() + 1 == self.vertex_count
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn shortest_cycle(&self) -> Option<usize> {
        let adj = self.adjacency();
        let n = self.vertex_count;
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

/// Bipartite incidence graph: nodes `0..|V|` are the hypergraph vertices,
/// followed by one node per hyperedge. Labels are `v<label>` and `e<i>`.
pub fn incidence_graph<L: Display>(h: &Hypergraph<L>) -> SimpleGraph {
    let nv = h.vertex_count();
    let mut g = SimpleGraph::new(nv + h.edge_count());
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            g.add_edge(v, nv + i);
        }
    }
    let labels = h
        .vertices()
        .iter()
        .map(|l| format!("v{l}"))
        .chain((0..h.edge_count()).map(|i| format!("e{i}")))
        .collect();
    g.with_labels(labels)
}

/// Planarity of a hypergraph is planarity of its incidence graph.
pub fn hypergraph_planar<L: Display>(h: &Hypergraph<L>) -> PlanarityResult {
    is_planar(&incidence_graph(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;
    use crate::zn_hypergraph::build_intersection_hypergraph;

    #[test]
    fn incidence_graph_examples() {
        let g6 = incidence_graph(&build_intersection_hypergraph(&factorize(6).unwrap()));
        assert_eq!(g6.vertex_count(), 3);
        assert_eq!(g6.edge_count(), 2);
        assert_eq!(g6.degrees(), vec![1, 1, 2]);
        assert_eq!(g6.labels().unwrap(), &["v2", "v3", "e0"]);

        let g30 = incidence_graph(&build_intersection_hypergraph(&factorize(30).unwrap()));
        assert_eq!(g30.vertex_count(), 10);
        assert_eq!(g30.edge_count(), 9);

        let empty = incidence_graph(&Hypergraph::<u64>::empty());
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn shortest_cycles() {
        assert_eq!(SimpleGraph::cycle(7).shortest_cycle(), Some(7));
        assert_eq!(SimpleGraph::complete(4).shortest_cycle(), Some(3));
        assert_eq!(
            SimpleGraph::complete_bipartite(3, 3).shortest_cycle(),
            Some(4)
        );
        assert_eq!(
            SimpleGraph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).shortest_cycle(),
            None
        );
        assert_eq!(SimpleGraph::new(0).shortest_cycle(), None);
        // two triangles joined by a long path
        let g = SimpleGraph::from_edges(
            9,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 6),
            ],
        );
        assert_eq!(g.shortest_cycle(), Some(3));
    }

    #[test]
    fn forests_and_trees() {
        assert!(SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).is_tree());
        assert!(!SimpleGraph::cycle(3).is_forest());
        assert!(SimpleGraph::new(3).is_forest());
        assert!(!SimpleGraph::new(3).is_tree());
    }
}
