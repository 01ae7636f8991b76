//! Extraction and verification of Kuratowski subdivisions.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::planarity::{biconnected_blocks, planar_embedding};
use super::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subgraph of the tested graph that subdivides `K5` or `K3,3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Same vertex numbering as the tested graph.
    pub subgraph: SimpleGraph,
    pub branch_vertices: Vec<usize>,
}

impl KuratowskiWitness {
    /// Checks that the witness is a subgraph of `g` and that smoothing its
    /// degree-two vertices leaves exactly `K5` or `K3,3` on the branch
    /// vertices.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        self.subgraph.vertex_count() == g.vertex_count()
            && self.subgraph.is_subgraph_of(g)
            && classify_subdivision(&self.subgraph).is_some_and(|(kind, branches)| {
                kind == self.kind && branches == self.branch_vertices
            })
    }
}

/// Recognises a subdivision of `K5` or `K3,3` (ignoring isolated vertices).
/// Returns the kind and the sorted branch vertices.
pub(super) fn classify_subdivision(g: &SimpleGraph) -> Option<(KuratowskiKind, Vec<usize>)> {
    let deg = g.degrees();
    let adj = g.adjacency();
    let branches: Vec<usize> = (0..g.vertex_count()).filter(|&v| deg[v] > 2).collect();
    let kind = match (branches.len(), branches.first().map(|&b| deg[b])) {
        (5, Some(4)) => KuratowskiKind::K5,
        (6, Some(3)) => KuratowskiKind::K33,
        _ => return None,
    };
    let branch_degree = if kind == KuratowskiKind::K5 { 4 } else { 3 };
    if branches.iter().any(|&b| deg[b] != branch_degree) {
        return None;
    }
    if deg.contains(&1) {
        return None;
    }

    // Follow each branch edge through degree-two vertices.
    let mut visited = vec![false; g.vertex_count()];
    let mut pairs = BTreeSet::new();
    for &b in &branches {
        visited[b] = true;
        for &first in &adj[b] {
            let (mut prev, mut cur) = (b, first);
            while deg[cur] == 2 {
                visited[cur] = true;
                let next = if adj[cur][0] == prev {
                    adj[cur][1]
                } else {
                    adj[cur][0]
                };
                (prev, cur) = (cur, next);
            }
            if cur == b {
                return None;
            }
            pairs.insert((b.min(cur), b.max(cur)));
        }
    }
    if (0..g.vertex_count()).any(|v| deg[v] > 0 && !visited[v]) {
        return None;
    }

    let ok = match kind {
        KuratowskiKind::K5 => pairs.len() == 10,
        KuratowskiKind::K33 => {
            if pairs.len() != 9 {
                return None;
            }
            let mut side = vec![None; g.vertex_count()];
            side[branches[0]] = Some(false);
            let mut queue = VecDeque::from([branches[0]]);
            let mut consistent = true;
            while let Some(u) = queue.pop_front() {
                for &(a, c) in &pairs {
                    let other = if a == u {
                        c
                    } else if c == u {
                        a
                    } else {
                        continue;
                    };
                    let s = !side[u].expect("coloured");
                    match side[other] {
                        None => {
                            side[other] = Some(s);
                            queue.push_back(other);
                        }
                        Some(t) if t != s => consistent = false,
                        _ => {}
                    }
                }
            }
            let left = branches.iter().filter(|&&b| side[b] == Some(false)).count();
            let right = branches.iter().filter(|&&b| side[b] == Some(true)).count();
            consistent && left == 3 && right == 3
        }
    };
    ok.then_some((kind, branches))
}

fn planar_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    planar_embedding(&SimpleGraph::from_edges(n, edges.iter().copied())).is_some()
}

/// Shrinks a nonplanar graph to an edge-minimal nonplanar subgraph, which
/// by Kuratowski's theorem subdivides `K5` or `K3,3`.
///
/// Panics if `g` is planar.
pub(super) fn extract_witness(g: &SimpleGraph) -> KuratowskiWitness {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut edges = biconnected_blocks(&adj)
        .into_iter()
        .find(|b| b.len() > 1 && !planar_edges(n, b))
        .expect("graph is nonplanar");

    // Smallest breadth-first prefix of the block that is already nonplanar.
    let mut order = Vec::new();
    {
        let mut in_block = vec![false; n];
        for &(u, v) in &edges {
            in_block[u] = true;
            in_block[v] = true;
        }
        let start = (0..n).find(|&v| in_block[v]).expect("block has vertices");
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &adj[u] {
                if in_block[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let prefix = |k: usize, edges: &[(usize, usize)]| -> Vec<(usize, usize)> {
        edges
            .iter()
            .copied()
            .filter(|&(u, v)| rank[u] < k && rank[v] < k)
            .collect()
    };
    let (mut lo, mut hi) = (0, order.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if planar_edges(n, &prefix(mid, &edges)) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    edges = prefix(lo, &edges);

    // Drop whole vertices, then single edges, while nonplanarity survives.
    for &v in &order[..lo] {
        let trial: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(a, b)| a != v && b != v)
            .collect();
        if trial.len() < edges.len() && !planar_edges(n, &trial) {
            edges = trial;
        }
    }
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        if planar_edges(n, &trial) {
            i += 1;
        } else {
            edges = trial;
        }
    }

    let subgraph = SimpleGraph::from_edges(n, edges);
    let (kind, branch_vertices) = classify_subdivision(&subgraph)
        .expect("edge-minimal nonplanar graph is a Kuratowski subdivision");
    KuratowskiWitness {
        kind,
        subgraph,
        branch_vertices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Replaces every edge by a path of length `k`.
    fn subdivide(g: &SimpleGraph, k: usize) -> SimpleGraph {
        let extra = g.edge_count() * (k - 1);
        let mut out = SimpleGraph::new(g.vertex_count() + extra);
        let mut next = g.vertex_count();
        for (u, v) in g.edges() {
            let mut prev = u;
            for _ in 0..k - 1 {
                out.add_edge(prev, next);
                prev = next;
                next += 1;
            }
            out.add_edge(prev, v);
        }
        out
    }

    #[test]
    fn recognises_plain_and_subdivided_obstructions() {
        let k5 = SimpleGraph::complete(5);
        assert_eq!(classify_subdivision(&k5).unwrap().0, KuratowskiKind::K5);
        assert_eq!(
            classify_subdivision(&subdivide(&k5, 3)).unwrap().0,
            KuratowskiKind::K5
        );
        let k33 = SimpleGraph::complete_bipartite(3, 3);
        assert_eq!(classify_subdivision(&k33).unwrap().0, KuratowskiKind::K33);
        assert_eq!(
            classify_subdivision(&subdivide(&k33, 2)).unwrap().0,
            KuratowskiKind::K33
        );
    }

    #[test]
    fn rejects_lookalikes() {
        // six degree-3 vertices but not bipartite: the triangular prism
        let prism = SimpleGraph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        );
        assert!(classify_subdivision(&prism).is_none());
        assert!(classify_subdivision(&SimpleGraph::complete(4)).is_none());
        // K5 plus a disjoint cycle
        let mut g = SimpleGraph::new(8);
        for (u, v) in SimpleGraph::complete(5).edges() {
            g.add_edge(u, v);
        }
        g.add_edge(5, 6);
        g.add_edge(6, 7);
        g.add_edge(7, 5);
        assert!(classify_subdivision(&g).is_none());
    }

    #[test]
    fn k33_witness_is_itself() {
        let g = SimpleGraph::complete_bipartite(3, 3);
        let w = extract_witness(&g);
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert_eq!(w.subgraph, g);
        assert!(w.verify(&g));
    }

    #[test]
    fn witness_is_a_subgraph() {
        let g = subdivide(&SimpleGraph::complete(6), 2);
        let w = extract_witness(&g);
        assert!(w.verify(&g));
        let mut other = g.clone();
        let (u, v) = w.subgraph.edges().next().unwrap();
        other.remove_edge(u, v);
        assert!(!w.verify(&other));
    }
}
