//! Exhaustive search for a host tree: a spanning tree on the vertex set in
//! which every hyperedge induces a subtree.

use crate::hypergraph::Hypergraph;
use crate::topology::SimpleGraph;

pub const DEFAULT_HOST_TREE_LIMIT: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HostTreeResult {
    Yes(SimpleGraph),
    No,
    /// More vertices than the search limit allows.
    Unknown,
}

impl HostTreeResult {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            HostTreeResult::Yes(_) => Some(true),
            HostTreeResult::No => Some(false),
            HostTreeResult::Unknown => None,
        }
    }
}

/// True when `tree` spans the vertices of `h` and every hyperedge induces a
/// connected subgraph of it.
pub fn is_host_tree<L>(h: &Hypergraph<L>, tree: &SimpleGraph) -> bool {
    if tree.vertex_count() != h.vertex_count() {
        return false;
    }
    if h.vertex_count() > 0 && !tree.is_tree() {
        return false;
    }
    // In a forest an induced subgraph is connected iff it has |e| - 1 edges.
    h.edges().iter().all(|e| {
        let inside = tree
            .edges()
            .filter(|&(u, v)| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok())
            .count();
        inside + 1 == e.len()
    })
}

/// Searches every labelled tree on the vertex set when there are at most
/// `search_limit` vertices.
///
/// Trees are enumerated as parent arrays rooted at vertex 0, which are in
/// bijection with labelled trees. A hyperedge induces a subtree iff exactly
/// one of its vertices is the root or has its parent outside the edge, so a
/// branch is cut as soon as any edge acquires a second such vertex.
pub fn has_host_tree<L>(h: &Hypergraph<L>, search_limit: usize) -> HostTreeResult {
    let k = h.vertex_count();
    if k > search_limit {
        return HostTreeResult::Unknown;
    }
    if k <= 1 {
        return HostTreeResult::Yes(SimpleGraph::new(k));
    }

    let incidence = h.incidence_lists();
    let mut tops = vec![0usize; h.edge_count()];
    for &e in &incidence[0] {
        tops[e] += 1;
    }
    let mut parent = vec![usize::MAX; k];

    if assign(h, &incidence, 1, &mut parent, &mut tops) {
        let tree = SimpleGraph::from_edges(k, (1..k).map(|v| (v, parent[v])));
        debug_assert!(is_host_tree(h, &tree));
        HostTreeResult::Yes(tree)
    } else {
        HostTreeResult::No
    }
}

fn assign<L>(
    h: &Hypergraph<L>,
    incidence: &[Vec<usize>],
    v: usize,
    parent: &mut [usize],
    tops: &mut [usize],
) -> bool {
    let k = parent.len();
    if v == k {
        return true;
    }
    for p in (0..k).filter(|&p| p != v) {
        let mut x = p;
        while x != v && x != 0 && parent[x] != usize::MAX {
            x = parent[x];
        }
        if x == v {
            continue;
        }

        let mut feasible = true;
        let mut bumped = Vec::new();
        for &e in &incidence[v] {
            if h.edges()[e].binary_search(&p).is_err() {
                tops[e] += 1;
                bumped.push(e);
                if tops[e] > 1 {
                    feasible = false;
                }
            }
        }
        if feasible {
            parent[v] = p;
            if assign(h, incidence, v + 1, parent, tops) {
                return true;
            }
            parent[v] = usize::MAX;
        }
        for e in bumped {
            tops[e] -= 1;
        }
    }
    false
}
