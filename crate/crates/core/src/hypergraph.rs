//! Labelled hypergraphs in canonical form and maximal-clique hyperedge
//! enumeration.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A hypergraph with labelled vertices. Edges are sets of vertex indices.
///
/// Canonical form: every edge sorted ascending, edges sorted
/// lexicographically, no duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph<L> {
    vertices: Vec<L>,
    edges: Vec<Vec<usize>>,
}

impl<L> Default for Hypergraph<L> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<L> Hypergraph<L> {
    pub fn empty() -> Self {
        Hypergraph {
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Builds a hypergraph and brings its edges into canonical form.
    ///
    /// Panics if an edge references a vertex that does not exist.
    pub fn new(vertices: Vec<L>, edges: Vec<Vec<usize>>) -> Self {
        let n = vertices.len();
        let mut edges: Vec<Vec<usize>> = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e.dedup();
                assert!(e.iter().all(|&v| v < n), "edge vertex out of range");
                e
            })
            .collect();
        edges.sort();
        edges.dedup();
        Hypergraph { vertices, edges }
    }

    pub fn vertices(&self) -> &[L] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The empty hypergraph: no vertices and no edges.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    pub fn check_vertex(&self, index: usize) -> Result<()> {
        if index < self.vertices.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex {
                index,
                count: self.vertices.len(),
            })
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count()
    }

    /// For each vertex, the indices of the edges containing it.
    pub fn incidence_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                lists[v].push(i);
            }
        }
        lists
    }

    /// Adjacency of the primal graph: two vertices are adjacent when some
    /// edge contains both.
    pub fn primal_adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for e in &self.edges {
            for (i, &u) in e.iter().enumerate() {
                for &w in &e[i + 1..] {
                    adj[u].insert(w);
                    adj[w].insert(u);
                }
            }
        }
        adj.into_iter().map(|s| s.ones().collect()).collect()
    }

    /// Checks the structural invariants of a subgroup hypergraph: edges of
    /// size at least two, pairwise incomparable, covering every vertex.
    pub fn is_well_formed(&self) -> bool {
        let sized = self.edges.iter().all(|e| e.len() >= 2);
        let incomparable = self.edges.iter().enumerate().all(|(i, a)| {
            self.edges
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !is_subset(a, b))
        });
        let covered = self.incidence_lists().iter().all(|l| !l.is_empty());
        sized && incomparable && covered
    }

    pub fn map_labels<M>(&self, f: impl FnMut(&L) -> M) -> Hypergraph<M> {
        Hypergraph {
            vertices: self.vertices.iter().map(f).collect(),
            edges: self.edges.clone(),
        }
    }

    pub fn edge_labels(&self) -> Vec<Vec<&L>> {
        self.edges
            .iter()
            .map(|e| e.iter().map(|&v| &self.vertices[v]).collect())
            .collect()
    }

    /// The same vertex set with edge `index` removed. Vertices left without
    /// an edge are kept.
    pub fn without_edge(&self, index: usize) -> Self
    where
        L: Clone,
    {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Hypergraph {
            vertices: self.vertices.clone(),
            edges,
        }
    }
}

impl<L: PartialEq> Hypergraph<L> {
    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }
}

impl<L: Ord + Clone> Hypergraph<L> {
    /// Reorders vertices by label. Two hypergraphs with the same labels are
    /// equal under the identity labelling iff their sorted forms are equal.
    pub fn sorted_by_label(&self) -> Self {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&a, &b| self.vertices[a].cmp(&self.vertices[b]));
        let mut position = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        Hypergraph::new(
            order.iter().map(|&i| self.vertices[i].clone()).collect(),
            self.edges
                .iter()
                .map(|e| e.iter().map(|&v| position[v]).collect())
                .collect(),
        )
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() <= b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Enumerates the maximal cliques of size at least two in the graph on
/// `0..vertex_count` whose edges are the pairs accepted by `compatible`.
///
/// Bron–Kerbosch with Tomita pivoting. Self-pairs are never queried. The
/// result is in canonical order.
pub fn enumerate_maximal_edges<F>(vertex_count: usize, compatible: F) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let n = vertex_count;
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for u in 0..n {
        for w in (u + 1)..n {
            if compatible(u, w) {
                adj[u].insert(w);
                adj[w].insert(u);
            }
        }
    }

    let mut out = Vec::new();
    let mut clique = Vec::new();
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    let excluded = FixedBitSet::with_capacity(n);
    expand(&adj, &mut clique, candidates, excluded, &mut out);

    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(
    adj: &[FixedBitSet],
    clique: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_clear() {
        if excluded.is_clear() && clique.len() >= 2 {
            out.push(clique.clone());
        }
        return;
    }

    let pivot = candidates
        .union(&excluded)
        .max_by_key(|&u| adj[u].intersection(&candidates).count())
        .expect("candidates is nonempty");

    let branch: Vec<usize> = candidates.difference(&adj[pivot]).collect();
    for v in branch {
        let mut next_candidates = candidates.clone();
        next_candidates.intersect_with(&adj[v]);
        let mut next_excluded = excluded.clone();
        next_excluded.intersect_with(&adj[v]);

        clique.push(v);
        expand(adj, clique, next_candidates, next_excluded, out);
        clique.pop();

        candidates.set(v, false);
        excluded.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every subset that is pairwise compatible and not extendable.
    fn brute_force_maximal(n: usize, compatible: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
        let cliques: Vec<Vec<usize>> = (0u32..(1 << n))
            .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect::<Vec<_>>())
            .filter(|s: &Vec<usize>| {
                s.iter()
                    .enumerate()
                    .all(|(i, &a)| s[i + 1..].iter().all(|&b| compatible(a, b)))
            })
            .collect();
        let mut maximal: Vec<Vec<usize>> = cliques
            .iter()
            .filter(|c| c.len() >= 2)
            .filter(|c| !cliques.iter().any(|d| d.len() > c.len() && is_subset(c, d)))
            .cloned()
            .collect();
        maximal.sort();
        maximal
    }

    #[test]
    fn complete_graph_has_one_edge() {
        assert_eq!(enumerate_maximal_edges(3, |_, _| true), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn isolated_vertices_produce_no_edges() {
        assert!(enumerate_maximal_edges(4, |_, _| false).is_empty());
        assert!(enumerate_maximal_edges(0, |_, _| true).is_empty());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn matches_subset_enumeration_on_random_graphs() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for trial in 0..200 {
            let n = 1 + trial % 11;
            let mut bits = vec![vec![false; n]; n];
            for u in 0..n {
                for w in (u + 1)..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    let e = state % 100 < 55;
                    bits[u][w] = e;
                    bits[w][u] = e;
                }
            }
            let got = enumerate_maximal_edges(n, |a, b| bits[a][b]);
            let want = brute_force_maximal(n, |a, b| bits[a][b]);
            assert_eq!(got, want, "trial {trial}");
        }
    }

    #[test]
    fn canonical_construction() {
        let h = Hypergraph::new(
            vec!['a', 'b', 'c'],
            vec![vec![2, 1], vec![0, 1], vec![1, 2]],
        );
        assert_eq!(h.edges(), &[vec![0, 1], vec![1, 2]]);
        assert!(h.is_well_formed());
        assert_eq!(h.degree(1), 2);
        assert_eq!(h.primal_adjacency(), vec![vec![1], vec![0, 2], vec![1]]);
    }
}
