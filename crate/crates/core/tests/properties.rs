use std::collections::VecDeque;

use proptest::prelude::*;

use znhg_core::arith::factorize;
use znhg_core::hypergraph::Hypergraph;
use znhg_core::metrics::{
    find_isomorphism, has_host_tree, is_host_tree, is_isomorphism, HostTreeResult,
};
use znhg_core::topology::{is_planar, PlanarityResult, SimpleGraph};
use znhg_core::zn_hypergraph::build_intersection_hypergraph;

fn random_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=11).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(0.45), pairs).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn random_hypergraph(max_vertices: usize) -> impl Strategy<Value = Hypergraph<u64>> {
    (1usize..=max_vertices).prop_flat_map(|k| {
        proptest::collection::vec(any::<u8>(), 0..6).prop_map(move |masks| {
            let edges = masks
                .into_iter()
                .map(|m| (0..k).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
                .filter(|e| e.len() >= 2)
                .collect();
            Hypergraph::new((0..k as u64).collect(), edges)
        })
    })
}

/// Decodes a Prüfer sequence over `0..k` into the edges of a labelled tree.
fn prufer_tree(seq: &[usize], k: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; k];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    for &s in seq {
        let leaf = (0..k).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..k).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn edge_connected_in(tree: &[(usize, usize)], e: &[usize]) -> bool {
    let mut seen = vec![false; e.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for &(a, b) in tree {
            for (x, y) in [(a, b), (b, a)] {
                if x == e[i] {
                    if let Ok(j) = e.binary_search(&y) {
                        if !seen[j] {
                            seen[j] = true;
                            queue.push_back(j);
                        }
                    }
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Tries every labelled tree via its Prüfer sequence.
fn prufer_oracle(h: &Hypergraph<u64>) -> bool {
    let k = h.vertex_count();
    if k <= 2 {
        return true;
    }
    let mut seq = vec![0usize; k - 2];
    loop {
        let tree = prufer_tree(&seq, k);
        if h.edges().iter().all(|e| edge_connected_in(&tree, e)) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == seq.len() {
                return false;
            }
            seq[i] += 1;
            if seq[i] < k {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

fn relabel(h: &Hypergraph<u64>, perm: &[usize]) -> Hypergraph<u64> {
    let edges = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| perm[v]).collect())
        .collect();
    Hypergraph::new((0..h.vertex_count() as u64).collect(), edges)
}

#[test]
fn prufer_decoding_gives_trees() {
    for seq in [vec![3, 3, 3], vec![0, 1, 2], vec![4, 0, 4]] {
        let g = SimpleGraph::from_edges(5, prufer_tree(&seq, 5));
        assert!(g.is_tree(), "{seq:?}");
    }
}

#[test]
fn host_tree_matches_prufer_on_small_moduli() {
    for n in 2..=2000u64 {
        let h = build_intersection_hypergraph(&factorize(n).unwrap());
        if h.vertex_count() > 7 || h.is_empty() {
            continue;
        }
        let got = has_host_tree(&h, 7).as_bool().unwrap();
        assert_eq!(got, prufer_oracle(&h), "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn planarity_certificates_verify(g in random_graph()) {
        let result = is_planar(&g);
        prop_assert!(result.verify(&g));
        if g.vertex_count() >= 3 && g.edge_count() > 3 * g.vertex_count() - 6 {
            prop_assert!(!result.is_planar());
        }
        if let PlanarityResult::Nonplanar(w) = &result {
            prop_assert!(w.subgraph.is_subgraph_of(&g));
        }
    }

    #[test]
    fn host_tree_agrees_with_prufer(h in random_hypergraph(7)) {
        let result = has_host_tree(&h, 7);
        prop_assert_eq!(result.as_bool(), Some(prufer_oracle(&h)));
        if let HostTreeResult::Yes(t) = result {
            prop_assert!(is_host_tree(&h, &t));
        }
    }

    #[test]
    fn isomorphism_matches_permutation_search(a in random_hypergraph(6), b in random_hypergraph(6)) {
        let brute = a.vertex_count() == b.vertex_count()
            && permutations(a.vertex_count()).iter().any(|p| is_isomorphism(&a, &b, p));
        let found = find_isomorphism(&a, &b);
        prop_assert_eq!(found.is_some(), brute);
        if let Some(phi) = found {
            prop_assert!(is_isomorphism(&a, &b, &phi));
        }
    }

    #[test]
    fn relabelling_preserves_isomorphism(
        n in 2u64..3000,
        seed in any::<u64>(),
    ) {
        let h = build_intersection_hypergraph(&factorize(n).unwrap());
        let k = h.vertex_count();
        let mut perm: Vec<usize> = (0..k).collect();
        let mut s = seed;
        for i in (1..k).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let g = relabel(&h, &perm);
        let phi = find_isomorphism(&h, &g);
        prop_assert!(phi.is_some());
        prop_assert!(is_isomorphism(&h, &g, &phi.unwrap()));
        if g.edge_count() > 1 {
            prop_assert!(find_isomorphism(&h, &g.without_edge(0)).is_none());
        }
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_a_pool() {
    use znhg_core::metrics::isomorphic;
    use znhg_core::zn_hypergraph::build_comaximal_hypergraph;
    let mut pool = Vec::new();
    for n in [12u64, 18, 20, 30, 36, 42, 60, 72, 100, 210] {
        let f = factorize(n).unwrap();
        pool.push(build_intersection_hypergraph(&f));
        pool.push(build_comaximal_hypergraph(&f));
    }
    for a in &pool {
        assert!(isomorphic(a, a));
        for b in &pool {
            assert_eq!(isomorphic(a, b), isomorphic(b, a));
            for c in &pool {
                if isomorphic(a, b) && isomorphic(b, c) {
                    assert!(isomorphic(a, c));
                }
            }
        }
    }
    // 12 and 18 share the signature (2, 1); 12 and 20 too.
    assert!(isomorphic(&pool[0], &pool[2]));
    assert!(!isomorphic(&pool[0], &pool[6]));
}

#[test]
fn girth_is_half_the_incidence_girth() {
    use znhg_core::metrics::{girth, GirthValue};
    use znhg_core::topology::incidence_graph;
    for n in 2..=2000u64 {
        let h = build_intersection_hypergraph(&factorize(n).unwrap());
        match (girth(&h), incidence_graph(&h).shortest_cycle()) {
            (GirthValue::Finite(g), Some(c)) => assert_eq!(2 * g as usize, c, "n = {n}"),
            (GirthValue::Infinite, None) => {}
            other => panic!("n = {n}: {other:?}"),
        }
    }
}
