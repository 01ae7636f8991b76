use std::collections::{BTreeMap, HashSet};

use crate::hypergraph::Hypergraph;

/// `phi[i]` is the image in `b` of vertex `i` of `a`. True when `phi` is a
/// bijection mapping the edge set of `a` exactly onto that of `b`.
pub fn is_isomorphism<L, M>(a: &Hypergraph<L>, b: &Hypergraph<M>, phi: &[usize]) -> bool {
    let k = a.vertex_count();
    if phi.len() != k || b.vertex_count() != k || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut hit = vec![false; k];
    for &w in phi {
        if w >= k || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    let target: HashSet<&[usize]> = b.edges().iter().map(Vec::as_slice).collect();
    a.edges().iter().all(|e| {
        let mut img: Vec<usize> = e.iter().map(|&v| phi[v]).collect();
        img.sort_unstable();
        target.contains(img.as_slice())
    })
}

pub fn isomorphic<L, M>(a: &Hypergraph<L>, b: &Hypergraph<M>) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Finds a vertex bijection `a -> b` preserving hyperedges, if one exists.
pub fn find_isomorphism<L, M>(a: &Hypergraph<L>, b: &Hypergraph<M>) -> Option<Vec<usize>> {
    let k = a.vertex_count();
    if k != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let sizes = |h: &[Vec<usize>]| {
        let mut s: Vec<usize> = h.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    };
    if sizes(a.edges()) != sizes(b.edges()) {
        return None;
    }

    let (ca, cb) = refine(a.edges(), b.edges(), k);
    let histogram = |c: &[u32]| {
        let mut s = c.to_vec();
        s.sort_unstable();
        s
    };
    if histogram(&ca) != histogram(&cb) {
        return None;
    }

    let codeg_a = codegrees(a.edges(), k);
    let codeg_b = codegrees(b.edges(), k);
    let inc_a = a.incidence_lists();
    let target: HashSet<&[usize]> = b.edges().iter().map(Vec::as_slice).collect();

    // Rarest colour first; ties broken towards vertices adjacent to the
    // already chosen ones so that co-degree checks bite early.
    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &ca {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let links = order.iter().filter(|&&u| codeg_a[u * k + v] > 0).count();
                (class_size[&ca[v]], std::cmp::Reverse(links), v)
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }

    let mut search = Search {
        a_edges: a.edges(),
        inc_a: &inc_a,
        ca: &ca,
        cb: &cb,
        codeg_a: &codeg_a,
        codeg_b: &codeg_b,
        target: &target,
        order: &order,
        k,
        phi: vec![usize::MAX; k],
        used: vec![false; k],
    };
    if search.extend(0) {
        let phi = search.phi;
        debug_assert!(is_isomorphism(a, b, &phi));
        Some(phi)
    } else {
        None
    }
}

fn codegrees(edges: &[Vec<usize>], k: usize) -> Vec<u32> {
    let mut m = vec![0u32; k * k];
    for e in edges {
        for &u in e {
            for &v in e {
                m[u * k + v] += 1;
            }
        }
    }
    m
}

/// Colour refinement run on both hypergraphs at once, so that equal colours
/// mean equal signatures across them.
fn refine(ea: &[Vec<usize>], eb: &[Vec<usize>], k: usize) -> (Vec<u32>, Vec<u32>) {
    let mut ca = vec![0u32; k];
    let mut cb = vec![0u32; k];
    let mut classes = 1;
    loop {
        let mut edge_ids: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        let mut vertex_ids: BTreeMap<Vec<u64>, u32> = BTreeMap::new();
        let mut step = |edges: &[Vec<usize>], colors: &[u32]| -> Vec<u32> {
            let mut sig: Vec<Vec<u64>> = colors.iter().map(|&c| vec![u64::from(c)]).collect();
            for e in edges {
                let mut content: Vec<u32> = e.iter().map(|&v| colors[v]).collect();
                content.sort_unstable();
                let next = edge_ids.len() as u64;
                let id = *edge_ids.entry(content).or_insert(next);
                for &v in e {
                    sig[v].push(id);
                }
            }
            sig.into_iter()
                .map(|mut s| {
                    s[1..].sort_unstable();
                    let next = vertex_ids.len() as u32;
                    *vertex_ids.entry(s).or_insert(next)
                })
                .collect()
        };
        let na = step(ea, &ca);
        let nb = step(eb, &cb);
        let count = vertex_ids.len();
        ca = na;
        cb = nb;
        if count == classes {
            return (ca, cb);
        }
        classes = count;
    }
}

struct Search<'a> {
    a_edges: &'a [Vec<usize>],
    inc_a: &'a [Vec<usize>],
    ca: &'a [u32],
    cb: &'a [u32],
    codeg_a: &'a [u32],
    codeg_b: &'a [u32],
    target: &'a HashSet<&'a [usize]>,
    order: &'a [usize],
    k: usize,
    phi: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let k = self.k;
        for w in 0..k {
            if self.used[w] || self.cb[w] != self.ca[v] {
                continue;
            }
            if self.codeg_a[v * k + v] != self.codeg_b[w * k + w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.codeg_a[u * k + v] == self.codeg_b[self.phi[u] * k + w]);
            if !consistent {
                continue;
            }
            self.phi[v] = w;
            self.used[w] = true;
            if self.closed_edges_map(v) && self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.phi[v] = usize::MAX;
        }
        false
    }

    /// Every edge through `v` whose vertices are all mapped lands on an edge.
    fn closed_edges_map(&self, v: usize) -> bool {
        self.inc_a[v].iter().all(|&e| {
            let edge = &self.a_edges[e];
            if edge.iter().any(|&x| self.phi[x] == usize::MAX) {
                return true;
            }
            let mut img: Vec<usize> = edge.iter().map(|&x| self.phi[x]).collect();
            img.sort_unstable();
            self.target.contains(img.as_slice())
        })
    }
}
