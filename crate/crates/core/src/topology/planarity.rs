//! Planarity testing by path addition (Demoucron, Malgrange and Pertuiset),
//! run per biconnected block.
//!
//! A planar graph yields a rotation system whose face count satisfies
//! Euler's formula; a nonplanar graph yields a Kuratowski subdivision. Both
//! certificates are checked independently of the search that produced them.

use std::collections::{BTreeMap, HashSet, VecDeque};

use fixedbitset::FixedBitSet;

use super::kuratowski::{extract_witness, KuratowskiWitness};
use super::SimpleGraph;

/// Cyclic order of neighbours around every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotations: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(rotations: Vec<Vec<usize>>) -> Self {
        RotationSystem { rotations }
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    /// Traces face boundaries: the dart after `u -> v` is `v -> w`, where `w`
    /// follows `u` in the rotation at `v`. Each face is returned as its
    /// sequence of tail vertices.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut position: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                position.insert((v, u), i);
            }
        }
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        let mut faces = Vec::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            for &w in rot {
                if seen.contains(&(v, w)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (v, w);
                while seen.insert((a, b)) {
                    face.push(a);
                    let rb = &self.rotations[b];
                    let i = position[&(b, a)];
                    let c = rb[(i + 1) % rb.len()];
                    (a, b) = (b, c);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// True when this is a genus-zero embedding of `g`: every rotation is a
    /// permutation of the neighbourhood, and `V - E + F = 2` holds for each
    /// connected component.
    pub fn is_planar_embedding_of(&self, g: &SimpleGraph) -> bool {
        if self.rotations.len() != g.vertex_count() {
            return false;
        }
        let adj = g.adjacency();
        for (rot, nbrs) in self.rotations.iter().zip(&adj) {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if &sorted != nbrs {
                return false;
            }
        }
        let (comp, count) = g.components();
        let mut vertices = vec![0i64; count];
        let mut edges = vec![0i64; count];
        let mut faces = vec![0i64; count];
        for v in 0..g.vertex_count() {
            vertices[comp[v]] += 1;
            if adj[v].is_empty() {
                faces[comp[v]] += 1;
            }
        }
        for (u, _) in g.edges() {
            edges[comp[u]] += 1;
        }
        for face in self.faces() {
            faces[comp[face[0]]] += 1;
        }
        (0..count).all(|c| vertices[c] - edges[c] + faces[c] == 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarityResult {
    Planar(RotationSystem),
    Nonplanar(KuratowskiWitness),
}

impl PlanarityResult {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityResult::Planar(_))
    }

    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        match self {
            PlanarityResult::Planar(rot) => rot.is_planar_embedding_of(g),
            PlanarityResult::Nonplanar(w) => w.verify(g),
        }
    }
}

pub fn is_planar(g: &SimpleGraph) -> PlanarityResult {
    match planar_embedding(g) {
        Some(rot) => PlanarityResult::Planar(rot),
        None => PlanarityResult::Nonplanar(extract_witness(g)),
    }
}

/// A planar rotation system for `g`, or `None` if `g` is not planar.
pub fn planar_embedding(g: &SimpleGraph) -> Option<RotationSystem> {
    let adj = g.adjacency();
    let mut rotations = vec![Vec::new(); g.vertex_count()];
    for block in biconnected_blocks(&adj) {
        for (v, rot) in embed_block(&block)? {
            rotations[v].extend(rot);
        }
    }
    Some(RotationSystem { rotations })
}

/// Edge sets of the biconnected components (bridges included as
/// single-edge blocks). Iterative Hopcroft–Tarjan.
pub(super) fn biconnected_blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent, i) = *top;
            if i < adj[v].len() {
                top.2 += 1;
                let w = adj[v][i];
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Rotations (in global vertex ids) for one block, or `None` if the block
/// is not planar.
fn embed_block(block: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    if block.len() == 1 {
        let (u, v) = block[0];
        return Some(vec![(u, vec![v]), (v, vec![u])]);
    }
    let mut global: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    global.sort_unstable();
    global.dedup();
    let local = |x: usize| global.binary_search(&x).expect("block vertex");
    let mut adj = vec![Vec::new(); global.len()];
    for &(u, v) in block {
        let (a, b) = (local(u), local(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    for a in &mut adj {
        a.sort_unstable();
    }

    let faces = PathAddition::new(&adj).run()?;

    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); global.len()];
    for face in &faces {
        let k = face.len();
        for i in 0..k {
            let (u, v, w) = (face[(i + k - 1) % k], face[i], face[(i + 1) % k]);
            succ[v].insert(u, w);
        }
    }
    let rotations = succ
        .iter()
        .enumerate()
        .map(|(v, s)| {
            let start = adj[v][0];
            let mut rot = vec![global[start]];
            let mut cur = s[&start];
            while cur != start {
                rot.push(global[cur]);
                cur = s[&cur];
            }
            assert_eq!(
                rot.len(),
                adj[v].len(),
                "face structure is not a disk at a vertex"
            );
            (global[v], rot)
        })
        .collect();
    Some(rotations)
}

/// A piece of the graph not yet embedded: a single edge between embedded
/// vertices, or a component of unembedded vertices with its attaching edges.
struct Fragment {
    attachments: Vec<usize>,
    interior: Option<FixedBitSet>,
}

struct PathAddition<'a> {
    adj: &'a [Vec<usize>],
    embedded: FixedBitSet,
    embedded_edges: HashSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
    face_sets: Vec<FixedBitSet>,
}

impl<'a> PathAddition<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        PathAddition {
            adj,
            embedded: FixedBitSet::with_capacity(n),
            embedded_edges: HashSet::new(),
            faces: Vec::new(),
            face_sets: Vec::new(),
        }
    }

    fn key(u: usize, v: usize) -> (usize, usize) {
        (u.min(v), u.max(v))
    }

    fn face_set(&self, face: &[usize]) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.adj.len());
        for &v in face {
            s.insert(v);
        }
        s
    }

    fn mark_path(&mut self, path: &[usize]) {
        for &v in path {
            self.embedded.insert(v);
        }
        for w in path.windows(2) {
            self.embedded_edges.insert(Self::key(w[0], w[1]));
        }
    }

    /// Any cycle, from a breadth-first tree and one non-tree edge.
    fn initial_cycle(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        depth[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let (u, w) = (0..n)
            .flat_map(|u| self.adj[u].iter().map(move |&w| (u, w)))
            .find(|&(u, w)| u < w && parent[u] != w && parent[w] != u)
            .expect("biconnected block with two or more edges has a cycle");
        let (mut a, mut b) = (u, w);
        let mut left = vec![a];
        let mut right = vec![b];
        while a != b {
            if depth[a] >= depth[b] {
                a = parent[a];
                left.push(a);
            } else {
                b = parent[b];
                right.push(b);
            }
        }
        right.pop();
        left.extend(right.into_iter().rev());
        left
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for u in self.embedded.ones() {
            for &w in &self.adj[u] {
                if u < w && self.embedded.contains(w) && !self.embedded_edges.contains(&(u, w)) {
                    out.push(Fragment {
                        attachments: vec![u, w],
                        interior: None,
                    });
                }
            }
        }
        let mut visited = self.embedded.clone();
        for s in 0..n {
            if visited.contains(s) {
                continue;
            }
            let mut interior = FixedBitSet::with_capacity(n);
            let mut attach = FixedBitSet::with_capacity(n);
            visited.insert(s);
            interior.insert(s);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if self.embedded.contains(w) {
                        attach.insert(w);
                    } else if !visited.contains(w) {
                        visited.insert(w);
                        interior.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(Fragment {
                attachments: attach.ones().collect(),
                interior: Some(interior),
            });
        }
        out
    }

    /// Path through the fragment between its first two attachments.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        let (a, b) = (frag.attachments[0], frag.attachments[1]);
        let Some(interior) = &frag.interior else {
            return vec![a, b];
        };
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for &c in &self.adj[a] {
            if interior.contains(c) {
                parent[c] = a;
                queue.push_back(c);
            }
        }
        while let Some(u) = queue.pop_front() {
            if self.adj[u].binary_search(&b).is_ok() {
                let mut path = vec![b, u];
                let mut cur = u;
                while parent[cur] != a {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            for &w in &self.adj[u] {
                if interior.contains(w) && parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("fragment interior is connected to both attachments")
    }

    /// Splits face `f` along `path`, keeping every face oriented so that
    /// each dart lies on exactly one face.
    fn split_face(&mut self, f: usize, path: &[usize]) {
        let face = std::mem::take(&mut self.faces[f]);
        let k = face.len();
        let a = path[0];
        let b = *path.last().expect("path has endpoints");
        let ia = face
            .iter()
            .position(|&x| x == a)
            .expect("attachment on face");
        let ib = face
            .iter()
            .position(|&x| x == b)
            .expect("attachment on face");
        let inner = &path[1..path.len() - 1];

        let mut first = Vec::new();
        let mut i = ia;
        loop {
            first.push(face[i]);
            if i == ib {
                break;
            }
            i = (i + 1) % k;
        }
        first.extend(inner.iter().rev());

        let mut second = Vec::new();
        let mut i = ib;
        loop {
            second.push(face[i]);
            if i == ia {
                break;
            }
            i = (i + 1) % k;
        }
        second.extend(inner.iter());

        self.face_sets[f] = self.face_set(&first);
        self.faces[f] = first;
        self.face_sets.push(self.face_set(&second));
        self.faces.push(second);
    }

    fn run(mut self) -> Option<Vec<Vec<usize>>> {
        let cycle = self.initial_cycle();
        let mut closed = cycle.clone();
        closed.push(cycle[0]);
        self.mark_path(&closed);
        let reversed: Vec<usize> = cycle.iter().rev().copied().collect();
        self.face_sets.push(self.face_set(&cycle));
        self.face_sets.push(self.face_set(&reversed));
        self.faces.push(cycle);
        self.faces.push(reversed);

        loop {
            let fragments = self.fragments();
            if fragments.is_empty() {
                return Some(self.faces);
            }
            let mut choice: Option<(usize, usize)> = None;
            for (fi, frag) in fragments.iter().enumerate() {
                let admissible: Vec<usize> = (0..self.faces.len())
                    .filter(|&f| {
                        frag.attachments
                            .iter()
                            .all(|&v| self.face_sets[f].contains(v))
                    })
                    .collect();
                match admissible.len() {
                    0 => return None,
                    1 => {
                        choice = Some((fi, admissible[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((fi, admissible[0]));
                        }
                    }
                }
            }
            let (fi, face) = choice.expect("at least one fragment");
            let path = self.fragment_path(&fragments[fi]);
            self.mark_path(&path);
            self.split_face(face, &path);
        }
    }
}
