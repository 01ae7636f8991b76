//! Finite groups given by multiplication tables, exhaustive subgroup
//! enumeration, and both hypergraphs built straight from the definitions.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{enumerate_maximal_edges, Hypergraph};

pub const SUBGROUP_ORDER_LIMIT: usize = 200;
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    element_names: Vec<String>,
}

impl FiniteGroup {
    /// Validates a Cayley table: square, Latin, with a two-sided identity,
    /// and associative (checked exhaustively up to order 64).
    pub fn from_table(table: Vec<Vec<usize>>, element_names: Vec<String>) -> Result<Self> {
        let order = table.len();
        let bad = |msg: String| Err(Error::InvalidTable(msg));
        if order == 0 {
            return bad("empty table".into());
        }
        if element_names.len() != order {
            return bad(format!(
                "{} names for {order} elements",
                element_names.len()
            ));
        }
        if let Some(r) = table.iter().position(|row| row.len() != order) {
            return bad(format!("row {r} has the wrong length"));
        }
        #[allow(clippy::needless_range_loop)]
        for i in 0..order {
            let mut row = FixedBitSet::with_capacity(order);
            let mut col = FixedBitSet::with_capacity(order);
            for j in 0..order {
                if table[i][j] >= order {
                    return bad(format!("entry ({i}, {j}) out of range"));
                }
                row.insert(table[i][j]);
                col.insert(table[j][i]);
            }
            if row.count_ones(..) != order || col.count_ones(..) != order {
                return bad(format!("row or column {i} is not a permutation"));
            }
        }
        let Some(identity) =
            (0..order).find(|&e| (0..order).all(|x| table[e][x] == x && table[x][e] == x))
        else {
            return bad("no identity element".into());
        };
        if order <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = table[a][b];
                    for c in 0..order {
                        if table[ab][c] != table[a][table[b][c]] {
                            return bad(format!("({a}*{b})*{c} != {a}*({b}*{c})"));
                        }
                    }
                }
            }
        }
        let inverses = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| table[x][y] == identity)
                    .expect("Latin rows")
            })
            .collect();
        Ok(Self {
            order,
            table: table.into_iter().flatten().collect(),
            identity,
            inverses,
            element_names,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.element_names[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by `generators`.
    pub fn generated_by(&self, generators: &[usize]) -> Subgroup {
        Subgroup::from_bits(&self.closure(generators))
    }

    fn closure(&self, generators: &[usize]) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.order);
        seen.insert(self.identity);
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in generators {
                let y = self.mul(x, g);
                if !seen.put(y) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// `{ hk : h in H, k in K }` as an element set.
    pub fn product_set(&self, h: &Subgroup, k: &Subgroup) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order);
        for &x in &h.elements {
            for &y in &k.elements {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// Element names of a subgroup, for display.
    pub fn describe(&self, s: &Subgroup) -> String {
        let names: Vec<&str> = s.elements.iter().map(|&x| self.name(x)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// `Z_n` under addition; element `i` is the residue `i`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    FiniteGroup::from_table(table, (0..n).map(|i| i.to_string()).collect())
}

/// The dihedral group of order `2n`. Element `i < n` is `a^i` and element
/// `n + i` is `a^i b`, with `b a b^-1 = a^-1`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::DihedralTooSmall(n as u64));
    }
    let split = |x: usize| (x % n, x / n);
    let table = (0..2 * n)
        .map(|x| {
            let (i, s) = split(x);
            (0..2 * n)
                .map(|y| {
                    let (j, t) = split(y);
                    let rot = if s == 0 { (i + j) % n } else { (i + n - j) % n };
                    rot + n * ((s + t) % 2)
                })
                .collect()
        })
        .collect();
    let power = |i: usize| match i {
        0 => String::new(),
        1 => "a".to_string(),
        _ => format!("a^{i}"),
    };
    let names = (0..n)
        .map(|i| if i == 0 { "e".to_string() } else { power(i) })
        .chain((0..n).map(|i| format!("{}b", power(i))))
        .collect();
    FiniteGroup::from_table(table, names)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    fn from_bits(bits: &FixedBitSet) -> Self {
        Self {
            elements: bits.ones().collect(),
        }
    }

    /// Sorted element indices.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Checks identity, closure under products and inverses.
    pub fn is_subgroup_of(&self, g: &FiniteGroup) -> bool {
        self.contains(g.identity())
            && self.elements.iter().all(|&x| {
                self.contains(g.inverse(x))
                    && self.elements.iter().all(|&y| self.contains(g.mul(x, y)))
            })
    }

    pub fn meets_trivially(&self, other: &Subgroup, g: &FiniteGroup) -> bool {
        self.elements
            .iter()
            .all(|&x| x == g.identity() || !other.contains(x))
    }

    /// `HK = G` as sets.
    pub fn comaximal_with(&self, other: &Subgroup, g: &FiniteGroup) -> bool {
        // |HK| <= |H||K| is a cheap necessary condition.
        self.order() * other.order() >= g.order()
            && g.product_set(self, other).count_ones(..) == g.order()
    }

    /// For subgroups of `cyclic(n)`: the least positive residue in the
    /// subgroup, which generates it and divides `n`. `None` when trivial.
    pub fn cyclic_generator(&self) -> Option<u64> {
        self.elements
            .iter()
            .copied()
            .find(|&x| x != 0)
            .map(|x| x as u64)
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Every subgroup, ordered by size and then by elements.
///
/// Every subgroup is the join of the cyclic subgroups of its elements, so
/// closing the family of cyclic subgroups under joins with a cyclic subgroup
/// reaches all of them.
pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    if g.order() > SUBGROUP_ORDER_LIMIT {
        return Err(Error::GroupTooLarge {
            order: g.order(),
            limit: SUBGROUP_ORDER_LIMIT,
        });
    }
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    // (members, a generating set)
    let mut found: Vec<(FixedBitSet, Vec<usize>)> = Vec::new();
    let trivial = g.closure(&[]);
    seen.insert(trivial.clone());
    found.push((trivial, Vec::new()));

    let mut cyclic_gens = Vec::new();
    for x in 0..g.order() {
        let c = g.closure(&[x]);
        if seen.insert(c.clone()) {
            cyclic_gens.push(x);
            found.push((c, vec![x]));
        }
    }

    let mut i = 0;
    while i < found.len() {
        for &x in &cyclic_gens {
            if found[i].0.contains(x) {
                continue;
            }
            let mut gens = found[i].1.clone();
            gens.push(x);
            let joined = g.closure(&gens);
            if seen.insert(joined.clone()) {
                found.push((joined, gens));
            }
        }
        i += 1;
    }

    let mut subgroups: Vec<Subgroup> = found.iter().map(|(b, _)| Subgroup::from_bits(b)).collect();
    subgroups.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(subgroups)
}

pub type GroupHypergraph = Hypergraph<Subgroup>;

/// Intersection and co-maximal hypergraphs of `g`, vertices being the proper
/// nontrivial subgroups with at least one partner.
pub fn build_hypergraphs_for_group(g: &FiniteGroup) -> Result<(GroupHypergraph, GroupHypergraph)> {
    let candidates: Vec<Subgroup> = all_subgroups(g)?
        .into_iter()
        .filter(|s| s.order() > 1 && s.order() < g.order())
        .collect();
    let build = |related: &dyn Fn(&Subgroup, &Subgroup) -> bool| {
        let m = candidates.len();
        let rel: Vec<Vec<bool>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| i != j && related(&candidates[i], &candidates[j]))
                    .collect()
            })
            .collect();
        let keep: Vec<usize> = (0..m).filter(|&i| rel[i].iter().any(|&r| r)).collect();
        let edges = enumerate_maximal_edges(keep.len(), |a, b| rel[keep[a]][keep[b]]);
        Hypergraph::new(keep.iter().map(|&i| candidates[i].clone()).collect(), edges)
    };
    let intersection = build(&|h, k| h.meets_trivially(k, g));
    let comaximal = build(&|h, k| h.comaximal_with(k, g));
    Ok((intersection, comaximal))
}
