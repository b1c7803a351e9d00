//! The independence graph `Γ(G)`, its size-`u` variants `Γ_u(G)`, the induced
//! forms `Δ(G)`, `Δ_u(G)`, the vertex supports `V`, `V_u`, `W`, and the swap
//! graph on ordered generating tuples.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSets;
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::gensets::{default_size_cap, MinGenEnumeration};
use crate::graph::Graph;
use crate::group::{FiniteGroup, SubgroupLattice};

pub const DEFAULT_TUPLE_BUDGET: u64 = 4_000_000;
pub const DEFAULT_EDGE_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "u", rename_all = "lowercase")]
pub enum GraphKind {
    /// `Γ(G)`: any minimal generating set.
    Full,
    /// `Γ_u(G)`: minimal generating sets of size exactly `u`.
    Rank(usize),
    /// Swap graph on ordered generating `d`-tuples.
    Swap(usize),
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Full => write!(f, "full"),
            GraphKind::Rank(u) => write!(f, "rank({u})"),
            GraphKind::Swap(d) => write!(f, "swap({d})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceGraph {
    pub group: String,
    pub kind: GraphKind,
    /// Restricted to non-isolated vertices.
    pub induced: bool,
    /// Vertex `i` of `graph` is element `vertices[i]` (or swap tuple `vertices[i]`).
    pub vertices: Vec<usize>,
    /// Swap graphs only: the ordered tuple of each vertex.
    pub tuples: Vec<Vec<usize>>,
    pub graph: Graph,
}

impl IndependenceGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Local index of an element, if it is a vertex.
    pub fn position(&self, element: usize) -> Option<usize> {
        self.vertices.binary_search(&element).ok()
    }

    /// Degree of an element (0 if it is not a vertex).
    pub fn degree_of(&self, element: usize) -> usize {
        self.position(element).map_or(0, |i| self.graph.degree(i))
    }

    /// Neighbors of an element, as element indices.
    pub fn neighbors_of(&self, element: usize) -> Vec<usize> {
        self.position(element)
            .map(|i| self.graph.neighbors(i).iter().map(|&j| self.vertices[j]).collect())
            .unwrap_or_default()
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        match (self.position(x), self.position(y)) {
            (Some(i), Some(j)) => self.graph.has_edge(i, j),
            _ => false,
        }
    }

    /// Edges as element pairs `(x, y)`, `x < y`.
    pub fn element_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph.edges().map(|(i, j)| (self.vertices[i], self.vertices[j]))
    }
}

/// Adjacency of `Γ(G)` (all sizes) or `Γ_u(G)` on all group elements.
pub fn gamma_graph(enumeration: &MinGenEnumeration, size: Option<usize>) -> Graph {
    let n = enumeration.order;
    let words = n.div_ceil(64);
    let mut rows = vec![0u64; n * words];
    let mut mark = |sets: &mut dyn Iterator<Item = &[u32]>| {
        for s in sets {
            for (i, &a) in s.iter().enumerate() {
                for &b in &s[i + 1..] {
                    let (a, b) = (a as usize, b as usize);
                    rows[a * words + (b >> 6)] |= 1 << (b & 63);
                    rows[b * words + (a >> 6)] |= 1 << (a & 63);
                }
            }
        }
    };
    match size {
        Some(u) => mark(&mut enumeration.sets(u)),
        None => mark(&mut enumeration.all_sets().map(|(_, s)| s)),
    }
    let edges = (0..n).flat_map(|a| {
        let row = &rows[a * words..(a + 1) * words];
        (a + 1..n).filter(move |&b| row[b >> 6] >> (b & 63) & 1 == 1).map(move |b| (a, b))
    });
    Graph::from_edges(n, edges.collect::<Vec<_>>())
}

/// `Γ(G)` / `Γ_u(G)`, or the induced `Δ` forms when `induced` is set.
///
/// The enumeration must be unfiltered, or filtered to the requested size.
pub fn independence_graph(
    enumeration: &MinGenEnumeration,
    kind: GraphKind,
    induced: bool,
) -> Result<IndependenceGraph> {
    let size = match kind {
        GraphKind::Full => None,
        GraphKind::Rank(u) => Some(u),
        GraphKind::Swap(_) => {
            return Err(Error::PreconditionViolated(
                "swap graphs are built from generating tuples, not minimal generating sets".into(),
            ))
        }
    };
    if let (Some(f), Some(u)) = (enumeration.size_filter, size) {
        if f != u {
            return Err(Error::PreconditionViolated(format!("enumeration filtered to size {f}, asked for {u}")));
        }
    }
    if enumeration.size_filter.is_some() && size.is_none() {
        return Err(Error::PreconditionViolated("full graph needs an unfiltered enumeration".into()));
    }
    let gamma = gamma_graph(enumeration, size);
    let n = gamma.vertex_count();
    let vertices: Vec<usize> = if induced {
        (0..n).filter(|&v| gamma.degree(v) > 0).collect()
    } else {
        (0..n).collect()
    };
    let graph = if induced { gamma.induced(&vertices) } else { gamma };
    Ok(IndependenceGraph {
        group: enumeration.group.clone(),
        kind,
        induced,
        vertices,
        tuples: Vec::new(),
        graph,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSupport {
    pub group: String,
    /// Non-isolated vertices of `Γ(G)`.
    pub v: ElementSet,
    /// Non-isolated vertices of `Γ_u(G)` for `d(G) <= u <= m(G)`.
    pub vu: BTreeMap<usize, ElementSet>,
    /// Intersection of the `V_u`.
    pub w: ElementSet,
}

/// `V(G)`, `V_u(G)` and `W(G)` from a complete unfiltered enumeration.
///
/// A set of size one contributes no edge, so `V_1 = ∅`.
pub fn vertex_supports(enumeration: &MinGenEnumeration) -> VertexSupport {
    let n = enumeration.order;
    let mut vu = BTreeMap::new();
    if let (Some(d), Some(m)) = (enumeration.d(), enumeration.m()) {
        for u in d..=m {
            let mut s = ElementSet::empty(n);
            if u >= 2 {
                for set in enumeration.sets(u) {
                    for &x in set {
                        s.insert(x as usize);
                    }
                }
            }
            vu.insert(u, s);
        }
    }
    let mut v = ElementSet::empty(n);
    for s in vu.values() {
        v.union_with(s);
    }
    let mut w = if vu.is_empty() { ElementSet::empty(n) } else { ElementSet::full(n) };
    for s in vu.values() {
        w.intersect_with(s);
    }
    VertexSupport {
        group: enumeration.group.clone(),
        v,
        vu,
        w,
    }
}

/// Decides whether `x` and `y` lie in a common minimal generating set (of
/// size `u` when given) and returns such a set.
///
/// Backtracking seeded with `{x, y}`: extra elements are added in increasing
/// order while the set stays independent modulo the Frattini subgroup.
pub fn edge_test(
    group: &FiniteGroup,
    lat: &SubgroupLattice,
    x: usize,
    y: usize,
    u: Option<usize>,
    node_budget: u64,
) -> Result<Option<Vec<usize>>> {
    let n = group.order();
    if x == y || x == 0 || y == 0 || x >= n || y >= n {
        return Err(Error::PreconditionViolated(format!(
            "edge test needs two distinct non-identity elements, got {x} and {y}"
        )));
    }
    let cap = u.unwrap_or_else(|| default_size_cap(n));
    if cap < 2 {
        return Ok(None);
    }
    let independent = |chosen: &[usize]| {
        (0..chosen.len()).all(|i| {
            let rest = chosen
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(lat.trivial(), |h, (_, &v)| lat.join(h, v));
            !lat.contains(lat.join_frattini(rest), chosen[i])
        })
    };
    let mut chosen = vec![x, y];
    if !independent(&chosen) {
        return Ok(None);
    }
    let mut nodes = 0u64;

    fn search(
        lat: &SubgroupLattice,
        n: usize,
        cap: usize,
        want: Option<usize>,
        chosen: &mut Vec<usize>,
        from: usize,
        nodes: &mut u64,
        budget: u64,
        independent: &dyn Fn(&[usize]) -> bool,
    ) -> Result<Option<Vec<usize>>> {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::budget("edge test nodes", budget));
        }
        if lat.generated(chosen) == lat.whole() {
            return Ok(if want.is_none_or(|u| u == chosen.len()) {
                Some(chosen.clone())
            } else {
                None
            });
        }
        if chosen.len() >= cap {
            return Ok(None);
        }
        for z in from..n {
            if chosen[..2].contains(&z) {
                continue;
            }
            chosen.push(z);
            if independent(chosen) {
                if let Some(w) = search(lat, n, cap, want, chosen, z + 1, nodes, budget, independent)? {
                    return Ok(Some(w));
                }
            }
            chosen.pop();
        }
        Ok(None)
    }

    let found = search(lat, n, cap, u, &mut chosen, 1, &mut nodes, node_budget, &independent)?;
    Ok(found.map(|mut w| {
        w.sort_unstable();
        w
    }))
}

/// `d_H(G)` for every subgroup, by descending cardinality.
fn relative_ranks(lat: &SubgroupLattice, n: usize) -> Vec<usize> {
    let mut r = vec![usize::MAX; lat.len()];
    let whole = lat.whole();
    r[whole] = 0;
    for h in (0..lat.len()).rev() {
        if h == whole {
            continue;
        }
        r[h] = (0..n)
            .filter(|&g| !lat.contains(h, g))
            .map(|g| r[lat.join(h, g)])
            .min()
            .map_or(usize::MAX, |x| x.saturating_add(1));
    }
    r
}

/// Ordered generating `d`-tuples in lexicographic order.
pub fn generating_tuples(group: &FiniteGroup, lat: &SubgroupLattice, d: usize, tuple_budget: u64) -> Result<Vec<Vec<usize>>> {
    let n = group.order();
    let rr = relative_ranks(lat, n);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);

    fn rec(
        lat: &SubgroupLattice,
        rr: &[usize],
        n: usize,
        d: usize,
        h: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget: u64,
    ) -> Result<()> {
        if cur.len() == d {
            if h == lat.whole() {
                if out.len() as u64 >= budget {
                    return Err(Error::budget("generating tuples", budget));
                }
                out.push(cur.clone());
            }
            return Ok(());
        }
        let remaining = d - cur.len() - 1;
        for g in 0..n {
            let next = lat.join(h, g);
            if rr[next] <= remaining {
                cur.push(g);
                rec(lat, rr, n, d, next, cur, out, budget)?;
                cur.pop();
            }
        }
        Ok(())
    }

    if rr[lat.trivial()] <= d {
        rec(lat, &rr, n, d, lat.trivial(), &mut cur, &mut out, tuple_budget)?;
    }
    Ok(out)
}

fn tuple_key(t: &[usize], skip: usize, n: usize) -> u64 {
    t.iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .fold(skip as u64, |acc, (_, &x)| acc * n as u64 + x as u64)
}

fn check_swap_preconditions(lat: &SubgroupLattice, n: usize, d: usize) -> Result<()> {
    let dg = lat.relative_rank_from(lat.trivial());
    if d != dg {
        return Err(Error::PreconditionViolated(format!("swap graph needs d = d(G) = {dg}, got {d}")));
    }
    // key = (skipped coordinate, remaining d-1 digits in base n) must fit in u64
    if (n as f64).powi(d as i32 - 1) * (d as f64) >= 1.8e19 {
        return Err(Error::PreconditionViolated("tuple keys overflow".into()));
    }
    Ok(())
}

/// The swap graph `Σ_d(G)`: ordered generating `d`-tuples, adjacent when they
/// differ in exactly one coordinate.
pub fn build_swap_graph(
    group: &FiniteGroup,
    lat: &SubgroupLattice,
    d: usize,
    tuple_budget: u64,
    edge_budget: u64,
) -> Result<IndependenceGraph> {
    let n = group.order();
    check_swap_preconditions(lat, n, d)?;
    let tuples = generating_tuples(group, lat, d, tuple_budget)?;
    let mut edges = Vec::new();
    for skip in 0..d {
        let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
        for (i, t) in tuples.iter().enumerate() {
            buckets.entry(tuple_key(t, skip, n)).or_default().push(i);
        }
        let mut keys: Vec<u64> = buckets.keys().copied().collect();
        keys.sort_unstable();
        for k in keys {
            let b = &buckets[&k];
            for (x, &i) in b.iter().enumerate() {
                for &j in &b[x + 1..] {
                    edges.push((i, j));
                    if edges.len() as u64 > edge_budget {
                        return Err(Error::budget("swap graph edges", edge_budget));
                    }
                }
            }
        }
    }
    let graph = Graph::from_edges(tuples.len(), edges);
    Ok(IndependenceGraph {
        group: group.origin().to_string(),
        kind: GraphKind::Swap(d),
        induced: false,
        vertices: (0..tuples.len()).collect(),
        tuples,
        graph,
    })
}

/// Number of generating tuples and connected components of `Σ_d(G)`,
/// without materializing its edges.
pub fn swap_components(group: &FiniteGroup, lat: &SubgroupLattice, d: usize, tuple_budget: u64) -> Result<(usize, usize)> {
    let n = group.order();
    check_swap_preconditions(lat, n, d)?;
    let tuples = generating_tuples(group, lat, d, tuple_budget)?;
    let mut dsu = DisjointSets::new(tuples.len());
    for skip in 0..d {
        let mut first: HashMap<u64, usize> = HashMap::with_capacity(tuples.len());
        for (i, t) in tuples.iter().enumerate() {
            match first.entry(tuple_key(t, skip, n)) {
                std::collections::hash_map::Entry::Occupied(o) => {
                    dsu.union(*o.get(), i);
                }
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(i);
                }
            }
        }
    }
    Ok((tuples.len(), dsu.set_count()))
}
