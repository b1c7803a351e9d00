//! Naive oracles shared by the integration tests. Nothing here calls into
//! the crate's own enumeration or graph algorithms; only the raw
//! multiplication table is read.

#![allow(dead_code)]

use std::collections::BTreeSet;

use indigraph_core::verify::Catalog;
use indigraph_core::FiniteGroup;

/// Catalog groups up to `max_order`, built.
pub fn catalog_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    Catalog::default_catalog()
        .entries()
        .iter()
        .filter(|e| e.order() <= max_order)
        .map(|e| (e.name.clone(), e.build(max_order).unwrap()))
        .collect()
}

pub struct Table {
    pub n: usize,
    pub mul: Vec<Vec<usize>>,
}

impl Table {
    pub fn of(group: &FiniteGroup) -> Self {
        Table {
            n: group.order(),
            mul: group.table_rows(),
        }
    }

    /// Subgroup generated by `gens`, by repeated right multiplication.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul[x][g];
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        seen
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.closure(gens).iter().all(|&b| b)
    }

    /// Every minimal generating set, by filtering all subsets of the
    /// non-identity elements. Sets come out sorted; the list is sorted.
    pub fn min_gen_sets(&self) -> Vec<Vec<usize>> {
        assert!(self.n <= 16, "subset filtering is only for tiny groups");
        let k = self.n - 1;
        let members = |mask: usize| (0..k).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect::<Vec<_>>();
        let gen: Vec<bool> = (0..1usize << k).map(|m| self.generates(&members(m))).collect();
        let mut out: Vec<Vec<usize>> = (0..1usize << k)
            .filter(|&m| gen[m] && (0..k).all(|b| m >> b & 1 == 0 || !gen[m ^ (1 << b)]))
            .map(members)
            .collect();
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }
}

/// Adjacency matrix on `n` vertices: two elements are adjacent when they sit
/// together in one of `sets` (restricted to size `u` when given).
pub fn gamma_matrix(n: usize, sets: &[Vec<usize>], u: Option<usize>) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for s in sets.iter().filter(|s| u.map_or(true, |u| s.len() == u)) {
        for &a in s {
            for &b in s {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
    }
    adj
}

/// Vertices with at least one neighbour, and the induced matrix.
pub fn delta_matrix(adj: &[Vec<bool>]) -> (Vec<usize>, Vec<Vec<bool>>) {
    let keep: Vec<usize> = (0..adj.len()).filter(|&v| adj[v].iter().any(|&b| b)).collect();
    let sub = keep.iter().map(|&a| keep.iter().map(|&b| adj[a][b]).collect()).collect();
    (keep, sub)
}

pub fn matrix_of(graph: &indigraph_core::Graph) -> Vec<Vec<bool>> {
    let n = graph.vertex_count();
    (0..n).map(|a| (0..n).map(|b| graph.has_edge(a, b)).collect()).collect()
}

pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        if a != b {
            adj[a][b] = true;
            adj[b][a] = true;
        }
    }
    adj
}

/// Planarity by looking for a subdivision of `K5` or `K3,3`.
///
/// Degree-one vertices are deleted and degree-two vertices smoothed first;
/// both keep planarity. Then every choice of branch vertices is tried and
/// the branch pairs are joined by internally disjoint paths, backtracking.
pub fn planar_by_subdivision_search(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let mut g: Vec<BTreeSet<usize>> = (0..n).map(|a| (0..n).filter(|&b| adj[a][b]).collect()).collect();
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let nb: Vec<usize> = g[v].iter().copied().collect();
            match nb.len() {
                0 | 1 => {
                    for w in nb {
                        g[w].remove(&v);
                    }
                    g[v].clear();
                    alive[v] = false;
                    changed = true;
                }
                2 => {
                    let (a, b) = (nb[0], nb[1]);
                    g[a].remove(&v);
                    g[b].remove(&v);
                    g[v].clear();
                    alive[v] = false;
                    g[a].insert(b);
                    g[b].insert(a);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let rich = |d: usize| (0..n).filter(|&v| alive[v] && g[v].len() >= d).collect::<Vec<_>>();
    let mut blocked = vec![false; n];
    for five in combinations(&rich(4), 5) {
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).map(|(i, j)| (five[i], five[j])).collect();
        if linked(&g, &five, &pairs, &mut blocked) {
            return false;
        }
    }
    for six in combinations(&rich(3), 6) {
        for rest in combinations(&six[1..], 2) {
            let a: Vec<usize> = std::iter::once(six[0]).chain(rest.iter().copied()).collect();
            let b: Vec<usize> = six.iter().copied().filter(|v| !a.contains(v)).collect();
            let pairs: Vec<(usize, usize)> = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect();
            if linked(&g, &six, &pairs, &mut blocked) {
                return false;
            }
        }
    }
    true
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for i in 0..=items.len() - k {
        for mut tail in combinations(&items[i + 1..], k - 1) {
            tail.insert(0, items[i]);
            out.push(tail);
        }
    }
    out
}

fn linked(g: &[BTreeSet<usize>], branch: &[usize], pairs: &[(usize, usize)], blocked: &mut [bool]) -> bool {
    for &b in branch {
        blocked[b] = true;
    }
    let ok = route(g, pairs, blocked);
    for &b in branch {
        blocked[b] = false;
    }
    ok
}

fn route(g: &[BTreeSet<usize>], pairs: &[(usize, usize)], blocked: &mut [bool]) -> bool {
    let Some(&(s, t)) = pairs.first() else {
        return true;
    };
    walk(g, s, t, &pairs[1..], blocked)
}

fn walk(g: &[BTreeSet<usize>], v: usize, t: usize, rest: &[(usize, usize)], blocked: &mut [bool]) -> bool {
    if g[v].contains(&t) && route(g, rest, blocked) {
        return true;
    }
    for &w in &g[v] {
        if !blocked[w] {
            blocked[w] = true;
            let ok = walk(g, w, t, rest, blocked);
            blocked[w] = false;
            if ok {
                return true;
            }
        }
    }
    false
}

/// Hamiltonicity by trying every vertex order that starts at vertex 0.
pub fn hamiltonian_by_permutations(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    if n < 3 {
        return false;
    }
    assert!(n <= 10, "permutation search is only for tiny graphs");
    let mut order: Vec<usize> = (1..n).collect();
    let closes = |p: &[usize]| {
        adj[0][p[0]] && p.windows(2).all(|w| adj[w[0]][w[1]]) && adj[p[p.len() - 1]][0]
    };
    // Heap's algorithm
    let mut c = vec![0; order.len()];
    if closes(&order) {
        return true;
    }
    let mut i = 0;
    while i < order.len() {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            if closes(&order) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Hamiltonicity by dynamic programming over vertex subsets.
pub fn hamiltonian_by_subsets(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    if n < 3 {
        return false;
    }
    assert!(n <= 22);
    // reach[mask] bit v: a path from 0 through exactly `mask` ends at v
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1..1usize << n {
        if mask & 1 == 0 || reach[mask] == 0 {
            continue;
        }
        for v in 0..n {
            if reach[mask] >> v & 1 == 0 {
                continue;
            }
            for w in 0..n {
                if mask >> w & 1 == 0 && adj[v][w] {
                    reach[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    let full = (1usize << n) - 1;
    (1..n).any(|v| reach[full] >> v & 1 == 1 && adj[v][0])
}

/// Clique number by trying all subsets.
pub fn clique_number_by_subsets(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    assert!(n <= 16);
    (0..1usize << n)
        .filter(|&m| {
            (0..n).all(|a| m >> a & 1 == 0 || (a + 1..n).all(|b| m >> b & 1 == 0 || adj[a][b]))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn is_cycle_in(adj: &[Vec<bool>], cycle: &[usize]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    cycle.len() == n
        && cycle.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && (0..n).all(|i| adj[cycle[i]][cycle[(i + 1) % n]])
}

/// Hamiltonicity by enumerating vertex orders from vertex 0, abandoning an
/// order as soon as two consecutive vertices are not adjacent.
pub fn hamiltonian_by_pruned_permutations(adj: &[Vec<bool>]) -> bool {
    fn extend(adj: &[Vec<bool>], last: usize, used: &mut [bool], placed: usize) -> bool {
        let n = adj.len();
        if placed == n {
            return adj[last][0];
        }
        for w in 1..n {
            if !used[w] && adj[last][w] {
                used[w] = true;
                let ok = extend(adj, w, used, placed + 1);
                used[w] = false;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    let n = adj.len();
    if n < 3 {
        return false;
    }
    let mut used = vec![false; n];
    used[0] = true;
    extend(adj, 0, &mut used, 1)
}
