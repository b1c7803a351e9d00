//! Hamiltonian cycles: constructive Dirac case, otherwise bounded backtracking.

use serde::Serialize;

use super::components::{bipartition, components, is_connected};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_HAMILTON_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "cycle", rename_all = "lowercase")]
pub enum HamiltonResult {
    Yes(Vec<usize>),
    No,
    Unknown,
}

impl HamiltonResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, HamiltonResult::Yes(_))
    }
}

pub fn dirac_holds(graph: &Graph) -> bool {
    let n = graph.vertex_count();
    n >= 3 && 2 * graph.min_degree() >= n
}

/// Checks that `cycle` visits every vertex once with consecutive (and
/// wrap-around) vertices adjacent.
pub fn is_hamiltonian_cycle(graph: &Graph, cycle: &[usize]) -> bool {
    let n = graph.vertex_count();
    if n < 3 || cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| graph.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// A vertex set `S` whose removal leaves more than `|S|` components, which
/// rules out a Hamiltonian cycle. Only neighbourhoods of single vertices are tried.
pub fn separator_witness(graph: &Graph) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    (0..n).find_map(|v| {
        let s = graph.neighbors(v);
        let keep: Vec<usize> = (0..n).filter(|w| s.binary_search(w).is_err()).collect();
        let comps = components(&graph.induced(&keep)).len();
        (comps > s.len()).then(|| s.to_vec())
    })
}

/// Components left after deleting `set`.
pub fn components_without(graph: &Graph, set: &[usize]) -> usize {
    let keep: Vec<usize> = (0..graph.vertex_count()).filter(|w| !set.contains(w)).collect();
    components(&graph.induced(&keep)).len()
}

/// Gap-closing rotation for graphs with `deg u + deg v >= n` on non-edges.
fn palmer(graph: &Graph) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    let mut cyc: Vec<usize> = (0..n).collect();
    let mut rounds = 0;
    loop {
        let Some(i) = (0..n).find(|&i| !graph.has_edge(cyc[i], cyc[(i + 1) % n])) else {
            return Some(cyc);
        };
        rounds += 1;
        if rounds > n * n {
            return None;
        }
        // rotate so the gap sits between positions n-1 and 0
        cyc.rotate_left((i + 1) % n);
        let (a, b) = (cyc[n - 1], cyc[0]);
        // find j with a ~ cyc[j] and b ~ cyc[j+1]; reverse cyc[0..=j]
        let j = (0..n - 2).find(|&j| graph.has_edge(b, cyc[j + 1]) && graph.has_edge(a, cyc[j]))?;
        cyc[..=j].reverse();
    }
}

/// Randomized rotation-extension search (seeded, so deterministic). Only
/// ever returns verified cycles; failure proves nothing.
fn rotation_extension(graph: &Graph, restarts: usize) -> Option<Vec<usize>> {
    use rand::{Rng, SeedableRng};
    let n = graph.vertex_count();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(n as u64);
    let steps = 20 * n * n;
    for r in 0..restarts {
        let mut path = vec![r % n];
        let mut on_path = vec![false; n];
        on_path[r % n] = true;
        for _ in 0..steps {
            let end = *path.last().expect("nonempty path");
            let nb = graph.neighbors(end);
            let fresh: Vec<usize> = nb.iter().copied().filter(|&w| !on_path[w]).collect();
            if !fresh.is_empty() {
                let w = fresh[rng.gen_range(0..fresh.len())];
                on_path[w] = true;
                path.push(w);
                continue;
            }
            if path.len() == n && graph.has_edge(end, path[0]) {
                return Some(path);
            }
            if rng.gen_bool(0.1) {
                path.reverse();
                continue;
            }
            // rotate: end ~ path[i], reverse the segment after i
            let len = path.len();
            let pivots: Vec<usize> = (0..len.saturating_sub(2)).filter(|&i| graph.has_edge(end, path[i])).collect();
            if pivots.is_empty() {
                path.reverse();
                continue;
            }
            let i = pivots[rng.gen_range(0..pivots.len())];
            path[i + 1..].reverse();
        }
    }
    None
}

struct Backtrack<'a> {
    graph: &'a Graph,
    path: Vec<usize>,
    on_path: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Backtrack<'_> {
    fn free_degree(&self, v: usize) -> usize {
        let (start, end) = (self.path[0], *self.path.last().expect("nonempty path"));
        self.graph
            .neighbors(v)
            .iter()
            .filter(|&&w| !self.on_path[w] || w == start || w == end)
            .count()
    }

    /// Every vertex off the path still needs two usable neighbours.
    fn feasible(&self) -> bool {
        let n = self.graph.vertex_count();
        (0..n).all(|v| self.on_path[v] || self.free_degree(v) >= 2)
    }

    fn search(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::budget("hamiltonian search nodes", self.budget));
        }
        let n = self.graph.vertex_count();
        let end = *self.path.last().expect("nonempty path");
        if self.path.len() == n {
            return Ok(self.graph.has_edge(end, self.path[0]));
        }
        let mut next: Vec<usize> = self.graph.neighbors(end).iter().copied().filter(|&w| !self.on_path[w]).collect();
        next.sort_by_key(|&w| self.graph.neighbors(w).iter().filter(|&&x| !self.on_path[x]).count());
        for w in next {
            self.path.push(w);
            self.on_path[w] = true;
            if self.feasible() && self.search()? {
                return Ok(true);
            }
            self.on_path[w] = false;
            self.path.pop();
        }
        Ok(false)
    }
}

/// Needs at least three vertices.
pub fn hamiltonian_cycle(graph: &Graph, budget: u64) -> Result<HamiltonResult> {
    let n = graph.vertex_count();
    if n < 3 {
        return Err(Error::PreconditionViolated(format!("hamiltonicity needs at least 3 vertices, got {n}")));
    }
    if graph.min_degree() < 2 || !is_connected(graph) {
        return Ok(HamiltonResult::No);
    }
    if let Some(colour) = bipartition(graph) {
        let ones = colour.iter().filter(|&&c| c == 1).count();
        if 2 * ones != n {
            return Ok(HamiltonResult::No);
        }
    }
    if separator_witness(graph).is_some() {
        return Ok(HamiltonResult::No);
    }
    if dirac_holds(graph) {
        if let Some(c) = palmer(graph) {
            if is_hamiltonian_cycle(graph, &c) {
                return Ok(HamiltonResult::Yes(c));
            }
        }
    }
    if let Some(c) = rotation_extension(graph, 8) {
        if is_hamiltonian_cycle(graph, &c) {
            return Ok(HamiltonResult::Yes(c));
        }
    }
    let mut bt = Backtrack {
        graph,
        path: vec![0],
        on_path: vec![false; n],
        nodes: 0,
        budget,
    };
    bt.on_path[0] = true;
    match bt.search() {
        Ok(true) => Ok(HamiltonResult::Yes(bt.path)),
        Ok(false) => Ok(HamiltonResult::No),
        Err(e) if e.is_budget() => Ok(HamiltonResult::Unknown),
        Err(e) => Err(e),
    }
}
