//! Exact maximum clique by branch and bound with a greedy colouring bound.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CLIQUE_BUDGET: u64 = 50_000_000;

struct Search<'a> {
    rows: &'a [Vec<u64>],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

fn members(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                i * 64 + b
            })
        })
    })
}

impl Search<'_> {
    /// Vertices of `p` with their colour classes, colours non-decreasing.
    fn colour(&self, p: &[u64]) -> Vec<(usize, usize)> {
        let mut uncoloured = p.to_vec();
        let mut out = Vec::new();
        let mut k = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            k += 1;
            let mut q = uncoloured.clone();
            loop {
                let Some(v) = members(&q).next() else { break };
                q[v >> 6] &= !(1 << (v & 63));
                uncoloured[v >> 6] &= !(1 << (v & 63));
                for (qw, rw) in q.iter_mut().zip(&self.rows[v]) {
                    *qw &= !rw;
                }
                out.push((v, k));
            }
        }
        out
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: Vec<u64>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::budget("clique search nodes", self.budget));
        }
        let order = self.colour(&p);
        for &(v, c) in order.iter().rev() {
            if r.len() + c <= self.best.len() {
                return Ok(());
            }
            r.push(v);
            let next: Vec<u64> = p.iter().zip(&self.rows[v]).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, next)?;
            }
            r.pop();
            p[v >> 6] &= !(1 << (v & 63));
        }
        Ok(())
    }
}

/// Clique number with a sorted witness clique.
pub fn clique_number(graph: &Graph, budget: u64) -> Result<(usize, Vec<usize>)> {
    let n = graph.vertex_count();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let rows = graph.bit_rows();
    let mut all = vec![0u64; n.div_ceil(64)];
    for v in 0..n {
        all[v >> 6] |= 1 << (v & 63);
    }
    let mut s = Search {
        rows: &rows,
        best: vec![0],
        nodes: 0,
        budget,
    };
    s.expand(&mut Vec::new(), all)?;
    let mut best = s.best;
    best.sort_unstable();
    Ok((best.len(), best))
}

/// Independence number via the clique number of the complement.
pub fn independence_number(graph: &Graph, budget: u64) -> Result<(usize, Vec<usize>)> {
    clique_number(&graph.complement(), budget)
}

pub fn is_clique(graph: &Graph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| a != b && graph.has_edge(a, b)))
}

pub fn is_independent(graph: &Graph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| a != b && !graph.has_edge(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small() {
        assert_eq!(clique_number(&Graph::new(0), 100).unwrap().0, 0);
        assert_eq!(clique_number(&Graph::new(3), 100).unwrap().0, 1);
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)));
        assert_eq!(clique_number(&c5, 100).unwrap().0, 2);
        assert_eq!(independence_number(&c5, 100).unwrap().0, 2);
        let k4_plus = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]);
        let (w, c) = clique_number(&k4_plus, 100).unwrap();
        assert_eq!((w, c.clone()), (4, vec![0, 1, 2, 3]));
        assert!(is_clique(&k4_plus, &c));
        let (a, i) = independence_number(&k4_plus, 100).unwrap();
        assert_eq!(a, 2);
        assert!(is_independent(&k4_plus, &i));
    }

    #[test]
    fn brute_force_agreement() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=11);
            let edges: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            let g = Graph::from_edges(n, edges);
            let brute = (0u32..1 << n)
                .filter(|&m| {
                    let s: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                    is_clique(&g, &s)
                })
                .map(|m| m.count_ones() as usize)
                .max()
                .unwrap();
            let (w, c) = clique_number(&g, 1_000_000).unwrap();
            assert_eq!(w, brute);
            assert!(is_clique(&g, &c));
        }
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::from_edges(40, (0..40).flat_map(|i| (i + 1..40).filter(move |j| (i + j) % 3 != 0).map(move |j| (i, j))));
        assert!(clique_number(&g, 2).unwrap_err().is_budget());
    }
}
