//! Simple undirected graph on vertices `0..n` with sorted adjacency lists.

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Self-loops and repeated edges are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} vertices");
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for l in &mut adj {
            l.sort_unstable();
            l.dedup();
        }
        Graph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Subgraph induced on `keep` (in the given order); vertex `i` of the
    /// result is `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.adj.len()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> = self.adj[v].iter().filter(|&&w| pos[w] != usize::MAX).map(|&w| pos[w]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        Graph { adj }
    }

    pub fn complement(&self) -> Graph {
        let n = self.adj.len();
        let adj = (0..n)
            .map(|u| {
                let mut it = self.adj[u].iter().peekable();
                (0..n)
                    .filter(|&v| {
                        while it.peek().is_some_and(|&&w| w < v) {
                            it.next();
                        }
                        v != u && it.peek() != Some(&&v)
                    })
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    /// Row bitsets of the adjacency matrix.
    pub fn bit_rows(&self) -> Vec<Vec<u64>> {
        let words = self.adj.len().div_ceil(64);
        self.adj
            .iter()
            .map(|l| {
                let mut row = vec![0u64; words];
                for &v in l {
                    row[v >> 6] |= 1 << (v & 63);
                }
                row
            })
            .collect()
    }
}
