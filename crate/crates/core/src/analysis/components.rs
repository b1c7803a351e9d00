use crate::graph::Graph;

/// Connected components, each sorted, ordered by least vertex.
pub fn components(graph: &Graph) -> Vec<Vec<usize>> {
    let n = graph.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in graph.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(graph: &Graph) -> bool {
    components(graph).len() <= 1
}

/// Two-colouring if the graph is bipartite.
pub fn bipartition(graph: &Graph) -> Option<Vec<u8>> {
    let n = graph.vertex_count();
    let mut colour = vec![u8::MAX; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &w in graph.neighbors(v) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    stack.push(w);
                } else if colour[w] == colour[v] {
                    return None;
                }
            }
        }
    }
    Some(colour)
}
