use serde::Serialize;

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indigraph::IndependenceGraph;

/// Parts of a complete multipartite graph (sorted vertex lists, ordered by
/// least vertex), or `None` when non-adjacency is not an equivalence relation.
pub fn complete_multipartite_parts(graph: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = graph.vertex_count();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let nb = graph.neighbors(v);
        let part: Vec<usize> = (0..n).filter(|w| nb.binary_search(w).is_err()).collect();
        for &w in &part {
            if part_of[w] != usize::MAX {
                return None;
            }
            part_of[w] = parts.len();
        }
        parts.push(part);
    }
    for v in 0..n {
        if graph.degree(v) + parts[part_of[v]].len() != n {
            return None;
        }
        if graph.neighbors(v).iter().any(|&w| part_of[w] == part_of[v]) {
            return None;
        }
    }
    Some(parts)
}

/// Part sizes in ascending order.
pub fn recognize_complete_multipartite(graph: &Graph) -> Option<Vec<usize>> {
    complete_multipartite_parts(graph).map(|parts| {
        let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    })
}

/// Three vertices `(a, b, c)` with `a ≁ b`, `b ≁ c` but `a ~ c`.
pub fn non_transitivity_witness(graph: &Graph) -> Option<(usize, usize, usize)> {
    let n = graph.vertex_count();
    for b in 0..n {
        let non: Vec<usize> = (0..n).filter(|&w| w != b && !graph.has_edge(b, w)).collect();
        for (i, &a) in non.iter().enumerate() {
            for &c in &non[i + 1..] {
                if graph.has_edge(a, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassDegree {
    pub representative: usize,
    pub size: usize,
    pub degree: usize,
}

/// Per-class degrees of an element-indexed graph; elements that are not
/// vertices count as degree 0.
pub fn class_degrees(graph: &IndependenceGraph, classes: &[ElementSet]) -> Result<Vec<ClassDegree>> {
    classes
        .iter()
        .filter_map(|c| c.first().map(|r| (r, c)))
        .map(|(rep, class)| {
            let degree = graph.degree_of(rep);
            for x in class.iter() {
                let dx = graph.degree_of(x);
                if dx != degree {
                    return Err(Error::ClassDegreeMismatch {
                        a: rep,
                        b: x,
                        degree_a: degree,
                        degree_b: dx,
                    });
                }
            }
            Ok(ClassDegree {
                representative: rep,
                size: class.len(),
                degree,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multipartite() {
        let k24 = Graph::from_edges(6, (0..2).flat_map(|i| (2..6).map(move |j| (i, j))));
        assert_eq!(recognize_complete_multipartite(&k24), Some(vec![2, 4]));
        assert_eq!(recognize_complete_multipartite(&Graph::new(3)), Some(vec![3]));
        assert_eq!(recognize_complete_multipartite(&Graph::new(0)), Some(vec![]));
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(recognize_complete_multipartite(&path), None);
        let (a, b, c) = non_transitivity_witness(&path).unwrap();
        assert!(!path.has_edge(a, b) && !path.has_edge(b, c) && path.has_edge(a, c));
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        assert_eq!(recognize_complete_multipartite(&k3), Some(vec![1, 1, 1]));
        assert_eq!(non_transitivity_witness(&k3), None);
    }
}
