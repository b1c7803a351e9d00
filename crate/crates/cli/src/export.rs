//! DOT and JSON forms of independence graphs, plus JSON re-import.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use indigraph_core::{ElementSet, FiniteGroup, GraphKind, IndependenceGraph};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

const PALETTE: [&str; 10] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
];

/// External id and label of each vertex: the element index for element
/// graphs, the tuple index for swap graphs.
fn vertex_labels(ig: &IndependenceGraph, group: &FiniteGroup) -> Vec<(usize, String)> {
    match ig.kind {
        GraphKind::Swap(_) => ig
            .tuples
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let parts: Vec<&str> = t.iter().map(|&x| group.label(x)).collect();
                (i, format!("[{}]", parts.join(", ")))
            })
            .collect(),
        _ => ig.vertices.iter().map(|&g| (g, group.label(g).to_string())).collect(),
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn graph_title(ig: &IndependenceGraph) -> String {
    let base = match (ig.kind, ig.induced) {
        (GraphKind::Full, false) => "Gamma".to_string(),
        (GraphKind::Full, true) => "Delta".to_string(),
        (GraphKind::Rank(u), false) => format!("Gamma_{u}"),
        (GraphKind::Rank(u), true) => format!("Delta_{u}"),
        (GraphKind::Swap(d), _) => format!("Sigma_{d}"),
    };
    format!("{base}({})", ig.group)
}

/// Undirected DOT with element labels. With `classes`, vertices are filled
/// by conjugacy class.
pub fn export_dot(ig: &IndependenceGraph, group: &FiniteGroup, classes: Option<&[ElementSet]>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(&graph_title(ig)));
    let class_of = |g: usize| classes.and_then(|cs| cs.iter().position(|c| c.contains(g)));
    for (id, label) in vertex_labels(ig, group) {
        let colour = match (ig.kind, class_of(id)) {
            (GraphKind::Swap(_), _) | (_, None) => String::new(),
            (_, Some(c)) => format!(", style=filled, fillcolor={}", quote(PALETTE[c % PALETTE.len()])),
        };
        let _ = writeln!(out, "  {id} [label={}{colour}];", quote(&label));
    }
    for (a, b) in element_edges(ig) {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

fn element_edges(ig: &IndependenceGraph) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = ig.element_edges().map(|(a, b)| (a.min(b), a.max(b))).collect();
    e.sort_unstable();
    e
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonVertex {
    pub id: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub group: String,
    pub kind: GraphKind,
    pub induced: bool,
    pub vertices: Vec<JsonVertex>,
    pub edges: Vec<(usize, usize)>,
}

impl JsonGraph {
    pub fn from_graph(ig: &IndependenceGraph, group: &FiniteGroup) -> Self {
        JsonGraph {
            group: ig.group.clone(),
            kind: ig.kind,
            induced: ig.induced,
            vertices: vertex_labels(ig, group)
                .into_iter()
                .map(|(id, label)| JsonVertex { id, label })
                .collect(),
            edges: element_edges(ig),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes") + "\n"
    }

    /// Parses and checks that every edge joins two listed vertices.
    pub fn parse(text: &str) -> CliResult<Self> {
        let g: JsonGraph = serde_json::from_str(text).map_err(|e| CliError::GraphJson(e.to_string()))?;
        let ids: BTreeSet<usize> = g.vertices.iter().map(|v| v.id).collect();
        if ids.len() != g.vertices.len() {
            return Err(CliError::GraphJson("duplicate vertex id".into()));
        }
        if let Some(&(a, b)) = g.edges.iter().find(|(a, b)| a == b || !ids.contains(a) || !ids.contains(b)) {
            return Err(CliError::GraphJson(format!("edge {a}-{b} is a loop or has an unknown end")));
        }
        Ok(g)
    }

    /// Adjacency as a map from vertex id to sorted neighbour ids.
    pub fn adjacency(&self) -> BTreeMap<usize, BTreeSet<usize>> {
        let mut adj: BTreeMap<usize, BTreeSet<usize>> = self.vertices.iter().map(|v| (v.id, BTreeSet::new())).collect();
        for &(a, b) in &self.edges {
            adj.entry(a).or_default().insert(b);
            adj.entry(b).or_default().insert(a);
        }
        adj
    }
}

/// Adjacency of an in-memory graph in the same shape as [`JsonGraph::adjacency`].
pub fn adjacency(ig: &IndependenceGraph) -> BTreeMap<usize, BTreeSet<usize>> {
    let ids: Vec<usize> = match ig.kind {
        GraphKind::Swap(_) => (0..ig.vertex_count()).collect(),
        _ => ig.vertices.clone(),
    };
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = ids.iter().map(|&v| (v, BTreeSet::new())).collect();
    for (a, b) in ig.element_edges() {
        adj.entry(a).or_default().insert(b);
        adj.entry(b).or_default().insert(a);
    }
    adj
}
