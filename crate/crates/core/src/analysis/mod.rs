//! Exact analyses of independence graphs.

pub mod clique;
pub mod components;
pub mod hamiltonian;
pub mod planarity;
pub mod structure;

use serde::Serialize;

pub use clique::{clique_number, independence_number, is_clique, is_independent, DEFAULT_CLIQUE_BUDGET};
pub use components::{components, is_connected};
pub use hamiltonian::{
    components_without, dirac_holds, hamiltonian_cycle, is_hamiltonian_cycle, separator_witness, HamiltonResult,
    DEFAULT_HAMILTON_BUDGET,
};
pub use planarity::{is_planar, planarity, KuratowskiKind, KuratowskiSubdivision, Planarity, PlanarityCertificate};
pub use structure::{class_degrees, complete_multipartite_parts, recognize_complete_multipartite, ClassDegree};

use crate::elements::ElementSet;
use crate::error::Result;
use crate::indigraph::{GraphKind, IndependenceGraph};

#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    pub clique_budget: u64,
    pub hamilton_budget: u64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            clique_budget: DEFAULT_CLIQUE_BUDGET,
            hamilton_budget: DEFAULT_HAMILTON_BUDGET,
        }
    }
}

/// Full analysis of one graph. Every vertex reference is an element index
/// (or a tuple index for swap graphs).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub group: String,
    pub kind: GraphKind,
    pub induced: bool,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub components: Vec<Vec<usize>>,
    pub planar: bool,
    pub planarity: PlanarityCertificate,
    pub clique_number: usize,
    pub clique: Vec<usize>,
    pub independence_number: usize,
    pub independent_set: Vec<usize>,
    /// `None` below three vertices.
    pub hamiltonian: Option<HamiltonResult>,
    pub multipartite: Option<Vec<usize>>,
    pub degrees: Vec<(usize, usize)>,
    pub class_degrees: Option<Vec<ClassDegree>>,
}

fn relabel(ig: &IndependenceGraph, vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|&v| ig.vertices[v]).collect()
}

pub fn analyze(ig: &IndependenceGraph, classes: Option<&[ElementSet]>, opts: &AnalysisOptions) -> Result<GraphReport> {
    let g = &ig.graph;
    let comps = components(g).iter().map(|c| relabel(ig, c)).collect();
    let plan = planarity(g);
    let certificate = match plan.certificate {
        PlanarityCertificate::Embedding { rotation } => PlanarityCertificate::Embedding {
            rotation: rotation.iter().map(|r| relabel(ig, r)).collect(),
        },
        PlanarityCertificate::Kuratowski(k) => PlanarityCertificate::Kuratowski(KuratowskiSubdivision {
            kind: k.kind,
            branch: relabel(ig, &k.branch),
            paths: k.paths.iter().map(|p| relabel(ig, p)).collect(),
        }),
    };
    let (omega, clique) = clique_number(g, opts.clique_budget)?;
    let (alpha, indep) = independence_number(g, opts.clique_budget)?;
    let hamiltonian = if g.vertex_count() >= 3 {
        Some(match hamiltonian_cycle(g, opts.hamilton_budget)? {
            HamiltonResult::Yes(c) => HamiltonResult::Yes(relabel(ig, &c)),
            other => other,
        })
    } else {
        None
    };
    let class_degrees = match (classes, ig.kind) {
        (Some(c), GraphKind::Full | GraphKind::Rank(_)) => Some(class_degrees(ig, c)?),
        _ => None,
    };
    Ok(GraphReport {
        group: ig.group.clone(),
        kind: ig.kind,
        induced: ig.induced,
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        components: comps,
        planar: plan.planar,
        planarity: certificate,
        clique_number: omega,
        clique: relabel(ig, &clique),
        independence_number: alpha,
        independent_set: relabel(ig, &indep),
        hamiltonian,
        multipartite: recognize_complete_multipartite(g),
        degrees: (0..g.vertex_count()).map(|v| (ig.vertices[v], g.degree(v))).collect(),
        class_degrees,
    })
}
