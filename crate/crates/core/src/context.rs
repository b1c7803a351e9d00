//! Lazily computed per-group data shared between checks and commands.

use std::sync::OnceLock;

use crate::elements::ElementSet;
use crate::error::Result;
use crate::gensets::{enumerate_min_gen_sets, EnumerationOptions, MinGenEnumeration, DEFAULT_NODE_BUDGET};
use crate::group::{FiniteGroup, StructureFlags, SubgroupLattice, DEFAULT_SUBGROUP_LIMIT};
use crate::indigraph::{independence_graph, vertex_supports, GraphKind, IndependenceGraph, VertexSupport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContextOptions {
    pub subgroup_limit: usize,
    pub node_budget: u64,
}

impl Default for ContextOptions {
    fn default() -> Self {
        ContextOptions {
            subgroup_limit: DEFAULT_SUBGROUP_LIMIT,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

pub struct GroupContext {
    name: String,
    group: FiniteGroup,
    opts: ContextOptions,
    lattice: OnceLock<Result<SubgroupLattice>>,
    flags: OnceLock<StructureFlags>,
    classes: OnceLock<Vec<ElementSet>>,
    enumeration: OnceLock<Result<MinGenEnumeration>>,
    gamma: OnceLock<Result<IndependenceGraph>>,
    delta: OnceLock<Result<IndependenceGraph>>,
    supports: OnceLock<Result<VertexSupport>>,
}

impl GroupContext {
    pub fn new(name: impl Into<String>, group: FiniteGroup) -> Self {
        Self::with_options(name, group, ContextOptions::default())
    }

    pub fn with_options(name: impl Into<String>, group: FiniteGroup, opts: ContextOptions) -> Self {
        GroupContext {
            name: name.into(),
            group,
            opts,
            lattice: OnceLock::new(),
            flags: OnceLock::new(),
            classes: OnceLock::new(),
            enumeration: OnceLock::new(),
            gamma: OnceLock::new(),
            delta: OnceLock::new(),
            supports: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn options(&self) -> ContextOptions {
        self.opts
    }

    pub fn lattice(&self) -> Result<&SubgroupLattice> {
        self.lattice
            .get_or_init(|| SubgroupLattice::build(&self.group, self.opts.subgroup_limit))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn flags(&self) -> StructureFlags {
        *self.flags.get_or_init(|| self.group.structure_flags())
    }

    pub fn classes(&self) -> &[ElementSet] {
        self.classes.get_or_init(|| self.group.class_partition())
    }

    /// Complete enumeration of all minimal generating sets.
    pub fn enumeration(&self) -> Result<&MinGenEnumeration> {
        self.enumeration
            .get_or_init(|| {
                let lat = self.lattice()?;
                let opts = EnumerationOptions {
                    node_budget: self.opts.node_budget,
                    ..Default::default()
                };
                enumerate_min_gen_sets(&self.group, lat, &opts)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn d(&self) -> Result<usize> {
        Ok(self.enumeration()?.d().unwrap_or(0))
    }

    pub fn m(&self) -> Result<usize> {
        Ok(self.enumeration()?.m().unwrap_or(0))
    }

    /// `Γ(G)`.
    pub fn gamma(&self) -> Result<&IndependenceGraph> {
        self.gamma
            .get_or_init(|| independence_graph(self.enumeration()?, GraphKind::Full, false).map(|g| self.named(g)))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `Δ(G)`.
    pub fn delta(&self) -> Result<&IndependenceGraph> {
        self.delta
            .get_or_init(|| independence_graph(self.enumeration()?, GraphKind::Full, true).map(|g| self.named(g)))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Any of `Γ`, `Δ`, `Γ_u`, `Δ_u`, or the swap graph.
    pub fn graph(&self, kind: GraphKind, induced: bool) -> Result<IndependenceGraph> {
        match kind {
            GraphKind::Full if induced => self.delta().cloned(),
            GraphKind::Full => self.gamma().cloned(),
            GraphKind::Rank(_) => independence_graph(self.enumeration()?, kind, induced).map(|g| self.named(g)),
            GraphKind::Swap(d) => {
                let g = crate::indigraph::build_swap_graph(
                    &self.group,
                    self.lattice()?,
                    d,
                    crate::indigraph::DEFAULT_TUPLE_BUDGET,
                    crate::indigraph::DEFAULT_EDGE_BUDGET,
                )?;
                Ok(self.named(g))
            }
        }
    }

    fn named(&self, mut g: IndependenceGraph) -> IndependenceGraph {
        g.group = self.name.clone();
        g
    }

    pub fn supports(&self) -> Result<&VertexSupport> {
        self.supports
            .get_or_init(|| self.enumeration().map(vertex_supports))
            .as_ref()
            .map_err(Clone::clone)
    }
}
