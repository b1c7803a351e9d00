//! Independence graphs of finite groups.
//!
//! Two elements of a finite group are adjacent in its independence graph when
//! they lie together in some minimal generating set. This crate builds these
//! graphs (and their size-restricted variants) from explicit multiplication
//! tables, analyzes them with exact graph algorithms, and runs a suite of
//! structural checks over a catalog of small groups.
//!
//! Layout:
//! - [`group`]: multiplication tables, named constructions, subgroup lattice, Frattini subgroup.
//! - [`gensets`]: minimal generating sets, `d(G)`, `m(G)`, relative rank.
//! - [`indigraph`]: the independence graphs, vertex supports and swap graphs.
//! - [`analysis`]: components, planarity with certificates, cliques, Hamiltonicity.
//! - [`verify`]: the check registry, catalog and report.

pub mod analysis;
pub mod context;
pub mod dsu;
pub mod elements;
pub mod error;
pub mod gensets;
pub mod graph;
pub mod group;
pub mod indigraph;
pub mod verify;

pub use context::GroupContext;
pub use elements::ElementSet;
pub use error::{Error, Result};
pub use gensets::MinGenEnumeration;
pub use graph::Graph;
pub use group::{make_named_group, FiniteGroup, Recipe, Subgroup, SubgroupLattice};
pub use indigraph::{GraphKind, IndependenceGraph, VertexSupport};
