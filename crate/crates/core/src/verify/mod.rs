//! The claims suite: named checks run over a catalog of groups.

pub mod catalog;
mod checks;
pub mod report;
pub mod s4;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

pub use catalog::{Catalog, CatalogEntry, GroupSource, DEFAULT_CYCLIC_CAP};
pub use checks::{cyclic_planarity_predicate, Outcome};
pub use report::{ReportEntry, Status, VerificationReport};

use crate::context::{ContextOptions, GroupContext};
use crate::error::Error;
use crate::group::Recipe;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    ConnectivityMain,
    ConnectivityRankU,
    ConnectivityRankUProbe,
    SwapConnectivity,
    IsolatedCharacterization,
    EdgeLift,
    TarskiRange,
    PlanarityCyclic,
    PlanarityNoncyclic,
    PlanarityQuotientLemma,
    S4Tables,
    S4Extremal,
    WSet,
    DegreeDivisibilityProbe,
    HamiltonianNilpotent,
    HamiltonianProbe,
    C5C4Golden,
}

impl CheckId {
    pub const ALL: [CheckId; 17] = [
        CheckId::ConnectivityMain,
        CheckId::ConnectivityRankU,
        CheckId::ConnectivityRankUProbe,
        CheckId::SwapConnectivity,
        CheckId::IsolatedCharacterization,
        CheckId::EdgeLift,
        CheckId::TarskiRange,
        CheckId::PlanarityCyclic,
        CheckId::PlanarityNoncyclic,
        CheckId::PlanarityQuotientLemma,
        CheckId::S4Tables,
        CheckId::S4Extremal,
        CheckId::WSet,
        CheckId::DegreeDivisibilityProbe,
        CheckId::HamiltonianNilpotent,
        CheckId::HamiltonianProbe,
        CheckId::C5C4Golden,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::ConnectivityMain => "connectivity-main",
            CheckId::ConnectivityRankU => "connectivity-rank-u",
            CheckId::ConnectivityRankUProbe => "connectivity-rank-u-probe",
            CheckId::SwapConnectivity => "swap-connectivity",
            CheckId::IsolatedCharacterization => "isolated-characterization",
            CheckId::EdgeLift => "edge-lift",
            CheckId::TarskiRange => "tarski-range",
            CheckId::PlanarityCyclic => "planarity-cyclic",
            CheckId::PlanarityNoncyclic => "planarity-noncyclic",
            CheckId::PlanarityQuotientLemma => "planarity-quotient-lemma",
            CheckId::S4Tables => "s4-tables",
            CheckId::S4Extremal => "s4-extremal",
            CheckId::WSet => "w-set",
            CheckId::DegreeDivisibilityProbe => "degree-divisibility-probe",
            CheckId::HamiltonianNilpotent => "hamiltonian-nilpotent",
            CheckId::HamiltonianProbe => "hamiltonian-probe",
            CheckId::C5C4Golden => "c5c4-golden",
        }
    }

    /// Probes report observations and never pass or fail.
    pub fn is_probe(self) -> bool {
        matches!(
            self,
            CheckId::ConnectivityRankUProbe | CheckId::DegreeDivisibilityProbe | CheckId::HamiltonianProbe
        )
    }

    /// Comma-separated check names, or `all`.
    pub fn parse_list(text: &str) -> Result<Vec<CheckId>, Error> {
        if text.trim() == "all" {
            return Ok(Self::ALL.to_vec());
        }
        let mut out: Vec<CheckId> = text.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown check {s}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Groups above this order are left out, except for the two caps below.
    pub max_order: usize,
    /// Cyclic groups up to this order still take part in `planarity-cyclic`.
    pub cyclic_max_order: usize,
    /// Groups up to this order still take part in the probes.
    pub probe_max_order: usize,
    pub subgroup_limit: usize,
    pub node_budget: u64,
    pub tuple_budget: u64,
    pub clique_budget: u64,
    pub hamilton_budget: u64,
    /// Edge lifting is exhaustive up to this order and sampled above it.
    pub edge_lift_exhaustive_order: usize,
    pub edge_lift_samples: usize,
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 48,
            cyclic_max_order: DEFAULT_CYCLIC_CAP,
            probe_max_order: 60,
            subgroup_limit: crate::group::DEFAULT_SUBGROUP_LIMIT,
            node_budget: crate::gensets::DEFAULT_NODE_BUDGET,
            tuple_budget: crate::indigraph::DEFAULT_TUPLE_BUDGET,
            clique_budget: crate::analysis::DEFAULT_CLIQUE_BUDGET,
            hamilton_budget: crate::analysis::DEFAULT_HAMILTON_BUDGET,
            edge_lift_exhaustive_order: 24,
            edge_lift_samples: 1000,
            seed: 0x5eed,
        }
    }
}

impl Limits {
    /// Checks an entry of this order takes part in.
    fn scope(&self, entry: &CatalogEntry, checks: &[CheckId]) -> Vec<CheckId> {
        let order = entry.order();
        let cyclic = matches!(entry.as_recipe(), Some(Recipe::Cyclic(_)));
        checks
            .iter()
            .copied()
            .filter(|&c| {
                order <= self.max_order
                    || (c == CheckId::PlanarityCyclic && cyclic && order <= self.cyclic_max_order)
                    || (c.is_probe() && !cyclic && order <= self.probe_max_order)
            })
            .collect()
    }
}

/// Runs `checks` over every catalog group in scope. Groups run in parallel;
/// entries are sorted by group order, name, then check.
pub fn run_suite(catalog: &Catalog, checks: &[CheckId], limits: &Limits) -> VerificationReport {
    let mut rows: Vec<(usize, String, CheckId, ReportEntry)> = catalog
        .entries()
        .par_iter()
        .flat_map_iter(|entry| run_group(entry, checks, limits))
        .collect();
    rows.sort_by(|a, b| (a.0, &a.1, a.2).cmp(&(b.0, &b.1, b.2)));
    VerificationReport {
        entries: rows.into_iter().map(|r| r.3).collect(),
    }
}

fn run_group(entry: &CatalogEntry, checks: &[CheckId], limits: &Limits) -> Vec<(usize, String, CheckId, ReportEntry)> {
    let scope = limits.scope(entry, checks);
    if scope.is_empty() {
        return Vec::new();
    }
    let order = entry.order();
    let make = |check: CheckId, outcome: Outcome, ms: u64| {
        (
            order,
            entry.name.clone(),
            check,
            ReportEntry {
                group: entry.name.clone(),
                order,
                check: check.name().to_string(),
                status: outcome.status,
                witness: outcome.witness,
                elapsed_ms: ms,
            },
        )
    };
    let cap = limits.max_order.max(limits.cyclic_max_order).max(limits.probe_max_order);
    let group = match entry.build(cap) {
        Ok(g) => g,
        Err(e) => {
            return scope
                .into_iter()
                .map(|c| make(c, Outcome::new(Status::Fail, json!({ "error": e.to_string() })), 0))
                .collect()
        }
    };
    let ctx = GroupContext::with_options(
        entry.name.clone(),
        group,
        ContextOptions {
            subgroup_limit: limits.subgroup_limit,
            node_budget: limits.node_budget,
        },
    );
    scope
        .into_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = checks::run(c, &ctx, entry, limits);
            make(c, outcome, start.elapsed().as_millis() as u64)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
        }
        assert_eq!(CheckId::parse_list("all").unwrap().len(), 17);
        assert_eq!(
            CheckId::parse_list("edge-lift, connectivity-main").unwrap(),
            vec![CheckId::ConnectivityMain, CheckId::EdgeLift]
        );
        assert!(CheckId::parse_list("nope").is_err());
    }

    #[test]
    fn c8_cyclic_planarity_passes() {
        let cat = Catalog::default_catalog().select(&["c8"]).unwrap();
        let r = run_suite(&cat, &[CheckId::PlanarityCyclic], &Limits::default());
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.entries[0].status, Status::Pass);
    }

    #[test]
    fn d6_divisibility_observation() {
        let cat = Catalog::default_catalog().select(&["d6"]).unwrap();
        let r = run_suite(&cat, &[CheckId::DegreeDivisibilityProbe], &Limits::default());
        let e = &r.entries[0];
        assert_eq!(e.status, Status::Observation);
        let at3 = e.witness["per_u"].as_array().unwrap().iter().find(|x| x["u"] == 3).unwrap();
        let cex = at3["counterexamples"].as_array().unwrap();
        assert!(cex.iter().any(|c| c["label"] == "a^2" && c["order"] == 3 && c["degree"] == 7));
    }

    #[test]
    fn scope_rules() {
        let cat = Catalog::default_catalog().select(&["c100", "a5", "c2xc2"]).unwrap();
        let r = run_suite(&cat, &CheckId::ALL, &Limits::default());
        assert!(r.entries.iter().filter(|e| e.group == "c100").all(|e| e.check == "planarity-cyclic"));
        assert!(r.entries.iter().filter(|e| e.group == "a5").all(|e| CheckId::from_str(&e.check).unwrap().is_probe()));
        assert_eq!(r.entries.iter().filter(|e| e.group == "c2xc2").count(), 17);
        assert!(!r.has_failures(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
