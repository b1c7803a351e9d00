//! Minimal generating sets: enumeration of `Ω_u(G)`, the ranks `d(G)` and
//! `m(G)`, relative rank `d_X(G)` and refinement witnesses.
//!
//! The enumeration is a canonical-order backtracking over increasing element
//! indices. A partial set survives only while it is independent modulo the
//! Frattini subgroup: no member lies in `⟨rest⟩·Frat(G)`. Every subset of a
//! minimal generating set has that property, so the pruning is exact. All
//! subgroup closures are lookups in the lattice join table.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SubgroupLattice};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Largest set size explored; defaults to `ceil(log2 |G|) + 1`.
    pub size_cap: Option<usize>,
    /// Only collect sets of this size.
    pub size_filter: Option<usize>,
    pub node_budget: u64,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            size_cap: None,
            size_filter: None,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

pub fn default_size_cap(order: usize) -> usize {
    let mut bits = 0;
    while (1usize << bits) < order {
        bits += 1;
    }
    bits + 1
}

/// Sets of one size stored back to back.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct FlatSets {
    count: usize,
    data: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinGenEnumeration {
    pub group: String,
    pub order: usize,
    pub size_filter: Option<usize>,
    pub size_cap: usize,
    /// False when the node budget ran out or the size cap was reached by a
    /// non-generating independent set.
    pub complete: bool,
    pub cap_sufficient: bool,
    pub nodes: u64,
    by_size: BTreeMap<usize, FlatSets>,
}

impl MinGenEnumeration {
    /// Sizes with at least one set, ascending.
    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_size.iter().filter(|(_, f)| f.count > 0).map(|(&u, _)| u)
    }

    pub fn count(&self, u: usize) -> usize {
        self.by_size.get(&u).map_or(0, |f| f.count)
    }

    pub fn counts_by_size(&self) -> BTreeMap<usize, usize> {
        self.sizes().map(|u| (u, self.count(u))).collect()
    }

    pub fn total(&self) -> usize {
        self.by_size.values().map(|f| f.count).sum()
    }

    /// Sets of size `u`, each sorted ascending, in lexicographic order.
    pub fn sets(&self, u: usize) -> impl Iterator<Item = &[u32]> + '_ {
        let f = self.by_size.get(&u);
        let count = f.map_or(0, |f| f.count);
        (0..count).map(move |i| &f.unwrap().data[i * u..(i + 1) * u])
    }

    pub fn all_sets(&self) -> impl Iterator<Item = (usize, &[u32])> + '_ {
        self.sizes().flat_map(move |u| self.sets(u).map(move |s| (u, s)))
    }

    pub fn element_set(&self, u: usize, i: usize) -> Option<ElementSet> {
        self.sets(u)
            .nth(i)
            .map(|s| ElementSet::from_elements(self.order, s.iter().map(|&x| x as usize)))
    }

    /// `d(G)`; meaningful for unfiltered enumerations.
    pub fn d(&self) -> Option<usize> {
        self.sizes().next()
    }

    /// `m(G)`; meaningful for unfiltered enumerations.
    pub fn m(&self) -> Option<usize> {
        self.sizes().last()
    }
}

struct Search<'a> {
    lat: &'a SubgroupLattice,
    n: usize,
    cap: usize,
    filter: Option<usize>,
    budget: u64,
    nodes: &'a AtomicU64,
    exhausted: bool,
    cap_hit: bool,
    chosen: Vec<usize>,
    found: BTreeMap<usize, FlatSets>,
    collect: bool,
    largest: usize,
}

impl Search<'_> {
    /// `full` is `⟨chosen⟩`, `excl[i]` is `⟨chosen minus chosen[i]⟩`.
    fn extend(&mut self, full: usize, excl: &[usize], from: usize) {
        let lat = self.lat;
        let whole = lat.whole();
        let full_frat = lat.join_frattini(full);
        let mut new_excl = vec![0usize; excl.len() + 1];
        for g in from..self.n {
            if self.exhausted {
                return;
            }
            if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
                self.exhausted = true;
                return;
            }
            if lat.contains(full_frat, g) {
                continue;
            }
            let mut independent = true;
            for (i, &h) in excl.iter().enumerate() {
                let e = lat.join(h, g);
                if lat.contains(lat.join_frattini(e), self.chosen[i]) {
                    independent = false;
                    break;
                }
                new_excl[i] = e;
            }
            if !independent {
                continue;
            }
            new_excl[excl.len()] = full;
            let new_full = lat.join(full, g);
            let size = self.chosen.len() + 1;
            self.chosen.push(g);
            if new_full == whole {
                if self.filter.is_none_or(|u| u == size) {
                    self.largest = self.largest.max(size);
                    if self.collect {
                        let f = self.found.entry(size).or_default();
                        f.count += 1;
                        f.data.extend(self.chosen.iter().map(|&x| x as u32));
                    }
                }
            } else if size < self.cap {
                let snapshot = new_excl.clone();
                self.extend(new_full, &snapshot, g + 1);
            } else if self.filter.is_none() {
                // an independent non-generating set at the cap: larger minimal
                // generating sets could exist beyond it
                self.cap_hit = true;
            }
            self.chosen.pop();
        }
    }
}

struct RawResult {
    found: BTreeMap<usize, FlatSets>,
    exhausted: bool,
    cap_hit: bool,
    largest: usize,
    nodes: u64,
}

fn run_search(lat: &SubgroupLattice, order: usize, opts: &EnumerationOptions, collect: bool) -> RawResult {
    let cap = opts
        .size_filter
        .unwrap_or_else(|| opts.size_cap.unwrap_or_else(|| default_size_cap(order)));
    let nodes = AtomicU64::new(0);

    if order == 1 {
        // the empty set is the unique minimal generating set of the trivial group
        let mut found = BTreeMap::new();
        if opts.size_filter.is_none_or(|u| u == 0) && collect {
            found.insert(0, FlatSets { count: 1, data: vec![] });
        }
        return RawResult {
            found,
            exhausted: false,
            cap_hit: false,
            largest: 0,
            nodes: 0,
        };
    }

    // partition on the least element of the set; concatenating partitions in
    // order keeps the global lexicographic order
    let parts: Vec<(BTreeMap<usize, FlatSets>, bool, bool, usize)> = (0..order)
        .into_par_iter()
        .map(|first| {
            let mut s = Search {
                lat,
                n: order,
                cap,
                filter: opts.size_filter,
                budget: opts.node_budget,
                nodes: &nodes,
                exhausted: false,
                cap_hit: false,
                chosen: Vec::new(),
                found: BTreeMap::new(),
                collect,
                largest: 0,
            };
            s.extend_first(first);
            (s.found, s.exhausted, s.cap_hit, s.largest)
        })
        .collect();

    let mut found: BTreeMap<usize, FlatSets> = BTreeMap::new();
    let (mut exhausted, mut cap_hit, mut largest) = (false, false, 0);
    for (part, ex, ch, lg) in parts {
        exhausted |= ex;
        cap_hit |= ch;
        largest = largest.max(lg);
        for (u, f) in part {
            let slot = found.entry(u).or_default();
            slot.count += f.count;
            slot.data.extend(f.data);
        }
    }
    RawResult {
        found,
        exhausted,
        cap_hit,
        largest,
        nodes: nodes.into_inner(),
    }
}

impl Search<'_> {
    fn extend_first(&mut self, first: usize) {
        // same step as `extend` from the empty set, restricted to one element
        let lat = self.lat;
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.exhausted = true;
            return;
        }
        if lat.contains(lat.frattini_id(), first) {
            return;
        }
        let full = lat.join(lat.trivial(), first);
        self.chosen.push(first);
        if full == lat.whole() {
            if self.filter.is_none_or(|u| u == 1) {
                self.largest = self.largest.max(1);
                if self.collect {
                    let f = self.found.entry(1).or_default();
                    f.count += 1;
                    f.data.push(first as u32);
                }
            }
        } else if 1 < self.cap {
            self.extend(full, &[lat.trivial()], first + 1);
        } else if self.filter.is_none() {
            self.cap_hit = true;
        }
        self.chosen.pop();
    }
}

/// Enumerates `Ω_u(G)` for all `u` (or one `u` with a size filter).
pub fn enumerate_min_gen_sets(
    group: &FiniteGroup,
    lat: &SubgroupLattice,
    opts: &EnumerationOptions,
) -> Result<MinGenEnumeration> {
    let raw = run_search(lat, group.order(), opts, true);
    let size_cap = opts
        .size_filter
        .unwrap_or_else(|| opts.size_cap.unwrap_or_else(|| default_size_cap(group.order())));
    let e = MinGenEnumeration {
        group: group.origin().to_string(),
        order: group.order(),
        size_filter: opts.size_filter,
        size_cap,
        complete: !raw.exhausted && !raw.cap_hit,
        cap_sufficient: !raw.cap_hit,
        nodes: raw.nodes,
        by_size: raw.found,
    };
    if raw.exhausted {
        return Err(Error::BudgetExceeded {
            what: "minimal generating set enumeration nodes",
            limit: opts.node_budget,
            partial: Some(Box::new(e)),
        });
    }
    if raw.cap_hit {
        return Err(Error::PreconditionViolated(format!(
            "size cap {size_cap} reached by an independent non-generating set"
        )));
    }
    Ok(e)
}

/// `(d(G), m(G))` without storing the sets.
pub fn rank_bounds(group: &FiniteGroup, lat: &SubgroupLattice, node_budget: u64) -> Result<(usize, usize)> {
    let d = lat.relative_rank_from(lat.trivial());
    let opts = EnumerationOptions {
        node_budget,
        ..Default::default()
    };
    let raw = run_search(lat, group.order(), &opts, false);
    if raw.exhausted {
        return Err(Error::budget("minimal generating set enumeration nodes", node_budget));
    }
    Ok((d, raw.largest))
}

pub fn is_generating(group: &FiniteGroup, x: &[usize]) -> bool {
    group.generates(x)
}

/// Generates, and no single deletion generates.
pub fn is_minimal_generating(group: &FiniteGroup, x: &[usize]) -> bool {
    if !group.generates(x) {
        return false;
    }
    (0..x.len()).all(|i| {
        let rest: Vec<usize> = x.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
        !group.generates(&rest)
    })
}

/// Same test through the lattice join table.
pub fn is_minimal_generating_in(lat: &SubgroupLattice, x: &[usize]) -> bool {
    if lat.generated(x) != lat.whole() {
        return false;
    }
    (0..x.len()).all(|i| {
        let h = x
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(lat.trivial(), |h, (_, &v)| lat.join(h, v));
        h != lat.whole()
    })
}

/// `d_X(G)`: fewest extra elements generating `G` together with `x`.
pub fn relative_rank(lat: &SubgroupLattice, x: &[usize]) -> usize {
    lat.relative_rank_from(lat.generated(x))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TarskiWitness {
    /// The minimal generating set `{g_1, ..., g_k}`, ascending.
    pub set: Vec<usize>,
    /// Position in `set` of the element that splits.
    pub index: usize,
    pub x1: usize,
    pub x2: usize,
    /// `set` with `g_index` replaced by `x1, x2`, ascending; minimal generating of size `k + 1`.
    pub refined: Vec<usize>,
}

/// Searches `Ω_k(G)` for a set with an element `g_i = x1 x2` whose
/// replacement by `x1, x2` is again minimal generating.
///
/// `enumeration` must be a complete unfiltered enumeration of the group.
pub fn tarski_witness(
    group: &FiniteGroup,
    lat: &SubgroupLattice,
    enumeration: &MinGenEnumeration,
    k: usize,
) -> Result<Option<TarskiWitness>> {
    let (d, m) = match (enumeration.d(), enumeration.m()) {
        (Some(d), Some(m)) => (d, m),
        _ => return Err(Error::PreconditionViolated("empty enumeration".into())),
    };
    if !(d <= k && k < m) {
        return Err(Error::PreconditionViolated(format!("k = {k} outside [d, m) = [{d}, {m})")));
    }
    let n = group.order();
    for set in enumeration.sets(k) {
        let set: Vec<usize> = set.iter().map(|&x| x as usize).collect();
        for (i, &gi) in set.iter().enumerate() {
            let rest: Vec<usize> = set.iter().copied().filter(|&y| y != gi).collect();
            for x1 in 0..n {
                let x2 = group.mul(group.inv(x1), gi);
                if x1 == x2 || rest.contains(&x1) || rest.contains(&x2) {
                    continue;
                }
                let mut refined = rest.clone();
                refined.push(x1);
                refined.push(x2);
                if is_minimal_generating_in(lat, &refined) {
                    refined.sort_unstable();
                    return Ok(Some(TarskiWitness {
                        set: set.clone(),
                        index: i,
                        x1,
                        x2,
                        refined,
                    }));
                }
            }
        }
    }
    Ok(None)
}
