//! Finite groups given by explicit multiplication tables.
//!
//! Elements are dense indices `0..n` with the identity normalized to index 0.
//! Everything above this module (lattice, generating sets, graphs) works on
//! these indices and only consults labels for presentation.

mod lattice;
pub mod named;

use std::collections::VecDeque;

use serde::Serialize;

pub use lattice::{SubgroupLattice, DEFAULT_SUBGROUP_LIMIT};
pub use named::{make_named_group, Recipe, DEFAULT_ORDER_CAP};

use crate::elements::ElementSet;
use crate::error::{Error, Result};

/// Orders up to this bound get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_BOUND: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    origin: String,
}

/// A subgroup together with the flags the rest of the crate relies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: ElementSet,
    /// Some generating set, not necessarily minimal.
    pub generators: Vec<usize>,
    pub is_normal: bool,
    pub is_maximal: bool,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.contains(g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub is_soluble: bool,
    pub is_nilpotent: bool,
    pub is_cyclic: bool,
    pub is_abelian: bool,
}

impl FiniteGroup {
    /// Validates a Cayley table and relocates its identity to index 0.
    ///
    /// Labels, when given, follow the input indexing and are permuted along
    /// with the elements. Missing labels default to the input index.
    pub fn from_cayley_table(
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
        origin: impl Into<String>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedTable {
                line: None,
                reason: "empty table".into(),
            });
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable {
                    line: None,
                    reason: format!("row {r} has {} entries, expected {n}", row.len()),
                });
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::MalformedTable {
                    line: None,
                    reason: format!("row {r} has entry {bad} outside 0..{n}"),
                });
            }
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::MalformedTable {
                    line: None,
                    reason: format!("{} labels for {n} elements", l.len()),
                });
            }
        }

        let e = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(Error::NoIdentity)?;

        let mut inv = vec![0usize; n];
        for (g, slot) in inv.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&h| table[g][h] == e && table[h][g] == e)
                .ok_or(Error::NoInverse { element: g })?;
        }

        check_associativity(n, |a, b| table[a][b])?;

        // new index of old element: identity first, the rest keep their order
        let mut to_new = vec![0usize; n];
        let mut to_old = Vec::with_capacity(n);
        to_old.push(e);
        to_old.extend((0..n).filter(|&g| g != e));
        for (new, &old) in to_old.iter().enumerate() {
            to_new[old] = new;
        }

        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = to_new[table[to_old[a]][to_old[b]]] as u32;
            }
        }
        let inv = (0..n).map(|a| to_new[inv[to_old[a]]] as u32).collect();
        let labels = match labels {
            Some(l) => to_old.iter().map(|&o| l[o].clone()).collect(),
            None => to_old.iter().map(|o| o.to_string()).collect(),
        };
        Ok(FiniteGroup {
            order: n,
            mul,
            inv,
            labels,
            origin: origin.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g] as usize
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn origin(&self) -> &str {
        &self.origin
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The multiplication table as rows, `row g` giving `g*0, g*1, ...`.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn conjugate(&self, x: usize, by: usize) -> usize {
        // by * x * by^-1
        self.mul(self.mul(by, x), self.inv(by))
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        // x^-1 y^-1 x y
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    /// Least `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Orbit closure of `{e}` under right multiplication by `gens`.
    pub fn closure_set(&self, gens: &[usize]) -> ElementSet {
        let mut seen = ElementSet::from_elements(self.order, [0]);
        let mut gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.mul(x, s);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Smallest subgroup containing `x`, with normality and maximality computed directly.
    pub fn closure(&self, x: &ElementSet) -> Subgroup {
        let generators: Vec<usize> = x.iter().collect();
        let elements = self.closure_set(&generators);
        let is_normal = self.is_normal_set(&elements);
        let is_maximal = elements.len() < self.order
            && (0..self.order)
                .filter(|&g| !elements.contains(g))
                .all(|g| {
                    let mut gens = generators.clone();
                    gens.push(g);
                    self.closure_set(&gens).len() == self.order
                });
        Subgroup {
            elements,
            generators,
            is_normal,
            is_maximal,
        }
    }

    pub fn generates(&self, x: &[usize]) -> bool {
        self.closure_set(x).len() == self.order
    }

    pub(crate) fn normality_witness(&self, set: &ElementSet) -> Option<(usize, usize, usize)> {
        for g in 0..self.order {
            for n in set.iter() {
                let c = self.conjugate(n, g);
                if !set.contains(c) {
                    return Some((n, g, c));
                }
            }
        }
        None
    }

    pub fn is_normal_set(&self, set: &ElementSet) -> bool {
        self.normality_witness(set).is_none()
    }

    pub fn derived_subgroup_of(&self, h: &ElementSet) -> ElementSet {
        let elems: Vec<usize> = h.iter().collect();
        let mut comms = Vec::new();
        for &x in &elems {
            for &y in &elems {
                comms.push(self.commutator(x, y));
            }
        }
        self.closure_set(&comms)
    }

    /// `[h, G]`, the next term of the lower central series when `h` is normal.
    fn commutator_with_whole(&self, h: &ElementSet) -> ElementSet {
        let mut comms = Vec::new();
        for x in h.iter() {
            for y in 0..self.order {
                comms.push(self.commutator(x, y));
            }
        }
        self.closure_set(&comms)
    }

    pub fn structure_flags(&self) -> StructureFlags {
        let whole = ElementSet::full(self.order);

        let mut term = whole.clone();
        let is_soluble = loop {
            if term.len() == 1 {
                break true;
            }
            let next = self.derived_subgroup_of(&term);
            if next.len() == term.len() {
                break false;
            }
            term = next;
        };

        let mut term = whole;
        let is_nilpotent = loop {
            if term.len() == 1 {
                break true;
            }
            let next = self.commutator_with_whole(&term);
            if next.len() == term.len() {
                break false;
            }
            term = next;
        };

        let is_cyclic = (0..self.order).any(|g| self.element_order(g) == self.order);
        StructureFlags {
            is_soluble,
            is_nilpotent,
            is_cyclic,
            is_abelian: self.is_abelian(),
        }
    }

    /// Conjugacy classes ordered by their least element.
    pub fn class_partition(&self) -> Vec<ElementSet> {
        let mut assigned = ElementSet::empty(self.order);
        let mut classes = Vec::new();
        for g in 0..self.order {
            if assigned.contains(g) {
                continue;
            }
            let class = ElementSet::from_elements(self.order, (0..self.order).map(|h| self.conjugate(g, h)));
            assigned.union_with(&class);
            classes.push(class);
        }
        classes
    }

    /// Quotient by a normal subgroup; returns the group on cosets and the projection.
    ///
    /// Cosets are indexed by ascending least representative, so the identity
    /// coset is index 0 and the quotient table needs no relabeling.
    pub fn quotient(&self, normal: &ElementSet) -> Result<(FiniteGroup, Vec<usize>)> {
        if !normal.contains(0) {
            return Err(Error::PreconditionViolated("subgroup must contain the identity".into()));
        }
        if let Some((n, g, conjugate)) = self.normality_witness(normal) {
            return Err(Error::NotNormal { n, g, conjugate });
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if projection[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for x in normal.iter() {
                projection[self.mul(g, x)] = idx;
            }
        }
        let k = reps.len();
        let table: Vec<Vec<usize>> = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| projection[self.mul(a, b)]).collect())
            .collect();
        let labels = reps
            .iter()
            .map(|&r| if normal.len() == 1 { self.labels[r].clone() } else { format!("{}N", self.labels[r]) })
            .collect();
        let q = FiniteGroup::from_cayley_table(&table, Some(labels), format!("{}/N[{}]", self.origin, normal.len()))?;
        debug_assert_eq!(q.order(), k);
        Ok((q, projection))
    }
}

fn check_associativity(n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<()> {
    let check = |a: usize, b: usize, c: usize| {
        let left = mul(mul(a, b), c);
        let right = mul(a, mul(b, c));
        if left != right {
            Err(Error::NotAssociative { a, b, c, left, right })
        } else {
            Ok(())
        }
    };
    if n <= EXHAUSTIVE_ASSOCIATIVITY_BOUND {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        // Light-style sampling with a fixed linear congruential sequence
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % n
        };
        for _ in 0..(1 << 20) {
            let (a, b, c) = (next(), next(), next());
            check(a, b, c)?;
        }
    }
    Ok(())
}
