//! Group catalogs: named constructions plus optional ingested tables.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Recipe};

#[derive(Debug, Clone)]
pub enum GroupSource {
    Recipe(Recipe),
    Table(FiniteGroup),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub source: GroupSource,
}

impl CatalogEntry {
    pub fn recipe(name: impl Into<String>, recipe: &str) -> Result<Self> {
        Ok(CatalogEntry {
            name: name.into(),
            source: GroupSource::Recipe(Recipe::parse(recipe)?),
        })
    }

    pub fn table(name: impl Into<String>, group: FiniteGroup) -> Self {
        CatalogEntry {
            name: name.into(),
            source: GroupSource::Table(group),
        }
    }

    pub fn order(&self) -> usize {
        match &self.source {
            GroupSource::Recipe(r) => r.order().unwrap_or(usize::MAX),
            GroupSource::Table(g) => g.order(),
        }
    }

    pub fn as_recipe(&self) -> Option<&Recipe> {
        match &self.source {
            GroupSource::Recipe(r) => Some(r),
            GroupSource::Table(_) => None,
        }
    }

    pub fn build(&self, order_cap: usize) -> Result<FiniteGroup> {
        match &self.source {
            GroupSource::Recipe(r) => r.build(order_cap),
            GroupSource::Table(g) if g.order() > order_cap => Err(Error::OrderTooLarge {
                order: g.order(),
                cap: order_cap,
            }),
            GroupSource::Table(g) => Ok(g.clone()),
        }
    }

    /// Whether the construction is one of `C2×C2`, `C2×C4`, `D4`, `Q8`, `S3`
    /// (up to the obvious alternative constructions). `None` for tables.
    pub fn is_planar_noncyclic_construction(&self) -> Option<bool> {
        self.as_recipe().map(is_small_planar_construction)
    }
}

fn is_small_planar_construction(r: &Recipe) -> bool {
    use Recipe::*;
    match r {
        ElementaryAbelian { p: 2, k: 2 } | Dihedral(2) | Dihedral(3) | Dihedral(4) | Quaternion8 | Symmetric(3) => true,
        Direct(a, b) => matches!(
            (a.as_ref(), b.as_ref()),
            (Cyclic(2), Cyclic(2)) | (Cyclic(2), Cyclic(4)) | (Cyclic(4), Cyclic(2))
        ),
        _ => false,
    }
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

/// Non-cyclic constructions of order at most 48, no two isomorphic.
const NAMED: &[(&str, &str)] = &[
    ("c2xc2", "elementary_abelian(2,2)"),
    ("s3", "symmetric(3)"),
    ("c2xc4", "direct(cyclic(2),cyclic(4))"),
    ("c2xc2xc2", "elementary_abelian(2,3)"),
    ("d4", "dihedral(4)"),
    ("q8", "quaternion8"),
    ("c3xc3", "elementary_abelian(3,2)"),
    ("d5", "dihedral(5)"),
    ("c2xc6", "direct(cyclic(2),cyclic(6))"),
    ("d6", "dihedral(6)"),
    ("a4", "alternating(4)"),
    ("c3:c4", "semidirect_c3_c4"),
    ("d7", "dihedral(7)"),
    ("c2xc8", "direct(cyclic(2),cyclic(8))"),
    ("c4xc4", "direct(cyclic(4),cyclic(4))"),
    ("c2xc2xc4", "direct(elementary_abelian(2,2),cyclic(4))"),
    ("c2^4", "elementary_abelian(2,4)"),
    ("d8", "dihedral(8)"),
    ("c2xd4", "direct(cyclic(2),dihedral(4))"),
    ("c2xq8", "direct(cyclic(2),quaternion8)"),
    ("c3xc6", "direct(cyclic(3),cyclic(6))"),
    ("c3xs3", "direct(cyclic(3),symmetric(3))"),
    ("d9", "dihedral(9)"),
    ("c2xc10", "direct(cyclic(2),cyclic(10))"),
    ("d10", "dihedral(10)"),
    ("c5:c4", "semidirect_c5_c4"),
    ("d11", "dihedral(11)"),
    ("s4", "symmetric(4)"),
    ("c2xa4", "direct(cyclic(2),alternating(4))"),
    ("c2xc12", "direct(cyclic(2),cyclic(12))"),
    ("c2xc2xc6", "direct(elementary_abelian(2,2),cyclic(6))"),
    ("c4xs3", "direct(cyclic(4),symmetric(3))"),
    ("c2xc2xs3", "direct(elementary_abelian(2,2),symmetric(3))"),
    ("c3xd4", "direct(cyclic(3),dihedral(4))"),
    ("c3xq8", "direct(cyclic(3),quaternion8)"),
    ("c2xc3:c4", "direct(cyclic(2),semidirect_c3_c4)"),
    ("d12", "dihedral(12)"),
    ("c5xc5", "elementary_abelian(5,2)"),
    ("c3^3", "elementary_abelian(3,3)"),
    ("c3xc9", "direct(cyclic(3),cyclic(9))"),
    ("d13", "dihedral(13)"),
    ("c2xc14", "direct(cyclic(2),cyclic(14))"),
    ("d14", "dihedral(14)"),
    ("c5xs3", "direct(cyclic(5),symmetric(3))"),
    ("c3xd5", "direct(cyclic(3),dihedral(5))"),
    ("d15", "dihedral(15)"),
    ("c2^5", "elementary_abelian(2,5)"),
    ("c2xc16", "direct(cyclic(2),cyclic(16))"),
    ("c4xc8", "direct(cyclic(4),cyclic(8))"),
    ("c2xc2xc8", "direct(elementary_abelian(2,2),cyclic(8))"),
    ("c2xc2xc2xc4", "direct(elementary_abelian(2,3),cyclic(4))"),
    ("c4xd4", "direct(cyclic(4),dihedral(4))"),
    ("c4xq8", "direct(cyclic(4),quaternion8)"),
    ("c2xc2xq8", "direct(elementary_abelian(2,2),quaternion8)"),
    ("d16", "dihedral(16)"),
    ("d17", "dihedral(17)"),
    ("c6xc6", "direct(cyclic(6),cyclic(6))"),
    ("c2xc18", "direct(cyclic(2),cyclic(18))"),
    ("c3xc12", "direct(cyclic(3),cyclic(12))"),
    ("s3xs3", "direct(symmetric(3),symmetric(3))"),
    ("c3xa4", "direct(cyclic(3),alternating(4))"),
    ("d18", "dihedral(18)"),
    ("d19", "dihedral(19)"),
    ("c2xc20", "direct(cyclic(2),cyclic(20))"),
    ("c2xc2xc10", "direct(elementary_abelian(2,2),cyclic(10))"),
    ("c2xc5:c4", "direct(cyclic(2),semidirect_c5_c4)"),
    ("d20", "dihedral(20)"),
    ("d21", "dihedral(21)"),
    ("c7xs3", "direct(cyclic(7),symmetric(3))"),
    ("c3xd7", "direct(cyclic(3),dihedral(7))"),
    ("d22", "dihedral(22)"),
    ("c2xc22", "direct(cyclic(2),cyclic(22))"),
    ("d23", "dihedral(23)"),
    ("c2xs4", "direct(cyclic(2),symmetric(4))"),
    ("c4xa4", "direct(cyclic(4),alternating(4))"),
    ("c4xc12", "direct(cyclic(4),cyclic(12))"),
    ("c2xc24", "direct(cyclic(2),cyclic(24))"),
    ("c2xc2xc12", "direct(elementary_abelian(2,2),cyclic(12))"),
    ("c2^4xc3", "direct(elementary_abelian(2,4),cyclic(3))"),
    ("d4xs3", "direct(dihedral(4),symmetric(3))"),
    ("q8xs3", "direct(quaternion8,symmetric(3))"),
    ("c2xc2xc2xs3", "direct(elementary_abelian(2,3),symmetric(3))"),
    ("d24", "dihedral(24)"),
    // insoluble probes
    ("a5", "alternating(5)"),
];

/// Largest cyclic group in the default catalog.
pub const DEFAULT_CYCLIC_CAP: usize = 210;

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// `C_n` for `n <= 210` and the named non-cyclic constructions.
    pub fn default_catalog() -> Self {
        let mut c = Catalog::new();
        for n in 1..=DEFAULT_CYCLIC_CAP {
            c.push(CatalogEntry::recipe(format!("c{n}"), &format!("cyclic({n})")).expect("valid recipe"))
                .expect("unique name");
        }
        for (name, recipe) in NAMED {
            c.push(CatalogEntry::recipe(*name, recipe).expect("valid recipe")).expect("unique name");
        }
        c
    }

    pub fn push(&mut self, entry: CatalogEntry) -> Result<()> {
        if self.get(&entry.name).is_some() {
            return Err(Error::PreconditionViolated(format!("duplicate catalog name {}", entry.name)));
        }
        self.entries.push(entry);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Keeps only the named entries (unknown names are an error).
    pub fn select(&self, names: &[&str]) -> Result<Catalog> {
        let wanted: HashSet<&str> = names.iter().copied().collect();
        for n in &wanted {
            if self.get(n).is_none() {
                return Err(Error::PreconditionViolated(format!("no catalog entry named {n}")));
            }
        }
        Ok(Catalog {
            entries: self.entries.iter().filter(|e| wanted.contains(e.name.as_str())).cloned().collect(),
        })
    }
}
