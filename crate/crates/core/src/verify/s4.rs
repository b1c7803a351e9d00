//! Neighbour tables of `Γ_2`, `Γ_3` and `Γ` for `Sym(4)`, written per
//! conjugacy class representative and expanded to element sets.

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::indigraph::GraphKind;

/// Class of cycle type: `X2`, `X3`, `X4` (i-cycles) or `Y` (double transpositions).
pub fn cycle_class(group: &FiniteGroup, name: &str) -> Result<ElementSet> {
    let n = group.order();
    let mut s = ElementSet::empty(n);
    for g in group.elements() {
        let label = group.label(g);
        let cycles = label.matches('(').count();
        let points = label.split(|c: char| !c.is_ascii_digit()).filter(|t| !t.is_empty()).count();
        let hit = match name {
            "X2" => cycles == 1 && points == 2,
            "X3" => cycles == 1 && points == 3,
            "X4" => cycles == 1 && points == 4,
            "Y" => cycles == 2 && points == 4,
            _ => return Err(Error::PreconditionViolated(format!("unknown class {name}"))),
        };
        if hit {
            s.insert(g);
        }
    }
    Ok(s)
}

/// One row: representative, neighbour classes, further neighbours, degree.
///
/// A trailing `^±` on an element stands for the element and its inverse.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub representative: &'static str,
    pub classes: &'static [&'static str],
    pub elements: &'static [&'static str],
    pub degree: usize,
}

pub struct Table {
    pub kind: GraphKind,
    pub rows: [TableRow; 4],
}

const fn row(
    representative: &'static str,
    classes: &'static [&'static str],
    elements: &'static [&'static str],
    degree: usize,
) -> TableRow {
    TableRow {
        representative,
        classes,
        elements,
        degree,
    }
}

/// Rows in class order `Y`, `X2`, `X3`, `X4`.
pub const TABLES: [Table; 3] = [
    Table {
        kind: GraphKind::Rank(2),
        rows: [
            row("(1,2)(3,4)", &[], &[], 0),
            row("(1,2)", &[], &["(2,3,4)^±", "(1,3,4)^±", "(1,2,3,4)^±", "(1,2,4,3)^±"], 8),
            row("(1,2,3)", &["X4"], &["(1,4)", "(2,4)", "(3,4)"], 9),
            row(
                "(1,2,3,4)",
                &["X3"],
                &["(1,2)", "(1,4)", "(2,3)", "(3,4)", "(1,3,2,4)^±", "(1,2,4,3)^±"],
                16,
            ),
        ],
    },
    Table {
        kind: GraphKind::Rank(3),
        rows: [
            row("(1,2)(3,4)", &["X2", "X3"], &[], 14),
            row(
                "(1,2)",
                &["Y"],
                &["(1,2,3)^±", "(1,2,4)^±", "(1,3)", "(1,4)", "(2,3)", "(2,4)", "(3,4)"],
                12,
            ),
            row(
                "(1,2,3)",
                &["Y"],
                &["(1,2)", "(1,3)", "(2,3)", "(1,2,4)^±", "(1,3,4)^±", "(2,3,4)^±"],
                12,
            ),
            row("(1,2,3,4)", &[], &[], 0),
        ],
    },
    Table {
        kind: GraphKind::Full,
        rows: [
            row("(1,2)(3,4)", &["X2", "X3"], &[], 14),
            row(
                "(1,2)",
                &["Y", "X3"],
                &["(1,3)", "(1,4)", "(2,3)", "(2,4)", "(3,4)", "(1,2,3,4)^±", "(1,2,4,3)^±"],
                20,
            ),
            row("(1,2,3)", &["Y", "X2", "X4"], &["(1,2,4)^±", "(1,3,4)^±", "(2,3,4)^±"], 21),
            row(
                "(1,2,3,4)",
                &["X3"],
                &["(1,2)", "(1,4)", "(2,3)", "(3,4)", "(1,3,2,4)^±", "(1,2,4,3)^±"],
                16,
            ),
        ],
    },
];

pub fn element(group: &FiniteGroup, label: &str) -> Result<usize> {
    group
        .find_label(label)
        .ok_or_else(|| Error::PreconditionViolated(format!("no element labelled {label}")))
}

/// The tabulated neighbour set of a row as elements.
pub fn expected_neighbors(group: &FiniteGroup, row: &TableRow) -> Result<ElementSet> {
    let mut s = ElementSet::empty(group.order());
    for c in row.classes {
        s.union_with(&cycle_class(group, c)?);
    }
    for e in row.elements {
        match e.strip_suffix("^±") {
            Some(base) => {
                let g = element(group, base)?;
                s.insert(g);
                s.insert(group.inv(g));
            }
            None => {
                s.insert(element(group, e)?);
            }
        }
    }
    Ok(s)
}
