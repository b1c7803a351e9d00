//! Cayley-table text files.
//!
//! Line 1 holds the order `n`, the next `n` lines the rows of the table as
//! 0-based indices, and optional trailing lines `label <index> <text>` name
//! the elements. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use indigraph_core::{Error, FiniteGroup};

use crate::error::{CliError, CliResult};

fn malformed(line: usize, reason: impl Into<String>) -> Error {
    Error::MalformedTable {
        line: Some(line),
        reason: reason.into(),
    }
}

pub fn parse_cayley(text: &str, origin: &str) -> Result<FiniteGroup, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let last_line = text.lines().count();
    let (first, head) = lines.next().ok_or_else(|| malformed(1, "empty file, expected the group order"))?;
    let n: usize = head
        .parse()
        .map_err(|_| malformed(first, format!("expected the group order, found {head:?}")))?;
    if n == 0 {
        return Err(malformed(first, "group order must be positive"));
    }
    let mut table = Vec::with_capacity(n);
    for r in 0..n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| malformed(last_line + 1, format!("truncated: expected {n} rows, found {r}")))?;
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| malformed(no, format!("not an index: {t:?}")))
                    .and_then(|x| if x < n { Ok(x) } else { Err(malformed(no, format!("entry {x} outside 0..{n}"))) })
            })
            .collect::<Result<Vec<usize>, Error>>()?;
        if row.len() != n {
            return Err(malformed(no, format!("row {r} has {} entries, expected {n}", row.len())));
        }
        table.push(row);
    }
    let mut labels: Vec<Option<String>> = vec![None; n];
    for (no, line) in lines {
        let mut parts = line.splitn(3, char::is_whitespace);
        let (Some("label"), Some(idx), Some(text)) = (parts.next(), parts.next(), parts.next()) else {
            return Err(malformed(no, format!("expected `label <index> <text>`, found {line:?}")));
        };
        let i: usize = idx
            .parse()
            .ok()
            .filter(|&i| i < n)
            .ok_or_else(|| malformed(no, format!("bad label index {idx:?}")))?;
        if labels[i].replace(text.trim().to_string()).is_some() {
            return Err(malformed(no, format!("element {i} labelled twice")));
        }
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.unwrap_or_else(|| i.to_string()))
        .collect();
    FiniteGroup::from_cayley_table(&table, Some(labels), origin)
}

pub fn import_cayley(path: &Path) -> CliResult<FiniteGroup> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    Ok(parse_cayley(&text, &path.display().to_string())?)
}

/// The table in the file format above, labels included.
pub fn write_cayley(group: &FiniteGroup) -> String {
    let mut out = format!("{}\n", group.order());
    for row in group.table_rows() {
        let row: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    for g in group.elements() {
        let _ = writeln!(out, "label {g} {}", group.label(g));
    }
    out
}
