//! Line-by-line comparison of computed expansions with the printed table.

use serde::Serialize;

use super::catalog::{scaled_expansions, CatalogAssignment};
use super::data::{TableData, TableLine};
use crate::error::Result;
use crate::graph::CanonicalKey;
use crate::symbolic::JExpr;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    /// `1` for the constant block, otherwise `g_i` or `j[graph6]`.
    pub term: String,
    pub printed: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineReport {
    pub id: usize,
    pub scale: u64,
    pub lhs: String,
    pub pass: bool,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub lines: Vec<LineReport>,
}

impl TableReport {
    pub fn passed(&self) -> usize {
        self.lines.iter().filter(|l| l.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.lines.len()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            let status = if l.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("line {:>2}  {status}  {} Σ {}\n", l.id, l.scale, l.lhs));
            for d in &l.discrepancies {
                out.push_str(&format!("    {}: printed {} computed {}\n", d.term, d.printed, d.computed));
            }
        }
        out.push_str(&format!("{}/{} lines pass\n", self.passed(), self.lines.len()));
        out
    }
}

/// Compares one line. `computed` is `scale · expand_term(lhs)`.
pub fn compare_line(line: &TableLine, computed: &JExpr, assignment: &CatalogAssignment) -> Result<LineReport> {
    let printed = assignment.line_rhs(line)?;
    let keys: std::collections::BTreeSet<CanonicalKey> =
        printed.terms().chain(computed.terms()).map(|(k, _)| *k).collect();
    let discrepancies: Vec<Discrepancy> = keys
        .into_iter()
        .filter_map(|k| {
            let (p, c) = (printed.coefficient(&k), computed.coefficient(&k));
            (p != c).then(|| Discrepancy {
                term: if k.n() == 0 { "1".into() } else { assignment.label(&k) },
                printed: p.display_falling(),
                computed: c.display_falling(),
            })
        })
        .collect();
    Ok(LineReport {
        id: line.id,
        scale: line.scale,
        lhs: line.label.clone(),
        pass: discrepancies.is_empty(),
        discrepancies,
    })
}

/// Checks `scale · expand_term(lhs)` against every printed line.
pub fn verify_table(table: &TableData, assignment: &CatalogAssignment) -> Result<TableReport> {
    let expansions = scaled_expansions(table)?;
    let lines = table
        .lines
        .iter()
        .zip(&expansions)
        .map(|(line, e)| compare_line(line, e, assignment))
        .collect::<Result<_>>()?;
    Ok(TableReport { lines })
}
