//! The catalog `g_2, ..., g_34` of graphs on 2 to 5 vertices without isolated
//! vertices, with the unnamed entries recovered by matching.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::data::{TableData, TableLine};
use crate::error::{Error, Result};
use crate::graph::{emit_graph6, enumerate_graphs, named, parse_graph6, CanonicalKey, Canonize, GraphName, SmallGraph};
use crate::polynom::{Rational, RationalPoly};
use crate::symbolic::{expand_term, JExpr};

/// Built-in golden rendering of the resolved catalog.
pub const CATALOG_GOLDEN: &str = include_str!("../../data/catalog.golden");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    NamedInText,
    ResolvedByMatching,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::NamedInText => "named-in-text",
            Provenance::ResolvedByMatching => "resolved-by-matching",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub key: CanonicalKey,
    pub provenance: Provenance,
    pub name: Option<String>,
}

/// Index `i` to isomorphism class of `g_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogAssignment {
    entries: BTreeMap<usize, CatalogEntry>,
}

impl CatalogAssignment {
    pub fn entries(&self) -> impl Iterator<Item = (usize, &CatalogEntry)> {
        self.entries.iter().map(|(&i, e)| (i, e))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn key(&self, index: usize) -> Option<CanonicalKey> {
        self.entries.get(&index).map(|e| e.key)
    }

    pub fn index_of(&self, key: &CanonicalKey) -> Option<usize> {
        self.entries.iter().find(|(_, e)| &e.key == key).map(|(&i, _)| i)
    }

    /// `g_i` for catalog graphs, `j[graph6]` otherwise.
    pub fn label(&self, key: &CanonicalKey) -> String {
        match self.index_of(key) {
            Some(i) => format!("g_{i}"),
            None => format!("j[{}]", emit_graph6(&key.graph())),
        }
    }

    /// Falling-basis rendering with the constant first, then `g_i` by index,
    /// then any other graphs.
    pub fn render(&self, e: &JExpr) -> String {
        e.display_falling_by(|k| self.label(k), |k| (k.n() != 0, self.index_of(k).unwrap_or(usize::MAX), *k))
    }

    /// Right-hand side of a table line as a j̃-combination.
    pub fn line_rhs(&self, line: &TableLine) -> Result<JExpr> {
        let mut e = JExpr::single(&SmallGraph::empty(0), line.constant.clone());
        for (&i, c) in &line.coefficients {
            let key = self
                .key(i)
                .ok_or_else(|| Error::Catalog(format!("line {} uses unassigned index g_{i}", line.id)))?;
            e.add_term(key, c);
        }
        Ok(e)
    }

    /// One tab-separated row per index: `g_i`, graph6, provenance, name.
    pub fn to_golden(&self) -> String {
        let mut out = String::from("index\tgraph6\tprovenance\tname\n");
        for (i, e) in &self.entries {
            let name = e.name.as_deref().unwrap_or("-");
            out.push_str(&format!("g_{i}\t{}\t{}\t{name}\n", emit_graph6(&e.key.graph()), e.provenance));
        }
        out
    }

    /// Reads the format written by [`Self::to_golden`].
    pub fn from_golden(text: &str) -> Result<Self> {
        let err = |row: usize, msg: &str| Error::Catalog(format!("golden row {row}: {msg}"));
        let mut entries = BTreeMap::new();
        for (row, line) in text.lines().enumerate().skip(1) {
            let fields: Vec<&str> = line.split('\t').collect();
            let [index, g6, provenance, name] = fields[..] else {
                return Err(err(row + 1, "expected four tab-separated fields"));
            };
            let index: usize = index
                .strip_prefix("g_")
                .and_then(|i| i.parse().ok())
                .ok_or_else(|| err(row + 1, "bad index"))?;
            let key = parse_graph6(g6.as_bytes())?.canonical_key();
            let provenance = match provenance {
                "named-in-text" => Provenance::NamedInText,
                "resolved-by-matching" => Provenance::ResolvedByMatching,
                _ => return Err(err(row + 1, "bad provenance")),
            };
            let name = (name != "-").then(|| name.to_string());
            let entry = CatalogEntry { key, provenance, name };
            if entries.insert(index, entry).is_some() {
                return Err(err(row + 1, "duplicate index"));
            }
        }
        Ok(CatalogAssignment { entries })
    }

    /// The assignment pinned in the built-in golden file.
    pub fn builtin() -> Self {
        Self::from_golden(CATALOG_GOLDEN).expect("built-in golden is well formed")
    }

    /// Errors unless [`Self::to_golden`] is byte-equal to `golden`.
    pub fn check_golden(&self, golden: &str) -> Result<()> {
        let ours = self.to_golden();
        if ours == golden {
            return Ok(());
        }
        let first = ours
            .lines()
            .zip(golden.lines())
            .position(|(a, b)| a != b)
            .unwrap_or_else(|| ours.lines().count().min(golden.lines().count()));
        Err(Error::Catalog(format!("assignment differs from golden file at row {}", first + 1)))
    }
}

/// The 33 classes on 2 to 5 vertices without isolated vertices, grouped by order.
pub fn isolation_free_classes() -> Vec<Vec<CanonicalKey>> {
    (2..=5)
        .map(|n| {
            enumerate_graphs(n)
                .expect("n within enumeration bound")
                .into_iter()
                .filter(|g| g.isolated_count() == 0)
                .map(|g| g.canonical_key())
                .collect()
        })
        .collect()
}

/// `scale · expand_term(lhs)` for every line, in line order.
pub fn scaled_expansions(table: &TableData) -> Result<Vec<JExpr>> {
    table
        .lines
        .par_iter()
        .map(|line| Ok(expand_term(&line.lhs)?.scale(&RationalPoly::constant(Rational::from_integer(line.scale.into())))))
        .collect()
}

fn is_edge_addition(name: &str) -> bool {
    matches!(name.parse::<GraphName>(), Ok(GraphName::PlusEdge(_)))
}

/// Fixes the indices named in the text, then finds the unique bijection
/// between the remaining indices and classes under which every table line's
/// computed expansion agrees with its printed coefficients. Names built by
/// adding an edge are matched as unknowns and must agree with their reading.
pub fn resolve_catalog(table: &TableData) -> Result<CatalogAssignment> {
    let expansions = scaled_expansions(table)?;
    resolve_with(table, &expansions)
}

/// [`resolve_catalog`] with the line expansions already computed.
pub fn resolve_with(table: &TableData, expansions: &[JExpr]) -> Result<CatalogAssignment> {
    let err = |msg: String| Error::Catalog(msg);
    let classes: Vec<CanonicalKey> = isolation_free_classes().concat();
    let mut entries = BTreeMap::new();
    let mut unknown: Vec<usize> = table.unnamed.clone();
    let mut taken = BTreeSet::new();

    for (&i, name) in &table.named {
        if is_edge_addition(name) {
            unknown.push(i);
            continue;
        }
        let key = named(name)?.canonical_key();
        if !classes.contains(&key) {
            return Err(err(format!("g_{i} = {name} is not a graph on 2..5 vertices without isolated vertices")));
        }
        if !taken.insert(key) {
            return Err(err(format!("g_{i} = {name} repeats another catalog graph")));
        }
        entries.insert(
            i,
            CatalogEntry {
                key,
                provenance: Provenance::NamedInText,
                name: Some(name.clone()),
            },
        );
    }
    unknown.sort_unstable();
    let free: Vec<CanonicalKey> = classes.iter().copied().filter(|k| !taken.contains(k)).collect();
    if free.len() != unknown.len() {
        return Err(err(format!("{} unknown indices for {} unassigned classes", unknown.len(), free.len())));
    }

    let printed = |i: usize| -> Vec<RationalPoly> {
        table.lines.iter().map(|l| l.coefficients.get(&i).cloned().unwrap_or_default()).collect()
    };
    let computed = |k: &CanonicalKey| -> Vec<RationalPoly> { expansions.iter().map(|e| e.coefficient(k)).collect() };
    let free_vectors: Vec<Vec<RationalPoly>> = free.iter().map(computed).collect();
    let candidates: Vec<Vec<usize>> = unknown
        .iter()
        .map(|&i| {
            let v = printed(i);
            (0..free.len()).filter(|&c| free_vectors[c] == v).collect()
        })
        .collect();

    let mut solutions = Vec::new();
    let mut chosen = vec![usize::MAX; unknown.len()];
    search(&candidates, 0, &mut vec![false; free.len()], &mut chosen, &mut solutions);
    let solution = match solutions.len() {
        0 => {
            let stuck: Vec<String> = unknown
                .iter()
                .zip(&candidates)
                .filter(|(_, c)| c.is_empty())
                .map(|(i, _)| format!("g_{i}"))
                .collect();
            return Err(err(format!("no consistent assignment; indices without candidates: {}", stuck.join(", "))));
        }
        1 => solutions.pop().expect("one solution"),
        _ => return Err(err("assignment is not unique".into())),
    };

    for (&i, &c) in unknown.iter().zip(&solution) {
        let key = free[c];
        let entry = match table.named.get(&i) {
            Some(name) => {
                if named(name)?.canonical_key() != key {
                    return Err(err(format!("g_{i} = {name} disagrees with the matched class")));
                }
                CatalogEntry {
                    key,
                    provenance: Provenance::NamedInText,
                    name: Some(name.clone()),
                }
            }
            None => CatalogEntry {
                key,
                provenance: Provenance::ResolvedByMatching,
                name: None,
            },
        };
        entries.insert(i, entry);
    }
    Ok(CatalogAssignment { entries })
}

/// Enumerates all systems of distinct representatives, stopping after two.
fn search(candidates: &[Vec<usize>], depth: usize, used: &mut Vec<bool>, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if out.len() > 1 {
        return;
    }
    if depth == candidates.len() {
        out.push(chosen.clone());
        return;
    }
    for &c in &candidates[depth] {
        if !used[c] {
            used[c] = true;
            chosen[depth] = c;
            search(candidates, depth + 1, used, chosen, out);
            used[c] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_by_order() {
        let sizes: Vec<usize> = isolation_free_classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 7, 23]);
    }

    #[test]
    fn search_counts_solutions() {
        let mut out = Vec::new();
        search(&[vec![0, 1], vec![0]], 0, &mut vec![false; 2], &mut vec![0; 2], &mut out);
        assert_eq!(out, vec![vec![1, 0]]);
        out.clear();
        search(&[vec![0, 1], vec![0, 1]], 0, &mut vec![false; 2], &mut vec![0; 2], &mut out);
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn golden_round_trip() {
        let a = CatalogAssignment::builtin();
        assert_eq!(a.len(), 33);
        assert_eq!(a.to_golden(), CATALOG_GOLDEN);
        assert!(CatalogAssignment::from_golden("header\ng_2\tA_\tbogus\t-\n").is_err());
        assert!(CatalogAssignment::from_golden("header\ng_2\tA_\n").is_err());
    }

    #[test]
    fn edge_addition_names() {
        assert!(is_edge_addition("C_5+K_2"));
        assert!(!is_edge_addition("K_5-K_2"));
    }
}
