//! Loading the transcribed coefficient table and identity monomials.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;

use crate::counting::TermSpec;
use crate::error::{Error, Result};
use crate::graph::{named, Side};
use crate::polynom::RationalPoly;

/// The built-in coefficient table.
pub const TABLE_JSON: &str = include_str!("../../data/table.json");
/// The built-in identity monomials.
pub const IDENTITY_JSON: &str = include_str!("../../data/identity.json");

/// Smallest and largest catalog index. Index `i` names a graph `g_i`.
pub const FIRST_INDEX: usize = 2;
pub const LAST_INDEX: usize = 34;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactor {
    graph: String,
    side: String,
    #[serde(default = "one")]
    power: usize,
}

fn one() -> usize {
    1
}

/// `mul(n) · (n - offset)^{falling}` with a falling factorial power.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFalling {
    #[serde(default)]
    offset: i64,
    #[serde(default)]
    falling: usize,
    #[serde(default)]
    mul: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    g: usize,
    #[serde(default)]
    offset: i64,
    #[serde(default)]
    falling: usize,
    #[serde(default)]
    mul: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLine {
    id: usize,
    scale: u64,
    lhs: Vec<RawFactor>,
    constant: RawFalling,
    terms: Vec<RawTerm>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    catalog: BTreeMap<usize, String>,
    unnamed: Vec<usize>,
    lines: Vec<RawLine>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMonomial {
    part: Part,
    coefficient: String,
    factors: Vec<RawFactor>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdentity {
    monomials: Vec<RawMonomial>,
}

/// One displayed expansion `scale · Σ_v lhs = constant + Σ_i coefficient_i · g_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableLine {
    pub id: usize,
    pub scale: u64,
    pub lhs: TermSpec,
    /// Human-readable left-hand side, e.g. `s(K_1,+)^2 s(K_2,-)`.
    pub label: String,
    pub constant: RationalPoly,
    pub coefficients: BTreeMap<usize, RationalPoly>,
}

impl TableLine {
    /// Every catalog index mentioned on the right-hand side.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.coefficients.keys().copied()
    }
}

/// The table plus the catalog names it refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableData {
    /// Indices whose graph is named in the text, with that name.
    pub named: BTreeMap<usize, String>,
    /// Indices listed without a name.
    pub unnamed: Vec<usize>,
    pub lines: Vec<TableLine>,
}

impl TableData {
    pub fn builtin() -> Self {
        load_table(TABLE_JSON).expect("built-in table is well formed")
    }
}

/// Which of the three polynomials of the identity a monomial belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    P1,
    P2,
    P3,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::P1 => "p1",
            Part::P2 => "p2",
            Part::P3 => "p3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub part: Part,
    pub term: TermSpec,
}

/// All monomials of the identity's left-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySpec {
    pub monomials: Vec<Monomial>,
}

impl IdentitySpec {
    pub fn builtin() -> Self {
        load_identity(IDENTITY_JSON).expect("built-in identity is well formed")
    }

    pub fn terms(&self) -> impl Iterator<Item = &TermSpec> {
        self.monomials.iter().map(|m| &m.term)
    }

    /// The monomials of one part only.
    pub fn restricted(&self, part: Part) -> IdentitySpec {
        IdentitySpec {
            monomials: self.monomials.iter().filter(|m| m.part == part).cloned().collect(),
        }
    }

    /// Copy with the coefficient of monomial `index` increased by `delta`.
    pub fn perturbed(&self, index: usize, delta: &RationalPoly) -> IdentitySpec {
        let mut out = self.clone();
        let c = &mut out.monomials[index].term.coefficient;
        *c = &*c + delta;
        out
    }
}

fn data_err(msg: impl Into<String>) -> Error {
    Error::Data(msg.into())
}

fn parse_poly(text: &str, context: &str) -> Result<RationalPoly> {
    text.parse().map_err(|e| data_err(format!("{context}: {e}")))
}

fn falling(offset: i64, m: usize, mul: Option<&str>, context: &str) -> Result<RationalPoly> {
    let base = RationalPoly::shifted_falling(offset, m);
    match mul {
        Some(text) => Ok(&parse_poly(text, context)? * &base),
        None => Ok(base),
    }
}

fn factors_term(coefficient: RationalPoly, factors: &[RawFactor], context: &str) -> Result<(TermSpec, String)> {
    let mut term = TermSpec::new(coefficient, Vec::new(), Vec::new());
    let mut label = Vec::new();
    for f in factors {
        let side = match f.side.as_str() {
            "+" => Side::Plus,
            "-" => Side::Minus,
            other => return Err(data_err(format!("{context}: side {other:?}"))),
        };
        if f.power == 0 {
            return Err(data_err(format!("{context}: zero power")));
        }
        let graph = named(&f.graph).map_err(|e| data_err(format!("{context}: {e}")))?;
        for _ in 0..f.power {
            term = term.with_factor(graph, side);
        }
        let power = if f.power > 1 { format!("^{}", f.power) } else { String::new() };
        label.push(format!("s({},{side}){power}", f.graph));
    }
    Ok((term, label.join(" ")))
}

/// Parses table JSON and checks it refers to indices consistently.
pub fn load_table(json: &str) -> Result<TableData> {
    let raw: RawTable = serde_json::from_str(json).map_err(|e| data_err(e.to_string()))?;
    let in_range = |i: usize| (FIRST_INDEX..=LAST_INDEX).contains(&i);
    for (&i, name) in &raw.catalog {
        if !in_range(i) {
            return Err(data_err(format!("catalog index {i} out of range")));
        }
        named(name).map_err(|e| data_err(format!("catalog g_{i}: {e}")))?;
    }
    let mut seen = std::collections::BTreeSet::new();
    for &i in &raw.unnamed {
        if !in_range(i) || raw.catalog.contains_key(&i) || !seen.insert(i) {
            return Err(data_err(format!("unnamed index {i} is out of range, repeated or also named")));
        }
    }
    let covered = raw.catalog.len() + raw.unnamed.len();
    if covered != LAST_INDEX - FIRST_INDEX + 1 {
        return Err(data_err(format!("catalog covers {covered} indices, expected {}", LAST_INDEX - FIRST_INDEX + 1)));
    }

    let mut lines = Vec::with_capacity(raw.lines.len());
    for (pos, line) in raw.lines.into_iter().enumerate() {
        let context = format!("line {}", line.id);
        if line.id != pos + 1 {
            return Err(data_err(format!("{context}: ids must run 1, 2, ... in order")));
        }
        if line.scale == 0 {
            return Err(data_err(format!("{context}: zero scale")));
        }
        let (lhs, label) = factors_term(RationalPoly::one(), &line.lhs, &context)?;
        let c = &line.constant;
        let constant = falling(c.offset, c.falling, c.mul.as_deref(), &context)?;
        let mut coefficients = BTreeMap::new();
        for t in &line.terms {
            if !in_range(t.g) {
                return Err(data_err(format!("{context}: index g_{} out of range", t.g)));
            }
            let value = falling(t.offset, t.falling, t.mul.as_deref(), &format!("{context}, g_{}", t.g))?;
            if coefficients.insert(t.g, value).is_some() {
                return Err(data_err(format!("{context}: g_{} appears twice", t.g)));
            }
        }
        lines.push(TableLine {
            id: line.id,
            scale: line.scale,
            lhs,
            label,
            constant,
            coefficients,
        });
    }
    Ok(TableData {
        named: raw.catalog,
        unnamed: raw.unnamed,
        lines,
    })
}

/// Parses identity JSON.
pub fn load_identity(json: &str) -> Result<IdentitySpec> {
    let raw: RawIdentity = serde_json::from_str(json).map_err(|e| data_err(e.to_string()))?;
    let mut monomials = Vec::with_capacity(raw.monomials.len());
    for (pos, m) in raw.monomials.into_iter().enumerate() {
        let context = format!("monomial {}", pos + 1);
        let coefficient = parse_poly(&m.coefficient, &context)?;
        let (term, _) = factors_term(coefficient, &m.factors, &context)?;
        monomials.push(Monomial { part: m.part, term });
    }
    Ok(IdentitySpec { monomials })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_table_shape() {
        let t = TableData::builtin();
        assert_eq!(t.lines.len(), 25);
        assert_eq!(t.named.len(), 26);
        assert_eq!(t.unnamed, vec![14, 17, 18, 19, 21, 22, 26]);
        let first = &t.lines[0];
        assert_eq!(first.scale, 2);
        assert_eq!(first.constant, RationalPoly::from_integers(&[0, -1, 1]));
        assert_eq!(first.coefficients[&2], RationalPoly::one());
    }

    #[test]
    fn falling_terms_decode() {
        let t = TableData::builtin();
        // 2^13 Σ s(C_4,+): 6(n-2)^{_3} g_2
        let c4 = &t.lines[8];
        assert_eq!(c4.scale, 8192);
        assert_eq!(c4.coefficients[&2], RationalPoly::shifted_falling(2, 3).scale(&crate::polynom::integer(6)));
    }

    #[test]
    fn builtin_identity_shape() {
        let s = IdentitySpec::builtin();
        assert_eq!(s.monomials.len(), 25);
        assert_eq!(s.restricted(Part::P1).monomials.len(), 16);
        assert_eq!(s.restricted(Part::P2).monomials.len(), 6);
        assert_eq!(s.restricted(Part::P3).monomials.len(), 3);
        assert!(s.terms().all(|t| t.factor_vertices() <= 4));
    }

    #[test]
    fn malformed_data_is_rejected() {
        assert!(matches!(load_table("{"), Err(Error::Data(_))));
        let bad_side = r#"{"monomials":[{"part":"p1","coefficient":"1","factors":[{"graph":"K_1","side":"x"}]}]}"#;
        assert!(load_identity(bad_side).is_err());
        let bad_graph = r#"{"monomials":[{"part":"p1","coefficient":"1","factors":[{"graph":"Q_1","side":"+"}]}]}"#;
        assert!(load_identity(bad_graph).is_err());
        let bad_poly = r#"{"monomials":[{"part":"p2","coefficient":"n+","factors":[]}]}"#;
        assert!(load_identity(bad_poly).is_err());
    }
}
