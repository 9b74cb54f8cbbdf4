//! Definition-level evaluators: induced subgraph counts, signed injection
//! counts, and direct evaluation of vertex sums over neighborhood graphs.
//!
//! Nothing here consults the symbolic engine; these functions are the oracle
//! the expansions are checked against.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{emit_graph6, named, neighborhood, parse_graph6, CanonicalKey, Canonize, Side, SmallGraph, VertexSet};
use crate::polynom::{Rational, RationalPoly};

/// Iterates all `k`-element subsets of `0..n` as bit sets (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit = 1u32 << n;
    let mut next = if k <= n { Some((1u32 << k) - 1) } else { None };
    std::iter::from_fn(move || {
        let current = next?;
        if current >= limit {
            return None;
        }
        next = if current == 0 {
            None
        } else {
            let c = current & current.wrapping_neg();
            let r = current + c;
            Some((((r ^ current) >> 2) / c) | r)
        };
        Some(current as VertexSet)
    })
}

/// Number of vertex subsets of `host` inducing a copy of `pattern`.
pub fn s_count(pattern: &SmallGraph, host: &SmallGraph) -> u64 {
    let p = pattern.n();
    if p > host.n() {
        return 0;
    }
    let edges = pattern.edge_count();
    let key = pattern.canonical_key();
    subsets_of_size(host.n(), p)
        .filter(|&set| {
            let sub = host.induced(set);
            sub.edge_count() == edges && sub.canonical_key() == key
        })
        .count() as u64
}

/// Counts of every isomorphism class of `k`-vertex induced subgraphs.
pub fn induced_census(host: &SmallGraph, k: usize) -> HashMap<CanonicalKey, u64> {
    let mut census = HashMap::new();
    for set in subsets_of_size(host.n(), k) {
        *census.entry(host.induced(set).canonical_key()).or_insert(0) += 1;
    }
    census
}

/// Sum over injections `φ: V(pattern) → V(host)` of `(-1)^m`, where `m` is the
/// number of pattern edges sent to non-edges of the host.
pub fn j_count(pattern: &SmallGraph, host: &SmallGraph) -> i64 {
    fn extend(pattern: &SmallGraph, host: &SmallGraph, image: &mut [usize], next: usize, used: VertexSet, sign: i64) -> i64 {
        if next == pattern.n() {
            return sign;
        }
        let mut total = 0;
        for h in 0..host.n() {
            if used >> h & 1 == 1 {
                continue;
            }
            let mut s = sign;
            for (i, &hi) in image.iter().enumerate().take(next) {
                if pattern.has_edge(i, next) && !host.has_edge(hi, h) {
                    s = -s;
                }
            }
            image[next] = h;
            total += extend(pattern, host, image, next + 1, used | 1 << h, s);
        }
        total
    }
    if pattern.n() > host.n() {
        return 0;
    }
    let mut image = vec![0; pattern.n()];
    extend(pattern, host, &mut image, 0, 0, 1)
}

/// One summand `c(n) · Π s(J_i, G_v^-) · Π s(J'_j, G_v^+)` of a vertex sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermSpec {
    pub coefficient: RationalPoly,
    pub minus_factors: Vec<SmallGraph>,
    pub plus_factors: Vec<SmallGraph>,
}

impl TermSpec {
    pub fn new(coefficient: RationalPoly, minus_factors: Vec<SmallGraph>, plus_factors: Vec<SmallGraph>) -> Self {
        TermSpec {
            coefficient,
            minus_factors,
            plus_factors,
        }
    }

    /// `Σ_v 1`, the empty product with coefficient one.
    pub fn unit() -> Self {
        TermSpec::new(RationalPoly::one(), Vec::new(), Vec::new())
    }

    pub fn with_factor(mut self, graph: SmallGraph, side: Side) -> Self {
        match side {
            Side::Plus => self.plus_factors.push(graph),
            Side::Minus => self.minus_factors.push(graph),
        }
        self
    }

    pub fn scaled(mut self, c: &RationalPoly) -> Self {
        self.coefficient = &self.coefficient * c;
        self
    }

    /// Total vertex count of all factors.
    pub fn factor_vertices(&self) -> usize {
        self.factors().map(|(g, _)| g.n()).sum()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&SmallGraph, Side)> {
        self.minus_factors
            .iter()
            .map(|g| (g, Side::Minus))
            .chain(self.plus_factors.iter().map(|g| (g, Side::Plus)))
    }
}

impl fmt::Display for TermSpec {
    /// Same grammar [`TermSpec::from_str`] accepts, with graphs in graph6.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.coefficient != RationalPoly::one() || self.factors().next().is_none() {
            parts.push(format!("({})", self.coefficient));
        }
        for (g, side) in self.factors() {
            parts.push(format!("s(g6:{},{side})", emit_graph6(g)));
        }
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for TermSpec {
    type Err = Error;

    /// Parses `[poly] s(NAME,±)[^k] ...`, e.g. `n(n-3) s(K_1,+)^2 s(P_3,-)`.
    /// `NAME` is a graph name or `g6:` followed by a graph6 string. The
    /// polynomial, when present, must be parenthesized unless it is a bare
    /// integer or `n` expression free of `s(`.
    fn from_str(input: &str) -> Result<Self> {
        let err = |reason: String| Error::Term {
            input: input.to_string(),
            reason,
        };
        let text = input.trim();
        let first = text.find("s(").unwrap_or(text.len());
        let head = text[..first].trim();
        let coefficient = if head.is_empty() {
            RationalPoly::one()
        } else {
            head.parse::<RationalPoly>().map_err(|e| err(e.to_string()))?
        };
        let mut term = TermSpec::new(coefficient, Vec::new(), Vec::new());
        let mut rest = text[first..].trim_start();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix("s(")
                .ok_or_else(|| err(format!("expected 's(' at {rest:?}")))?;
            let close = matching_paren(body).ok_or_else(|| err("unbalanced parentheses".into()))?;
            let inner = &body[..close];
            let comma = inner.rfind(',').ok_or_else(|| err("expected 's(NAME,+)' or 's(NAME,-)'".into()))?;
            let side = match inner[comma + 1..].trim() {
                "+" => Side::Plus,
                "-" | "−" => Side::Minus,
                other => return Err(err(format!("side must be '+' or '-', found {other:?}"))),
            };
            let name = inner[..comma].trim();
            let graph = match name.strip_prefix("g6:") {
                Some(g6) => parse_graph6(g6.as_bytes()),
                None => named(name),
            }
            .map_err(|e| err(e.to_string()))?;
            rest = body[close + 1..].trim_start();
            let mut power = 1;
            if let Some(after) = rest.strip_prefix('^') {
                let digits: String = after.chars().take_while(|c| c.is_ascii_digit()).collect();
                power = digits
                    .parse::<usize>()
                    .ok()
                    .filter(|&p| (1..=8).contains(&p))
                    .ok_or_else(|| err("power must be an integer in 1..=8".into()))?;
                rest = after[digits.len()..].trim_start();
            }
            for _ in 0..power {
                term = term.with_factor(graph, side);
            }
            rest = rest.trim_start_matches(['*', '·']).trim_start();
        }
        Ok(term)
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' if depth == 0 => return Some(i),
            ')' => depth -= 1,
            _ => {}
        }
    }
    None
}

/// `c(n) · Σ_v Π s(J_i, G_v^-) · Π s(J'_j, G_v^+)` with `n = |V(host)|`.
pub fn term_eval(term: &TermSpec, host: &SmallGraph) -> Rational {
    let n = host.n();
    let total: BigInt = (0..n)
        .map(|v| {
            let plus = neighborhood(host, v, Side::Plus);
            let minus = neighborhood(host, v, Side::Minus);
            term.factors()
                .map(|(g, side)| match side {
                    Side::Plus => BigInt::from(s_count(g, &plus)),
                    Side::Minus => BigInt::from(s_count(g, &minus)),
                })
                .product::<BigInt>()
        })
        .sum();
    if total.is_zero() {
        return Rational::zero();
    }
    term.coefficient.eval(n as i64) * Rational::from_integer(total)
}

/// The small graphs the identity mentions, keyed once.
struct IdentityPatterns {
    k1: SmallGraph,
    k2: SmallGraph,
    p3: CanonicalKey,
    k3: CanonicalKey,
    k13: CanonicalKey,
    p4: CanonicalKey,
    c4: CanonicalKey,
    t31: CanonicalKey,
    t32: CanonicalKey,
}

impl IdentityPatterns {
    fn new() -> Self {
        let key = |s: &str| named(s).expect("builtin name").canonical_key();
        IdentityPatterns {
            k1: SmallGraph::empty(1),
            k2: SmallGraph::complete(2),
            p3: key("P_3"),
            k3: key("K_3"),
            k13: key("K_{1,3}"),
            p4: key("P_4"),
            c4: key("C_4"),
            t31: key("T_{3,1}"),
            t32: key("T_{3,2}"),
        }
    }
}

/// Induced counts of the patterns the identity uses, in one neighborhood graph.
struct Counts {
    k1: i128,
    k2: i128,
    p3: i128,
    k3: i128,
    k13: i128,
    p4: i128,
    c4: i128,
    t31: i128,
    t32: i128,
}

impl Counts {
    fn of(x: &SmallGraph, pat: &IdentityPatterns) -> Self {
        let three = induced_census(x, 3);
        let four = induced_census(x, 4);
        let get = |m: &HashMap<CanonicalKey, u64>, k: &CanonicalKey| m.get(k).copied().unwrap_or(0) as i128;
        Counts {
            k1: s_count(&pat.k1, x) as i128,
            k2: s_count(&pat.k2, x) as i128,
            p3: get(&three, &pat.p3),
            k3: get(&three, &pat.k3),
            k13: get(&four, &pat.k13),
            p4: get(&four, &pat.p4),
            c4: get(&four, &pat.c4),
            t31: get(&four, &pat.t31),
            t32: get(&four, &pat.t32),
        }
    }
}

/// `Σ_v p_1(G_v^+) + p_2(G_v^-) + p_3(G_v^+, G_v^-)` for the McKay–Radziszowski
/// polynomials, evaluated by brute-force counting. Zero for every graph.
pub fn identity_lhs_eval(host: &SmallGraph) -> Rational {
    let pat = IdentityPatterns::new();
    let n = host.n() as i128;
    let mut total: i128 = 0;
    for v in 0..host.n() {
        let x = Counts::of(&neighborhood(host, v, Side::Plus), &pat);
        let y = Counts::of(&neighborhood(host, v, Side::Minus), &pat);
        let a = x.k1;
        let b = x.k2;
        let p1 = n * (n - 3) * a - (n * n + 2 * n - 6) * a * a + 3 * n * a.pow(3) - 2 * a.pow(4)
            + 2 * (n * n + n - 8) * b
            - 12 * b * b
            - 12 * (n - 1) * a * b
            + 12 * a * a * b
            + 72 * x.c4
            + 12 * (n - 2) * x.k3
            + 24 * x.k13
            + 24 * x.p4
            + 24 * x.t31
            + 12 * (n + 2) * x.p3
            - 24 * a * x.p3
            + 32 * x.t32;
        let p2 = 4 * y.k2 * y.k2 - 12 * y.k13 - 8 * y.c4 - 8 * y.t31 - 24 * y.t32 + 2 * (n - 8) * y.p3;
        let p3 = 4 * a * y.p3 - 2 * (n - 2) * a * y.k2 + 4 * a * a * y.k2;
        total += p1 + p2 + p3;
    }
    Rational::from_integer(total.into())
}
