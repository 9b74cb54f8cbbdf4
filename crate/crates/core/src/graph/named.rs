//! Named graph constructors and a small parser for expressions like
//! `K_5-(P_3 ∪ K_2)`, `2K_2`, `T_{3,1}` or `C_5+K_2`.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! union := diff (("∪" | "\cup" | "|") diff)*
//! diff  := mult (("-" | "+") mult)*
//! mult  := [count] atom
//! atom  := "(" union ")" | K_n | K_{a,b} | P_n | C_n | T_{n,k} | E_n
//! ```
//!
//! `A-B` removes a copy of `B` placed on distinct vertices of a complete `A`.
//! `A+K_2` adds one edge to `A`, accepted only when every choice of the new
//! edge gives the same isomorphism class.

use std::fmt;
use std::str::FromStr;

use super::canon::Canonize;
use super::small::{SmallGraph, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphName {
    Complete(usize),
    /// `n` isolated vertices.
    Empty(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// `K_n` plus one vertex adjacent to `k` of the old ones.
    Threshold(usize, usize),
    Union(Box<GraphName>, Box<GraphName>),
    Copies(usize, Box<GraphName>),
    Minus(Box<GraphName>, Box<GraphName>),
    PlusEdge(Box<GraphName>),
}

impl GraphName {
    pub fn build(&self) -> Result<SmallGraph> {
        let bound = |n: usize| {
            if n > MAX_VERTICES {
                Err(Error::TooManyVertices {
                    n,
                    max: MAX_VERTICES,
                })
            } else {
                Ok(n)
            }
        };
        match self {
            GraphName::Complete(n) => Ok(SmallGraph::complete(bound(*n)?)),
            GraphName::Empty(n) => Ok(SmallGraph::empty(bound(*n)?)),
            GraphName::Path(n) => {
                let n = bound(*n)?;
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                SmallGraph::new(n, &edges)
            }
            GraphName::Cycle(n) => {
                let n = bound(*n)?;
                if n < 3 {
                    return Err(self.invalid("a cycle needs at least 3 vertices"));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                SmallGraph::new(n, &edges)
            }
            GraphName::CompleteBipartite(a, b) => {
                let n = bound(a + b)?;
                let edges: Vec<_> = (0..*a).flat_map(|i| (*a..n).map(move |j| (i, j))).collect();
                SmallGraph::new(n, &edges)
            }
            GraphName::Threshold(n, k) => {
                if k > n {
                    return Err(self.invalid("apex degree exceeds clique size"));
                }
                let base = SmallGraph::complete(bound(*n)?);
                base.with_apex(((1u32 << k) - 1) as u16)
            }
            GraphName::Union(a, b) => a.build()?.disjoint_union(&b.build()?),
            GraphName::Copies(k, g) => {
                let g = g.build()?;
                bound(k * g.n())?;
                (0..*k).try_fold(SmallGraph::empty(0), |acc, _| acc.disjoint_union(&g))
            }
            GraphName::Minus(a, b) => {
                let base = a.build()?;
                let removed = b.build()?;
                if base != SmallGraph::complete(base.n()) {
                    return Err(self.invalid("only a complete graph can have a subgraph removed"));
                }
                if removed.n() > base.n() {
                    return Err(self.invalid("removed graph has more vertices than the base"));
                }
                let mut g = base;
                for (u, v) in removed.edges() {
                    g.remove_edge(u, v);
                }
                Ok(g)
            }
            GraphName::PlusEdge(a) => {
                let base = a.build()?;
                let mut candidates = (1..base.n())
                    .flat_map(|v| (0..v).map(move |u| (u, v)))
                    .filter(|&(u, v)| !base.has_edge(u, v))
                    .map(|(u, v)| {
                        let mut g = base;
                        g.add_edge(u, v);
                        g
                    });
                let first = candidates
                    .next()
                    .ok_or_else(|| self.invalid("no non-edge to add"))?;
                let key = first.canonical_key();
                if candidates.any(|g| g.canonical_key() != key) {
                    return Err(self.invalid("adding one edge does not give a unique graph"));
                }
                Ok(first)
            }
        }
    }

    fn invalid(&self, reason: &str) -> Error {
        Error::GraphName {
            input: self.to_string(),
            reason: reason.into(),
        }
    }
}

/// Builds the graph named by `text`.
pub fn named(text: &str) -> Result<SmallGraph> {
    text.parse::<GraphName>()?.build()
}

impl fmt::Display for GraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn sub(f: &mut fmt::Formatter<'_>, g: &GraphName) -> fmt::Result {
            match g {
                GraphName::Union(..) | GraphName::Minus(..) | GraphName::PlusEdge(..) => write!(f, "({g})"),
                _ => write!(f, "{g}"),
            }
        }
        match self {
            GraphName::Complete(n) => write!(f, "K_{n}"),
            GraphName::Empty(n) => write!(f, "E_{n}"),
            GraphName::Path(n) => write!(f, "P_{n}"),
            GraphName::Cycle(n) => write!(f, "C_{n}"),
            GraphName::CompleteBipartite(a, b) => write!(f, "K_{{{a},{b}}}"),
            GraphName::Threshold(n, k) => write!(f, "T_{{{n},{k}}}"),
            GraphName::Union(a, b) => {
                write!(f, "{a}∪")?;
                sub(f, b)
            }
            GraphName::Copies(k, g) => {
                write!(f, "{k}")?;
                sub(f, g)
            }
            GraphName::Minus(a, b) => {
                sub(f, a)?;
                write!(f, "-")?;
                sub(f, b)
            }
            GraphName::PlusEdge(a) => {
                sub(f, a)?;
                write!(f, "+K_2")
            }
        }
    }
}

impl FromStr for GraphName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            input: s,
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let name = p.union()?;
        if p.pos != p.chars.len() {
            return Err(p.error("trailing input"));
        }
        Ok(name)
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::GraphName {
            input: self.input.to_string(),
            reason: format!("{reason} at position {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let len = s.chars().count();
        if self.chars.len() >= self.pos + len && self.chars[self.pos..self.pos + len].iter().copied().eq(s.chars()) {
            self.pos += len;
            true
        } else {
            false
        }
    }

    fn union(&mut self) -> Result<GraphName> {
        let mut left = self.diff()?;
        while self.eat('∪') || self.eat_str("\\cup") || self.eat('|') {
            let right = self.diff()?;
            left = GraphName::Union(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn diff(&mut self) -> Result<GraphName> {
        let mut left = self.mult()?;
        loop {
            if self.eat('-') || self.eat('−') {
                let right = self.mult()?;
                left = GraphName::Minus(Box::new(left), Box::new(right));
            } else if self.eat('+') {
                let right = self.mult()?;
                if right != GraphName::Complete(2) {
                    return Err(self.error("only '+K_2' (add one edge) is supported"));
                }
                left = GraphName::PlusEdge(Box::new(left));
            } else {
                return Ok(left);
            }
        }
    }

    fn mult(&mut self) -> Result<GraphName> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let k = self.number()?;
            let atom = self.atom()?;
            Ok(GraphName::Copies(k, Box::new(atom)))
        } else {
            self.atom()
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos || self.pos - start > 3 {
            return Err(self.error("expected a small number"));
        }
        Ok(self.chars[start..self.pos].iter().collect::<String>().parse().expect("digits"))
    }

    /// Subscript after a constructor letter: `5`, `_5`, `_{5}` or `_{a,b}`.
    fn subscript(&mut self) -> Result<Vec<usize>> {
        self.eat('_');
        if self.eat('{') {
            let mut args = vec![self.number()?];
            while self.eat(',') {
                args.push(self.number()?);
            }
            if !self.eat('}') {
                return Err(self.error("expected '}'"));
            }
            Ok(args)
        } else {
            Ok(vec![self.number()?])
        }
    }

    fn atom(&mut self) -> Result<GraphName> {
        if self.eat('(') {
            let inner = self.union()?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            return Ok(inner);
        }
        let letter = self.peek().ok_or_else(|| self.error("unexpected end"))?;
        self.pos += 1;
        let args = match letter {
            'K' | 'P' | 'C' | 'T' | 'E' => self.subscript()?,
            _ => {
                self.pos -= 1;
                return Err(self.error("expected a graph constructor"));
            }
        };
        let name = match (letter, args.as_slice()) {
            ('K', &[n]) => GraphName::Complete(n),
            ('K', &[a, b]) => GraphName::CompleteBipartite(a, b),
            ('P', &[n]) => GraphName::Path(n),
            ('C', &[n]) => GraphName::Cycle(n),
            ('E', &[n]) => GraphName::Empty(n),
            ('T', &[n, k]) => GraphName::Threshold(n, k),
            _ => return Err(self.error("wrong number of subscripts")),
        };
        Ok(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_graph() {
        let t31 = named("T_{3,1}").unwrap();
        assert_eq!((t31.n(), t31.edge_count()), (4, 4));
        let t32 = named("T_{3,2}").unwrap();
        assert_eq!((t32.n(), t32.edge_count()), (4, 5));
    }

    #[test]
    fn complete_minus_matching() {
        let g = named("K_5-2K_2").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 8));
        assert!((0..5).filter(|&v| g.degree(v) == 3).count() == 4);
    }

    #[test]
    fn bipartite_and_paths() {
        let k23 = named("K_{2,3}").unwrap();
        assert_eq!((k23.n(), k23.edge_count()), (5, 6));
        assert_eq!(named("P_4").unwrap().edge_count(), 3);
        assert_eq!(named("C_5").unwrap().edge_count(), 5);
        let claw = named("K_{1,3}").unwrap();
        assert_eq!((claw.n(), claw.edge_count(), claw.automorphism_count()), (4, 3, 6));
        assert_eq!(named("K4").unwrap(), named("K_{4}").unwrap());
    }

    #[test]
    fn minus_of_union() {
        let g = named("K_5-(P_3\\cup K_2)").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 7));
        let h = named("K_5 - (P_3 ∪ K_2)").unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn plus_one_edge() {
        let g = named("C_5+K_2").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 6));
        let star = named("K_{1,4}+K_2").unwrap();
        assert_eq!(star.edge_count(), 5);
        assert_eq!(star.isolated_count(), 0);
        assert!(named("P_4+K_2").is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["K_5-(P_3∪K_2)", "2K_2", "K_{1,4}+K_2", "T_{3,1}", "K_3∪K_2", "E_2"] {
            let name: GraphName = text.parse().unwrap();
            assert_eq!(name.to_string(), text);
            assert_eq!(name.to_string().parse::<GraphName>().unwrap(), name);
        }
    }

    #[test]
    fn malformed_names() {
        for bad in ["", "X_3", "K_", "K_{1,2,3}", "K_5-", "(K_2", "K_2)", "C_2", "K_13", "P_4-K_2", "T_{2,3}", "K_5+P_3"] {
            assert!(named(bad).is_err(), "{bad:?} should fail");
        }
    }
}
