use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::counting::j_count;
use crate::error::Result;
use crate::graph::{emit_graph6, parse_graph6, CanonicalKey, Canonize, ColoredGraph, SmallGraph};
use crate::polynom::{integer, Rational, RationalPoly};

/// Formal sum of isomorphism classes with polynomial coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Combination {
    terms: BTreeMap<CanonicalKey, RationalPoly>,
}

impl Combination {
    fn add_term(&mut self, key: CanonicalKey, coeff: &RationalPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn add(&mut self, other: &Combination) {
        for (k, c) in &other.terms {
            self.add_term(*k, c);
        }
    }

    fn map_coefficients(&self, f: impl Fn(&RationalPoly) -> RationalPoly) -> Combination {
        let mut out = Combination::default();
        for (k, c) in &self.terms {
            out.add_term(*k, &f(c));
        }
        out
    }
}

macro_rules! expression_type {
    ($name:ident) => {
        impl $name {
            pub fn zero() -> Self {
                $name(Combination::default())
            }

            pub fn is_zero(&self) -> bool {
                self.0.terms.is_empty()
            }

            pub fn len(&self) -> usize {
                self.0.terms.len()
            }

            pub fn is_empty(&self) -> bool {
                self.is_zero()
            }

            pub fn add_term(&mut self, key: CanonicalKey, coeff: &RationalPoly) {
                self.0.add_term(key, coeff);
            }

            pub fn add_assign(&mut self, other: &$name) {
                self.0.add(&other.0);
            }

            pub fn scale(&self, c: &RationalPoly) -> Self {
                $name(self.0.map_coefficients(|a| a * c))
            }

            pub fn negate(&self) -> Self {
                $name(self.0.map_coefficients(|a| -a))
            }

            pub fn coefficient(&self, key: &CanonicalKey) -> RationalPoly {
                self.0.terms.get(key).cloned().unwrap_or_default()
            }

            /// Terms in canonical key order.
            pub fn terms(&self) -> impl Iterator<Item = (&CanonicalKey, &RationalPoly)> {
                self.0.terms.iter()
            }

            /// Largest vertex count among the term graphs.
            pub fn max_vertices(&self) -> usize {
                self.0.terms.keys().map(|k| k.n()).max().unwrap_or(0)
            }
        }
    };
}

/// Linear combination of `j̃(J)` over isomorphism classes of graphs `J`;
/// coefficients are polynomials in the ambient vertex count `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JExpr(Combination);

/// Linear combination of `k̃(J, L)` over color-preserving isomorphism classes
/// of graphs with a blue vertex set `L`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KExpr(Combination);

expression_type!(JExpr);
expression_type!(KExpr);

impl JExpr {
    pub fn single(graph: &SmallGraph, coeff: RationalPoly) -> Self {
        let mut e = JExpr::zero();
        e.add_graph(graph, &coeff);
        e
    }

    pub fn add_graph(&mut self, graph: &SmallGraph, coeff: &RationalPoly) {
        self.0.add_term(graph.canonical_key(), coeff);
    }

    pub fn graphs(&self) -> impl Iterator<Item = (SmallGraph, &RationalPoly)> {
        self.0.terms.iter().map(|(k, c)| (k.graph(), c))
    }

    /// Rendering over the falling factorial basis. `label` names a term
    /// graph (for example `g_9`); the empty graph contributes its
    /// coefficient alone.
    pub fn display_falling(&self, label: impl Fn(&CanonicalKey) -> String) -> String {
        self.display_falling_by(label, |k| *k)
    }

    /// [`Self::display_falling`] with terms ordered by `order`.
    pub fn display_falling_by<O: Ord>(
        &self,
        label: impl Fn(&CanonicalKey) -> String,
        order: impl Fn(&CanonicalKey) -> O,
    ) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|(k, _)| order(k));
        let mut out = String::new();
        for (key, coeff) in terms {
            let basis = coeff.to_falling_basis();
            let nonzero = basis.iter().filter(|c| !c.is_zero()).count();
            let body = if key.n() == 0 {
                coeff.display_falling()
            } else if nonzero == 1 && basis.len() == 1 {
                crate::polynom::render_sum(&[(basis[0].clone(), label(key))], "·")
            } else if nonzero == 1 {
                let k = basis.len() - 1;
                let mono = if k == 1 { "n".to_string() } else { format!("n^{{_{k}}}") };
                crate::polynom::render_sum(&[(basis[k].clone(), format!("{mono}·{}", label(key)))], "·")
            } else {
                format!("({})·{}", coeff.display_falling(), label(key))
            };
            if out.is_empty() {
                out = body;
            } else if let Some(rest) = body.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
        out
    }

    /// Graph6 string of each term graph mapped to its monomial coefficients.
    pub fn to_json_map(&self) -> BTreeMap<String, RationalPoly> {
        self.graphs().map(|(g, c)| (emit_graph6(&g), c.clone())).collect()
    }

    pub fn from_json_map(map: &BTreeMap<String, RationalPoly>) -> Result<Self> {
        let mut e = JExpr::zero();
        for (g6, c) in map {
            let g = parse_graph6(g6.as_bytes())?;
            e.add_graph(&g, c);
        }
        Ok(e)
    }
}

impl Serialize for JExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_map().serialize(s)
    }
}

impl<'de> Deserialize<'de> for JExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, RationalPoly>::deserialize(d)?;
        JExpr::from_json_map(&map).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for JExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_falling(|k| format!("j[{}]", emit_graph6(&k.graph()))))
    }
}

impl KExpr {
    /// The multiplicative identity `k̃(∅, ∅)`.
    pub fn one() -> Self {
        KExpr::single(&ColoredGraph::unit(), RationalPoly::one())
    }

    pub fn single(graph: &ColoredGraph, coeff: RationalPoly) -> Self {
        let mut e = KExpr::zero();
        e.add_graph(graph, &coeff);
        e
    }

    pub fn add_graph(&mut self, graph: &ColoredGraph, coeff: &RationalPoly) {
        self.0.add_term(graph.canonical_key(), coeff);
    }

    pub fn graphs(&self) -> impl Iterator<Item = (ColoredGraph, &RationalPoly)> {
        self.0.terms.iter().map(|(k, c)| (k.colored_graph(), c))
    }
}

/// `Σ_J m_J(n) · j(J, host)` with `n = |V(host)|`.
pub fn jexpr_eval(e: &JExpr, host: &SmallGraph) -> Rational {
    let n = host.n() as i64;
    e.graphs()
        .map(|(g, c)| {
            let j = j_count(&g, host);
            if j == 0 {
                Rational::zero()
            } else {
                c.eval(n) * integer(j)
            }
        })
        .fold(Rational::zero(), |acc, x| acc + x)
}
