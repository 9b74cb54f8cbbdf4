//! Neighborhood expansions, apex closure, isolated-vertex reduction and the
//! normal-form engine built from them.

use num_bigint::BigInt;

use super::expr::{JExpr, KExpr};
use super::glue::k_mul;
use crate::counting::TermSpec;
use crate::error::{Error, Result};
use crate::graph::{iter_bits, Canonize, ColoredGraph, Side, SmallGraph};
use crate::polynom::{Rational, RationalPoly};

/// Largest factor graph [`expand_neighborhood`] accepts.
pub const MAX_FACTOR_VERTICES: usize = 5;

/// Bound on `1 + Σ |V(factor)|` for [`expand_term`].
pub const MAX_TERM_VERTICES: usize = 6;

/// k̃-expansion of `s(J, G_w^±)` over the ambient set `V(G) \ {w}`, where
/// the blue vertices stand for neighbors of `w`:
///
/// `Σ_{V ⊆ V(J)} Σ_{E ⊆ E(K_J)} σ · k̃(K_J[E], V) / (2^{|E(K_J)| + |V(J)|} · Aut(J))`
///
/// with `σ = (-1)^{|E \ E(J)|}` inside the neighborhood, times `(-1)^{|V|}`
/// outside it.
pub fn expand_neighborhood(j: &SmallGraph, side: Side) -> Result<KExpr> {
    let p = j.n();
    if p > MAX_FACTOR_VERTICES {
        return Err(Error::TooManyVertices {
            n: p,
            max: MAX_FACTOR_VERTICES,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..p).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let denominator = BigInt::from(j.automorphism_count()) << (pairs.len() + p);
    let unit = Rational::new(BigInt::from(1), denominator);
    let minus_unit = -unit.clone();

    let mut out = KExpr::zero();
    for edge_mask in 0u32..1 << pairs.len() {
        let mut graph = SmallGraph::empty(p);
        let mut flips = 0;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if edge_mask >> i & 1 == 1 {
                graph.add_edge(u, v);
                if !j.has_edge(u, v) {
                    flips += 1;
                }
            }
        }
        for blue in 0..1u16 << p {
            let mut sign_flips = flips;
            if side == Side::Minus {
                sign_flips += blue.count_ones();
            }
            let coeff = if sign_flips % 2 == 0 { &unit } else { &minus_unit };
            let colored = ColoredGraph::new(graph, blue).expect("blue within range");
            out.add_graph(&colored, &RationalPoly::constant(coeff.clone()));
        }
    }
    Ok(out)
}

pub fn expand_plus(j: &SmallGraph) -> Result<KExpr> {
    expand_neighborhood(j, Side::Plus)
}

pub fn expand_minus(j: &SmallGraph) -> Result<KExpr> {
    expand_neighborhood(j, Side::Minus)
}

/// Sums a k̃-combination over the apex vertex: each `(J, L)` becomes `J`
/// plus a new vertex adjacent exactly to `L`.
pub fn apex_close(e: &KExpr) -> JExpr {
    let mut out = JExpr::zero();
    for (g, c) in e.graphs() {
        let closed = g.graph().with_apex(g.blue()).expect("k-term below vertex bound");
        out.add_graph(&closed, c);
    }
    out
}

/// Removes isolated vertices, multiplying by `(|S| - |V(J)| + 1)` per vertex
/// removed, where `ambient_size` gives `|S|` as a polynomial in `n`.
pub fn reduce_isolated(e: &JExpr, ambient_size: &RationalPoly) -> JExpr {
    let mut out = JExpr::zero();
    for (g, c) in e.graphs() {
        let p = g.n() as i64;
        let isolated = g.isolated_count() as i64;
        let mut coeff = c.clone();
        for i in 0..isolated {
            // the i-th removal acts on a graph with p - i vertices
            let factor = ambient_size - &RationalPoly::from_integer(p - i - 1);
            coeff = &coeff * &factor;
        }
        let keep = iter_bits(g.all_vertices()).filter(|&v| !g.is_isolated(v)).fold(0, |acc, v| acc | 1 << v);
        out.add_graph(&g.induced(keep), &coeff);
    }
    out
}

/// Product of the neighborhood expansions of every factor of `t`, before closure.
pub fn expand_factors(t: &TermSpec) -> Result<KExpr> {
    let used = t.factor_vertices();
    if used + 1 > MAX_TERM_VERTICES {
        return Err(Error::BudgetExceeded {
            used,
            max: MAX_TERM_VERTICES - 1,
        });
    }
    let mut product = KExpr::one();
    for (g, side) in t.factors() {
        product = k_mul(&product, &expand_neighborhood(g, side)?);
    }
    Ok(product)
}

/// Normal form `Σ m_J(n) · j̃(J)` over graphs without isolated vertices of
/// `Σ_v c(n) · Π s(J_i, G_v^-) · Π s(J'_j, G_v^+)`.
pub fn expand_term(t: &TermSpec) -> Result<JExpr> {
    if t.coefficient.is_zero() {
        return Ok(JExpr::zero());
    }
    let closed = apex_close(&expand_factors(t)?);
    Ok(reduce_isolated(&closed, &RationalPoly::n()).scale(&t.coefficient))
}

/// Sum of the normal forms of all `terms`.
pub fn expand_sum<'a>(terms: impl IntoIterator<Item = &'a TermSpec>) -> Result<JExpr> {
    let mut total = JExpr::zero();
    for t in terms {
        total.add_assign(&expand_term(t)?);
    }
    Ok(total)
}
