//! Products of j̃- and k̃-terms by gluing graphs along partial injections.

use super::expr::{JExpr, KExpr};
use crate::counting::subsets_of_size;
use crate::graph::{iter_bits, ColoredGraph, SmallGraph, VertexSet, MAX_VERTICES};

/// Calls `f` with every gluing `J_{I,λ}` of `a` onto `b`: for each subset `I`
/// of `a`'s vertices (by increasing size) and each injection `λ: I → V(b)`
/// (lexicographic), `v ∈ I` is identified with `λ(v)`. Edges combine by
/// symmetric difference, so a doubled edge disappears; an identified vertex
/// is blue iff exactly one of its two preimages was blue.
///
/// `b`'s vertices keep their labels; unmatched vertices of `a` follow in
/// increasing order. Panics if `a` and `b` together exceed [`MAX_VERTICES`].
pub fn for_each_gluing(a: &ColoredGraph, b: &ColoredGraph, mut f: impl FnMut(ColoredGraph)) {
    let (na, nb) = (a.n(), b.n());
    assert!(na + nb <= MAX_VERTICES, "gluing {na} and {nb} vertices exceeds the vertex bound");
    let mut image = vec![0usize; na];
    for k in 0..=na.min(nb) {
        for matched in subsets_of_size(na, k) {
            let members: Vec<usize> = iter_bits(matched).collect();
            let mut next = nb;
            for (v, slot) in image.iter_mut().enumerate() {
                if matched >> v & 1 == 0 {
                    *slot = next;
                    next += 1;
                }
            }
            injections(&members, nb, 0, 0, &mut image, &mut |image| {
                f(glue(a, b, image, na + nb - k));
            });
        }
    }
}

fn injections(members: &[usize], target: usize, depth: usize, used: VertexSet, image: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    if depth == members.len() {
        f(image);
        return;
    }
    for t in 0..target {
        if used >> t & 1 == 0 {
            image[members[depth]] = t;
            injections(members, target, depth + 1, used | 1 << t, image, f);
        }
    }
}

fn glue(a: &ColoredGraph, b: &ColoredGraph, image: &[usize], n: usize) -> ColoredGraph {
    let mut g = SmallGraph::empty(n);
    for (u, v) in b.graph().edges() {
        g.add_edge(u, v);
    }
    for (u, v) in a.graph().edges() {
        g.toggle_edge(image[u], image[v]);
    }
    let blue = iter_bits(a.blue()).fold(b.blue(), |acc, v| acc ^ 1 << image[v]);
    ColoredGraph::new(g, blue).expect("glued colors within range")
}

/// Product of two j̃-combinations over a common ambient set.
pub fn j_mul(a: &JExpr, b: &JExpr) -> JExpr {
    let mut out = JExpr::zero();
    let right: Vec<_> = b.graphs().map(|(g, c)| (ColoredGraph::uncolored(g), c.clone())).collect();
    for (ga, ca) in a.graphs() {
        let ga = ColoredGraph::uncolored(ga);
        for (gb, cb) in &right {
            let coeff = ca * cb;
            for_each_gluing(&ga, gb, |glued| out.add_graph(glued.graph(), &coeff));
        }
    }
    out
}

/// Product of two k̃-combinations over a common ambient set.
pub fn k_mul(a: &KExpr, b: &KExpr) -> KExpr {
    let mut out = KExpr::zero();
    let right: Vec<_> = b.graphs().map(|(g, c)| (g, c.clone())).collect();
    for (ga, ca) in a.graphs() {
        for (gb, cb) in &right {
            let coeff = ca * cb;
            for_each_gluing(&ga, gb, |glued| out.add_graph(&glued, &coeff));
        }
    }
    out
}
