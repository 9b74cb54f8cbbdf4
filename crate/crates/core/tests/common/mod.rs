#![allow(dead_code)]

use nbcount::graph::{ColoredGraph, SmallGraph};
use nbcount::polynom::{rational, RationalPoly};
use proptest::prelude::*;

/// Labeled graph on exactly `n` vertices from an edge bitmask.
pub fn graph_from_mask(n: usize, mask: u64) -> SmallGraph {
    let mut g = SmallGraph::empty(n);
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> (bit % 64) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

pub fn graph(max_n: usize) -> impl Strategy<Value = SmallGraph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, m)| graph_from_mask(n, m))
}

pub fn graph_between(min_n: usize, max_n: usize) -> impl Strategy<Value = SmallGraph> {
    (min_n..=max_n, any::<u64>()).prop_map(|(n, m)| graph_from_mask(n, m))
}

pub fn colored(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (graph(max_n), any::<u16>()).prop_map(|(g, b)| {
        let blue = b & ((1u32 << g.n()) - 1) as u16;
        ColoredGraph::new(g, blue).unwrap()
    })
}

/// Graph together with a random relabeling of its vertices.
pub fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (SmallGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

pub fn poly() -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 0..5)
        .prop_map(|cs| RationalPoly::from_coeffs(cs.into_iter().map(|(p, q)| rational(p, q)).collect()))
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `x_{uv}` of a host: +1 on edges, -1 on non-edges.
fn x(host: &SmallGraph, u: usize, v: usize) -> i64 {
    if host.has_edge(u, v) {
        1
    } else {
        -1
    }
}

/// Every injection `0..k → 0..n`, as image vectors.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                go(k, n, cur, out);
                cur.pop();
            }
        }
    }
    go(k, n, &mut Vec::new(), &mut out);
    out
}

/// `k̃(K, L)` over the ambient set `V(host) \ {w}` with each blue marker
/// standing for `x_{uw}`, computed straight from the definition.
pub fn k_eval(k: &ColoredGraph, host: &SmallGraph, w: usize) -> i64 {
    let others: Vec<usize> = (0..host.n()).filter(|&v| v != w).collect();
    injections(k.n(), others.len())
        .into_iter()
        .map(|img| {
            let phi: Vec<usize> = img.iter().map(|&i| others[i]).collect();
            let edges: i64 = k.graph().edges().map(|(a, b)| x(host, phi[a], phi[b])).product();
            let markers: i64 = (0..k.n()).filter(|&v| k.is_blue(v)).map(|v| x(host, phi[v], w)).product();
            edges * markers
        })
        .sum()
}

/// `j(J, G)` computed by a second route: choose the image set, then order it.
pub fn j_by_subsets(pattern: &SmallGraph, host: &SmallGraph) -> i64 {
    let p = pattern.n();
    if p > host.n() {
        return 0;
    }
    let perms = permutations(p);
    let mut total = 0;
    for set in 0u32..1 << host.n() {
        if set.count_ones() as usize != p {
            continue;
        }
        let members: Vec<usize> = (0..host.n()).filter(|&v| set >> v & 1 == 1).collect();
        for perm in &perms {
            let mut sign = 1;
            for (a, b) in pattern.edges() {
                sign *= x(host, members[perm[a]], members[perm[b]]);
            }
            total += sign;
        }
    }
    total
}
