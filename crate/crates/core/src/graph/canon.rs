//! Canonical labeling by exhaustive search over cell-respecting relabelings.
//!
//! Vertices are first split into cells by iterated color refinement (blue
//! before red, then degree, then neighbor-cell counts). Cells are ordered by
//! their refinement signature, which is an isomorphism invariant, so the
//! lexicographically least adjacency code over all relabelings that keep each
//! cell in its block is a canonical form. Every automorphism preserves the
//! cells, so the number of relabelings reaching the least code equals the
//! automorphism count.
//!
//! Cost is the product of the factorials of the cell sizes. That is trivial for
//! the graphs that appear in expansions (at most six vertices) and acceptable
//! for enumeration up to eight vertices; highly symmetric twelve-vertex graphs
//! are slow and are never canonized by the pipelines.

use std::fmt;

use super::small::{iter_bits, ColoredGraph, SmallGraph, VertexSet, MAX_VERTICES};

/// Identifies an isomorphism class of colored graphs.
///
/// Ordering is by vertex count, then blue mask, then adjacency code, which
/// gives the deterministic term order used when printing expressions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u8,
    blue: VertexSet,
    code: u128,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// `n`, the blue mask (little endian), then the adjacency code (big endian).
    pub fn to_bytes(&self) -> Vec<u8> {
        let bits = pair_count(self.n());
        let nbytes = bits.div_ceil(8);
        let mut out = Vec::with_capacity(3 + nbytes);
        out.push(self.n);
        out.extend_from_slice(&self.blue.to_le_bytes());
        let aligned = self.code << (nbytes * 8 - bits);
        out.extend_from_slice(&aligned.to_be_bytes()[16 - nbytes..]);
        out
    }

    /// The canonically labeled representative of the class.
    pub fn colored_graph(&self) -> ColoredGraph {
        let n = self.n();
        let mut g = SmallGraph::empty(n);
        let mut bit = pair_count(n);
        for j in 1..n {
            for i in 0..j {
                bit -= 1;
                if self.code >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        ColoredGraph::new(g, self.blue).expect("blue mask within vertex range")
    }

    pub fn graph(&self) -> SmallGraph {
        *self.colored_graph().graph()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey(")?;
        for b in self.to_bytes() {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub key: CanonicalKey,
    pub automorphisms: u64,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
}

pub trait Canonize {
    fn canonical(&self) -> Canonical;

    fn canonical_key(&self) -> CanonicalKey {
        self.canonical().key
    }

    fn automorphism_count(&self) -> u64 {
        self.canonical().automorphisms
    }
}

impl Canonize for ColoredGraph {
    fn canonical(&self) -> Canonical {
        canonical_form(self)
    }
}

impl Canonize for SmallGraph {
    fn canonical(&self) -> Canonical {
        canonical_form(&ColoredGraph::uncolored(*self))
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Cell index of every vertex after refinement, cells numbered in signature order.
fn refine(g: &ColoredGraph) -> [u8; MAX_VERTICES] {
    let n = g.n();
    let graph = g.graph();
    let mut cell = [0u8; MAX_VERTICES];
    let initial: Vec<(u8, u8)> = (0..n)
        .map(|v| (u8::from(!g.is_blue(v)), graph.degree(v) as u8))
        .collect();
    let mut cells = rank(&initial, &mut cell);
    loop {
        let signatures: Vec<(u8, Vec<u8>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u8> = iter_bits(graph.neighbors(v)).map(|u| cell[u]).collect();
                nb.sort_unstable();
                (cell[v], nb)
            })
            .collect();
        let refined = rank(&signatures, &mut cell);
        if refined == cells {
            return cell;
        }
        cells = refined;
    }
}

/// Writes the rank of each signature among the distinct ones; returns the count.
fn rank<T: Ord + Clone>(signatures: &[T], out: &mut [u8; MAX_VERTICES]) -> usize {
    let mut distinct = signatures.to_vec();
    distinct.sort();
    distinct.dedup();
    for (v, s) in signatures.iter().enumerate() {
        out[v] = distinct.binary_search(s).expect("signature present") as u8;
    }
    distinct.len()
}

struct Search<'a> {
    graph: &'a SmallGraph,
    n: usize,
    total_bits: usize,
    cell_of_vertex: [u8; MAX_VERTICES],
    cell_of_position: [u8; MAX_VERTICES],
    order: [usize; MAX_VERTICES],
    best: Option<u128>,
    best_order: [usize; MAX_VERTICES],
    hits: u64,
}

impl Search<'_> {
    fn run(&mut self, position: usize, used: VertexSet, prefix: u128) {
        if position == self.n {
            match self.best {
                Some(b) if prefix > b => {}
                Some(b) if prefix == b => self.hits += 1,
                _ => {
                    self.best = Some(prefix);
                    self.best_order = self.order;
                    self.hits = 1;
                }
            }
            return;
        }
        let cell = self.cell_of_position[position];
        let prefix_bits = pair_count(position + 1);
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.cell_of_vertex[v] != cell {
                continue;
            }
            let mut code = prefix;
            for &u in &self.order[..position] {
                code = code << 1 | u128::from(self.graph.has_edge(u, v));
            }
            if let Some(b) = self.best {
                if code > b >> (self.total_bits - prefix_bits) {
                    continue;
                }
            }
            self.order[position] = v;
            self.run(position + 1, used | 1 << v, code);
        }
    }
}

/// Canonical key, automorphism count, and canonical labeling of a colored graph.
pub fn canonical_form(g: &ColoredGraph) -> Canonical {
    let n = g.n();
    let cell_of_vertex = refine(g);
    let mut cell_of_position = [0u8; MAX_VERTICES];
    let mut sorted: Vec<u8> = cell_of_vertex[..n].to_vec();
    sorted.sort_unstable();
    cell_of_position[..n].copy_from_slice(&sorted);

    let mut search = Search {
        graph: g.graph(),
        n,
        total_bits: pair_count(n),
        cell_of_vertex,
        cell_of_position,
        order: [0; MAX_VERTICES],
        best: None,
        best_order: [0; MAX_VERTICES],
        hits: 0,
    };
    search.run(0, 0, 0);

    let mut labeling = vec![0; n];
    for (position, &v) in search.best_order[..n].iter().enumerate() {
        labeling[v] = position;
    }
    let blue = iter_bits(g.blue()).fold(0, |acc, v| acc | 1 << labeling[v]);
    Canonical {
        key: CanonicalKey {
            n: n as u8,
            blue,
            code: search.best.unwrap_or(0),
        },
        automorphisms: search.hits.max(1),
        labeling,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SmallGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SmallGraph::new(n, &edges).unwrap()
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(SmallGraph::complete(3).automorphism_count(), 6);
        assert_eq!(cycle(4).automorphism_count(), 8);
        let marked = ColoredGraph::new(cycle(5), 0b1).unwrap();
        assert_eq!(marked.automorphism_count(), 2);
        assert_eq!(SmallGraph::empty(0).automorphism_count(), 1);
        assert_eq!(SmallGraph::empty(5).automorphism_count(), 120);
    }

    #[test]
    fn key_is_relabeling_invariant() {
        let p4 = SmallGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let q = p4.permuted(&[2, 0, 3, 1]);
        assert_ne!(p4, q);
        assert_eq!(p4.canonical_key(), q.canonical_key());
        assert_ne!(p4.canonical_key(), cycle(4).canonical_key());
    }

    #[test]
    fn colored_keys_separate_blue_placements() {
        let adjacent = ColoredGraph::new(cycle(4), 0b0011).unwrap();
        let opposite = ColoredGraph::new(cycle(4), 0b0101).unwrap();
        assert_ne!(adjacent.canonical_key(), opposite.canonical_key());
        assert_eq!(adjacent.automorphism_count(), 2);
        assert_eq!(opposite.automorphism_count(), 4);
    }

    #[test]
    fn key_decodes_to_isomorphic_graph() {
        let g = ColoredGraph::new(SmallGraph::new(5, &[(0, 1), (1, 2), (3, 4), (0, 4)]).unwrap(), 0b10010).unwrap();
        let canon = g.canonical();
        let decoded = canon.key.colored_graph();
        assert_eq!(decoded, g.permuted(&canon.labeling));
        assert_eq!(decoded.canonical_key(), canon.key);
        assert_eq!(canon.key.to_bytes()[0], 5);
    }
}
