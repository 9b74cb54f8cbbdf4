use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count any [`SmallGraph`] may have.
pub const MAX_VERTICES: usize = 12;

/// Bit set over vertex indices `0..MAX_VERTICES`.
pub type VertexSet = u16;

/// Undirected simple graph on at most [`MAX_VERTICES`] labeled vertices.
///
/// Row `v` of the adjacency holds the neighbors of `v` as a bit set. Rows
/// beyond `n` are always zero, so derived equality and hashing compare
/// labeled graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    n: u8,
    rows: [VertexSet; MAX_VERTICES],
}

impl SmallGraph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n > MAX_VERTICES`; use [`SmallGraph::new`] for checked input.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices exceeds bound");
        SmallGraph {
            n: n as u8,
            rows: [0; MAX_VERTICES],
        }
    }

    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut g = SmallGraph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SmallGraph::empty(n);
        for v in 0..n {
            g.rows[v] = g.all_vertices() & !(1 << v);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn all_vertices(&self) -> VertexSet {
        ((1u32 << self.n) - 1) as VertexSet
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n()).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.rows[u] ^= 1 << v;
        self.rows[v] ^= 1 << u;
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.rows[v] == 0
    }

    pub fn isolated_count(&self) -> usize {
        (0..self.n()).filter(|&v| self.is_isolated(v)).count()
    }

    /// Subgraph induced by `set`, relabeled in increasing vertex order.
    pub fn induced(&self, set: VertexSet) -> SmallGraph {
        let set = set & self.all_vertices();
        let verts: Vec<usize> = iter_bits(set).collect();
        let mut g = SmallGraph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().take(i) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// The graph with vertex `v` deleted and higher labels shifted down.
    pub fn remove_vertex(&self, v: usize) -> SmallGraph {
        self.induced(self.all_vertices() & !(1 << v))
    }

    /// Appends a vertex adjacent exactly to `neighbors`; its label is the old `n`.
    pub fn with_apex(&self, neighbors: VertexSet) -> Result<SmallGraph> {
        let n = self.n();
        if n == MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: n + 1,
                max: MAX_VERTICES,
            });
        }
        let mut g = *self;
        g.n += 1;
        for u in iter_bits(neighbors & self.all_vertices()) {
            g.add_edge(u, n);
        }
        Ok(g)
    }

    pub fn complement(&self) -> SmallGraph {
        let mut g = SmallGraph::empty(self.n());
        for v in 0..self.n() {
            g.rows[v] = !self.rows[v] & self.all_vertices() & !(1 << v);
        }
        g
    }

    pub fn disjoint_union(&self, other: &SmallGraph) -> Result<SmallGraph> {
        let n = self.n() + other.n();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut g = *self;
        g.n = n as u8;
        let shift = self.n();
        for v in 0..other.n() {
            g.rows[v + shift] = other.rows[v] << shift;
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SmallGraph {
        debug_assert_eq!(perm.len(), self.n());
        let mut g = SmallGraph::empty(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// A graph with a distinguished set of "blue" vertices; all others are red.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ColoredGraph {
    graph: SmallGraph,
    blue: VertexSet,
}

impl ColoredGraph {
    pub fn new(graph: SmallGraph, blue: VertexSet) -> Result<Self> {
        if blue & !graph.all_vertices() != 0 {
            let vertex = (15 - (blue & !graph.all_vertices()).leading_zeros()) as usize;
            return Err(Error::VertexOutOfRange {
                vertex,
                n: graph.n(),
            });
        }
        Ok(ColoredGraph { graph, blue })
    }

    pub fn uncolored(graph: SmallGraph) -> Self {
        ColoredGraph { graph, blue: 0 }
    }

    /// The 0-vertex colored graph, multiplicative identity of k-products.
    pub fn unit() -> Self {
        ColoredGraph::uncolored(SmallGraph::empty(0))
    }

    #[inline]
    pub fn graph(&self) -> &SmallGraph {
        &self.graph
    }

    #[inline]
    pub fn blue(&self) -> VertexSet {
        self.blue
    }

    #[inline]
    pub fn is_blue(&self, v: usize) -> bool {
        self.blue >> v & 1 == 1
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn permuted(&self, perm: &[usize]) -> ColoredGraph {
        let blue = iter_bits(self.blue).fold(0, |acc, v| acc | 1 << perm[v]);
        ColoredGraph {
            graph: self.graph.permuted(perm),
            blue,
        }
    }
}

/// Indices of set bits, ascending.
pub fn iter_bits(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_examples() {
        let k3 = SmallGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, SmallGraph::complete(3));
        let e2 = SmallGraph::new(2, &[]).unwrap();
        assert_eq!(e2.edge_count(), 0);
        assert_eq!(e2.isolated_count(), 2);
        let p4 = SmallGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert_eq!((0..4).map(|v| p4.degree(v)).collect::<Vec<_>>(), [1, 2, 2, 1]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = SmallGraph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(
            SmallGraph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(SmallGraph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            SmallGraph::new(13, &[]),
            Err(Error::TooManyVertices { n: 13, .. })
        ));
    }

    #[test]
    fn induced_and_apex() {
        let c4 = SmallGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p3 = c4.induced(0b0111);
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(c4.remove_vertex(0), p3);
        let closed = p3.with_apex(0b101).unwrap();
        assert_eq!(closed.n(), 4);
        assert!((0..4).all(|v| closed.degree(v) == 2));
        assert_eq!(SmallGraph::complete(4).complement().edge_count(), 0);
    }

    #[test]
    fn colored_rejects_out_of_range_blue() {
        assert!(ColoredGraph::new(SmallGraph::empty(2), 0b100).is_err());
        assert!(ColoredGraph::new(SmallGraph::empty(2), 0b10).is_ok());
    }
}
