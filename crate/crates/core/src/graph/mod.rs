//! Small labeled graphs: construction, canonical forms, naming, enumeration
//! and graph6 I/O.

mod canon;
mod enumerate;
mod graph6;
mod named;
mod small;

pub use canon::{canonical_form, Canonical, CanonicalKey, Canonize};
pub use enumerate::{enumerate_graphs, enumerate_up_to, MAX_ENUMERATION};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_lines};
pub use named::{named, GraphName};
pub use small::{iter_bits, ColoredGraph, SmallGraph, VertexSet, MAX_VERTICES};

use std::fmt;

/// Which neighborhood graph of a vertex is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// Induced on the neighbors of the vertex.
    Plus,
    /// Induced on the vertices other than the vertex that are not adjacent to it.
    Minus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "+",
            Side::Minus => "-",
        })
    }
}

/// The neighborhood (`Plus`) or non-neighborhood (`Minus`) graph of `v`.
///
/// The non-neighborhood never contains `v` itself.
pub fn neighborhood(g: &SmallGraph, v: usize, side: Side) -> SmallGraph {
    assert!(v < g.n(), "vertex {v} out of range");
    let set = match side {
        Side::Plus => g.neighbors(v),
        Side::Minus => g.all_vertices() & !g.neighbors(v) & !(1 << v),
    };
    g.induced(set)
}
