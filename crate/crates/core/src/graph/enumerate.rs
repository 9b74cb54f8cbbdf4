use std::collections::BTreeSet;

use super::canon::{CanonicalKey, Canonize};
use super::small::SmallGraph;
use crate::error::{Error, Result};

/// Largest vertex count [`enumerate_graphs`] accepts.
pub const MAX_ENUMERATION: usize = 8;

/// Largest vertex count swept by edge subsets; larger sizes extend by a vertex.
const SUBSET_SWEEP_LIMIT: usize = 6;

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, in canonical key order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<SmallGraph>> {
    Ok(enumerate_keys(n)?.into_iter().map(|k| k.graph()).collect())
}

fn enumerate_keys(n: usize) -> Result<BTreeSet<CanonicalKey>> {
    if n > MAX_ENUMERATION {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_ENUMERATION,
        });
    }
    let mut keys = BTreeSet::new();
    if n <= SUBSET_SWEEP_LIMIT {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let mut g = SmallGraph::empty(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            keys.insert(g.canonical_key());
        }
    } else {
        for key in enumerate_keys(n - 1)? {
            let base = key.graph();
            for neighbors in 0..1u16 << (n - 1) {
                let g = base.with_apex(neighbors)?;
                keys.insert(g.canonical_key());
            }
        }
    }
    Ok(keys)
}

/// All graphs on `1..=max_n` vertices, smallest first.
pub fn enumerate_up_to(max_n: usize) -> Result<Vec<SmallGraph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_graphs(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn five_vertex_graphs_without_isolated_vertices() {
        let graphs = enumerate_graphs(5).unwrap();
        assert_eq!(graphs.iter().filter(|g| g.isolated_count() == 0).count(), 23);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(enumerate_graphs(9), Err(Error::TooManyVertices { n: 9, .. })));
    }
}
