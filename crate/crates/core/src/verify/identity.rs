//! The identity checked symbolically through the normal form and numerically
//! by brute-force counting.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::data::IdentitySpec;
use crate::counting::identity_lhs_eval;
use crate::error::Result;
use crate::graph::{emit_graph6, enumerate_up_to, SmallGraph};
use crate::symbolic::{expand_sum, JExpr};

/// Default seed for random hosts.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Sum of the normal forms of all monomials; zero exactly when the identity holds.
pub fn verify_identity_symbolic(spec: &IdentitySpec) -> Result<JExpr> {
    expand_sum(spec.terms())
}

/// All isomorphism classes on `1..=max_n` vertices.
pub fn exhaustive_hosts(max_n: usize) -> Result<Vec<SmallGraph>> {
    enumerate_up_to(max_n)
}

/// `count` labeled graphs on `n` vertices with independent edges of
/// probability 1/2, reproducible from `seed`.
pub fn random_hosts(count: usize, n: usize, seed: u64) -> Vec<SmallGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_graph(&mut rng, n)).collect()
}

pub(crate) fn random_graph(rng: &mut impl Rng, n: usize) -> SmallGraph {
    let mut g = SmallGraph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub graph6: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericReport {
    pub hosts: usize,
    /// Hosts where the left-hand side is not zero, in input order.
    pub nonzero: Vec<Residual>,
}

impl NumericReport {
    pub fn pass(&self) -> bool {
        self.nonzero.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.nonzero {
            out.push_str(&format!("nonzero on {}: {}\n", r.graph6, r.value));
        }
        out.push_str(&format!("{} nonzero residuals over {} graphs\n", self.nonzero.len(), self.hosts));
        out
    }
}

/// Evaluates the identity's left-hand side on every host by brute force.
/// Never consults the symbolic engine.
pub fn verify_identity_numeric(hosts: &[SmallGraph]) -> NumericReport {
    let nonzero = hosts
        .par_iter()
        .filter_map(|g| {
            let value = identity_lhs_eval(g);
            (!value.is_zero()).then(|| Residual {
                graph6: emit_graph6(g),
                value: value.to_string(),
            })
        })
        .collect();
    NumericReport {
        hosts: hosts.len(),
        nonzero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_hosts_are_reproducible() {
        let a = random_hosts(3, 12, 7);
        assert_eq!(a, random_hosts(3, 12, 7));
        assert_ne!(a, random_hosts(3, 12, 8));
        assert!(a.iter().all(|g| g.n() == 12));
    }

    #[test]
    fn small_hosts_vanish() {
        let hosts = exhaustive_hosts(4).unwrap();
        assert_eq!(hosts.len(), 1 + 2 + 4 + 11);
        assert!(verify_identity_numeric(&hosts).pass());
    }
}
