//! Recovering normal-form coefficients from numeric data alone, as an
//! oracle independent of the symbolic engine.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::identity::{random_graph, DEFAULT_SEED};
use super::linalg::solve_exact;
use crate::counting::{j_count, term_eval, TermSpec};
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, enumerate_up_to, SmallGraph, MAX_ENUMERATION};
use crate::polynom::{Rational, RationalPoly};
use crate::symbolic::{jexpr_eval, JExpr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitConfig {
    /// Every graph on at most this many vertices contributes an equation.
    pub max_graph_size: usize,
    /// Largest power of `n` allowed in a coefficient.
    pub degree_bound: usize,
    /// Extra equations from random graphs on 9 to 12 vertices.
    pub random_count: usize,
    /// Random graphs used only to check the solution.
    pub holdout: usize,
    pub seed: u64,
}

impl FitConfig {
    pub fn new(max_graph_size: usize, degree_bound: usize) -> Self {
        FitConfig {
            max_graph_size,
            degree_bound,
            random_count: 10,
            holdout: 20,
            seed: DEFAULT_SEED,
        }
    }
}

/// [`fit_with`] under the default random settings.
pub fn fit_coefficients(t: &TermSpec, max_graph_size: usize, degree_bound: usize) -> Result<JExpr> {
    fit_with(t, &FitConfig::new(max_graph_size, degree_bound))
}

/// Solves `term_eval(t, G) = Σ_J Σ_d c_{J,d} · n^d · j(J, G)` exactly over
/// the configured hosts. `J` ranges over graphs without isolated vertices on
/// at most `K = 1 + Σ |V(factor)|` vertices, and `deg_n c_J` is capped by
/// `K - |V(J)| + deg c(n)` as well as by the degree bound.
pub fn fit_with(t: &TermSpec, cfg: &FitConfig) -> Result<JExpr> {
    if t.coefficient.is_zero() {
        return Ok(JExpr::zero());
    }
    let k = t.factor_vertices() + 1;
    if k > MAX_ENUMERATION || cfg.max_graph_size > MAX_ENUMERATION {
        return Err(Error::TooManyVertices {
            n: k.max(cfg.max_graph_size),
            max: MAX_ENUMERATION,
        });
    }
    let extra = t.coefficient.degree().unwrap_or(0);
    let mut unknowns: Vec<(SmallGraph, usize)> = Vec::new();
    for p in 0..=k {
        for j in enumerate_graphs(p)?.into_iter().filter(|g| g.isolated_count() == 0) {
            let cap = cfg.degree_bound.min(k - p + extra);
            unknowns.extend((0..=cap).map(|d| (j, d)));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut hosts = enumerate_up_to(cfg.max_graph_size)?;
    for _ in 0..cfg.random_count {
        let n = rng.gen_range(9..=12);
        hosts.push(random_graph(&mut rng, n));
    }
    let holdout: Vec<SmallGraph> = (0..cfg.holdout)
        .map(|_| {
            let n = rng.gen_range(7..=12);
            random_graph(&mut rng, n)
        })
        .collect();

    // Scale every equation so the right-hand side is an integer.
    let scale = t.coefficient.denominator_lcm();
    let equations: Vec<(Vec<BigInt>, BigInt)> = hosts
        .par_iter()
        .map(|g| {
            let n = BigInt::from(g.n());
            let row = unknowns
                .iter()
                .map(|(j, d)| {
                    let count = j_count(j, g);
                    if count == 0 {
                        BigInt::zero()
                    } else {
                        num_traits::pow(n.clone(), *d) * count
                    }
                })
                .collect();
            let value = term_eval(t, g) * Rational::from_integer(scale.clone());
            debug_assert!(value.is_integer());
            (row, value.to_integer())
        })
        .collect();
    let (rows, rhs): (Vec<_>, Vec<_>) = equations.into_iter().unzip();
    let solution = solve_exact(&rows, &rhs)?;

    let descale = Rational::new(BigInt::one(), scale);
    let mut out = JExpr::zero();
    for ((j, d), c) in unknowns.iter().zip(solution) {
        if c.is_zero() {
            continue;
        }
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[*d] = c * &descale;
        out.add_graph(j, &RationalPoly::from_coeffs(coeffs));
    }

    for g in &holdout {
        if jexpr_eval(&out, g) != term_eval(t, g) {
            return Err(Error::LinearSystem("solution fails on a held-out random graph".into()));
        }
    }
    Ok(out)
}
