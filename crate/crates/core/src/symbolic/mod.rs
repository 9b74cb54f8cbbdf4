//! Formal j̃/k̃ combinations modulo isomorphism and the rewriting that turns
//! vertex sums of neighborhood subgraph counts into j-count normal form.

mod expand;
mod expr;
mod glue;

pub use expand::{
    apex_close, expand_factors, expand_minus, expand_neighborhood, expand_plus, expand_sum, expand_term, reduce_isolated,
    MAX_FACTOR_VERTICES, MAX_TERM_VERTICES,
};
pub use expr::{jexpr_eval, JExpr, KExpr};
pub use glue::{for_each_gluing, j_mul, k_mul};
