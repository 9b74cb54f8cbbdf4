//! Exact expansion of vertex sums of neighborhood subgraph counts into
//! linear combinations of signed injection counts, with the brute-force
//! evaluators and verification harness that check them.

pub mod counting;
pub mod error;
pub mod graph;
pub mod polynom;
pub mod symbolic;
pub mod verify;

pub use error::{Error, Result};
