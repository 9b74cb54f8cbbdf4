//! Reproduction of the coefficient table, resolution of the graph catalog,
//! and symbolic, numeric and fitted checks of the identity.

mod catalog;
mod data;
mod fit;
mod identity;
mod linalg;
mod table;

pub use catalog::{
    isolation_free_classes, resolve_catalog, resolve_with, scaled_expansions, CatalogAssignment, CatalogEntry,
    Provenance, CATALOG_GOLDEN,
};
pub use data::{
    load_identity, load_table, IdentitySpec, Monomial, Part, TableData, TableLine, FIRST_INDEX, IDENTITY_JSON,
    LAST_INDEX, TABLE_JSON,
};
pub use fit::{fit_coefficients, fit_with, FitConfig};
pub use identity::{
    exhaustive_hosts, random_hosts, verify_identity_numeric, verify_identity_symbolic, NumericReport, Residual,
    DEFAULT_SEED,
};
pub use linalg::solve_exact;
pub use table::{compare_line, verify_table, Discrepancy, LineReport, TableReport};
