//! Catalog of identities with a verification engine.
//!
//! Each entry builds its two sides independently over the truncated ring and
//! compares them coefficient by coefficient. Randomized entries pack one
//! rational instance per coefficient, so a mismatch's `q` field is the
//! instance index there.

mod builders;
mod catalog;
mod random;
mod verify;

pub use catalog::{
    Builder, Comparison, Ctx, IdentityCase, ParamMode, CATALOG, COLORED_MAX_IJ, COLORED_MAX_N,
};
pub use random::RANDOM_INSTANCES;
pub use verify::{
    find_case, first_mismatch, list_identities, verify_all, verify_all_with, verify_identity,
    verify_with, IdentityInfo, IdentityReport, Mismatch, Status, VerifyOptions,
};
