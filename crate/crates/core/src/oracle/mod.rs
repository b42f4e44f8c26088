//! Independent modern verifier: exact real-root isolation by Sturm sequences
//! and bisection over the rationals.
//!
//! Nothing here depends on the historical pipeline except through the
//! [`differential_check`] comparison, which only reads its results.

mod differential;
mod sturm;

pub use differential::{differential_check, Discrepancy, OracleReport};
pub use sturm::{isolate_positive_roots, refine, IsolatedRoot, RatPoly};
