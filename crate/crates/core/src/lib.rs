//! Exact positive-root solver for cubic and quadratic equations with rational
//! coefficients, organized around the medieval case analysis of the cubic:
//!
//! * [`forms`] normalizes an equation into one of the canonical
//!   positive-coefficient arrangements and rewrites it as `f(x) = c`;
//! * [`analysis`] locates the maximum of `f` exactly in a quadratic field and
//!   decides between no root, a double root and two roots;
//! * [`reduction`] links the equation to auxiliary forms by affine changes of
//!   variable;
//! * [`extraction`] computes roots digit by digit (base 10 or 60) with
//!   certified enclosures;
//! * [`oracle`] is an independent Sturm-sequence root isolator used to check
//!   everything above.
//!
//! Everything is exact: there is no floating point in this crate.

#![no_std]

extern crate alloc;

pub mod analysis;
mod error;
pub mod extraction;
pub mod forms;
pub mod numerics;
pub mod oracle;
pub mod pipeline;
pub mod reduction;

pub use error::{Error, Result};
