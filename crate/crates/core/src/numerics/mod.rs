//! Exact arithmetic substrate: rationals, elements of a quadratic field
//! `Q(sqrt d)` and rational interval enclosures.

mod interval;
mod poly;
mod quad;
mod rational;

pub use interval::{qe_to_interval, sqrt_enclosure, Interval};
pub use poly::QPoly;
pub use quad::{qe_arith, qe_sign, ArithOp, QuadExt};
pub use rational::{
    exact_sqrt, floor_scaled, int, pow_base, rat, sign, simplest_between, Rational,
};
