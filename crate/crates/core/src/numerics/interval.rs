use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::quad::QuadExt;
use super::rational::{exact_sqrt, Rational};
use crate::{Error, Result};

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval with lo > hi");
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn shift(&self, r: &Rational) -> Interval {
        Interval {
            lo: &self.lo + r,
            hi: &self.hi + r,
        }
    }

    pub fn scale(&self, r: &Rational) -> Interval {
        if r.is_negative() {
            Interval {
                lo: &self.hi * r,
                hi: &self.lo * r,
            }
        } else {
            Interval {
                lo: &self.lo * r,
                hi: &self.hi * r,
            }
        }
    }

    /// Outward enclosure of the square root; negative parts are clamped to 0.
    pub fn sqrt(&self, width: &Rational) -> Result<Interval> {
        if self.hi.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        let lo = if self.lo.is_positive() {
            sqrt_enclosure(&self.lo, width)?.lo
        } else {
            Rational::zero()
        };
        let hi = sqrt_enclosure(&self.hi, width)?.hi;
        Ok(Interval { lo, hi })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Enclosure `[lo, hi]` of `sqrt(r)` with `lo² <= r <= hi²` and
/// `hi - lo <= width`.
///
/// The endpoints lie on the dyadic grid `1/2^k` with the smallest `k` such
/// that `2^-k <= width`, so shrinking the width only ever tightens the
/// enclosure.
pub fn sqrt_enclosure(r: &Rational, width: &Rational) -> Result<Interval> {
    if r.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    if !width.is_positive() {
        return Err(Error::NonPositiveWidth);
    }
    if let Some(s) = exact_sqrt(r) {
        return Ok(Interval::point(s));
    }
    let mut scale = BigInt::one();
    while Rational::new(BigInt::one(), scale.clone()) > *width {
        scale <<= 1;
    }
    // floor(sqrt(r)·scale) = isqrt(floor(r·scale²))
    let scaled = (r * Rational::from_integer(&scale * &scale))
        .floor()
        .to_integer();
    let s = scaled.sqrt();
    Ok(Interval {
        lo: Rational::new(s.clone(), scale.clone()),
        hi: Rational::new(s + 1, scale),
    })
}

/// Rational enclosure of `p + q·sqrt(d)` with width at most `width`.
pub fn qe_to_interval(x: &QuadExt, width: &Rational) -> Result<Interval> {
    if !width.is_positive() {
        return Err(Error::NonPositiveWidth);
    }
    if x.is_rational() {
        return Ok(Interval::point(x.p().clone()));
    }
    let q = x.q();
    let root = sqrt_enclosure(x.d(), &(width / q.abs()))?;
    Ok(root.scale(q).shift(x.p()))
}
