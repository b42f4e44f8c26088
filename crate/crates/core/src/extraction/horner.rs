use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::DigitString;
use crate::numerics::{pow_base, Interval, QPoly, QuadExt, Rational};
use crate::{Error, Result};

/// Coefficients of `p(pivot + X)` by repeated synthetic division.
pub fn taylor_shift(poly: &QPoly, pivot: &QuadExt) -> QPoly {
    let mut c: Vec<QuadExt> = poly.coeffs().to_vec();
    let n = c.len() - 1;
    for i in 0..n {
        for j in (i..n).rev() {
            let carry = &c[j + 1] * pivot;
            c[j] = &c[j] + &carry;
        }
    }
    QPoly::new(c, poly.d()).expect("shift stays in the polynomial's field")
}

fn taylor_shift_rational(poly: &QPoly, pivot: &Rational) -> QPoly {
    taylor_shift(poly, &QuadExt::rational(pivot.clone(), poly.d()))
}

/// Decides `t <= root` for the unique root of `p` in `[lo, hi]`.
struct Locator<'a> {
    p: &'a QPoly,
    lo: &'a Rational,
    hi: &'a Rational,
    /// Sign of `p` strictly to the right of the root inside the bracket.
    after: i8,
}

impl Locator<'_> {
    fn new<'a>(p: &'a QPoly, bracket: &'a Interval) -> Result<Locator<'a>> {
        let (lo, hi) = (bracket.lo(), bracket.hi());
        let s_lo = p.eval_rational(lo).sign();
        let s_hi = p.eval_rational(hi).sign();
        let after = match (s_lo, s_hi) {
            (0, 0) if lo == hi => 1,
            (0, 0) => return Err(Error::Inconsistent("two roots at the bracket ends")),
            (0, s) => s,
            (s, 0) => -s,
            (a, b) if a == b => return Err(Error::NoRoot),
            (_, b) => b,
        };
        Ok(Locator { p, lo, hi, after })
    }

    /// Sign test on the already-shifted polynomial `q(X) = p(v + X)`.
    fn below_root(&self, q: &QPoly, v: &Rational, step: &Rational) -> bool {
        let t = v + step;
        if &t < self.lo {
            return true;
        }
        if &t > self.hi {
            return false;
        }
        q.eval_rational(step).sign() != self.after
    }

    fn check(&self, t: &Rational) -> bool {
        if t < self.lo {
            return true;
        }
        if t > self.hi {
            return false;
        }
        self.p.eval_rational(t).sign() != self.after
    }
}

/// Digit-by-digit extraction of the unique root of `p` in `bracket`.
///
/// The bracket must be nonnegative and hold exactly one root, with `p`
/// changing sign across it. Each position takes the greatest digit that
/// keeps the partial value at or below the root, the polynomial being
/// recentred on the partial value after every digit so that each test is a
/// single Horner evaluation. The result is certified afterwards by direct
/// evaluation of `p`.
pub fn extract_in_bracket(
    p: &QPoly,
    bracket: &Interval,
    base: u32,
    n_digits: usize,
) -> Result<DigitString> {
    if base < 2 {
        return Err(Error::Usage("base must be at least 2"));
    }
    if bracket.lo().is_negative() {
        return Err(Error::Usage("bracket must be nonnegative"));
    }
    let loc = Locator::new(p, bracket)?;

    // highest place value with base^top > hi
    let mut top: i64 = 0;
    while pow_base(base, top) <= *bracket.hi() {
        top += 1;
    }
    let mut v = Rational::zero();
    let mut q = p.clone();
    for k in (-(n_digits as i64)..top).rev() {
        let unit = pow_base(base, k);
        // greatest digit δ in [0, base) with v + δ·unit <= root
        let (mut lo_d, mut hi_d) = (0u32, base);
        while hi_d - lo_d > 1 {
            let mid = (lo_d + hi_d) / 2;
            let step = &unit * Rational::from_integer(BigInt::from(mid));
            if loc.below_root(&q, &v, &step) {
                lo_d = mid;
            } else {
                hi_d = mid;
            }
        }
        if lo_d > 0 {
            let step = &unit * Rational::from_integer(BigInt::from(lo_d));
            q = taylor_shift_rational(&q, &step);
            v += step;
        }
    }

    let ulp = pow_base(base, -(n_digits as i64));
    let exact = loc.lo <= &v && &v <= loc.hi && q.coeff(0).is_zero();
    if !loc.check(&v) || (!exact && loc.check(&(&v + &ulp))) {
        return Err(Error::Certification(
            "digit extraction lost the sign change",
        ));
    }
    Ok(DigitString::from_value(&v, base, n_digits, exact))
}

/// Digits of the solution of `poly(x) = target` in `bracket`, where `poly`
/// is increasing on the bracket.
pub fn extract_monotone(
    poly: &QPoly,
    target: &QuadExt,
    bracket: &Interval,
    base: u32,
    n_digits: usize,
) -> Result<DigitString> {
    let p = poly.minus_constant(target);
    let s_lo = p.eval_rational(bracket.lo()).sign();
    let s_hi = p.eval_rational(bracket.hi()).sign();
    if s_lo > 0 || s_hi < 0 {
        return Err(Error::NoRoot);
    }
    if s_lo == 0 && s_hi == 0 && !bracket.is_point() {
        return Err(Error::Inconsistent(
            "increasing polynomial vanishes at both ends",
        ));
    }
    extract_in_bracket(&p, bracket, base, n_digits)
}
