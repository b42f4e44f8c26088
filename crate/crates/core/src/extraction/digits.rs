use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::numerics::{pow_base, Interval, Rational};

/// Truncated positional expansion of a nonnegative root.
///
/// With `n` fraction digits and truncated value `v`, the root `r` satisfies
/// `v <= r < v + base^-n`; `enclosure` is `[v, v + base^-n]`, or the point
/// `[v, v]` when the expansion is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitString {
    base: u32,
    integer_digits: Vec<u32>,
    fraction_digits: Vec<u32>,
    enclosure: Interval,
    exact: bool,
}

fn to_digits(mut n: BigInt, base: u32) -> Vec<u32> {
    let b = BigInt::from(base);
    let mut out = Vec::new();
    while !n.is_zero() {
        let (q, r) = n.div_rem(&b);
        out.push(r.to_u32().expect("digit below base"));
        n = q;
    }
    if out.is_empty() {
        out.push(0);
    }
    out.reverse();
    out
}

impl DigitString {
    /// Builds the expansion of `value`, which must be a nonnegative multiple
    /// of `base^-n`.
    pub(crate) fn from_value(value: &Rational, base: u32, n: usize, exact: bool) -> Self {
        assert!(base >= 2, "base must be at least 2");
        assert!(!value.is_negative(), "digit strings are nonnegative");
        let scaled = value * pow_base(base, n as i64);
        assert!(scaled.is_integer(), "value is not on the base^-n grid");
        let scaled = scaled.to_integer();
        let unit = num_traits::pow(BigInt::from(base), n);
        let (int_part, frac_part) = scaled.div_rem(&unit);
        let mut fraction_digits = if n == 0 {
            Vec::new()
        } else {
            to_digits(frac_part, base)
        };
        if n > 0 {
            while fraction_digits.len() < n {
                fraction_digits.insert(0, 0);
            }
        }
        let ulp = pow_base(base, -(n as i64));
        let enclosure = if exact {
            Interval::point(value.clone())
        } else {
            Interval::new(value.clone(), value + ulp)
        };
        DigitString {
            base,
            integer_digits: to_digits(int_part, base),
            fraction_digits,
            enclosure,
            exact,
        }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn integer_digits(&self) -> &[u32] {
        &self.integer_digits
    }

    pub fn fraction_digits(&self) -> &[u32] {
        &self.fraction_digits
    }

    pub fn enclosure(&self) -> &Interval {
        &self.enclosure
    }

    /// True when the truncated value is the root itself.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// The truncated value `v`.
    pub fn value(&self) -> &Rational {
        self.enclosure.lo()
    }

    /// `base^-n`.
    pub fn ulp(&self) -> Rational {
        pow_base(self.base, -(self.fraction_digits.len() as i64))
    }

    /// Base 10 as an ordinary decimal; base 60 as `I;f1,f2,...` with the
    /// integer part itself comma-separated when it exceeds one digit.
    pub fn render(&self) -> String {
        let mut s = String::new();
        if self.base == 10 {
            for d in &self.integer_digits {
                let _ = write!(s, "{d}");
            }
            if !self.fraction_digits.is_empty() {
                s.push('.');
                for d in &self.fraction_digits {
                    let _ = write!(s, "{d}");
                }
            }
            return s;
        }
        let join = |ds: &[u32]| {
            ds.iter()
                .map(|d| alloc::format!("{d}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        s.push_str(&join(&self.integer_digits));
        if !self.fraction_digits.is_empty() {
            s.push(';');
            s.push_str(&join(&self.fraction_digits));
        }
        s
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
