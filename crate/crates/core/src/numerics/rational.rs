use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

/// Square root of `r` if it is the square of a rational.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    let n = exact_isqrt(r.numer())?;
    let d = exact_isqrt(r.denom())?;
    Some(Rational::new(n, d))
}

/// `base^exp` for a possibly negative exponent.
pub fn pow_base(base: u32, exp: i64) -> Rational {
    let b = BigInt::from(base);
    let mag = num_traits::pow(b, exp.unsigned_abs() as usize);
    if exp >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(BigInt::one(), mag)
    }
}

/// `floor(r * base^n)`.
pub fn floor_scaled(r: &Rational, base: u32, n: usize) -> BigInt {
    let scaled = r * pow_base(base, n as i64);
    scaled.floor().to_integer()
}

/// The rational with the smallest denominator in `[lo, hi]`, for
/// `0 <= lo <= hi`, by continued-fraction descent.
///
/// Any fraction other than `p/q` lies at least `1/q²` from it when its
/// denominator is below `q`, so a root `p/q` is the simplest point of every
/// enclosure narrower than that.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(!lo.is_negative() && lo <= hi, "need 0 <= lo <= hi");
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + Rational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// Sign as -1, 0 or +1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplest_rational_in_interval() {
        assert_eq!(simplest_between(&rat(1, 3), &rat(1, 2)), rat(1, 2));
        assert_eq!(simplest_between(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_between(&rat(31, 10), &rat(32, 10)), rat(16, 5));
        assert_eq!(simplest_between(&rat(7, 4), &rat(9, 4)), int(2));
        let third = rat(1, 3);
        let eps = rat(1, 1_000_000_000);
        assert_eq!(simplest_between(&(&third - &eps), &(&third + &eps)), third);
    }

    #[test]
    fn exact_sqrt_of_squares_and_non_squares() {
        assert_eq!(exact_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(exact_sqrt(&int(0)), Some(int(0)));
        assert_eq!(exact_sqrt(&rat(3, 4)), None);
        assert_eq!(exact_sqrt(&int(-4)), None);
    }

    #[test]
    fn floor_scaled_truncates_toward_minus_infinity() {
        assert_eq!(floor_scaled(&rat(7, 3), 10, 2), BigInt::from(233));
        assert_eq!(floor_scaled(&rat(-7, 3), 10, 0), BigInt::from(-3));
        assert_eq!(floor_scaled(&rat(1, 2), 60, 1), BigInt::from(30));
    }

    #[test]
    fn reduced_after_arithmetic() {
        let x = rat(2, 4) + rat(1, 4);
        assert_eq!(x.numer(), &BigInt::from(3));
        assert_eq!(x.denom(), &BigInt::from(4));
        assert_eq!(pow_base(60, -2), rat(1, 3600));
    }
}
