use num_traits::Zero;

use super::{extract_in_bracket, DigitString};
use crate::analysis::{enclose_until, Lemma2Class};
use crate::numerics::{int, pow_base, qe_to_interval, Interval, QPoly, QuadExt, Rational};
use crate::reduction::{lemma2_transform, C21Instance};
use crate::{Error, Result};

/// Past this many guard digits a refinement loop is declared stuck.
const MAX_GUARD: usize = 4096;

/// Extra digits carried by internal computations: the smallest `g` with
/// `base^g >= 2^8`, i.e. 3 in base 10 and 2 in base 60.
pub fn guard_digits(base: u32) -> usize {
    let mut g = 0;
    let mut acc = 1u64;
    while acc < 256 {
        acc *= u64::from(base);
        g += 1;
    }
    g
}

fn floor_on_grid(x: &Rational, base: u32, n: usize) -> Rational {
    let scale = pow_base(base, n as i64);
    (x * &scale).floor() / scale
}

/// Floor digits of the root of `p` known to lie in `enclosure`, or `None`
/// when the enclosure is too wide to decide them.
///
/// The enclosure must isolate a sign change of `p` (or be a point root).
/// A non-point enclosure narrower than one ulp holds at most one grid point
/// above its lower end; a single exact sign test there fixes the digit, so
/// every claim `v <= root < v + ulp` rests either on containment or on an
/// exact sign.
pub fn digits_from_enclosure(
    p: &QPoly,
    enclosure: &Interval,
    base: u32,
    n: usize,
) -> Result<Option<DigitString>> {
    let ulp = pow_base(base, -(n as i64));
    let (lo, hi) = (enclosure.lo(), enclosure.hi());
    let s_lo = p.eval_rational(lo).sign();
    let s_hi = p.eval_rational(hi).sign();
    // exact rational root at an end
    for (s, r) in [(s_lo, lo), (s_hi, hi)] {
        if s == 0 {
            let v = floor_on_grid(r, base, n);
            let exact = &v == r;
            return Ok(Some(DigitString::from_value(&v, base, n, exact)));
        }
    }
    if s_lo == s_hi {
        return Err(Error::Certification(
            "enclosure does not isolate a sign change",
        ));
    }
    if enclosure.width() >= ulp {
        return Ok(None);
    }
    let after = s_hi;
    let below = floor_on_grid(lo, base, n);
    let grid = &below + &ulp;
    let (v, exact) = if &grid > hi {
        (below, false)
    } else {
        match p.eval_rational(&grid).sign() {
            0 => (grid, true),
            s if s == after => (below, false),
            _ => (grid, false),
        }
    };
    Ok(Some(DigitString::from_value(&v, base, n, exact)))
}

/// Floor digits from an enclosure producer that takes the number of digits
/// to work with, starting at `n` plus the guard and doubling the guard
/// until the enclosure decides every digit. The producer may answer `None`
/// when its own intermediate enclosures are still too coarse.
pub fn digits_with_guard(
    p: &QPoly,
    base: u32,
    n: usize,
    mut enclose: impl FnMut(usize) -> Result<Option<Interval>>,
) -> Result<DigitString> {
    let mut guard = guard_digits(base);
    while guard <= MAX_GUARD {
        if let Some(iv) = enclose(n + guard)? {
            if let Some(ds) = digits_from_enclosure(p, &iv, base, n)? {
                return Ok(ds);
            }
        }
        guard *= 2;
    }
    Err(Error::Certification("guard digits exhausted"))
}

/// Floor digits of a root of `p` known exactly in a quadratic field.
pub fn digits_of_qe(p: &QPoly, x: &QuadExt, base: u32, n: usize) -> Result<DigitString> {
    if let Some(r) = x.as_rational() {
        let v = floor_on_grid(r, base, n);
        let exact = &v == r;
        return Ok(DigitString::from_value(&v, base, n, exact));
    }
    digits_with_guard(p, base, n, |k| {
        qe_to_interval(x, &pow_base(base, -(k as i64))).map(Some)
    })
}

/// A rational `u` with `a/3 <= u < 2a/3`: the right end of a bracket that
/// holds the small root of `a·X² − X³ = c` when that root lies below `a/3`.
fn third_upper(a: &QuadExt) -> Result<Rational> {
    let third = a.scale(&crate::numerics::rat(1, 3));
    let iv = enclose_until(&third, |iv| {
        iv.lo() > &Rational::zero() && iv.hi() < &(iv.lo() * int(2))
    })?;
    Ok(iv.hi().clone())
}

/// Small root of `a·X² − X³ = c`, dispatched on its position relative to
/// `a/3`: exactly `a/3` when `c = c0/2`, extracted directly on `(0, a/3]`
/// when below, and through `y = 2a/3 − X` when above, so that the digit
/// loop always runs where `a − 3X > 0`.
pub fn extract_c21_small(
    eq: &C21Instance,
    class: Lemma2Class,
    base: u32,
    n: usize,
) -> Result<DigitString> {
    if Lemma2Class::of(eq) != class {
        return Err(Error::Inconsistent(
            "half-maximum class does not match the instance",
        ));
    }
    let poly = eq.poly();
    match class {
        Lemma2Class::Equal => {
            let x1 = eq.a.scale(&crate::numerics::rat(1, 3));
            digits_of_qe(&poly, &x1, base, n)
        }
        Lemma2Class::Below => {
            let bracket = Interval::new(Rational::zero(), third_upper(&eq.a)?);
            extract_in_bracket(&poly, &bracket, base, n)
        }
        Lemma2Class::Above => {
            let (y_eq, _) = lemma2_transform(eq)?;
            let bracket = Interval::new(Rational::zero(), third_upper(&y_eq.a)?);
            let y_poly = y_eq.poly();
            let pivot = eq.x0();
            digits_with_guard(&poly, base, n, |k| {
                let y = extract_in_bracket(&y_poly, &bracket, base, k)?;
                let p = qe_to_interval(&pivot, &pow_base(base, -(k as i64)))?;
                Ok(Some(p.sub(y.enclosure())))
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn c21(a: i64, c: i64) -> C21Instance {
        C21Instance {
            a: QuadExt::rational(int(a), &int(1)),
            c: QuadExt::rational(int(c), &int(1)),
        }
    }

    #[test]
    fn guard_sizes() {
        assert_eq!(guard_digits(10), 3);
        assert_eq!(guard_digits(60), 2);
        assert_eq!(guard_digits(2), 8);
    }

    #[test]
    fn lemma2_dispatch() {
        let eq = c21(3, 2);
        let d = extract_c21_small(&eq, Lemma2Class::Equal, 10, 6).unwrap();
        assert!(d.is_exact());
        assert_eq!(d.render(), "1.000000");
        let d = extract_c21_small(&c21(3, 1), Lemma2Class::Below, 10, 6).unwrap();
        assert_eq!(d.render(), "0.652703");
        let d = extract_c21_small(&c21(3, 3), Lemma2Class::Above, 10, 6).unwrap();
        assert_eq!(d.render(), "1.347296");
        assert!(extract_c21_small(&c21(3, 3), Lemma2Class::Below, 10, 6).is_err());
    }

    #[test]
    fn grid_point_inside_enclosure() {
        // X² − 2 around sqrt 2 = 1.41421356...
        let p = QPoly::from_rationals(&[int(-2), int(0), int(1)], &int(2));
        let iv = Interval::new(rat(1_414_213, 1_000_000), rat(14_142_136, 10_000_000));
        let d = digits_from_enclosure(&p, &iv, 10, 6).unwrap().unwrap();
        assert_eq!(d.render(), "1.414213");
        let wide = Interval::new(rat(14, 10), rat(15, 10));
        assert!(digits_from_enclosure(&p, &wide, 10, 6).unwrap().is_none());
        let x = QuadExt::sqrt_of(&int(2)).unwrap();
        assert_eq!(
            digits_of_qe(&p, &x, 10, 12).unwrap().render(),
            "1.414213562373"
        );
        assert_eq!(digits_of_qe(&p, &x, 60, 3).unwrap().render(), "1;24,51,10");
    }

    #[test]
    fn rational_roots_on_and_off_grid() {
        let p = QPoly::from_rationals(&[int(-1), int(3)], &int(2));
        let d = digits_of_qe(&p, &QuadExt::rational(rat(1, 3), &int(2)), 10, 4).unwrap();
        assert_eq!(d.render(), "0.3333");
        assert!(!d.is_exact());
        let d = digits_of_qe(&p, &QuadExt::rational(rat(1, 3), &int(2)), 60, 1).unwrap();
        assert_eq!(d.render(), "0;20");
        assert!(d.is_exact());
    }
}
