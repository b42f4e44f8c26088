use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{exact_sqrt, sign, Rational};
use crate::{Error, Result};

/// The real number `p + q·sqrt(d)` in the field `Q(sqrt d)`.
///
/// The radicand is carried by every element. When `d` is the square of a
/// rational the element collapses to the rational subfield at construction
/// (`q = 0`). Radicands differing by a rational square factor name the
/// same field and are aligned before comparing or combining.
///
/// Binary operators panic when the radicands differ and both operands are
/// irrational; use [`qe_arith`] or the `checked_*` methods for a fallible
/// form.
#[derive(Clone, Debug)]
pub struct QuadExt {
    p: Rational,
    q: Rational,
    d: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl QuadExt {
    pub fn new(p: Rational, q: Rational, d: Rational) -> Result<Self> {
        if d.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        Ok(match exact_sqrt(&d) {
            Some(r) => QuadExt {
                p: p + q * r,
                q: Rational::zero(),
                d,
            },
            None => QuadExt { p, q, d },
        })
    }

    /// A rational value tagged with radicand `d`.
    pub fn rational(p: Rational, d: &Rational) -> Self {
        QuadExt {
            p,
            q: Rational::zero(),
            d: d.clone(),
        }
    }

    pub fn zero(d: &Rational) -> Self {
        Self::rational(Rational::zero(), d)
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: &Rational) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d.clone())
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.p)
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn sign(&self) -> i8 {
        qe_sign(self)
    }

    /// Same value re-tagged with another radicand. Rational elements move
    /// freely; irrational ones only when `d / self.d` is a rational square,
    /// i.e. when both radicands name the same field.
    pub fn retag(&self, d: &Rational) -> Result<Self> {
        if self.d == *d {
            Ok(self.clone())
        } else if self.is_rational() {
            Ok(Self::rational(self.p.clone(), d))
        } else if d.is_zero() {
            Err(Error::RadicandMismatch)
        } else {
            // q·sqrt(e) = q·k·sqrt(d) with k² = e/d
            let k = exact_sqrt(&(&self.d / d)).ok_or(Error::RadicandMismatch)?;
            Ok(QuadExt {
                p: self.p.clone(),
                q: &self.q * k,
                d: d.clone(),
            })
        }
    }

    /// Both operands in a common field, keeping the radicand of the first
    /// irrational one.
    fn align(&self, other: &Self) -> Result<(Self, Self)> {
        if self.d == other.d || other.is_rational() {
            Ok((self.clone(), other.retag(&self.d)?))
        } else {
            Ok((self.retag(&other.d)?, other.clone()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let (x, y) = self.align(other)?;
        Ok(QuadExt {
            p: x.p + y.p,
            q: x.q + y.q,
            d: x.d,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let (x, y) = self.align(other)?;
        Ok(QuadExt {
            p: x.p - y.p,
            q: x.q - y.q,
            d: x.d,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let (x, y) = self.align(other)?;
        let p = &x.p * &y.p + &x.q * &y.q * &x.d;
        let q = &x.p * &y.q + &x.q * &y.p;
        Ok(QuadExt { p, q, d: x.d })
    }

    /// `p² − q²d`, the field norm.
    pub fn norm(&self) -> Rational {
        &self.p * &self.p - &self.q * &self.q * &self.d
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            p: self.p.clone(),
            q: -&self.q,
            d: self.d.clone(),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(QuadExt {
            p: &self.p / &n,
            q: -&self.q / &n,
            d: self.d.clone(),
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadExt {
            p: &self.p * r,
            q: &self.q * r,
            d: self.d.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::rational(Rational::one(), &self.d);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Nonnegative square root when it lies in the same field.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.sign() < 0 {
            return None;
        }
        if self.is_rational() {
            if let Some(r) = exact_sqrt(&self.p) {
                return Some(Self::rational(r, &self.d));
            }
            if self.d.is_zero() {
                return None;
            }
            // p = d·v²  ⇒  sqrt(p) = v·sqrt(d)
            let v = exact_sqrt(&(&self.p / &self.d))?;
            return Some(QuadExt {
                p: Rational::zero(),
                q: v,
                d: self.d.clone(),
            });
        }
        // (u + v·sqrt d)² = p + q·sqrt d  ⇔  u² + d·v² = p, 2uv = q
        let s = exact_sqrt(&self.norm())?;
        let two = Rational::from_integer(2.into());
        for cand in [(&self.p + &s) / &two, (&self.p - &s) / &two] {
            if let Some(u) = exact_sqrt(&cand) {
                if u.is_zero() {
                    continue;
                }
                let v = &self.q / (&two * &u);
                let root = QuadExt {
                    p: u,
                    q: v,
                    d: self.d.clone(),
                };
                return Some(if root.sign() < 0 { -root } else { root });
            }
        }
        None
    }
}

/// Field arithmetic in `Q(sqrt d)`; both operands must lie in one field.
pub fn qe_arith(x: &QuadExt, y: &QuadExt, op: ArithOp) -> Result<QuadExt> {
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
    }
}

/// Exact sign of `p + q·sqrt(d)`.
///
/// When `p` and `q·sqrt(d)` have opposite signs the larger magnitude wins,
/// decided by comparing `p²` with `q²d`.
pub fn qe_sign(x: &QuadExt) -> i8 {
    let sp = sign(&x.p);
    let sq = if x.d.is_zero() { 0 } else { sign(&x.q) };
    if sq == 0 {
        return sp;
    }
    if sp == 0 || sp == sq {
        return sq;
    }
    let pp = &x.p * &x.p;
    let qqd = &x.q * &x.q * &x.d;
    match pp.cmp(&qqd) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => 0,
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        match self.align(other) {
            Ok((x, y)) => x.p == y.p && x.q == y.q,
            Err(_) => false,
        }
    }
}

impl Eq for QuadExt {}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.checked_sub(other).ok()?;
        Some(diff.sign().cmp(&0))
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        let q = if self.q.is_one() {
            alloc::string::String::new()
        } else if (-&self.q).is_one() {
            alloc::string::String::from("-")
        } else {
            alloc::format!("{}*", self.q)
        };
        if self.p.is_zero() {
            write!(f, "{q}sqrt({})", self.d)
        } else if self.q.is_positive() {
            write!(f, "{} + {q}sqrt({})", self.p, self.d)
        } else {
            let q = if (-&self.q).is_one() {
                alloc::string::String::new()
            } else {
                alloc::format!("{}*", -&self.q)
            };
            write!(f, "{} - {q}sqrt({})", self.p, self.d)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                self.$checked(rhs)
                    .expect("quadratic-field operands with different radicands")
            }
        }
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                (&self).$method(rhs)
            }
        }
        impl $tr<QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Div<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    // multiply by the inverse, built from the conjugate
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadExt) -> QuadExt {
        let inv = rhs.inv().expect("division by zero in quadratic field");
        self * &inv
    }
}

impl Add<&Rational> for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &Rational) -> QuadExt {
        QuadExt {
            p: &self.p + rhs,
            q: self.q.clone(),
            d: self.d.clone(),
        }
    }
}

impl Sub<&Rational> for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &Rational) -> QuadExt {
        QuadExt {
            p: &self.p - rhs,
            q: self.q.clone(),
            d: self.d.clone(),
        }
    }
}

impl Mul<&Rational> for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &Rational) -> QuadExt {
        self.scale(rhs)
    }
}

impl Div<&Rational> for &QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &Rational) -> QuadExt {
        self.scale(&rhs.recip())
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            p: -self.p,
            q: -self.q,
            d: self.d,
        }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, rat};

    fn qe(p: i64, q: i64, d: i64) -> QuadExt {
        QuadExt::new(int(p), int(q), int(d)).unwrap()
    }

    #[test]
    fn square_of_one_plus_sqrt3() {
        let x = qe(1, 1, 3);
        assert_eq!(qe_arith(&x, &x, ArithOp::Mul).unwrap(), qe(4, 2, 3));
    }

    #[test]
    fn rational_subfield_is_closed() {
        let s = qe_arith(&qe(2, 0, 5), &qe(7, 0, 5), ArithOp::Add).unwrap();
        assert_eq!(s, qe(9, 0, 5));
        assert!(s.is_rational());
    }

    #[test]
    fn product_from_hand_expansion() {
        // (2 − √3)(1 + √3) = 2 + 2√3 − √3 − 3
        let x = qe_arith(&qe(2, -1, 3), &qe(1, 1, 3), ArithOp::Mul).unwrap();
        assert_eq!(x, qe(-1, 1, 3));
    }

    #[test]
    fn mismatched_radicands_are_rejected() {
        assert_eq!(
            qe_arith(&qe(1, 1, 2), &qe(1, 1, 3), ArithOp::Add),
            Err(Error::RadicandMismatch)
        );
        // rational elements embed in any field
        assert!(qe_arith(&qe(1, 0, 2), &qe(1, 1, 3), ArithOp::Mul).is_ok());
    }

    #[test]
    fn perfect_square_radicand_collapses() {
        let x = QuadExt::new(int(1), int(2), rat(9, 4)).unwrap();
        assert!(x.is_rational());
        assert_eq!(x.p(), &int(4));
        assert_eq!(
            QuadExt::new(int(1), int(1), int(-1)),
            Err(Error::NegativeRadicand)
        );
    }

    #[test]
    fn signs() {
        assert_eq!(qe_sign(&qe(0, 0, 5)), 0);
        assert_eq!(qe_sign(&qe(-1, 1, 3)), 1);
        assert_eq!(qe_sign(&qe(2, -1, 3)), 1);
        assert_eq!(qe_sign(&qe(1, -1, 3)), -1);
        assert_eq!(qe_sign(&qe(-2, 1, 3)), -1);
        assert_eq!(qe_sign(&qe(-1, -1, 3)), -1);
    }

    #[test]
    fn inverse_and_division() {
        let x = qe(2, -1, 3);
        let inv = x.inv().unwrap();
        assert_eq!(&x * &inv, qe(1, 0, 3));
        assert_eq!(qe(0, 0, 3).inv(), None);
        assert_eq!(&qe(-1, 1, 3) / &qe(1, 1, 3), qe(2, -1, 3));
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(qe(4, 2, 3).sqrt_exact(), Some(qe(1, 1, 3)));
        assert_eq!(qe(3, 0, 3).sqrt_exact(), Some(qe(0, 1, 3)));
        // 7 − 4√3 = (2 − √3)²
        assert_eq!(qe(7, -4, 3).sqrt_exact(), Some(qe(2, -1, 3)));
        assert_eq!(qe(2, 0, 3).sqrt_exact(), None);
        assert_eq!(qe(-1, 0, 3).sqrt_exact(), None);
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", qe(1, 1, 3)), "1 + sqrt(3)");
        assert_eq!(alloc::format!("{}", qe(2, -1, 3)), "2 - sqrt(3)");
        assert_eq!(
            alloc::format!("{}", QuadExt::new(rat(1, 3), rat(-2, 3), int(7)).unwrap()),
            "1/3 - 2/3*sqrt(7)"
        );
        assert_eq!(alloc::format!("{}", qe(0, 0, 3)), "0");
    }
}
