use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::forms::GeneralPoly;
use crate::numerics::{int, sign, simplest_between, Interval, Rational};

/// Dense rational polynomial, lowest degree first, no trailing zeros
/// (the zero polynomial is the empty vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly(Vec<Rational>);

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly(coeffs)
    }

    pub fn from_general(p: &GeneralPoly) -> Self {
        Self::new(p.coeffs().to_vec())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0
            .last()
            .expect("zero polynomial has no leading coefficient")
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign(&self.eval(x))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        Self::new(self.0.iter().map(|c| c / &l).collect())
    }

    /// Euclidean division `self = q·other + r`.
    pub fn div_rem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "polynomial division by zero");
        let mut rem = self.0.clone();
        let dd = other.degree();
        if self.is_zero() || self.degree() < dd {
            return (Self::new(vec![]), self.clone());
        }
        let mut quot = vec![Rational::zero(); self.degree() - dd + 1];
        let lead = other.lead();
        for k in (0..quot.len()).rev() {
            let coef = &rem[k + dd] / lead;
            if !coef.is_zero() {
                for (j, oc) in other.0.iter().enumerate() {
                    rem[k + j] -= &coef * oc;
                }
            }
            quot[k] = coef;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn square_free(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// `1 + max |a_i / a_n|`, strictly above every root's magnitude.
    pub fn cauchy_bound(&self) -> Rational {
        let lead = self.lead().abs();
        let max = self.0[..self.degree()]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        max + Rational::one()
    }
}

struct Sturm(Vec<RatPoly>);

impl Sturm {
    fn new(p: &RatPoly) -> Self {
        let mut seq = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            seq.push(d);
            loop {
                let n = seq.len();
                let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(RatPoly::new(r.0.into_iter().map(|c| -c).collect()));
            }
        }
        Sturm(seq)
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in self.0.iter().map(|p| p.sign_at(x)).filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(lo, hi]` of a square-free polynomial.
    fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// One distinct real root inside `interval`, with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub interval: Interval,
    pub multiplicity: u32,
}

/// Isolates every positive real root of `p` in closed rational intervals,
/// sorted left to right. Neighbours share at most one endpoint, which is then
/// not a root.
pub fn isolate_positive_roots(p: &GeneralPoly) -> Vec<IsolatedRoot> {
    let poly = RatPoly::from_general(p);
    if poly.degree() == 0 {
        return Vec::new();
    }
    let sqf = poly.square_free();
    let sturm = Sturm::new(&sqf);
    let two = int(2);

    let mut found: Vec<Interval> = Vec::new();
    let mut stack = vec![(Rational::zero(), sqf.cauchy_bound())];
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => found.push(tighten(&sqf, lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    found.sort_by(|a, b| a.lo().cmp(b.lo()));

    // multiplicity = 1 + number of iterated gcds g_k = gcd(g_{k-1}, g_{k-1}')
    // that still vanish at the root
    let mut chain = Vec::new();
    let mut g = poly.gcd(&poly.derivative());
    while g.degree() > 0 {
        chain.push(Sturm::new(&g.square_free()));
        g = g.gcd(&g.derivative());
    }
    found
        .into_iter()
        .map(|interval| {
            let extra = chain
                .iter()
                .filter(|s| {
                    if interval.is_point() {
                        s.0[0].eval(interval.lo()).is_zero()
                    } else {
                        s.count(interval.lo(), interval.hi()) > 0
                    }
                })
                .count();
            IsolatedRoot {
                interval,
                multiplicity: 1 + extra as u32,
            }
        })
        .collect()
}

/// Turns an isolating `(lo, hi]` into a closed interval holding the root and
/// no other root of `sqf`.
fn tighten(sqf: &RatPoly, mut lo: Rational, mut hi: Rational) -> Interval {
    let hi_sign = sqf.sign_at(&hi);
    if hi_sign == 0 {
        return Interval::point(hi);
    }
    let two = int(2);
    // lo may itself be a root claimed by the neighbouring interval
    while sqf.sign_at(&lo) == 0 {
        let mid = (&lo + &hi) / &two;
        match sqf.sign_at(&mid) {
            0 => return Interval::point(mid),
            s if s == hi_sign => hi = mid,
            _ => lo = mid,
        }
    }
    Interval::new(lo, hi)
}

/// Bisects an isolating interval of `p` down to `width`, using the
/// square-free part so that multiple roots refine like simple ones.
pub fn refine(r: &IsolatedRoot, p: &GeneralPoly, width: &Rational) -> IsolatedRoot {
    let sqf = RatPoly::from_general(p).square_free();
    let two = int(2);
    let (mut lo, mut hi) = (r.interval.lo().clone(), r.interval.hi().clone());
    if sqf.sign_at(&lo) == 0 {
        hi = lo.clone();
    } else if sqf.sign_at(&hi) == 0 {
        lo = hi.clone();
    }
    let hi_sign = sqf.sign_at(&hi);
    let bisected = &(&hi - &lo) > width;
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        match sqf.sign_at(&mid) {
            0 => {
                lo = mid.clone();
                hi = mid;
            }
            s if s == hi_sign => hi = mid,
            _ => lo = mid,
        }
    }
    // a rational root is the simplest point of a narrow enough enclosure
    if bisected && lo != hi {
        let s = simplest_between(&lo, &hi);
        if sqf.sign_at(&s) == 0 {
            lo = s.clone();
            hi = s;
        }
    }
    IsolatedRoot {
        interval: Interval::new(lo, hi),
        multiplicity: r.multiplicity,
    }
}
