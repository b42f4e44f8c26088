use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::quad::QuadExt;
use super::rational::Rational;
use crate::Result;

/// Dense polynomial with coefficients in one quadratic field, lowest degree
/// first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<QuadExt>,
    d: Rational,
}

impl QPoly {
    /// All coefficients are re-tagged to radicand `d`; irrational
    /// coefficients from another field are rejected.
    pub fn new(coeffs: Vec<QuadExt>, d: &Rational) -> Result<Self> {
        let coeffs = coeffs
            .iter()
            .map(|c| c.retag(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::trimmed(coeffs, d.clone()))
    }

    pub fn from_rationals(coeffs: &[Rational], d: &Rational) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|c| QuadExt::rational(c.clone(), d))
            .collect();
        Self::trimmed(coeffs, d.clone())
    }

    fn trimmed(mut coeffs: Vec<QuadExt>, d: Rational) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(QuadExt::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(QuadExt::zero(&d));
        }
        QPoly { coeffs, d }
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn coeffs(&self) -> &[QuadExt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> QuadExt {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| QuadExt::zero(&self.d))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &QuadExt) -> QuadExt {
        let mut acc = QuadExt::zero(&self.d);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> QuadExt {
        let mut acc = QuadExt::zero(&self.d);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `self − value`, i.e. moves a right-hand side to the left.
    pub fn minus_constant(&self, value: &QuadExt) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = &coeffs[0] - value;
        Self::trimmed(coeffs, self.d.clone())
    }

    pub fn neg(&self) -> Self {
        Self::trimmed(self.coeffs.iter().map(|c| -c).collect(), self.d.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rational::from_integer(i.into()))
            .collect();
        Self::trimmed(coeffs, self.d.clone())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_rational() && c.p() < &Rational::zero() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_rational() && mag.p() == &Rational::from_integer(1.into());
            let body = if mag.is_rational() {
                alloc::format!("{}", mag)
            } else {
                alloc::format!("({})", mag)
            };
            match (i, unit) {
                (0, _) => f.write_str(&body)?,
                (1, true) => f.write_str("X")?,
                (1, false) => write!(f, "{body}*X")?,
                (_, true) => write!(f, "X^{i}")?,
                (_, false) => write!(f, "{body}*X^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::int;

    #[test]
    fn horner_evaluation() {
        let p = QPoly::from_rationals(&[int(2), int(0), int(-3), int(1)], &int(3));
        assert_eq!(p.eval_rational(&int(1)), QuadExt::rational(int(0), &int(3)));
        let x = QuadExt::new(int(1), int(1), int(3)).unwrap();
        assert!(p.eval(&x).is_zero());
        assert_eq!(p.derivative().eval_rational(&int(2)).p(), &int(0));
        assert_eq!(alloc::format!("{p}"), "X^3 - 3*X^2 + 2");
    }
}
