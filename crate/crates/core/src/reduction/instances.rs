use core::fmt;

use num_traits::One;

use crate::forms::TargetFunction;
use crate::numerics::{Interval, QPoly, QuadExt, Rational};

/// `X³ + a·X² = c`: one positive root, `X³ + aX²` increasing on `X > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C15Instance {
    pub a: QuadExt,
    pub c: QuadExt,
}

/// `X³ + c = a·X²`, i.e. `a·X² − X³ = c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C21Instance {
    pub a: QuadExt,
    pub c: QuadExt,
}

/// `X² + b·X = c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q7Instance {
    pub b: QuadExt,
    pub c: QuadExt,
}

/// `Y² − b·Y = c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q8Instance {
    pub b: QuadExt,
    pub c: QuadExt,
}

/// `X² + b·X = c` with coefficients known only as enclosures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q7Enclosed {
    pub b: Interval,
    pub c: Interval,
}

fn field(a: &QuadExt, c: &QuadExt) -> Rational {
    if a.is_rational() {
        c.d().clone()
    } else {
        a.d().clone()
    }
}

fn qpoly(coeffs: [QuadExt; 4], d: &Rational) -> QPoly {
    QPoly::new(coeffs.to_vec(), d).expect("instance coefficients share one field")
}

impl C15Instance {
    /// `X³ + aX² − c`.
    pub fn poly(&self) -> QPoly {
        let d = field(&self.a, &self.c);
        let z = QuadExt::zero(&d);
        qpoly(
            [
                -&self.c,
                z,
                self.a.clone(),
                QuadExt::rational(Rational::one(), &d),
            ],
            &d,
        )
    }
}

impl C21Instance {
    /// `aX² − X³ − c`.
    pub fn poly(&self) -> QPoly {
        let d = field(&self.a, &self.c);
        let z = QuadExt::zero(&d);
        qpoly(
            [
                -&self.c,
                z,
                self.a.clone(),
                QuadExt::rational(-Rational::one(), &d),
            ],
            &d,
        )
    }

    /// Critical point `2a/3` of `aX² − X³`.
    pub fn x0(&self) -> QuadExt {
        self.a.scale(&Rational::new(2.into(), 3.into()))
    }

    /// Maximum `4a³/27` of `aX² − X³`.
    pub fn c0(&self) -> QuadExt {
        self.a.pow(3).scale(&Rational::new(4.into(), 27.into()))
    }

    pub fn from_target(tf: &TargetFunction) -> Option<Self> {
        (tf.form == crate::forms::Form::C21).then(|| {
            let d = &tf.alpha * &tf.alpha;
            C21Instance {
                a: QuadExt::rational(tf.alpha.clone(), &d),
                c: QuadExt::rational(tf.c.clone(), &d),
            }
        })
    }
}

impl Q7Instance {
    /// `X² + bX − c`.
    pub fn poly(&self) -> QPoly {
        let d = field(&self.b, &self.c);
        let z = QuadExt::zero(&d);
        qpoly(
            [
                -&self.c,
                self.b.clone(),
                QuadExt::rational(Rational::one(), &d),
                z,
            ],
            &d,
        )
    }
}

impl Q8Instance {
    /// `Y² − bY − c`.
    pub fn poly(&self) -> QPoly {
        let d = field(&self.b, &self.c);
        let z = QuadExt::zero(&d);
        qpoly(
            [
                -&self.c,
                -&self.b,
                QuadExt::rational(Rational::one(), &d),
                z,
            ],
            &d,
        )
    }
}

fn coef(f: &mut fmt::Formatter<'_>, x: &QuadExt) -> fmt::Result {
    if x.is_rational() {
        write!(f, "{x}")
    } else {
        write!(f, "({x})")
    }
}

impl fmt::Display for C15Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("X^3 + ")?;
        coef(f, &self.a)?;
        f.write_str("*X^2 = ")?;
        coef(f, &self.c)
    }
}

impl fmt::Display for C21Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("X^3 + ")?;
        coef(f, &self.c)?;
        f.write_str(" = ")?;
        coef(f, &self.a)?;
        f.write_str("*X^2")
    }
}

impl fmt::Display for Q7Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("X^2 + ")?;
        coef(f, &self.b)?;
        f.write_str("*X = ")?;
        coef(f, &self.c)
    }
}

impl fmt::Display for Q8Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Y^2 = ")?;
        coef(f, &self.b)?;
        f.write_str("*Y + ")?;
        coef(f, &self.c)
    }
}

impl fmt::Display for Q7Enclosed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X^2 + {}*X = {}", self.b, self.c)
    }
}
