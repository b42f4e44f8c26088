//! Equation ingestion and the canonical positive-coefficient forms.
//!
//! Every equation is normalized monic and rearranged so that no member holds
//! a subtracted term. The five arrangements that may have no positive root
//! (tags `C21`..`C25`) are then rewritten as `f(x) = c` with
//! `f(x) = -x³ + alpha·x² + beta·x`.

use alloc::boxed::Box;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::numerics::{sign, QPoly, QuadExt, Rational};
use crate::{Error, Result};

/// `c3·x³ + c2·x² + c1·x + c0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralPoly {
    pub c3: Rational,
    pub c2: Rational,
    pub c1: Rational,
    pub c0: Rational,
}

impl GeneralPoly {
    pub fn new(c3: Rational, c2: Rational, c1: Rational, c0: Rational) -> Self {
        GeneralPoly { c3, c2, c1, c0 }
    }

    /// Coefficients lowest degree first.
    pub fn coeffs(&self) -> [Rational; 4] {
        [
            self.c0.clone(),
            self.c1.clone(),
            self.c2.clone(),
            self.c3.clone(),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(Zero::is_zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs().iter().rposition(|c| !c.is_zero())
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let deg = self.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = self.coeffs()[deg].clone();
        let [c0, c1, c2, c3] = self.coeffs().map(|c| c / &lead);
        Ok(GeneralPoly { c3, c2, c1, c0 })
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        ((&self.c3 * x + &self.c2) * x + &self.c1) * x + &self.c0
    }
}

impl fmt::Display for GeneralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Rational, u32)> = self
            .coeffs()
            .into_iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, i as u32))
            .collect();
        if terms.is_empty() {
            return f.write_str("0 = 0");
        }
        write_terms(f, &terms)?;
        f.write_str(" = 0")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &Rational, power: u32) -> fmt::Result {
    match (power, c.is_one()) {
        (0, _) => write!(f, "{c}"),
        (1, true) => f.write_str("x"),
        (1, false) => write!(f, "{c}*x"),
        (_, true) => write!(f, "x^{power}"),
        (_, false) => write!(f, "{c}*x^{power}"),
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(Rational, u32)]) -> fmt::Result {
    for (k, (c, power)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        write_monomial(f, &c.abs(), *power)?;
    }
    Ok(())
}

/// Canonical arrangement tags.
///
/// `Q7`, `Q8`, `C15` and `C21`..`C25` carry the historical numbering of the
/// arrangements they stand for. `Linear` is `x = c`, reached after factoring
/// `x` out of an equation without constant term. `OtherQuadratic` is
/// `x² + c = bx`;
/// `OtherCubic` is any remaining cubic with the constant alone on the right,
/// the flags telling which member holds the `x²` and `x` terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    Linear,
    Q7,
    Q8,
    OtherQuadratic,
    C15,
    C21,
    C22,
    C23,
    C24,
    C25,
    OtherCubic {
        square_left: bool,
        linear_left: bool,
    },
}

impl Form {
    pub fn tag(&self) -> &'static str {
        match self {
            Form::Linear => "Linear",
            Form::Q7 => "Q7",
            Form::Q8 => "Q8",
            Form::OtherQuadratic => "OtherQuadratic",
            Form::C15 => "C15",
            Form::C21 => "C21",
            Form::C22 => "C22",
            Form::C23 => "C23",
            Form::C24 => "C24",
            Form::C25 => "C25",
            Form::OtherCubic { .. } => "OtherCubic",
        }
    }

    /// The five arrangements that may be impossible.
    pub fn has_target_function(&self) -> bool {
        matches!(
            self,
            Form::C21 | Form::C22 | Form::C23 | Form::C24 | Form::C25
        )
    }

    pub fn is_quadratic(&self) -> bool {
        matches!(self, Form::Q7 | Form::Q8 | Form::OtherQuadratic)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A canonical equation. Unused coefficients are zero; used ones are
/// strictly positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalEquation {
    pub form: Form,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl CanonicalEquation {
    pub fn new(form: Form, a: Rational, b: Rational, c: Rational) -> Self {
        CanonicalEquation { form, a, b, c }
    }

    pub fn c21(a: Rational, c: Rational) -> Self {
        Self::new(Form::C21, a, Rational::zero(), c)
    }

    /// Monic `LHS − RHS = 0`.
    pub fn to_general(&self) -> GeneralPoly {
        let (a, b, c) = (self.a.clone(), self.b.clone(), self.c.clone());
        let one = Rational::one();
        let z = Rational::zero;
        match self.form {
            Form::Linear => GeneralPoly::new(z(), z(), one, -c),
            Form::Q7 => GeneralPoly::new(z(), one, b, -c),
            Form::Q8 => GeneralPoly::new(z(), one, -b, -c),
            Form::OtherQuadratic => GeneralPoly::new(z(), one, -b, c),
            Form::C15 => GeneralPoly::new(one, a, z(), -c),
            Form::C21 => GeneralPoly::new(one, -a, z(), c),
            Form::C22 => GeneralPoly::new(one, z(), -b, c),
            Form::C23 => GeneralPoly::new(one, a, -b, c),
            Form::C24 => GeneralPoly::new(one, -a, b, c),
            Form::C25 => GeneralPoly::new(one, -a, -b, c),
            Form::OtherCubic {
                square_left,
                linear_left,
            } => GeneralPoly::new(
                one,
                if square_left { a } else { -a },
                if linear_left { b } else { -b },
                -c,
            ),
        }
    }
}

impl fmt::Display for CanonicalEquation {
    /// Renders in the input grammar with both members free of subtraction.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.to_general();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, coef) in g.coeffs().iter().enumerate().rev() {
            if coef.is_positive() {
                left.push((coef.clone(), i as u32));
            } else if coef.is_negative() {
                right.push((-coef, i as u32));
            }
        }
        if left.is_empty() {
            left.push((Rational::zero(), 0));
        }
        if right.is_empty() {
            right.push((Rational::zero(), 0));
        }
        write_terms(f, &left)?;
        f.write_str(" = ")?;
        write_terms(f, &right)
    }
}

/// Maps a nonzero polynomial to its canonical arrangement.
///
/// A zero constant term yields [`Error::RootAtOrigin`] carrying the quotient
/// by `x`; an equation whose terms all share one sign yields
/// [`Error::ImpossibleBySigns`].
pub fn classify(poly: &GeneralPoly) -> Result<CanonicalEquation> {
    let m = poly.monic()?;
    let deg = poly.degree().unwrap_or(0);
    let zero = Rational::zero();
    match deg {
        3 => {
            let (p, q, r) = (m.c2, m.c1, m.c0);
            if r.is_zero() {
                return Err(Error::RootAtOrigin(Box::new(GeneralPoly::new(
                    zero,
                    Rational::one(),
                    p,
                    q,
                ))));
            }
            if r.is_positive() {
                let c = r;
                let form = match (sign(&p), sign(&q)) {
                    (0 | 1, 0 | 1) => return Err(Error::ImpossibleBySigns),
                    (-1, 0) => Form::C21,
                    (0, -1) => Form::C22,
                    (1, -1) => Form::C23,
                    (-1, 1) => Form::C24,
                    _ => Form::C25,
                };
                Ok(CanonicalEquation::new(form, p.abs(), q.abs(), c))
            } else {
                let c = -r;
                let form = if p.is_positive() && q.is_zero() {
                    Form::C15
                } else {
                    Form::OtherCubic {
                        square_left: !p.is_negative(),
                        linear_left: !q.is_negative(),
                    }
                };
                Ok(CanonicalEquation::new(form, p.abs(), q.abs(), c))
            }
        }
        2 => {
            let (p, q) = (m.c1, m.c0);
            if q.is_zero() {
                return Err(Error::RootAtOrigin(Box::new(GeneralPoly::new(
                    zero.clone(),
                    zero,
                    Rational::one(),
                    p,
                ))));
            }
            let form = match (q.is_negative(), p.is_negative()) {
                (true, false) => Form::Q7,
                (true, true) => Form::Q8,
                (false, true) => Form::OtherQuadratic,
                (false, false) => return Err(Error::ImpossibleBySigns),
            };
            Ok(CanonicalEquation::new(form, zero, p.abs(), q.abs()))
        }
        1 => {
            let r = m.c0;
            match sign(&r) {
                0 => Err(Error::RootAtOrigin(Box::new(GeneralPoly::new(
                    zero.clone(),
                    zero.clone(),
                    zero,
                    Rational::one(),
                )))),
                1 => Err(Error::ImpossibleBySigns),
                _ => Ok(CanonicalEquation::new(Form::Linear, zero.clone(), zero, -r)),
            }
        }
        d => Err(Error::DegreeTooLow(d)),
    }
}

/// `f(x) = -x³ + alpha·x² + beta·x`, paired with the positive constant `c`
/// of the equation `f(x) = c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetFunction {
    pub form: Form,
    pub alpha: Rational,
    pub beta: Rational,
    pub c: Rational,
}

impl TargetFunction {
    pub fn eval(&self, x: &Rational) -> Rational {
        ((-x + &self.alpha) * x + &self.beta) * x
    }

    pub fn eval_qe(&self, x: &QuadExt) -> QuadExt {
        let inner = &(&(-x) + &self.alpha) * x;
        &(&inner + &self.beta) * x
    }

    /// `f` as a polynomial over `Q(sqrt d)`.
    pub fn poly(&self, d: &Rational) -> QPoly {
        QPoly::from_rationals(
            &[
                Rational::zero(),
                self.beta.clone(),
                self.alpha.clone(),
                -Rational::one(),
            ],
            d,
        )
    }
}

/// Rewrites a `C21`..`C25` equation as `f(x) = c`.
pub fn target_function(eq: &CanonicalEquation) -> Result<TargetFunction> {
    let (a, b) = (eq.a.clone(), eq.b.clone());
    let (alpha, beta) = match eq.form {
        Form::C21 => (a, Rational::zero()),
        Form::C22 => (Rational::zero(), b),
        Form::C23 => (-a, b),
        Form::C24 => (a, -b),
        Form::C25 => (a, b),
        other => return Err(Error::WrongForm(other)),
    };
    Ok(TargetFunction {
        form: eq.form,
        alpha,
        beta,
        c: eq.c.clone(),
    })
}

// --- parsing -------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eq,
}

fn syntax(pos: usize, msg: &str) -> Error {
    Error::Syntax {
        pos,
        msg: msg.to_string(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        let pos = i + 1;
        match ch {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i]
                    .parse()
                    .map_err(|_| syntax(pos, "bad integer"))?;
                out.push((pos, Tok::Num(n)));
                continue;
            }
            b'x' | b'X' => out.push((pos, Tok::X)),
            b'+' => out.push((pos, Tok::Plus)),
            b'-' => out.push((pos, Tok::Minus)),
            b'*' => out.push((pos, Tok::Star)),
            b'/' => out.push((pos, Tok::Slash)),
            b'^' => out.push((pos, Tok::Caret)),
            b'=' => out.push((pos, Tok::Eq)),
            _ => {
                let c = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(pos, &alloc::format!("unexpected character '{c}'")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn integer(&mut self, what: &str) -> Result<BigInt> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(n),
            _ => Err(syntax(pos, &alloc::format!("expected {what}"))),
        }
    }

    /// side := [sign] term (sign term)*
    fn side(&mut self) -> Result<[Rational; 4]> {
        let mut acc: [Rational; 4] = Default::default();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    false
                }
                Some(Tok::Minus) => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let (coef, power) = self.term()?;
            acc[power] += if negative { -coef } else { coef };
        }
        Ok(acc)
    }

    /// term := number ['*'] [monomial] | monomial
    fn term(&mut self) -> Result<(Rational, usize)> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Num(_)) => {
                let num = self.integer("a number")?;
                let mut coef = Rational::from_integer(num);
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dpos = self.pos();
                    let den = self.integer("a denominator")?;
                    if den.is_zero() {
                        return Err(syntax(dpos, "zero denominator"));
                    }
                    coef /= Rational::from_integer(den);
                }
                let starred = self.peek() == Some(&Tok::Star);
                if starred {
                    self.bump();
                }
                if self.peek() == Some(&Tok::X) {
                    let power = self.monomial()?;
                    Ok((coef, power))
                } else if starred {
                    Err(syntax(self.pos(), "expected x after '*'"))
                } else {
                    Ok((coef, 0))
                }
            }
            Some(Tok::X) => Ok((Rational::one(), self.monomial()?)),
            _ => Err(syntax(pos, "expected a term")),
        }
    }

    /// monomial := 'x' ['^' integer]
    fn monomial(&mut self) -> Result<usize> {
        self.bump();
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.bump();
        let pos = self.pos();
        let e = self.integer("an exponent")?;
        match u32::try_from(&e) {
            Ok(k @ 1..=3) => Ok(k as usize),
            Ok(0) => Err(syntax(pos, "exponent must be between 1 and 3")),
            Ok(k) => Err(Error::DegreeTooHigh(k as usize)),
            Err(_) => Err(Error::DegreeTooHigh(usize::MAX)),
        }
    }
}

/// Parses `lhs = rhs` into `lhs − rhs` with like terms collected.
///
/// Grammar: integers or fractions `n/m`, the variable `x`, operators
/// `+ - * ^ =`, exponents 1 to 3, optional `*` between coefficient and `x`.
pub fn parse(text: &str) -> Result<GeneralPoly> {
    let toks = tokenize(text)?;
    let mut parser = Parser {
        toks,
        at: 0,
        end: text.len() + 1,
    };
    let left = parser.side()?;
    let pos = parser.pos();
    match parser.bump() {
        Some(Tok::Eq) => {}
        None => return Err(syntax(pos, "expected '='")),
        Some(_) => return Err(syntax(pos, "expected an operator or '='")),
    }
    let right = parser.side()?;
    if parser.peek().is_some() {
        return Err(syntax(parser.pos(), "unexpected trailing input"));
    }
    let [c0, c1, c2, c3] = core::array::from_fn(|i| &left[i] - &right[i]);
    let poly = GeneralPoly::new(c3, c2, c1, c0);
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(poly)
}

impl core::str::FromStr for GeneralPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, rat};

    fn gp(c3: i64, c2: i64, c1: i64, c0: i64) -> GeneralPoly {
        GeneralPoly::new(int(c3), int(c2), int(c1), int(c0))
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse("x^3 + 2 = 3*x^2").unwrap(), gp(1, -3, 0, 2));
        assert_eq!(parse("x^3 + 2 = 3x^2").unwrap(), gp(1, -3, 0, 2));
        let p = parse("3*x - x^3 = 1").unwrap();
        assert_eq!(p, gp(-1, 0, 3, -1));
        assert_eq!(p.monic().unwrap(), gp(1, 0, -3, 1));
        assert_eq!(parse("x^2 + 2*x = 3").unwrap(), gp(0, 1, 2, -3));
        assert_eq!(
            parse("x^2 + 5/2*x = 1").unwrap(),
            GeneralPoly::new(int(0), int(1), rat(5, 2), int(-1))
        );
        assert_eq!(parse(" - x^3+x^3 + x^2 =x ").unwrap(), gp(0, 1, -1, 0));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse("x^3 + 2"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse("x^3 + = 2"),
            Err(Error::Syntax { pos: 7, .. })
        ));
        assert!(matches!(
            parse("x^3 + y = 2"),
            Err(Error::Syntax { pos: 7, .. })
        ));
        assert!(matches!(parse("1/0 x = 2"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("2* = 1"), Err(Error::Syntax { .. })));
        assert_eq!(parse("x^4 = 1"), Err(Error::DegreeTooHigh(4)));
        assert_eq!(parse("x^2 = x^2"), Err(Error::ZeroPolynomial));
        assert!(matches!(parse("x = 1 = 2"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&gp(1, -3, 0, 2)).unwrap(),
            CanonicalEquation::new(Form::C21, int(3), int(0), int(2))
        );
        assert_eq!(
            classify(&gp(1, 0, -3, 1)).unwrap(),
            CanonicalEquation::new(Form::C22, int(0), int(3), int(1))
        );
        assert_eq!(
            classify(&gp(1, -7, 8, 4)).unwrap(),
            CanonicalEquation::new(Form::C24, int(7), int(8), int(4))
        );
        // leading coefficient is divided out
        assert_eq!(
            classify(&gp(-2, 0, 6, -2)).unwrap(),
            CanonicalEquation::new(Form::C22, int(0), int(3), int(1))
        );
    }

    #[test]
    fn classify_edge_cases() {
        assert_eq!(classify(&gp(1, 2, 3, 4)), Err(Error::ImpossibleBySigns));
        assert_eq!(classify(&gp(0, 1, 1, 1)), Err(Error::ImpossibleBySigns));
        assert_eq!(
            classify(&gp(1, -3, 2, 0)),
            Err(Error::RootAtOrigin(Box::new(gp(0, 1, -3, 2))))
        );
        assert_eq!(classify(&gp(0, 0, 1, -1)).unwrap().form, Form::Linear);
        assert_eq!(classify(&gp(0, 0, 2, 1)), Err(Error::ImpossibleBySigns));
        assert_eq!(classify(&gp(0, 0, 0, 3)), Err(Error::DegreeTooLow(0)));
        assert_eq!(classify(&gp(1, 2, 0, -5)).unwrap().form, Form::C15);
        assert_eq!(
            classify(&gp(1, -1, 2, -5)).unwrap().form,
            Form::OtherCubic {
                square_left: false,
                linear_left: true
            }
        );
        assert_eq!(classify(&gp(0, 1, -2, -3)).unwrap().form, Form::Q8);
        assert_eq!(
            classify(&gp(0, 1, -2, 3)).unwrap().form,
            Form::OtherQuadratic
        );
        // x² = c is Q7 with b = 0
        assert_eq!(
            classify(&gp(0, 1, 0, -3)).unwrap(),
            CanonicalEquation::new(Form::Q7, int(0), int(0), int(3))
        );
    }

    #[test]
    fn target_functions() {
        let tf = target_function(&CanonicalEquation::c21(int(3), int(2))).unwrap();
        assert_eq!(
            (tf.alpha.clone(), tf.beta.clone(), tf.c.clone()),
            (int(3), int(0), int(2))
        );
        let tf = target_function(&CanonicalEquation::new(
            Form::C23,
            int(1),
            int(1),
            rat(5, 27),
        ))
        .unwrap();
        assert_eq!((tf.alpha, tf.beta), (int(-1), int(1)));
        let tf =
            target_function(&CanonicalEquation::new(Form::C24, int(7), int(8), int(4))).unwrap();
        assert_eq!((tf.alpha.clone(), tf.beta.clone()), (int(7), int(-8)));
        assert_eq!(tf.eval(&int(2)), int(4));
        assert_eq!(
            target_function(&CanonicalEquation::new(Form::Q7, int(0), int(1), int(1))),
            Err(Error::WrongForm(Form::Q7))
        );
    }

    #[test]
    fn display_uses_input_grammar() {
        let eq = CanonicalEquation::new(Form::C24, int(7), int(8), rat(1, 2));
        assert_eq!(eq.to_string(), "x^3 + 8*x + 1/2 = 7*x^2");
        assert_eq!(classify(&parse(&eq.to_string()).unwrap()).unwrap(), eq);
        assert_eq!(gp(1, -3, 0, 2).to_string(), "x^3 - 3*x^2 + 2 = 0");
    }
}
