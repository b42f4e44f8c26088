use alloc::boxed::Box;
use alloc::string::String;

use crate::forms::{Form, GeneralPoly};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("mismatched radicands in quadratic-field arithmetic")]
    RadicandMismatch,

    #[error("square root of a negative number")]
    NegativeRadicand,

    #[error("interval width must be positive")]
    NonPositiveWidth,

    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("degree {0} is not supported (at most 3)")]
    DegreeTooHigh(usize),

    #[error("equation has degree {0}; a quadratic or cubic is required")]
    DegreeTooLow(usize),

    #[error("x = 0 is a root; the remaining factor is {0}")]
    RootAtOrigin(Box<GeneralPoly>),

    #[error("every term has the same sign, so there is no positive root")]
    ImpossibleBySigns,

    #[error("the polynomial is identically zero")]
    ZeroPolynomial,

    #[error("operation does not apply to form {0}")]
    WrongForm(Form),

    #[error("f(x) <= 0 for every x > 0, so the equation has no positive root")]
    PositivityImpossible,

    #[error("precondition violated: {0}")]
    Usage(&'static str),

    #[error("no root of the target value in the bracket")]
    NoRoot,

    #[error("inconsistent input: {0}")]
    Inconsistent(&'static str),

    #[error("certification failed: {0}")]
    Certification(&'static str),
}

impl Error {
    /// Errors that can only be produced by a bug in this crate.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Certification(_) | Error::Inconsistent(_))
    }
}
