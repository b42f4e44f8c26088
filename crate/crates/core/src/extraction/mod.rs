//! Digit-by-digit root extraction in base 10 or 60 with certified
//! enclosures.
//!
//! The method is a modern Ruffini–Horner reconstruction: digits are chosen
//! greedily from the most significant place down, and the polynomial is
//! recentred on the partial value by synthetic division after each digit.

mod certify;
mod digits;
mod horner;

pub use certify::{
    digits_from_enclosure, digits_of_qe, digits_with_guard, extract_c21_small, guard_digits,
};
pub use digits::DigitString;
pub use horner::{extract_in_bracket, extract_monotone, taylor_shift};
