//! The coefficient field abstraction shared by all polynomial types.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact field. Implemented by [`crate::Rational`] (the ground field
/// `Q`) and [`crate::RatFunc`] (the fraction field `Q(z)`).
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
    fn from_i64(n: i64) -> Self;

    /// For fraction fields of a polynomial ring: when `self = p/q` in
    /// lowest terms has a non-unit denominator, return `[p, q, a, b]`
    /// (all integral over the base ring) with `a*p + b*q = 1`. Fields
    /// whose elements are all integral return `None`, as does any
    /// element that is already integral.
    fn bezout_split(&self) -> Option<[Self; 4]> {
        None
    }

    /// Sign-split rendering for the canonical polynomial formatter:
    /// `(is_negative, magnitude text, magnitude is literally one)`.
    /// The magnitude text must re-parse as a factor of the expression
    /// grammar (parenthesized when composite).
    fn display_signed(&self) -> (bool, String, bool) {
        (false, self.to_string(), false)
    }
}
