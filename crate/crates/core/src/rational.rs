//! Arbitrary-precision rational numbers, the ground field `Q`.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};

use crate::field::Field;

/// Exact rational number. `num`'s `BigRational` already maintains the
/// canonical form (reduced, positive denominator).
pub type Rational = BigRational;

impl Field for Rational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        <BigRational as Zero>::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn display_signed(&self) -> (bool, String, bool) {
        let abs = self.abs();
        (self.is_negative(), abs.to_string(), One::is_one(&abs))
    }
}

/// Shorthand used all over the test suites.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact `d`-th root in `Q`, if one exists.
///
/// For even `d` the argument must be nonnegative and the positive root is
/// returned; for odd `d` negative arguments are allowed.
pub fn rational_nth_root(value: &Rational, d: u32) -> Option<Rational> {
    if d == 0 {
        return None;
    }
    if d == 1 {
        return Some(value.clone());
    }
    if value.is_negative() && d % 2 == 0 {
        return None;
    }
    let num_root = value.numer().nth_root(d);
    let den_root = value.denom().nth_root(d);
    let candidate = BigRational::new(num_root, den_root);
    let mut pow = <BigRational as One>::one();
    for _ in 0..d {
        pow *= &candidate;
    }
    if &pow == value {
        Some(candidate)
    } else {
        None
    }
}
