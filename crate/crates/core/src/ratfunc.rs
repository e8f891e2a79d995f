//! The fraction field `Q(z)`, coefficients for `K(z)[x,y]`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::field::Field;
use crate::rational::Rational;
use crate::zpoly::ZPoly;

/// A rational function `num/den` in one variable `z`.
/// Invariants: `gcd(num, den) = 1`, `den` is monic and nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: ZPoly,
    den: ZPoly,
}

impl RatFunc {
    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: ZPoly::zero(),
                den: ZPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading_coeff().unwrap().clone();
        RatFunc {
            num: num.scale(&lc.inv()),
            den: den.scale(&lc.inv()),
        }
    }

    pub fn from_poly(p: ZPoly) -> Self {
        RatFunc {
            num: p,
            den: ZPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(ZPoly::constant(c))
    }

    /// The variable `z`.
    pub fn var() -> Self {
        RatFunc::from_poly(ZPoly::var())
    }

    pub fn numer(&self) -> &ZPoly {
        &self.num
    }

    pub fn denom(&self) -> &ZPoly {
        &self.den
    }

    /// True when the denominator is 1, i.e. the value lies in `K[z]`.
    pub fn is_polynomial(&self) -> bool {
        self.den == ZPoly::one()
    }

    /// True when the value lies in the ground field `K`.
    pub fn is_constant(&self) -> bool {
        self.is_polynomial() && self.num.is_constant()
    }

    /// The value as a rational constant, when it is one.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.constant_term())
    }

    /// The value as a `K[z]` polynomial, when the denominator is trivial.
    pub fn as_polynomial(&self) -> Option<&ZPoly> {
        self.is_polynomial().then_some(&self.num)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(ZPoly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(ZPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::constant(Rational::from_i64(n))
    }
    fn bezout_split(&self) -> Option<[Self; 4]> {
        if self.is_polynomial() {
            return None;
        }
        let (g, a, b) = self.num.extended_gcd(&self.den);
        debug_assert_eq!(g, ZPoly::one(), "num/den must be coprime");
        Some([
            RatFunc::from_poly(self.num.clone()),
            RatFunc::from_poly(self.den.clone()),
            RatFunc::from_poly(a),
            RatFunc::from_poly(b),
        ])
    }
    fn display_signed(&self) -> (bool, String, bool) {
        if let Some(c) = self.as_constant() {
            c.display_signed()
        } else if self.is_polynomial() {
            (false, format!("({})", self.num), false)
        } else {
            (false, format!("(({})/({}))", self.num, self.den), false)
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        RatFunc::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
