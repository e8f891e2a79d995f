//! Dense univariate polynomials over `Q`, used as numerators and
//! denominators of [`crate::RatFunc`] and as `K[z]` coefficient data in
//! affine generators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;
use crate::rational::Rational;

/// A polynomial in one variable with rational coefficients.
/// Invariant: no trailing zero coefficients (`coeffs.last() != 0`);
/// the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct ZPoly {
    coeffs: Vec<Rational>,
}

impl ZPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        ZPoly::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        ZPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * z^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        ZPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => ZPoly::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &ZPoly) -> (ZPoly, ZPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let dlc = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coeff().unwrap() / &dlc;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let mut new_coeffs = rem.coeffs.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                new_coeffs[i + shift] -= c * &factor;
            }
            rem = ZPoly::from_coeffs(new_coeffs);
        }
        (ZPoly::from_coeffs(quot), rem)
    }

    /// Monic extended gcd: `(g, s, t)` with `s*self + t*other = g`.
    pub fn extended_gcd(&self, other: &ZPoly) -> (ZPoly, ZPoly, ZPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (ZPoly::one(), ZPoly::zero());
        let (mut t0, mut t1) = (ZPoly::zero(), ZPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0 - &q * &s1;
            let t = t0 - &q * &t1;
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.leading_coeff() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.inv();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> ZPoly {
        if self.coeffs.len() <= 1 {
            return ZPoly::zero();
        }
        ZPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_i64(i as i64 + 1))
                .collect(),
        )
    }
}

impl Add for ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: ZPoly) -> ZPoly {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.into_iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.into_iter().enumerate() {
            coeffs[i] += c;
        }
        ZPoly::from_coeffs(coeffs)
    }
}

impl Sub for ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: ZPoly) -> ZPoly {
        self + (-rhs)
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: ZPoly) -> ZPoly {
        (&self).mul(&rhs)
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ZPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c < &Rational::zero() {
                    write!(f, "-")?;
                }
            } else if c < &Rational::zero() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let abs = if c < &Rational::zero() { -c.clone() } else { c.clone() };
            if k == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn div_rem_reconstructs() {
        let a = ZPoly::from_coeffs(vec![rat(1, 1), rat(0, 1), rat(3, 1), rat(2, 1)]);
        let b = ZPoly::from_coeffs(vec![rat(-1, 1), rat(1, 1)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&q * &b + r, a);
    }

    #[test]
    fn extended_gcd_satisfies_bezout() {
        let a = ZPoly::from_coeffs(vec![rat(0, 1), rat(1, 1)]); // z
        let b = ZPoly::from_coeffs(vec![rat(1, 1), rat(1, 1)]); // z + 1
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(g, ZPoly::one());
        assert_eq!(&s * &a + &t * &b, ZPoly::one());

        let c = &a * &b;
        let d = &a * &ZPoly::from_coeffs(vec![rat(-2, 1), rat(1, 1)]);
        let (g, s, t) = c.extended_gcd(&d);
        assert_eq!(g, a.monic());
        assert_eq!(&s * &c + &t * &d, g);
    }

    #[test]
    fn gcd_of_multiples() {
        let g = ZPoly::from_coeffs(vec![rat(1, 1), rat(1, 1)]);
        let a = &g * &ZPoly::from_coeffs(vec![rat(2, 1), rat(0, 1), rat(1, 1)]);
        let b = &g * &ZPoly::from_coeffs(vec![rat(-3, 1), rat(1, 1)]);
        assert_eq!(a.gcd(&b), g.monic());
    }
}
