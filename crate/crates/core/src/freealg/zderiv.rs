use crate::rational::Rational;
use crate::ring::{CommMonomial, CommPoly, VarContext};
use crate::zpoly::ZPoly;

use super::poly::FreePoly;

/// Decomposition of an element that is (at most) linear in the variables
/// other than `z`: for each such variable `v`, the words `z^a v z^b`
/// collect into a coefficient in `K[z1, z2]` via `z^a v z^b -> z1^a z2^b`,
/// and the pure-`z` words form the translation part.
#[derive(Clone, PartialEq, Debug)]
pub struct ZLinearParts {
    /// Indexed by the original variable; the `z` slot stays zero.
    pub linear: Vec<CommPoly<Rational>>,
    pub translation: ZPoly,
}

/// Split `p` as above, or `None` when some word uses two or more letters
/// other than `z`.
pub fn z_derivatives(p: &FreePoly, z: usize) -> Option<ZLinearParts> {
    let zz = VarContext::z1z2();
    let mut linear = vec![CommPoly::zero(&zz); p.arity()];
    let mut translation = ZPoly::zero();
    for (w, c) in p.terms() {
        let mut hit: Option<(usize, usize)> = None; // (variable, z-count before)
        let mut before = 0usize;
        let mut after = 0usize;
        for &l in w.letters() {
            if l as usize == z {
                if hit.is_some() {
                    after += 1;
                } else {
                    before += 1;
                }
            } else if hit.is_some() {
                return None;
            } else {
                hit = Some((l as usize, before));
            }
        }
        match hit {
            None => translation = translation + ZPoly::monomial(c.clone(), before),
            Some((v, a)) => {
                let mono = CommMonomial::new(vec![a as u32, after as u32]);
                linear[v] = &linear[v] + &CommPoly::monomial(&zz, mono, c.clone());
            }
        }
    }
    Some(ZLinearParts {
        linear,
        translation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::ring::VarContext;

    #[test]
    fn anick_first_coordinate_derivatives() {
        // x + z(xz - zy) = x + z x z - z^2 y: dx = 1 + z1 z2, dy = -z1^2.
        let ctx = VarContext::xyz();
        let x = FreePoly::var(&ctx, 0);
        let y = FreePoly::var(&ctx, 1);
        let z = FreePoly::var(&ctx, 2);
        let p = &x + &(&z * &(&(&x * &z) - &(&z * &y)));
        let parts = z_derivatives(&p, 2).unwrap();
        let zz = VarContext::z1z2();
        let z1 = CommPoly::var(&zz, 0);
        let z2 = CommPoly::var(&zz, 1);
        assert_eq!(parts.linear[0], &CommPoly::one(&zz) + &(&z1 * &z2));
        assert_eq!(parts.linear[1], -&(&z1 * &z1));
        assert!(parts.translation.is_zero());
    }

    #[test]
    fn translation_and_rejection() {
        let ctx = VarContext::xyz();
        let x = FreePoly::var(&ctx, 0);
        let z = FreePoly::var(&ctx, 2);
        let p = &(&x.scale(&rat(2, 1)) + &z.pow(3)) - &FreePoly::one(&ctx);
        let parts = z_derivatives(&p, 2).unwrap();
        assert_eq!(parts.linear[0].as_constant(), Some(rat(2, 1)));
        assert_eq!(parts.translation.coeff(3), rat(1, 1));
        assert_eq!(parts.translation.coeff(0), rat(-1, 1));
        assert!(z_derivatives(&(&x * &x), 2).is_none());
    }
}
