use std::sync::Arc;

use crate::rational::Rational;
use crate::ring::{CommMonomial, CommPoly, VarContext};

use super::poly::FreePoly;

/// The commutative target ring of the metabelian derivatives: two copies
/// of the source variables, `v -> v1` left of the marked letter and
/// `v -> v2` right of it.
pub fn metabelian_context(src: &Arc<VarContext>) -> Arc<VarContext> {
    let mut names: Vec<String> = Vec::with_capacity(2 * src.arity());
    names.extend(src.names().iter().map(|n| format!("{n}1")));
    names.extend(src.names().iter().map(|n| format!("{n}2")));
    VarContext::new(names)
}

/// Metabelian partial derivative of `p` with respect to variable `v`:
/// each occurrence of `v` in a word contributes the prefix in the first
/// variable copy times the suffix in the second copy.
pub fn m_derivative(p: &FreePoly, v: usize) -> CommPoly<Rational> {
    let n = p.arity();
    let target = metabelian_context(p.context());
    let mut terms = Vec::new();
    for (w, c) in p.terms() {
        let letters = w.letters();
        for (i, &l) in letters.iter().enumerate() {
            if l as usize != v {
                continue;
            }
            let mut exps = vec![0u32; 2 * n];
            for &a in &letters[..i] {
                exps[a as usize] += 1;
            }
            for &b in &letters[i + 1..] {
                exps[n + b as usize] += 1;
            }
            terms.push((CommMonomial::new(exps), c.clone()));
        }
    }
    CommPoly::from_terms(&target, terms)
}

/// The image of an element in the free metabelian algebra, represented by
/// its constant term together with all metabelian derivatives. Two
/// elements map to the same metabelian element exactly when their views
/// coincide.
#[derive(Clone, PartialEq, Debug)]
pub struct MetabelianView {
    pub constant: Rational,
    pub derivatives: Vec<CommPoly<Rational>>,
}

impl MetabelianView {
    pub fn of(p: &FreePoly) -> Self {
        MetabelianView {
            constant: p.constant_term(),
            derivatives: (0..p.arity()).map(|v| m_derivative(p, v)).collect(),
        }
    }
}

/// Equality in the free metabelian algebra.
pub fn metabelian_equal(p: &FreePoly, q: &FreePoly) -> bool {
    MetabelianView::of(p) == MetabelianView::of(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn setup() -> (Arc<VarContext>, FreePoly, FreePoly, FreePoly) {
        let ctx = VarContext::xyz();
        let x = FreePoly::var(&ctx, 0);
        let y = FreePoly::var(&ctx, 1);
        let z = FreePoly::var(&ctx, 2);
        (ctx, x, y, z)
    }

    #[test]
    fn derivatives_of_x2_commutator_yz() {
        let (_, x, y, z) = setup();
        let p = &x.pow(2) * &FreePoly::commutator(&y, &z);
        let m = metabelian_context(p.context());
        let v = |name: &str| CommPoly::<Rational>::var(&m, m.index_of(name).unwrap());
        let (x1, y1, z1, y2, z2) = (v("x1"), v("y1"), v("z1"), v("y2"), v("z2"));
        assert!(m_derivative(&p, 0).is_zero());
        assert_eq!(m_derivative(&p, 1), &(&x1 * &x1) * &(&z2 - &z1));
        assert_eq!(m_derivative(&p, 2), &(&x1 * &x1) * &(&y1 - &y2));
        let _ = y2;
    }

    #[test]
    fn metabelian_kernel_contains_commutator_products() {
        // [x,y][y,z] vanishes in the metabelian quotient but not in the
        // free algebra; a single commutator survives.
        let (_, x, y, z) = setup();
        let p = &FreePoly::commutator(&x, &y) * &FreePoly::commutator(&y, &z);
        assert!(!p.is_zero());
        assert!(metabelian_equal(&p, &FreePoly::zero(p.context())));
        let c = FreePoly::commutator(&x, &y);
        assert!(!metabelian_equal(&c, &FreePoly::zero(c.context())));
    }

    #[test]
    fn view_separates_constants() {
        let (ctx, x, _, _) = setup();
        let p = &x + &FreePoly::constant(&ctx, rat(5, 1));
        let q = &x + &FreePoly::constant(&ctx, rat(4, 1));
        assert!(!metabelian_equal(&p, &q));
    }
}
