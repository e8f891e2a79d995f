use std::sync::Arc;

use crate::field::Field;
use crate::freealg::FreePoly;
use crate::maps::{FreeEndo, FreeGen, TameWord};
use crate::rational::Rational;
use crate::ring::VarContext;

/// Context for the argument of [`sigma_h`]: polynomials in `t` and `z`.
pub fn th_context() -> Arc<VarContext> {
    VarContext::new(vec!["t".to_string(), "z".to_string()])
}

fn xyz_vars() -> (Arc<VarContext>, FreePoly, FreePoly, FreePoly) {
    let ctx = VarContext::xyz();
    let x = FreePoly::var(&ctx, 0);
    let y = FreePoly::var(&ctx, 1);
    let z = FreePoly::var(&ctx, 2);
    (ctx, x, y, z)
}

/// The family `σ_h = (x + z·h(xz−zy, z), y + h(xz−zy, z)·z, z)` for `h` a
/// polynomial in `t` and `z`; every member fixes `xz − zy`, and the
/// inverse of `σ_h` is `σ_{−h}`.
pub fn sigma_h(h: &FreePoly) -> FreeEndo {
    assert_eq!(h.arity(), 2, "h must be a polynomial in t and z");
    let (_, x, y, z) = xyz_vars();
    let u = &(&x * &z) - &(&z * &y);
    let hu = h.substitute(&[u, z.clone()]);
    FreeEndo::new(vec![&x + &(&z * &hu), &y + &(&hu * &z), z])
}

/// The family `ω_m = (x + z(xz−zy)^m, y + (xz−zy)^m z, z)`.
pub fn omega_m(m: u32) -> FreeEndo {
    assert!(m >= 1, "the family starts at m = 1");
    let (_, x, y, z) = xyz_vars();
    let um = (&(&x * &z) - &(&z * &y)).pow(m);
    FreeEndo::new(vec![&x + &(&z * &um), &y + &(&um * &z), z])
}

/// The Anick automorphism `(x + z(xz−zy), y + (xz−zy)z, z)`.
pub fn anick() -> FreeEndo {
    omega_m(1)
}

/// The Anick automorphism on `x, y, t, z`, extended by `t -> t`.
pub fn extended_anick() -> FreeEndo {
    let ctx = VarContext::xytz();
    let x = FreePoly::var(&ctx, 0);
    let y = FreePoly::var(&ctx, 1);
    let t = FreePoly::var(&ctx, 2);
    let z = FreePoly::var(&ctx, 3);
    let u = &(&x * &z) - &(&z * &y);
    FreeEndo::new(vec![&x + &(&z * &u), &y + &(&u * &z), t, z])
}

/// The Mennicke-style factorization of the extended Anick automorphism
/// into eight elementary z-automorphisms of `K<x,y,t,z>`, evaluated in
/// word order.
pub fn mennicke_factorization() -> TameWord<FreeGen> {
    const X: usize = 0;
    const Y: usize = 1;
    const T: usize = 2;
    let eps = |target: usize, source: usize, sign: i64, left: usize, right: usize| {
        FreeGen::EpsilonZ {
            target,
            source,
            coeff: Rational::from_i64(sign),
            left,
            right,
        }
    };
    TameWord::new(
        4,
        Some(3),
        vec![
            eps(X, T, 1, 1, 0),  // x -> x + z t
            eps(Y, T, 1, 0, 1),  // y -> y + t z
            eps(T, X, -1, 0, 1), // t -> t - x z
            eps(T, Y, 1, 1, 0),  // t -> t + z y
            eps(X, T, -1, 1, 0),
            eps(Y, T, -1, 0, 1),
            eps(T, X, 1, 0, 1),
            eps(T, Y, -1, 1, 0),
        ],
    )
}

/// The kernel generators `ψ_w = (x + w(y,z), y, z)` with
/// `w = Σ α_pqrs y^p z^q [y,z] y^r z^s`; `w` lies in the commutator ideal.
pub fn psi_w(coefficients: &[(u32, u32, u32, u32, Rational)]) -> FreeEndo {
    let (ctx, x, y, z) = xyz_vars();
    let bracket = FreePoly::commutator(&y, &z);
    let mut w = FreePoly::zero(&ctx);
    for (p, q, r, s, alpha) in coefficients {
        let term = &(&(&y.pow(*p) * &z.pow(*q)) * &bracket) * &(&y.pow(*r) * &z.pow(*s));
        w = &w + &term.scale(alpha);
    }
    assert!(
        w.abelianize().is_zero(),
        "w must lie in the commutator ideal"
    );
    FreeEndo::new(vec![&x + &w, y, z])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::metabelian_equal;
    use crate::maps::free_endo_compose;
    use crate::rational::rat;

    #[test]
    fn anick_matches_its_display() {
        let nu = anick();
        let (_, x, y, z) = xyz_vars();
        assert_eq!(
            nu.image(0),
            &(&(&x + &(&(&z * &x) * &z)) - &(&z.pow(2) * &y))
        );
        assert_eq!(
            nu.image(1),
            &(&(&y + &(&x * &z.pow(2))) - &(&(&z * &y) * &z))
        );
        assert!(nu.fixes(2));
        let tz = th_context();
        assert_eq!(sigma_h(&FreePoly::var(&tz, 0)), nu);
    }

    #[test]
    fn sigma_h_fixes_the_form_and_inverts() {
        let tz = th_context();
        let t = FreePoly::var(&tz, 0);
        let z = FreePoly::var(&tz, 1);
        let h = &t.pow(2) + &(&z * &t);
        let phi = sigma_h(&h);
        let (_, x, y, zz) = xyz_vars();
        let u = &(&x * &zz) - &(&zz * &y);
        assert_eq!(&(phi.image(0) * &zz) - &(&zz * phi.image(1)), u);
        let inv = sigma_h(&-&h);
        assert!(free_endo_compose(&phi, &inv).is_identity());
        assert!(free_endo_compose(&inv, &phi).is_identity());
        assert!(sigma_h(&FreePoly::zero(&tz)).is_identity());
    }

    #[test]
    fn omega_m_fixes_the_form() {
        let (_, x, y, z) = xyz_vars();
        let u = &(&x * &z) - &(&z * &y);
        for m in 1..=3 {
            let om = omega_m(m);
            assert_eq!(&(om.image(0) * &z) - &(&z * om.image(1)), u);
        }
    }

    #[test]
    fn mennicke_word_evaluates_to_extended_anick() {
        let word = mennicke_factorization();
        assert_eq!(word.len(), 8);
        let ctx = VarContext::xytz();
        assert_eq!(word.eval(&ctx), extended_anick());
        let inv = word.inverse();
        assert!(
            free_endo_compose(&word.eval(&ctx), &inv.eval(&ctx)).is_identity()
        );
    }

    #[test]
    fn psi_w_shapes() {
        assert!(psi_w(&[]).is_identity());
        let single = psi_w(&[(0, 0, 0, 0, Rational::one())]);
        let (_, x, y, z) = xyz_vars();
        assert_eq!(single.image(0), &(&x + &FreePoly::commutator(&y, &z)));
        let w = [(1, 0, 0, 2, rat(3, 1)), (0, 1, 1, 0, rat(-1, 2))];
        let phi = psi_w(&w);
        let negw: Vec<_> = w.iter().map(|(p, q, r, s, a)| (*p, *q, *r, *s, -a)).collect();
        let inv = psi_w(&negw);
        assert!(free_endo_compose(&phi, &inv).is_identity());
        // psi_w acts trivially in the metabelian quotient only when w does.
        assert!(!metabelian_equal(
            &(phi.image(0) - &x),
            &FreePoly::zero(phi.context())
        ));
    }
}
