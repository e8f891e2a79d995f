//! Randomized invariants of the free-algebra decision procedures and the
//! metabelian machinery.

mod common;

use common::*;
use rand::Rng;
use tamecheck_core::decide_free::{
    dicks_test, eta, j2_matrix, jm_matrix, lift_comm_word, linear_z_tame_test,
    metabelian_aut_test, recognize_aut_free2, recognize_z_tame_aut3, sigma_h, th_context,
    z_jacobian,
};
use tamecheck_core::freealg::{hn_decode, hn_encode, metabelian_context, FreeMonomial, FreePoly};
use tamecheck_core::maps::{free_endo_compose, matrix_det, FreeEndo, VerdictTag};
use tamecheck_core::rational::Rational;
use tamecheck_core::ring::{CommPoly, Mat2Poly, VarContext};

#[test]
fn dicks_test_agrees_with_the_rank2_recognizer() {
    let ctx2 = VarContext::xy();
    let mut r = rng(401);
    for i in 0..200 {
        let phi = match i % 3 {
            0 => {
                // A genuine automorphism: a lifted commutative tame word.
                let (word, _) = random_comm_word2_capped(&mut r, &ctx2, 4, 3, 12);
                lift_comm_word(&word).eval(&ctx2)
            }
            1 => {
                // Same, shifted by a commutator-ideal element.
                let (word, _) = random_comm_word2_capped(&mut r, &ctx2, 3, 3, 10);
                let phi = lift_comm_word(&word).eval(&ctx2);
                let u = random_free_poly(&mut r, &ctx2, &[0, 1], 2, 2);
                let v = random_free_poly(&mut r, &ctx2, &[0, 1], 2, 2);
                let moved = r.gen_range(0..2usize);
                let mut images = phi.images().to_vec();
                images[moved] = &images[moved] + &FreePoly::commutator(&u, &v);
                FreeEndo::new(images)
            }
            _ => {
                // A degenerate pair with a repeated or squared image.
                let f = random_free_poly(&mut r, &ctx2, &[0, 1], 3, 3);
                let g = random_free_poly(&mut r, &ctx2, &[0, 1], 3, 3);
                if r.gen_bool(0.5) {
                    FreeEndo::new(vec![f.clone(), f])
                } else {
                    FreeEndo::new(vec![&f * &f, g])
                }
            }
        };
        let via_dicks = dicks_test(&phi).tag == VerdictTag::Automorphism;
        let via_lift = recognize_aut_free2(&phi).tag == VerdictTag::Automorphism;
        assert_eq!(
            via_dicks, via_lift,
            "disagreement on {phi:?} (dicks: {via_dicks})"
        );
    }
}

#[test]
fn sigma_family_fixes_the_form_and_inverts() {
    let tz = th_context();
    let ctx = VarContext::xyz();
    let x = FreePoly::var(&ctx, 0);
    let y = FreePoly::var(&ctx, 1);
    let z = FreePoly::var(&ctx, 2);
    let form = &(&x * &z) - &(&z * &y);
    let mut r = rng(402);
    for _ in 0..25 {
        let h = random_free_poly(&mut r, &tz, &[0, 1], 3, 3);
        let phi = sigma_h(&h);
        assert_eq!(
            &(phi.image(0) * &z) - &(&z * phi.image(1)),
            form,
            "sigma_h does not fix xz - zy for h = {h:?}"
        );
        let inv = sigma_h(&-&h);
        assert!(free_endo_compose(&phi, &inv).is_identity(), "h = {h:?}");
        assert!(free_endo_compose(&inv, &phi).is_identity(), "h = {h:?}");
    }
}

#[test]
fn z_tame_words_round_trip_through_peak_reduction() {
    let ctx = VarContext::xyz();
    let mut r = rng(403);
    for _ in 0..25 {
        let (word, phi) = random_free_z_word_capped(&mut r, &ctx, 4, 3, 18);
        let v = recognize_z_tame_aut3(&phi);
        assert_eq!(v.tag, VerdictTag::ZTame, "word: {word:?}");
        let back = v.free_word().expect("z-tame verdict carries its word");
        assert_eq!(back.eval(&ctx), phi, "recomposition mismatch: {word:?}");
    }
}

#[test]
fn linear_z_tame_words_round_trip_through_the_jacobian_test() {
    let ctx = VarContext::xyz();
    let mut r = rng(404);
    for _ in 0..20 {
        let (word, phi) = random_free_linear_z_word(&mut r, &ctx, 5);
        let v = linear_z_tame_test(&phi).expect("linear by construction");
        assert_eq!(v.tag, VerdictTag::ZTame, "word: {word:?}");
        let back = v.free_word().expect("z-tame verdict carries its word");
        assert_eq!(back.eval(&ctx), phi, "recomposition mismatch: {word:?}");
    }
}

#[test]
fn the_two_jacobians_agree_on_linear_maps() {
    // For x,y-linear z-fixing maps the 2x2 block of the metabelian
    // Jacobian, pushed into K[z1,z2], is the z-Jacobian.
    let ctx = VarContext::xyz();
    let mut r = rng(405);
    for _ in 0..20 {
        let (word, phi) = random_free_linear_z_word(&mut r, &ctx, 4);
        let via_z = z_jacobian(&phi).expect("linear by construction");
        assert_eq!(j2_matrix(&phi), via_z, "word: {word:?}");
    }
}

#[test]
fn metabelian_determinant_is_a_unit_on_tame_words() {
    let ctx = VarContext::xyz();
    let mut r = rng(406);
    for _ in 0..100 {
        let (word, phi) = random_free_z_word_capped(&mut r, &ctx, 4, 2, 10);
        let det = matrix_det(&jm_matrix(&phi));
        assert!(
            det.is_constant() && !det.is_zero(),
            "det J_M = {det} for word {word:?}"
        );
        assert_eq!(
            metabelian_aut_test(&phi).tag,
            VerdictTag::Automorphism,
            "word: {word:?}"
        );
    }
}

#[test]
fn eta_is_multiplicative_on_random_matrices() {
    let mc = metabelian_context(&VarContext::xyz());
    let all: Vec<usize> = (0..6).collect();
    let mut r = rng(407);
    for _ in 0..50 {
        let e = |r: &mut rand_chacha::ChaCha8Rng| random_comm_poly(r, &mc, &all, 3, 3);
        let a = Mat2Poly::new([[e(&mut r), e(&mut r)], [e(&mut r), e(&mut r)]]);
        let b = Mat2Poly::new([[e(&mut r), e(&mut r)], [e(&mut r), e(&mut r)]]);
        let push = |m: &Mat2Poly<Rational>| {
            Mat2Poly::new([
                [eta(m.entry(0, 0)), eta(m.entry(0, 1))],
                [eta(m.entry(1, 0)), eta(m.entry(1, 1))],
            ])
        };
        assert_eq!(push(&a.mul(&b)), push(&a).mul(&push(&b)));
    }
}

#[test]
fn metabelian_derivative_identity_holds() {
    // Sum_i (u_i - v_i) d_M f / d_M x_i = pi(f)(U) - pi(f)(V), with U the
    // first and V the second copy of the variables.
    let ctx = VarContext::xyz();
    let mc = metabelian_context(&ctx);
    let u: Vec<CommPoly<Rational>> = (0..3).map(|i| CommPoly::var(&mc, i)).collect();
    let v: Vec<CommPoly<Rational>> = (3..6).map(|i| CommPoly::var(&mc, i)).collect();
    let mut r = rng(408);
    for _ in 0..50 {
        let f = random_free_poly(&mut r, &ctx, &[0, 1, 2], 5, 4);
        let mut lhs = CommPoly::zero(&mc);
        for i in 0..3 {
            lhs = &lhs
                + &(&(&u[i] - &v[i]) * &tamecheck_core::freealg::m_derivative(&f, i));
        }
        let pi = f.abelianize();
        let rhs = &pi.compose(&u) - &pi.compose(&v);
        assert_eq!(lhs, rhs, "identity failed for f = {f}");
    }
}

#[test]
fn gap_encoding_round_trips() {
    let ctx = VarContext::xyz();
    let mut r = rng(409);
    for _ in 0..50 {
        // Every word uses exactly d letters other than z.
        let d = r.gen_range(0..=3usize);
        let mut acc = FreePoly::zero(&ctx);
        for _ in 0..r.gen_range(1..=4usize) {
            let mut letters = Vec::new();
            for _ in 0..d {
                for _ in 0..r.gen_range(0..=2usize) {
                    letters.push(2u8);
                }
                letters.push(r.gen_range(0..2u8));
            }
            for _ in 0..r.gen_range(0..=2usize) {
                letters.push(2u8);
            }
            acc = &acc + &FreePoly::monomial(&ctx, FreeMonomial::new(letters), small_rat(&mut r));
        }
        if acc.is_zero() {
            continue;
        }
        let enc = hn_encode(&acc, 2).expect("uniform letter count encodes");
        assert_eq!(hn_decode(&enc, &ctx, 2), acc);
    }
}

#[test]
fn abelianization_is_a_ring_homomorphism() {
    let ctx = VarContext::xyz();
    let mut r = rng(410);
    for _ in 0..30 {
        let p = random_free_poly(&mut r, &ctx, &[0, 1, 2], 4, 4);
        let q = random_free_poly(&mut r, &ctx, &[0, 1, 2], 4, 4);
        assert_eq!((&p + &q).abelianize(), &p.abelianize() + &q.abelianize());
        assert_eq!((&p * &q).abelianize(), &p.abelianize() * &q.abelianize());
    }
}
