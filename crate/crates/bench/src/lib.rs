//! Shared fixtures for the criterion benchmarks: deterministic inputs of
//! tunable size for the hot kernels (polynomial multiplication, the
//! automorphism recognizers, gradient reduction and GE2 factorization).

use std::sync::Arc;

use tamecheck_core::field::Field;
use tamecheck_core::maps::{endo_compose, CommEndo, CommGen, Derivation};
use tamecheck_core::rational::{rat, Rational};
use tamecheck_core::ring::{CommMonomial, CommPoly, ElemFactor, Mat2Poly, VarContext};

/// A dense-ish bivariate polynomial with `(deg + 1)(deg + 2) / 2` terms
/// and varied small rational coefficients.
pub fn dense_poly2(ctx: &Arc<VarContext>, deg: u32) -> CommPoly<Rational> {
    let mut terms = Vec::new();
    for i in 0..=deg {
        for j in 0..=(deg - i) {
            let c = rat((i as i64 % 5) - 2, 1 + (j as i64 % 3));
            if !c.is_zero() {
                terms.push((CommMonomial::new(vec![i, j]), c));
            }
        }
    }
    CommPoly::from_terms(ctx, terms)
}

/// A fixed tame composition of `len` alternating triangular and affine
/// generators of `K[x,y]`, the recognizer's typical workload.
pub fn tame_endo2(ctx: &Arc<VarContext>, len: usize) -> CommEndo<Rational> {
    let mut phi = CommEndo::identity(ctx);
    for k in 0..len {
        let gen = if k % 2 == 0 {
            let var = k % 4 / 2;
            let other = CommPoly::var(ctx, 1 - var);
            CommGen::Triangular {
                var,
                scale: rat(1 + (k as i64 % 2), 1),
                offset: &other * &other,
            }
        } else {
            CommGen::Affine {
                matrix: vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(2, 1)]],
                translation: vec![rat(1, 1), rat(-1, 1)],
            }
        };
        phi = endo_compose(&phi, &gen.endo(ctx));
    }
    phi
}

/// The Nagata coordinate `y + (y^2 + xz) z` in `K[x,y,z]`.
pub fn nagata_coordinate(ctx: &Arc<VarContext>) -> CommPoly<Rational> {
    let x = CommPoly::<Rational>::var(ctx, 0);
    let y = CommPoly::<Rational>::var(ctx, 1);
    let z = CommPoly::<Rational>::var(ctx, 2);
    &y + &(&(&(&y * &y) + &(&x * &z)) * &z)
}

/// The triangular derivation `(-2y, z, 0)` scaled by `y^2 + xz`, whose
/// exponential is the Nagata automorphism.
pub fn nagata_derivation(ctx: &Arc<VarContext>) -> Derivation {
    let x = CommPoly::<Rational>::var(ctx, 0);
    let y = CommPoly::<Rational>::var(ctx, 1);
    let z = CommPoly::<Rational>::var(ctx, 2);
    let delta = Derivation::new(vec![
        y.scale(&Rational::from_i64(-2)),
        z.clone(),
        CommPoly::zero(ctx),
    ]);
    delta.scaled(&(&(&y * &y) + &(&x * &z)))
}

/// A product of `len` elementary matrices over `K[z1, z2]` with offsets of
/// degree `deg`, the GE2 reduction workload.
pub fn elementary_product(ctx: &Arc<VarContext>, len: usize, deg: u32) -> Mat2Poly<Rational> {
    let mut m = Mat2Poly::identity(ctx);
    for k in 0..len {
        let p = dense_poly2(ctx, deg);
        let f = if k % 2 == 0 {
            ElemFactor::Lower(p)
        } else {
            ElemFactor::Upper(p)
        };
        m = m.mul(&f.matrix(ctx));
    }
    m
}
