//! Seeded random generators shared by the property suites.
#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tamecheck_core::field::Field;
use tamecheck_core::freealg::{FreeMonomial, FreePoly};
use tamecheck_core::maps::{
    endo_compose, free_endo_compose, CommEndo, CommGen, FreeEndo, FreeGen, TameWord,
};
use tamecheck_core::rational::{rat, Rational};
use tamecheck_core::ring::{CommMonomial, CommPoly, VarContext};
use tamecheck_core::zpoly::ZPoly;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rat(r: &mut ChaCha8Rng) -> Rational {
    rat(r.gen_range(-4i64..=4), r.gen_range(1i64..=3))
}

pub fn nonzero_rat(r: &mut ChaCha8Rng) -> Rational {
    loop {
        let c = small_rat(r);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random polynomial supported on the listed variables.
pub fn random_comm_poly(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    vars: &[usize],
    max_deg: u32,
    max_terms: usize,
) -> CommPoly<Rational> {
    let mut acc = CommPoly::zero(ctx);
    for _ in 0..r.gen_range(1..=max_terms) {
        let mut exps = vec![0u32; ctx.arity()];
        for _ in 0..r.gen_range(0..=max_deg) {
            exps[vars[r.gen_range(0..vars.len())]] += 1;
        }
        acc = &acc + &CommPoly::monomial(ctx, CommMonomial::new(exps), small_rat(r));
    }
    acc
}

pub fn nonzero_comm_poly(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    vars: &[usize],
    max_deg: u32,
    max_terms: usize,
) -> CommPoly<Rational> {
    loop {
        let p = random_comm_poly(r, ctx, vars, max_deg, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random tame generator of `K[x,y]`: an invertible affine map or a
/// triangular map whose offset avoids its own variable.
pub fn random_comm_gen2(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    max_deg: u32,
) -> CommGen<Rational> {
    if r.gen_bool(0.4) {
        loop {
            let m = vec![
                vec![small_rat(r), small_rat(r)],
                vec![small_rat(r), small_rat(r)],
            ];
            let det = m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
            if !det.is_zero() {
                return CommGen::Affine {
                    matrix: m,
                    translation: vec![small_rat(r), small_rat(r)],
                };
            }
        }
    } else {
        let var = r.gen_range(0..2);
        CommGen::Triangular {
            var,
            scale: nonzero_rat(r),
            offset: random_comm_poly(r, ctx, &[1 - var], max_deg, 3),
        }
    }
}

pub fn random_comm_word2(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    max_len: usize,
    max_deg: u32,
) -> TameWord<CommGen<Rational>> {
    let gens = (0..r.gen_range(1..=max_len))
        .map(|_| random_comm_gen2(r, ctx, max_deg))
        .collect();
    TameWord::new(2, None, gens)
}

/// A random z-tame generator of `K[z][x,y]` presented on `K[x,y,z]`: a
/// constant affine map of `x, y` extended by `z -> z`, or a triangular
/// map moving one of `x, y` by a polynomial in the other variable and `z`.
pub fn random_z_comm_gen(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    max_deg: u32,
) -> CommGen<Rational> {
    if r.gen_bool(0.3) {
        loop {
            let (a, b, c, d) = (small_rat(r), small_rat(r), small_rat(r), small_rat(r));
            if (a.clone() * d.clone() - b.clone() * c.clone()).is_zero() {
                continue;
            }
            let zero = Rational::zero();
            let one = Rational::one();
            return CommGen::Affine {
                matrix: vec![
                    vec![a, b, zero.clone()],
                    vec![c, d, zero.clone()],
                    vec![zero.clone(), zero.clone(), one],
                ],
                translation: vec![small_rat(r), small_rat(r), zero],
            };
        }
    } else {
        let var = r.gen_range(0..2);
        CommGen::Triangular {
            var,
            scale: nonzero_rat(r),
            offset: random_comm_poly(r, ctx, &[1 - var, 2], max_deg, 3),
        }
    }
}

pub fn random_z_comm_word(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    max_len: usize,
    max_deg: u32,
) -> TameWord<CommGen<Rational>> {
    let gens = (0..r.gen_range(1..=max_len))
        .map(|_| random_z_comm_gen(r, ctx, max_deg))
        .collect();
    TameWord::new(3, None, gens)
}

/// A random word of the free algebra using only the listed letters.
pub fn random_free_poly(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    letters: &[u8],
    max_len: usize,
    max_terms: usize,
) -> FreePoly {
    let mut acc = FreePoly::zero(ctx);
    for _ in 0..r.gen_range(1..=max_terms) {
        let word: Vec<u8> = (0..r.gen_range(0..=max_len))
            .map(|_| letters[r.gen_range(0..letters.len())])
            .collect();
        acc = &acc + &FreePoly::monomial(ctx, FreeMonomial::new(word), small_rat(r));
    }
    acc
}

pub fn random_zpoly(r: &mut ChaCha8Rng, max_deg: usize) -> ZPoly {
    ZPoly::from_coeffs((0..=r.gen_range(0..=max_deg)).map(|_| small_rat(r)).collect())
}

/// A random z-tame generator of `K<x,y,z>` fixing `z`: an elementary
/// `z`-automorphism, a triangular map with a free offset in the other
/// variable and `z`, or an affine map with left `K[z]` coefficients and a
/// constant determinant.
pub fn random_free_z_gen(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    max_deg: usize,
) -> FreeGen {
    match r.gen_range(0..3) {
        0 => {
            let target = r.gen_range(0..2);
            FreeGen::EpsilonZ {
                target,
                source: 1 - target,
                coeff: nonzero_rat(r),
                left: r.gen_range(0..=2),
                right: r.gen_range(0..=2),
            }
        }
        1 => {
            let var = r.gen_range(0..2);
            FreeGen::Triangular {
                var,
                scale: nonzero_rat(r),
                offset: random_free_poly(r, ctx, &[1 - var as u8, 2], max_deg, 3),
            }
        }
        _ => {
            // Triangular shape over K[z] keeps the determinant constant.
            let a = nonzero_rat(r);
            let d = nonzero_rat(r);
            let p = random_zpoly(r, 2);
            let matrix = if r.gen_bool(0.5) {
                [[ZPoly::constant(a), p], [ZPoly::zero(), ZPoly::constant(d)]]
            } else {
                [[ZPoly::constant(a), ZPoly::zero()], [p, ZPoly::constant(d)]]
            };
            FreeGen::Affine {
                matrix,
                translation: [random_zpoly(r, 2), random_zpoly(r, 2)],
            }
        }
    }
}

pub fn random_free_z_word(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    max_len: usize,
    max_deg: usize,
) -> TameWord<FreeGen> {
    let gens = (0..r.gen_range(1..=max_len))
        .map(|_| random_free_z_gen(r, ctx, max_deg))
        .collect();
    TameWord::new(3, Some(2), gens)
}

/// Compose a word generator by generator, refusing generators that would
/// push any image past `cap_deg`; keeps random suites off the worst-case
/// degree blowup of iterated substitution while exercising long words.
pub fn random_comm_word2_capped(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    max_len: usize,
    max_deg: u32,
    cap_deg: u64,
) -> (TameWord<CommGen<Rational>>, CommEndo<Rational>) {
    let mut gens = Vec::new();
    let mut phi = CommEndo::identity(ctx);
    for _ in 0..r.gen_range(1..=max_len) {
        let g = random_comm_gen2(r, ctx, max_deg);
        let next = endo_compose(&phi, &g.endo(ctx));
        if endo_degree(&next) > cap_deg {
            break;
        }
        gens.push(g);
        phi = next;
    }
    (TameWord::new(2, None, gens), phi)
}

pub fn random_z_comm_word_capped(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    max_len: usize,
    max_deg: u32,
    cap_deg: u64,
) -> (TameWord<CommGen<Rational>>, CommEndo<Rational>) {
    let mut gens = Vec::new();
    let mut phi = CommEndo::identity(ctx);
    for _ in 0..r.gen_range(1..=max_len) {
        let g = random_z_comm_gen(r, ctx, max_deg);
        let next = endo_compose(&phi, &g.endo(ctx));
        if endo_degree(&next) > cap_deg {
            break;
        }
        gens.push(g);
        phi = next;
    }
    (TameWord::new(3, None, gens), phi)
}

pub fn random_free_z_word_capped(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    max_len: usize,
    max_deg: usize,
    cap_deg: u64,
) -> (TameWord<FreeGen>, FreeEndo) {
    let mut gens = Vec::new();
    let mut phi = FreeEndo::identity(ctx);
    for _ in 0..r.gen_range(1..=max_len) {
        let g = random_free_z_gen(r, ctx, max_deg);
        let next = free_endo_compose(&phi, &g.endo(ctx, Some(2)));
        if free_endo_degree(&next) > cap_deg {
            break;
        }
        gens.push(g);
        phi = next;
    }
    (TameWord::new(3, Some(2), gens), phi)
}

/// Like [`random_free_z_word_capped`] but with only x,y-linear generators
/// (elementary and affine), so the result stays in the linear class.
pub fn random_free_linear_z_word(
    r: &mut ChaCha8Rng,
    ctx: &Arc<VarContext>,
    max_len: usize,
) -> (TameWord<FreeGen>, FreeEndo) {
    let mut gens = Vec::new();
    let mut phi = FreeEndo::identity(ctx);
    for _ in 0..r.gen_range(1..=max_len) {
        let g = loop {
            let g = random_free_z_gen(r, ctx, 1);
            if !matches!(g, FreeGen::Triangular { .. }) {
                break g;
            }
        };
        let next = free_endo_compose(&phi, &g.endo(ctx, Some(2)));
        if free_endo_degree(&next) > 16 {
            break;
        }
        gens.push(g);
        phi = next;
    }
    (TameWord::new(3, Some(2), gens), phi)
}

pub fn endo_degree(phi: &CommEndo<Rational>) -> u64 {
    phi.images()
        .iter()
        .filter_map(|p| p.total_degree())
        .max()
        .unwrap_or(0)
}

pub fn free_endo_degree(phi: &FreeEndo) -> u64 {
    phi.images()
        .iter()
        .filter_map(|p| p.total_degree())
        .max()
        .unwrap_or(0)
}

/// Product of two square polynomial matrices.
pub fn matmul(
    a: &[Vec<CommPoly<Rational>>],
    b: &[Vec<CommPoly<Rational>>],
) -> Vec<Vec<CommPoly<Rational>>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = CommPoly::zero(a[0][0].context());
                    for (k, row) in b.iter().enumerate() {
                        s = &s + &(&a[i][k] * &row[j]);
                    }
                    s
                })
                .collect()
        })
        .collect()
}
