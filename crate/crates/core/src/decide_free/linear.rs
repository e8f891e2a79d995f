use thiserror::Error;

use crate::field::Field;
use crate::freealg::{z_derivatives, FreePoly};
use crate::maps::{Certificate, FreeEndo, FreeGen, TameWord, Verdict, VerdictTag};
use crate::rational::Rational;
use crate::ring::{ge2_reduce, CommPoly, ElemFactor, Ge2Outcome, Mat2Poly, TermOrder};
use crate::zpoly::ZPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinearInputError {
    #[error("image of variable {var} is not linear in x and y")]
    NotXYLinear { var: usize },
}

/// The z-Jacobian of a z-fixing, x,y-linear endomorphism together with its
/// z-only translation parts.
#[derive(Clone, PartialEq, Debug)]
pub struct ZLinearData {
    /// Entry `(i, j)` is the `K[z1, z2]` coefficient of `x_i` in the image
    /// of `x_j`, recording `z^a x_i z^b` as `z1^a z2^b`.
    pub matrix: Mat2Poly<Rational>,
    pub translation: [ZPoly; 2],
}

/// Split the first two images of `phi` into z-Jacobian and translations.
pub fn z_linear_data(phi: &FreeEndo) -> Result<ZLinearData, LinearInputError> {
    assert_eq!(phi.arity(), 3, "expects x, y and a distinguished z");
    let mut cols = Vec::with_capacity(2);
    for j in 0..2 {
        cols.push(z_derivatives(phi.image(j), 2).ok_or(LinearInputError::NotXYLinear { var: j })?);
    }
    let matrix = Mat2Poly::new([
        [cols[0].linear[0].clone(), cols[1].linear[0].clone()],
        [cols[0].linear[1].clone(), cols[1].linear[1].clone()],
    ]);
    Ok(ZLinearData {
        matrix,
        translation: [cols[0].translation.clone(), cols[1].translation.clone()],
    })
}

/// The z-Jacobian alone.
pub fn z_jacobian(phi: &FreeEndo) -> Result<Mat2Poly<Rational>, LinearInputError> {
    Ok(z_linear_data(phi)?.matrix)
}

/// Translate one elementary factor of the z-Jacobian into generators. A
/// lower factor adds `p(z1, z2)`-many words `z^a y z^b` to the image of
/// `x`; the added maps share a target, so per-monomial generators commute.
fn factor_gens(f: &ElemFactor<Rational>) -> Vec<FreeGen> {
    let eps = |target: usize, source: usize, p: &CommPoly<Rational>| -> Vec<FreeGen> {
        p.terms()
            .map(|(m, c)| FreeGen::EpsilonZ {
                target,
                source,
                coeff: c.clone(),
                left: m.exp(0) as usize,
                right: m.exp(1) as usize,
            })
            .collect()
    };
    match f {
        ElemFactor::Lower(p) => eps(0, 1, p),
        ElemFactor::Upper(p) => eps(1, 0, p),
        ElemFactor::Diag(a, d) => {
            if a.is_one() && d.is_one() {
                Vec::new()
            } else {
                vec![FreeGen::Affine {
                    matrix: [
                        [ZPoly::constant(a.clone()), ZPoly::zero()],
                        [ZPoly::zero(), ZPoly::constant(d.clone())],
                    ],
                    translation: [ZPoly::zero(), ZPoly::zero()],
                }]
            }
        }
    }
}

/// Decide z-tameness of a z-fixing automorphism whose first two images are
/// linear in `x, y` over `K[z]` (additive z-only summands allowed): the
/// map is an automorphism iff `det` of its z-Jacobian is a nonzero
/// constant, and z-tame iff the z-Jacobian reduces to elementary factors.
pub fn linear_z_tame_test(phi: &FreeEndo) -> Result<Verdict, LinearInputError> {
    assert_eq!(phi.arity(), 3, "expects x, y and a distinguished z");
    if !phi.fixes(2) {
        return Ok(Verdict::with_certificate(
            VerdictTag::NotAutomorphism,
            Certificate::Reason("the third coordinate is not fixed".to_string()),
        ));
    }
    let data = z_linear_data(phi)?;
    let det = data.matrix.det();
    if det.is_zero() || !det.is_constant() {
        return Ok(Verdict::with_certificate(
            VerdictTag::NotAutomorphism,
            Certificate::Reason(format!("z-Jacobian determinant {det} is not a unit")),
        )
        .note("invertibility over K[z1, z2] fails"));
    }
    match ge2_reduce(&data.matrix, &TermOrder::DegLex)
        .expect("determinant already checked to be a nonzero constant")
    {
        Ge2Outcome::Obstruction { a, b } => Ok(Verdict::with_certificate(
            VerdictTag::ZWild,
            Certificate::Ge2Obstruction {
                matrix: data.matrix,
                a,
                b,
            },
        )
        .note("z-Jacobian is outside GE2 for the Euclidean reduction")),
        Ge2Outcome::Factors(factors) => {
            let mut gens: Vec<FreeGen> = factors.iter().flat_map(factor_gens).collect();
            if !(data.translation[0].is_zero() && data.translation[1].is_zero()) {
                gens.push(FreeGen::Affine {
                    matrix: [
                        [ZPoly::one(), ZPoly::zero()],
                        [ZPoly::zero(), ZPoly::one()],
                    ],
                    translation: data.translation.clone(),
                });
            }
            let word = TameWord::new(3, Some(2), gens);
            assert_eq!(
                &word.eval(phi.context()),
                phi,
                "elementary word must recompose the input"
            );
            Ok(
                Verdict::with_certificate(VerdictTag::ZTame, Certificate::FreeWord(word))
                    .note("z-Jacobian factors into elementary matrices"),
            )
        }
    }
}

/// Sufficient wildness test through the linear part: extract the
/// components of x,y-degree one from the first two images; when that
/// linear-part map has a z-Jacobian outside GE2, the full map is wild (in
/// characteristic zero). Anything else is inconclusive here.
pub fn wild_via_linear_part(phi: &FreeEndo) -> Verdict {
    assert_eq!(phi.arity(), 3, "expects x, y and a distinguished z");
    if !phi.fixes(2) {
        return Verdict::with_certificate(
            VerdictTag::NotAutomorphism,
            Certificate::Reason("the third coordinate is not fixed".to_string()),
        );
    }
    let ctx = phi.context();
    let linear_part = |p: &FreePoly| {
        FreePoly::from_terms(
            ctx,
            p.terms()
                .filter(|(w, _)| FreePoly::word_bidegree(w, 2).0 == 1)
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    };
    let lin = FreeEndo::new(vec![
        linear_part(phi.image(0)),
        linear_part(phi.image(1)),
        FreePoly::var(ctx, 2),
    ]);
    let data = z_linear_data(&lin).expect("degree-one components are linear");
    let det = data.matrix.det();
    if det.is_zero() || !det.is_constant() {
        return Verdict::new(VerdictTag::Inconclusive)
            .note(format!("linear part is not invertible (det {det})"));
    }
    match ge2_reduce(&data.matrix, &TermOrder::DegLex).expect("unit determinant") {
        Ge2Outcome::Obstruction { a, b } => Verdict::with_certificate(
            VerdictTag::Wild,
            Certificate::Ge2Obstruction {
                matrix: data.matrix,
                a,
                b,
            },
        )
        .note("linear part is z-wild, so the full map is wild"),
        Ge2Outcome::Factors(_) => Verdict::new(VerdictTag::Inconclusive)
            .note("linear part is z-tame; this test says nothing"),
    }
}
