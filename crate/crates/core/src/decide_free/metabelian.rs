use thiserror::Error;

use crate::decide_comm::recognize_z_tame_aut_comm;
use crate::field::Field;
use crate::freealg::{m_derivative, FreeMonomial, FreePoly};
use crate::maps::{
    free_endo_compose, matrix_det, Certificate, CommGen, FreeEndo, FreeGen, TameWord, Verdict,
    VerdictTag,
};
use crate::ratfunc::RatFunc;
use crate::rational::Rational;
use crate::ring::{ge2_reduce, CommMonomial, CommPoly, Ge2Outcome, Mat2Poly, TermOrder, VarContext};
use crate::zpoly::ZPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetabelianPreconditionError {
    #[error("the distinguished variable z is not fixed")]
    ZNotFixed,
    #[error("the abelianization is not the identity")]
    AbelianizationNotIdentity,
}

/// The metabelian Jacobian: entry `(i, j)` is the metabelian partial
/// derivative of the image of `x_j` with respect to `x_i`, a polynomial
/// in the doubled variables.
pub fn jm_matrix(phi: &FreeEndo) -> Vec<Vec<CommPoly<Rational>>> {
    let n = phi.arity();
    (0..n)
        .map(|i| (0..n).map(|j| m_derivative(phi.image(j), i)).collect())
        .collect()
}

/// Kill both copies of every variable except `z`, sending a polynomial
/// over the doubled x,y,z-variables to `K[z1, z2]`.
pub fn eta(p: &CommPoly<Rational>) -> CommPoly<Rational> {
    assert_eq!(p.arity(), 6, "expects the doubled x, y, z variables");
    let zz = VarContext::z1z2();
    CommPoly::from_terms(
        &zz,
        p.terms().filter_map(|(m, c)| {
            let e = m.exps();
            let survives = e
                .iter()
                .enumerate()
                .all(|(i, &k)| k == 0 || i == 2 || i == 5);
            survives.then(|| (CommMonomial::new(vec![e[2], e[5]]), c.clone()))
        }),
    )
}

/// The 2x2 x,y-block of the metabelian Jacobian pushed into `K[z1, z2]`.
pub fn j2_matrix(phi: &FreeEndo) -> Mat2Poly<Rational> {
    assert_eq!(phi.arity(), 3, "expects x, y and a distinguished z");
    let entry = |i: usize, j: usize| eta(&m_derivative(phi.image(j), i));
    Mat2Poly::new([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
}

/// An endomorphism of the free algebra induces an automorphism of the
/// free metabelian algebra exactly when `det J_M` is a nonzero constant.
pub fn metabelian_aut_test(phi: &FreeEndo) -> Verdict {
    let det = matrix_det(&jm_matrix(phi));
    if det.is_constant() && !det.is_zero() {
        Verdict::new(VerdictTag::Automorphism).note(format!("det J_M = {det}"))
    } else {
        Verdict::with_certificate(
            VerdictTag::NotAutomorphism,
            Certificate::Reason(format!("det J_M = {det} is not a unit")),
        )
    }
}

/// Wildness through the metabelian quotient: for a z-fixing map whose
/// abelianization is the identity, z-tameness forces `η(J₂)` into GE₂, so
/// a stuck Euclidean reduction certifies wildness. Membership in GE₂ says
/// nothing either way.
pub fn metabelian_wild_test(phi: &FreeEndo) -> Result<Verdict, MetabelianPreconditionError> {
    assert_eq!(phi.arity(), 3, "expects x, y and a distinguished z");
    if !phi.fixes(2) {
        return Err(MetabelianPreconditionError::ZNotFixed);
    }
    if !phi.abelianized().is_identity() {
        return Err(MetabelianPreconditionError::AbelianizationNotIdentity);
    }
    let j2 = j2_matrix(phi);
    Ok(match ge2_reduce(&j2, &TermOrder::DegLex) {
        Ok(Ge2Outcome::Obstruction { a, b }) => Verdict::with_certificate(
            VerdictTag::Wild,
            Certificate::MetabelianObstruction { matrix: j2, a, b },
        )
        .note("eta(J2) is outside GE2 for the Euclidean reduction"),
        Ok(Ge2Outcome::Factors(_)) => Verdict::new(VerdictTag::Inconclusive)
            .note("eta(J2) factors into elementary matrices; the test is silent"),
        Err(e) => Verdict::new(VerdictTag::Inconclusive).note(format!(
            "eta(J2) has no usable determinant ({e}); the test is silent"
        )),
    })
}

/// Lift one generator of a z-tame commutative word (over `K(z)` scalars
/// with `K[z]` data) to the free algebra, putting all `z`-coefficients on
/// the left.
fn lift_z_gen(g: &CommGen<RatFunc>) -> FreeGen {
    let zp = |r: &RatFunc| -> ZPoly {
        r.as_polynomial()
            .expect("z-tame generator data lies in K[z]")
            .clone()
    };
    match g {
        CommGen::Affine {
            matrix,
            translation,
        } => FreeGen::Affine {
            matrix: [
                [zp(&matrix[0][0]), zp(&matrix[0][1])],
                [zp(&matrix[1][0]), zp(&matrix[1][1])],
            ],
            translation: [zp(&translation[0]), zp(&translation[1])],
        },
        CommGen::Triangular { var, scale, offset } => {
            let ctx = VarContext::xyz();
            let other = 1 - *var;
            let mut terms = Vec::new();
            for (m, c) in offset.terms() {
                let poly = zp(c);
                let body = m.exp(other) as usize;
                for (k, a) in poly.coeffs().iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let mut letters = vec![2u8; k];
                    letters.extend(std::iter::repeat(other as u8).take(body));
                    terms.push((FreeMonomial::new(letters), a.clone()));
                }
            }
            FreeGen::Triangular {
                var: *var,
                scale: scale.as_constant().expect("z-tame scale is a unit of K"),
                offset: FreePoly::from_terms(&ctx, terms),
            }
        }
    }
}

/// Driver around [`metabelian_wild_test`] for maps whose abelianization is
/// not the identity: find a z-tame witness with the same abelianization
/// via the commutative recognizer, divide it out, and test the quotient.
/// A wild quotient makes the input wild; everything else is inconclusive.
pub fn metabelian_wild(phi: &FreeEndo) -> Verdict {
    assert_eq!(phi.arity(), 3, "expects x, y and a distinguished z");
    if !phi.fixes(2) {
        return Verdict::with_certificate(
            VerdictTag::NotAutomorphism,
            Certificate::Reason("the third coordinate is not fixed".to_string()),
        );
    }
    let ab = phi.abelianized();
    if ab.is_identity() {
        return metabelian_wild_test(phi).expect("preconditions just checked");
    }
    let comm = recognize_z_tame_aut_comm(&ab);
    if comm.tag != VerdictTag::ZTame {
        return Verdict::new(VerdictTag::Inconclusive).note(format!(
            "no z-tame witness for the abelianization (commutative verdict: {})",
            comm.tag
        ));
    }
    let word = comm.comm_word_z().expect("z-tame verdict carries its word");
    let lifted = TameWord::new(3, Some(2), word.gens.iter().map(lift_z_gen).collect());
    let theta_inv = lifted.inverse().eval(phi.context());
    let psi = free_endo_compose(&theta_inv, phi);
    assert!(
        psi.abelianized().is_identity(),
        "dividing by the witness must trivialize the abelianization"
    );
    match metabelian_wild_test(&psi).expect("psi satisfies the preconditions") {
        v if v.tag == VerdictTag::Wild => {
            v.note("wild after dividing by a z-tame witness of the abelianization")
        }
        v => v,
    }
}
