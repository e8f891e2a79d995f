use crate::field::Field;
use crate::maps::{Certificate, CommEndo, CommGen, Verdict, VerdictTag};
use crate::ratfunc::RatFunc;
use crate::rational::Rational;
use crate::ring::{ideal_is_unit, with_ratfunc_coeffs, CommPoly, TermOrder};

use super::recognize::{recognize_aut_k2_word, AutOutcome};
use super::sy::{coord_test_sy, SyOutcome};

/// Decide whether `f` in `K[x,y,z]` is a coordinate of `K[z][x,y]`: the
/// gradient `(f_x, f_y)` must generate the unit ideal of `K[x,y,z]`, and
/// `f` must be a coordinate of `K(z)[x,y]`.
pub fn z_coord_test(f: &CommPoly<Rational>, order: &TermOrder) -> Verdict {
    assert_eq!(f.arity(), 3, "z-coordinate test expects x, y, z");
    let fx = f.partial_derivative(0);
    let fy = f.partial_derivative(1);
    if !ideal_is_unit(&[fx.clone(), fy.clone()], order) {
        return Verdict::with_certificate(
            VerdictTag::NotCoordinate,
            Certificate::Reason("gradient ideal (f_x, f_y) is proper in K[x,y,z]".to_string()),
        )
        .note("unimodular gradient check failed");
    }
    let over_z = with_ratfunc_coeffs(f, 2);
    match coord_test_sy(&over_z, order) {
        SyOutcome::Coordinate => Verdict::with_certificate(
            VerdictTag::Coordinate,
            Certificate::UnimodularGradient { fx, fy },
        )
        .note("gradient is unimodular in K[x,y,z]")
        .note("f is a coordinate of K(z)[x,y]"),
        SyOutcome::NotCoordinate { reason, .. } => Verdict::with_certificate(
            VerdictTag::NotCoordinate,
            Certificate::Reason(format!("over K(z): {reason}")),
        )
        .note("gradient is unimodular, but f is not a K(z)[x,y]-coordinate"),
    }
}

fn gen_is_polynomial(g: &CommGen<RatFunc>) -> bool {
    let poly_poly = |p: &CommPoly<RatFunc>| p.terms().all(|(_, c)| c.is_polynomial());
    match g {
        CommGen::Affine {
            matrix,
            translation,
        } => {
            let entries_poly = matrix
                .iter()
                .flatten()
                .chain(translation.iter())
                .all(RatFunc::is_polynomial);
            let det = matrix[0][0].clone() * matrix[1][1].clone()
                - matrix[0][1].clone() * matrix[1][0].clone();
            entries_poly && det.is_constant() && !det.is_zero()
        }
        CommGen::Triangular { scale, offset, .. } => {
            scale.is_constant() && poly_poly(offset)
        }
    }
}

/// Decide whether a z-fixing endomorphism of `K[x,y,z]` is a z-tame
/// automorphism of `K[z][x,y]`. Runs the rank-2 recognizer over `K(z)`;
/// z-tameness additionally requires every peeled generator to have `K[z]`
/// data with unit scalars. An automorphism over `K(z)` whose inverse also
/// has polynomial images is a genuine — but z-wild — automorphism of
/// `K[z][x,y]`.
pub fn recognize_z_tame_aut_comm(phi: &CommEndo<Rational>) -> Verdict {
    assert_eq!(phi.arity(), 3, "expects a z-fixing endomorphism of K[x,y,z]");
    if !phi.fixes(2) {
        return Verdict::with_certificate(
            VerdictTag::NotAutomorphism,
            Certificate::Reason("the third coordinate is not fixed".to_string()),
        );
    }
    let ctx2 = crate::ring::VarContext::xy();
    let over_z = CommEndo::new(vec![
        with_ratfunc_coeffs(phi.image(0), 2),
        with_ratfunc_coeffs(phi.image(1), 2),
    ]);
    match recognize_aut_k2_word(&over_z) {
        AutOutcome::NotAutomorphism { step, trace } => {
            let mut v = Verdict::with_certificate(
                VerdictTag::NotAutomorphism,
                Certificate::Reason(format!("over K(z): {step}")),
            );
            v.trace = trace;
            v
        }
        AutOutcome::Automorphism { word, trace } => {
            let offenders: Vec<usize> = word
                .gens
                .iter()
                .enumerate()
                .filter_map(|(i, g)| (!gen_is_polynomial(g)).then_some(i))
                .collect();
            if offenders.is_empty() {
                let mut v = Verdict::with_certificate(
                    VerdictTag::ZTame,
                    Certificate::CommWordZ(word),
                );
                v.trace = trace;
                return v.note("all generators have K[z] data with unit scalars");
            }
            // Automorphism of K(z)[x,y] but not z-tame; it is an
            // automorphism of K[z][x,y] exactly when its inverse also has
            // polynomial images.
            let inverse = word.inverse().eval(&ctx2);
            let inverse_polynomial = inverse
                .images()
                .iter()
                .all(|p| p.terms().all(|(_, c)| c.is_polynomial()));
            let mut v = if inverse_polynomial {
                Verdict::with_certificate(VerdictTag::ZWild, Certificate::CommWordZ(word))
            } else {
                Verdict::with_certificate(
                    VerdictTag::NotAutomorphism,
                    Certificate::Reason(
                        "automorphism of K(z)[x,y] whose inverse leaves K[z][x,y]".to_string(),
                    ),
                )
            };
            v.trace = trace;
            v.note(format!(
                "generators {offenders:?} have coefficients outside K[z]"
            ))
        }
    }
}
