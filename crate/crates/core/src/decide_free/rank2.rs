use crate::decide_comm::{recognize_aut_k2_word, recognize_coord_k2, AutOutcome};
use crate::freealg::{FreeMonomial, FreePoly};
use crate::maps::{Certificate, CommEndo, CommGen, FreeEndo, FreeGen, TameWord, Verdict, VerdictTag};
use crate::rational::Rational;
use crate::ring::CommPoly;
use crate::zpoly::ZPoly;

/// Lift a rank-2 commutative tame word to the free algebra. Affine
/// generators carry over verbatim; a triangular offset avoids its own
/// variable, hence is univariate and lifts without an ordering choice.
pub fn lift_comm_word(word: &TameWord<CommGen<Rational>>) -> TameWord<FreeGen> {
    assert_eq!(word.arity, 2, "rank-2 lift");
    let gens = word
        .gens
        .iter()
        .map(|g| match g {
            CommGen::Affine {
                matrix,
                translation,
            } => FreeGen::Affine {
                matrix: [
                    [
                        ZPoly::constant(matrix[0][0].clone()),
                        ZPoly::constant(matrix[0][1].clone()),
                    ],
                    [
                        ZPoly::constant(matrix[1][0].clone()),
                        ZPoly::constant(matrix[1][1].clone()),
                    ],
                ],
                translation: [
                    ZPoly::constant(translation[0].clone()),
                    ZPoly::constant(translation[1].clone()),
                ],
            },
            CommGen::Triangular { var, scale, offset } => FreeGen::Triangular {
                var: *var,
                scale: scale.clone(),
                offset: lift_univariate(offset, 1 - *var),
            },
        })
        .collect();
    TameWord::new(2, None, gens)
}

/// Lift a polynomial that only involves `var` into the free algebra on the
/// same context.
fn lift_univariate(p: &CommPoly<Rational>, var: usize) -> FreePoly {
    FreePoly::from_terms(
        p.context(),
        p.terms().map(|(m, c)| {
            assert_eq!(
                m.total_degree(),
                u64::from(m.exp(var)),
                "offset must be univariate"
            );
            (
                FreeMonomial::new(vec![var as u8; m.exp(var) as usize]),
                c.clone(),
            )
        }),
    )
}

/// Decide whether a 2-variable endomorphism of the free algebra is an
/// automorphism: the abelianization must be one, and the lift of its tame
/// word must reproduce the input exactly.
pub fn recognize_aut_free2(phi: &FreeEndo) -> Verdict {
    assert_eq!(phi.arity(), 2, "rank-2 free recognizer");
    match recognize_aut_k2_word(&phi.abelianized()) {
        AutOutcome::NotAutomorphism { step, trace } => {
            let mut v = Verdict::with_certificate(
                VerdictTag::NotAutomorphism,
                Certificate::Reason(format!("abelianization: {step}")),
            );
            v.trace = trace;
            v
        }
        AutOutcome::Automorphism { word, trace } => {
            let lifted = lift_comm_word(&word);
            let mut v = if &lifted.eval(phi.context()) == phi {
                Verdict::with_certificate(VerdictTag::Automorphism, Certificate::FreeWord(lifted))
            } else {
                Verdict::with_certificate(
                    VerdictTag::NotAutomorphism,
                    Certificate::Reason(
                        "abelianization is an automorphism, but its lift misses the input"
                            .to_string(),
                    ),
                )
            };
            v.trace = trace;
            v
        }
    }
}

/// Decide whether `f` is a coordinate of the free algebra on two
/// variables: its abelianization must be a polynomial coordinate, and the
/// lifted automorphism must send `x` to `f` itself.
pub fn recognize_coord_free2(f: &FreePoly) -> Verdict {
    assert_eq!(f.arity(), 2, "rank-2 free coordinate recognizer");
    let pi = f.abelianize();
    let comm = recognize_coord_k2(&pi);
    if comm.tag != VerdictTag::Coordinate {
        let mut v = Verdict::with_certificate(
            VerdictTag::NotCoordinate,
            Certificate::Reason("abelianization is not a polynomial coordinate".to_string()),
        );
        v.trace = comm.trace;
        return v;
    }
    let mate = match comm.certificate {
        Some(Certificate::CommMate(g)) => g,
        other => unreachable!("coordinate verdict without a mate: {other:?}"),
    };
    let word = match recognize_aut_k2_word(&CommEndo::new(vec![pi, mate])) {
        AutOutcome::Automorphism { word, .. } => word,
        AutOutcome::NotAutomorphism { step, .. } => {
            unreachable!("recognized mate must recompose: {step}")
        }
    };
    let psi = lift_comm_word(&word).eval(f.context());
    if psi.image(0) == f {
        Verdict::with_certificate(
            VerdictTag::Coordinate,
            Certificate::FreeMate(psi.image(1).clone()),
        )
        .note("lift of the abelian mate hits f")
    } else {
        Verdict::with_certificate(
            VerdictTag::NotCoordinate,
            Certificate::Reason(
                "abelianization is a coordinate, but the lifted automorphism misses f"
                    .to_string(),
            ),
        )
    }
}
