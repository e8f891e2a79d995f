use crate::field::Field;
use crate::maps::{Certificate, Verdict, VerdictTag};
use crate::rational::Rational;
use crate::ring::{leading_term_reduce, CommPoly, TermOrder};

/// Outcome of the gradient Euclidean test, generic over the coefficient
/// field so it can run over `Q` and over `Q(z)`.
#[derive(Clone, Debug, PartialEq)]
pub enum SyOutcome<C: Field> {
    Coordinate,
    NotCoordinate {
        /// The mutually irreducible pair at which the reduction jammed,
        /// when it jammed (rather than degenerating in Step 0).
        stuck: Option<(CommPoly<C>, CommPoly<C>)>,
        reason: String,
    },
}

/// Euclidean reduction on the gradient `(f_x, f_y)` of `f` with respect to
/// the first two variables: repeatedly head-reduce whichever leading term
/// is divisible by the other's, until one entry vanishes. `f` is a
/// coordinate exactly when the survivor is a nonzero constant.
pub fn coord_test_sy<C: Field>(f: &CommPoly<C>, order: &TermOrder) -> SyOutcome<C> {
    let mut p = f.partial_derivative(0);
    let mut q = f.partial_derivative(1);
    loop {
        match (p.is_zero(), q.is_zero()) {
            (true, true) => {
                return SyOutcome::NotCoordinate {
                    stuck: None,
                    reason: "step 0: both partial derivatives are zero".to_string(),
                }
            }
            (true, false) | (false, true) => {
                let survivor = if p.is_zero() { &q } else { &p };
                if survivor.is_constant() {
                    return SyOutcome::Coordinate;
                }
                return SyOutcome::NotCoordinate {
                    stuck: None,
                    reason: "step 0: surviving partial derivative is not a unit".to_string(),
                };
            }
            (false, false) => {
                let (pm, _) = p.leading(order).unwrap();
                let (qm, _) = q.leading(order).unwrap();
                if qm.divides(pm) {
                    let (_, r) = leading_term_reduce(&p, &q, order);
                    p = r;
                } else if pm.divides(qm) {
                    let (_, r) = leading_term_reduce(&q, &p, order);
                    q = r;
                } else {
                    return SyOutcome::NotCoordinate {
                        stuck: Some((p, q)),
                        reason: "step 1: leading terms are mutually indivisible".to_string(),
                    };
                }
            }
        }
    }
}

/// [`coord_test_sy`] over `Q` packaged as a [`Verdict`].
pub fn coord_test_sy_verdict(f: &CommPoly<Rational>, order: &TermOrder) -> Verdict {
    match coord_test_sy(f, order) {
        SyOutcome::Coordinate => Verdict::new(VerdictTag::Coordinate)
            .note("gradient reduces to a unit"),
        SyOutcome::NotCoordinate { stuck, reason } => {
            let cert = match stuck {
                Some((p, q)) => Certificate::StuckPair { p, q },
                None => Certificate::Reason(reason.clone()),
            };
            Verdict::with_certificate(VerdictTag::NotCoordinate, cert).note(reason)
        }
    }
}

/// Decide whether `f` in `K[x,y,z]` is a z-tame coordinate of `K[z][x,y]`:
/// the same gradient reduction, with `z` treated as a coefficient by
/// running in `K[x,y,z]` under an order in which `x, y` dominate `z`. The
/// reduction succeeds exactly when it terminates at a unit of `K`.
pub fn z_tame_coord_test(f: &CommPoly<Rational>, order: &TermOrder) -> Verdict {
    assert_eq!(f.arity(), 3, "z-tame coordinate test expects x, y, z");
    match coord_test_sy(f, order) {
        SyOutcome::Coordinate => Verdict::new(VerdictTag::ZTame)
            .note("gradient reduces to a unit of K"),
        SyOutcome::NotCoordinate { stuck, reason } => {
            let cert = match stuck {
                Some((p, q)) => Certificate::StuckPair { p, q },
                None => Certificate::Reason(reason.clone()),
            };
            Verdict::with_certificate(VerdictTag::NotZTame, cert).note(reason)
        }
    }
}
