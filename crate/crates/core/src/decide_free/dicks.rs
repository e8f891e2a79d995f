use crate::field::Field;
use crate::freealg::FreePoly;
use crate::maps::{Certificate, FreeEndo, Verdict, VerdictTag};

/// Dicks' commutator test: a 2-variable endomorphism of the free algebra
/// is an automorphism exactly when `[φ(x), φ(y)]` is a nonzero scalar
/// multiple of `[x, y]`.
pub fn dicks_test(phi: &FreeEndo) -> Verdict {
    assert_eq!(phi.arity(), 2, "commutator test expects two variables");
    let ctx = phi.context();
    let x = FreePoly::var(ctx, 0);
    let y = FreePoly::var(ctx, 1);
    let base = FreePoly::commutator(&x, &y);
    let c = FreePoly::commutator(phi.image(0), phi.image(1));
    // Candidate scalar from the xy word; exact equality does the rest.
    let alpha = c.coeff(base.terms().next().expect("xy is in [x,y]").0);
    if !alpha.is_zero() && c == base.scale(&alpha) {
        Verdict::new(VerdictTag::Automorphism).note(format!(
            "[f, g] = {alpha} * [x, y]"
        ))
    } else {
        Verdict::with_certificate(
            VerdictTag::NotAutomorphism,
            Certificate::Reason(format!(
                "[f, g] = {c} is not a nonzero scalar multiple of [x, y]"
            )),
        )
    }
}
