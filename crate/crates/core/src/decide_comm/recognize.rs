use crate::field::Field;
use crate::maps::{Certificate, CommEndo, CommGen, TameWord, Verdict, VerdictTag};
use crate::ratfunc::RatFunc;
use crate::rational::Rational;
use crate::ring::{CommMonomial, CommPoly, TermOrder};

/// Result of running the rank-2 recognizer, generic over the coefficient
/// field.
#[derive(Clone, Debug)]
pub enum AutOutcome<C: Field> {
    /// A word of elementary generators multiplying out to the input.
    Automorphism {
        word: TameWord<CommGen<C>>,
        trace: Vec<String>,
    },
    NotAutomorphism {
        step: String,
        trace: Vec<String>,
    },
}

fn linear_data<C: Field>(p: &CommPoly<C>) -> Option<(C, C, C)> {
    if p.total_degree().unwrap_or(0) > 1 {
        return None;
    }
    let n = p.arity();
    let a = p.coeff(&CommMonomial::var(n, 0));
    let b = p.coeff(&CommMonomial::var(n, 1));
    let e = p.constant_term();
    Some((a, b, e))
}

/// Decide whether the pair `(f, g)` defines an automorphism of `K[x,y]`,
/// peeling the top degree form of the higher-degree coordinate as a power
/// of the other until both images are affine. Each peel appends the
/// inverse of the used triangular generator, so the returned word
/// multiplies out to the input exactly. When the images have equal degree
/// and the leading ratio is not integral over the coefficient base ring,
/// the tie is resolved by a unimodular combination of the pair instead of
/// a scalar peel, keeping the generator data inside the base ring
/// whenever possible.
pub fn recognize_aut_k2_word<C: Field>(phi: &CommEndo<C>) -> AutOutcome<C> {
    assert_eq!(phi.arity(), 2, "rank-2 recognizer");
    let ctx = phi.context().clone();
    let order = TermOrder::DegLex;
    let mut f = phi.image(0).clone();
    let mut g = phi.image(1).clone();
    let mut trace: Vec<String> = Vec::new();
    // Inverses of the peeled generators, in peel order; the final word is
    // [affine, last peel, ..., first peel].
    let mut peels: Vec<CommGen<C>> = Vec::new();

    loop {
        let df = f.total_degree().unwrap_or(0);
        let dg = g.total_degree().unwrap_or(0);
        if df == 0 || dg == 0 {
            let step = "step 0: a coordinate image is constant".to_string();
            trace.push(step.clone());
            return AutOutcome::NotAutomorphism { step, trace };
        }
        if df == 1 && dg == 1 {
            let (a, b, e) = linear_data(&f).unwrap();
            let (c, d, e2) = linear_data(&g).unwrap();
            let det = a.clone() * d.clone() - b.clone() * c.clone();
            if det.is_zero() {
                let step = "step 1: linear parts are dependent".to_string();
                trace.push(step.clone());
                return AutOutcome::NotAutomorphism { step, trace };
            }
            trace.push("step 1: affine pair with unit determinant".to_string());
            let mut gens = vec![CommGen::Affine {
                matrix: vec![vec![a, b], vec![c, d]],
                translation: vec![e, e2],
            }];
            gens.extend(peels.into_iter().rev());
            let word = TameWord::new(2, None, gens);
            debug_assert_eq!(word.eval(&ctx), *phi, "recomposition must be exact");
            return AutOutcome::Automorphism { word, trace };
        }
        // Reduce the coordinate of higher degree by a power of the other;
        // ties prefer reducing f.
        let (u_is_f, du, dv) = if df >= dg { (true, df, dg) } else { (false, dg, df) };
        if du % dv != 0 {
            let step = format!("step {}: degree {du} is not a multiple of {dv}",
                if u_is_f { 2 } else { 3 });
            trace.push(step.clone());
            return AutOutcome::NotAutomorphism { step, trace };
        }
        let d = (du / dv) as u32;
        let (u, v) = if u_is_f { (&f, &g) } else { (&g, &f) };
        let top_u = u.top_degree_form();
        let top_v_pow = v.top_degree_form().pow(d);
        let (lm, lc) = top_u.leading(&order).unwrap();
        let anchor = top_v_pow.coeff(lm);
        if anchor.is_zero() {
            let step = format!(
                "step {}: leading monomial of the top form is absent from the {d}-th power",
                if u_is_f { 2 } else { 3 }
            );
            trace.push(step.clone());
            return AutOutcome::NotAutomorphism { step, trace };
        }
        let beta = lc.clone() * anchor.inv();
        if top_u != top_v_pow.scale(&beta) {
            let step = format!(
                "step {}: top form is not a scalar multiple of the {d}-th power",
                if u_is_f { 2 } else { 3 }
            );
            trace.push(step.clone());
            return AutOutcome::NotAutomorphism { step, trace };
        }
        if d == 1 {
            if let Some([p, q, a, b]) = beta.bezout_split() {
                // Equal-degree images whose leading ratio p/q is not
                // integral: no scalar multiple of one image cancels the
                // shared top without leaving the base ring, but the
                // unimodular combination (f, g) <- (q*f - p*g, a*f + b*g)
                // with a*p + b*q = 1 does, and its inverse is the affine
                // generator [[b, p], [-a, q]] of determinant 1.
                trace.push(format!(
                    "step 2: (f, g) <- (({q})*f - ({p})*g, ({a})*f + ({b})*g)"
                ));
                let new_f = &f.scale(&q) - &g.scale(&p);
                let new_g = &f.scale(&a) + &g.scale(&b);
                f = new_f;
                g = new_g;
                peels.push(CommGen::Affine {
                    matrix: vec![vec![b, p], vec![-a, q]],
                    translation: vec![C::zero(), C::zero()],
                });
                continue;
            }
        }
        let correction = v.pow(d).scale(&beta);
        if u_is_f {
            f = &f - &correction;
            trace.push(format!("step 2: f <- f - ({beta})*g^{d}"));
            peels.push(CommGen::Triangular {
                var: 0,
                scale: C::one(),
                offset: CommPoly::var(&ctx, 1).pow(d).scale(&beta),
            });
        } else {
            g = &g - &correction;
            trace.push(format!("step 3: g <- g - ({beta})*f^{d}"));
            peels.push(CommGen::Triangular {
                var: 1,
                scale: C::one(),
                offset: CommPoly::var(&ctx, 0).pow(d).scale(&beta),
            });
        }
    }
}

/// [`recognize_aut_k2_word`] packaged as a [`Verdict`] over `Q`.
pub fn recognize_aut_k2(phi: &CommEndo<Rational>) -> Verdict {
    match recognize_aut_k2_word(phi) {
        AutOutcome::Automorphism { word, trace } => {
            let mut v = Verdict::with_certificate(
                VerdictTag::Automorphism,
                Certificate::CommWord(word),
            );
            v.trace = trace;
            v
        }
        AutOutcome::NotAutomorphism { step, trace } => {
            let mut v = Verdict::with_certificate(
                VerdictTag::NotAutomorphism,
                Certificate::Reason(step),
            );
            v.trace = trace;
            v
        }
    }
}

/// [`recognize_aut_k2_word`] packaged as a [`Verdict`] over `Q(z)`.
pub fn recognize_aut_k2_ratfunc(phi: &CommEndo<RatFunc>) -> Verdict {
    match recognize_aut_k2_word(phi) {
        AutOutcome::Automorphism { word, trace } => {
            let mut v = Verdict::with_certificate(
                VerdictTag::Automorphism,
                Certificate::CommWordZ(word),
            );
            v.trace = trace;
            v
        }
        AutOutcome::NotAutomorphism { step, trace } => {
            let mut v = Verdict::with_certificate(
                VerdictTag::NotAutomorphism,
                Certificate::Reason(step),
            );
            v.trace = trace;
            v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::endo_compose;
    use crate::rational::rat;
    use crate::ring::VarContext;

    #[test]
    fn triangular_pair_is_recognized() {
        let ctx = VarContext::xy();
        let x = CommPoly::<Rational>::var(&ctx, 0);
        let y = CommPoly::<Rational>::var(&ctx, 1);
        let phi = CommEndo::new(vec![&x + &y.pow(2), y.clone()]);
        let v = recognize_aut_k2(&phi);
        assert_eq!(v.tag, VerdictTag::Automorphism);
        let word = v.comm_word().unwrap();
        assert_eq!(word.eval(&ctx), phi);
    }

    #[test]
    fn squared_coordinate_is_rejected() {
        let ctx = VarContext::xy();
        let x = CommPoly::<Rational>::var(&ctx, 0);
        let y = CommPoly::<Rational>::var(&ctx, 1);
        let v = recognize_aut_k2(&CommEndo::new(vec![x.pow(2), y.clone()]));
        assert_eq!(v.tag, VerdictTag::NotAutomorphism);
    }

    #[test]
    fn six_generator_word_round_trips() {
        let ctx = VarContext::xy();
        let x = CommPoly::<Rational>::var(&ctx, 0);
        let y = CommPoly::<Rational>::var(&ctx, 1);
        let word = TameWord::new(
            2,
            None,
            vec![
                CommGen::Triangular {
                    var: 0,
                    scale: rat(1, 1),
                    offset: y.pow(3).scale(&rat(2, 1)),
                },
                CommGen::tau(&ctx, 0, 1),
                CommGen::Triangular {
                    var: 1,
                    scale: rat(-2, 1),
                    offset: &x.pow(2) + &CommPoly::one(&ctx),
                },
                CommGen::Affine {
                    matrix: vec![vec![rat(1, 1), rat(1, 1)], vec![rat(0, 1), rat(1, 1)]],
                    translation: vec![rat(3, 1), rat(0, 1)],
                },
                CommGen::Triangular {
                    var: 0,
                    scale: rat(1, 3),
                    offset: y.pow(2).scale(&rat(-1, 2)),
                },
                CommGen::Triangular {
                    var: 1,
                    scale: rat(1, 1),
                    offset: x.clone(),
                },
            ],
        );
        let phi = word.eval(&ctx);
        let v = recognize_aut_k2(&phi);
        assert_eq!(v.tag, VerdictTag::Automorphism);
        assert_eq!(v.comm_word().unwrap().eval(&ctx), phi);
    }

    #[test]
    fn dependent_linear_pair_is_rejected() {
        let ctx = VarContext::xy();
        let x = CommPoly::<Rational>::var(&ctx, 0);
        let y = CommPoly::<Rational>::var(&ctx, 1);
        let sum = &x + &y;
        let v = recognize_aut_k2(&CommEndo::new(vec![sum.clone(), sum.scale(&rat(2, 1))]));
        assert_eq!(v.tag, VerdictTag::NotAutomorphism);
    }

    #[test]
    fn recognized_word_inverse_really_inverts() {
        let ctx = VarContext::xy();
        let x = CommPoly::<Rational>::var(&ctx, 0);
        let y = CommPoly::<Rational>::var(&ctx, 1);
        let one = CommPoly::one(&ctx);
        let phi = CommEndo::new(vec![(&x + &y.pow(2)).scale(&rat(3, 1)), &y + &one]);
        let v = recognize_aut_k2(&phi);
        let word = v.comm_word().unwrap();
        let inv = word.inverse().eval(&ctx);
        assert!(endo_compose(&phi, &inv).is_identity());
    }
}
