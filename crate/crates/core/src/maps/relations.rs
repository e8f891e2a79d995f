use std::sync::Arc;

use crate::field::Field;
use crate::ring::{CommPoly, VarContext};

use super::endo::{endo_compose, CommEndo};
use super::word::{CommGen, TameWord};

/// The elementary generator `σ(i, α, f)`: `x_i -> α x_i + f` with `f`
/// independent of `x_i` and `α` a unit.
pub fn sigma<C: Field>(i: usize, alpha: C, f: CommPoly<C>) -> CommGen<C> {
    assert!(!alpha.is_zero(), "σ needs a unit scalar");
    assert!(!f.depends_on(i), "σ's offset must omit its own variable");
    CommGen::Triangular {
        var: i,
        scale: alpha,
        offset: f,
    }
}

pub fn sigma_endo<C: Field>(
    ctx: &Arc<VarContext>,
    i: usize,
    alpha: C,
    f: CommPoly<C>,
) -> CommEndo<C> {
    sigma(i, alpha, f).endo(ctx)
}

/// The transposition `τ_{(ks)}` written as the product
/// `σ(s,−1,x_k)·σ(k,1,−x_s)·σ(s,1,x_k)` of elementary generators.
pub fn tau_endo<C: Field>(ctx: &Arc<VarContext>, k: usize, s: usize) -> CommEndo<C> {
    assert_ne!(k, s);
    let xk = CommPoly::var(ctx, k);
    let xs = CommPoly::var(ctx, s);
    let word = TameWord::new(
        ctx.arity(),
        None,
        vec![
            sigma(s, -C::one(), xk.clone()),
            sigma(k, C::one(), -&xs),
            sigma(s, C::one(), xk),
        ],
    );
    word.eval(ctx)
}

/// Result of verifying sampled instances of the defining relations of the
/// tame automorphism group: a count and the descriptions of any failures.
#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

/// `σ(i,α,f)·σ(i,β,g) = σ(i,αβ,βf+g)`.
pub fn relation_merge_holds<C: Field>(
    ctx: &Arc<VarContext>,
    i: usize,
    alpha: C,
    f: &CommPoly<C>,
    beta: C,
    g: &CommPoly<C>,
) -> bool {
    let lhs = endo_compose(
        &sigma_endo(ctx, i, alpha.clone(), f.clone()),
        &sigma_endo(ctx, i, beta.clone(), g.clone()),
    );
    let rhs = sigma_endo(
        ctx,
        i,
        alpha * beta.clone(),
        &f.scale(&beta) + g,
    );
    lhs == rhs
}

/// `σ(i,α,f)⁻¹·σ(j,β,g)·σ(i,α,f) = σ(j,β,σ(i,α,f)⁻¹(g))` for `i ≠ j`,
/// `f` free of `x_i, x_j` and `g` free of `x_j`.
pub fn relation_conjugation_holds<C: Field>(
    ctx: &Arc<VarContext>,
    i: usize,
    alpha: C,
    f: &CommPoly<C>,
    j: usize,
    beta: C,
    g: &CommPoly<C>,
) -> bool {
    assert_ne!(i, j);
    assert!(!f.depends_on(i) && !f.depends_on(j));
    assert!(!g.depends_on(j));
    let s = sigma(i, alpha, f.clone());
    let s_endo = s.endo(ctx);
    let s_inv = s.inverse().endo(ctx);
    let t = sigma_endo(ctx, j, beta.clone(), g.clone());
    let lhs = endo_compose(&endo_compose(&s_inv, &t), &s_endo);
    let rhs = sigma_endo(ctx, j, beta, s_inv.apply(g));
    lhs == rhs
}

/// `τ_{(ks)}·σ(i,α,f)·τ_{(ks)} = σ(j,α,τ_{(ks)}(f))` where `x_j` is the
/// image of `x_i` under the transposition.
pub fn relation_transposition_holds<C: Field>(
    ctx: &Arc<VarContext>,
    k: usize,
    s: usize,
    i: usize,
    alpha: C,
    f: &CommPoly<C>,
) -> bool {
    let tau = tau_endo::<C>(ctx, k, s);
    let j = if i == k { s } else if i == s { k } else { i };
    let tf = tau.apply(f);
    assert!(!tf.depends_on(j), "transposed offset must omit x_j");
    let lhs = endo_compose(
        &endo_compose(&tau, &sigma_endo(ctx, i, alpha.clone(), f.clone())),
        &tau,
    );
    let rhs = sigma_endo(ctx, j, alpha, tf);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, Rational};

    fn ctx3() -> Arc<VarContext> {
        VarContext::xyz()
    }

    #[test]
    fn merge_relation_concrete_instance() {
        // σ(1,2,y)·σ(1,3,z) = σ(1,6,3y+z) with x as the moved variable.
        let ctx = ctx3();
        let y = CommPoly::<Rational>::var(&ctx, 1);
        let z = CommPoly::<Rational>::var(&ctx, 2);
        assert!(relation_merge_holds(&ctx, 0, rat(2, 1), &y, rat(3, 1), &z));
        let lhs = endo_compose(
            &sigma_endo(&ctx, 0, rat(2, 1), y.clone()),
            &sigma_endo(&ctx, 0, rat(3, 1), z.clone()),
        );
        assert_eq!(
            lhs,
            sigma_endo(&ctx, 0, rat(6, 1), &y.scale(&rat(3, 1)) + &z)
        );
    }

    #[test]
    fn conjugation_relation_concrete_instance() {
        let ctx = ctx3();
        let z = CommPoly::<Rational>::var(&ctx, 2);
        let y = CommPoly::<Rational>::var(&ctx, 1);
        // i = 0 moves x, f = z^2 avoids x and y; g = x + z avoids y.
        let f = z.pow(2);
        let g = &CommPoly::var(&ctx, 0) + &z;
        assert!(relation_conjugation_holds(
            &ctx,
            0,
            rat(3, 1),
            &f,
            1,
            rat(-2, 1),
            &g
        ));
        let _ = y;
    }

    #[test]
    fn transposition_relation_concrete_instance() {
        let ctx = ctx3();
        let y = CommPoly::<Rational>::var(&ctx, 1);
        let z = CommPoly::<Rational>::var(&ctx, 2);
        // (k,s) = (0,1); σ(0,α,f(y,z)) transported to σ(1,α,f(x,z)).
        let f = &y.pow(3) + &z.scale(&rat(5, 1));
        assert!(relation_transposition_holds(&ctx, 0, 1, 0, rat(7, 1), &f));
    }

    #[test]
    fn tau_is_the_transposition() {
        let ctx = ctx3();
        let tau = tau_endo::<Rational>(&ctx, 0, 2);
        assert_eq!(tau.image(0), &CommPoly::var(&ctx, 2));
        assert_eq!(tau.image(2), &CommPoly::var(&ctx, 0));
        assert_eq!(tau.image(1), &CommPoly::var(&ctx, 1));
        assert!(endo_compose(&tau, &tau).is_identity());
    }
}
