use std::sync::Arc;

use thiserror::Error;

use crate::rational::{rat, Rational};
use crate::ring::{CommMonomial, CommPoly, VarContext};

use super::endo::{endo_compose, matrix_det, CommEndo};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpError {
    #[error("derivation is not nilpotent within {cap} iterations")]
    NotNilpotentWithinCap { cap: usize },
}

/// A derivation of the polynomial algebra, determined by the images of the
/// variables and extended by the Leibniz rule.
#[derive(Clone, PartialEq, Debug)]
pub struct Derivation {
    images: Vec<CommPoly<Rational>>,
}

impl Derivation {
    pub fn new(images: Vec<CommPoly<Rational>>) -> Self {
        let ctx = images.first().expect("empty derivation").context();
        assert_eq!(images.len(), ctx.arity(), "one image per variable");
        Derivation { images }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.images[0].context()
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> &CommPoly<Rational> {
        &self.images[i]
    }

    pub fn images(&self) -> &[CommPoly<Rational>] {
        &self.images
    }

    /// `δ(p) = Σ_i ∂p/∂x_i · δ(x_i)`.
    pub fn apply(&self, p: &CommPoly<Rational>) -> CommPoly<Rational> {
        let mut out = CommPoly::zero(p.context());
        for (i, d) in self.images.iter().enumerate() {
            out = &out + &(&p.partial_derivative(i) * d);
        }
        out
    }

    pub fn annihilates(&self, p: &CommPoly<Rational>) -> bool {
        self.apply(p).is_zero()
    }

    /// The derivation `w·δ`; for `w` in the kernel of `δ` this is again
    /// locally nilpotent whenever `δ` is.
    pub fn scaled(&self, w: &CommPoly<Rational>) -> Derivation {
        Derivation::new(self.images.iter().map(|d| w * d).collect())
    }

    /// `exp(δ)` as an endomorphism, summing `δ^k(x_i)/k!` until the terms
    /// vanish. Errors out after `cap` iterations on any variable.
    pub fn exp(&self, cap: usize) -> Result<CommEndo<Rational>, ExpError> {
        let ctx = self.context();
        let mut images = Vec::with_capacity(self.arity());
        for i in 0..self.arity() {
            let mut sum = CommPoly::var(ctx, i);
            let mut term = sum.clone();
            let mut k = 0usize;
            loop {
                term = self.apply(&term);
                if term.is_zero() {
                    break;
                }
                k += 1;
                if k > cap {
                    return Err(ExpError::NotNilpotentWithinCap { cap });
                }
                term = term.scale(&rat(1, k as i64));
                sum = &sum + &term;
            }
            images.push(sum);
        }
        Ok(CommEndo::new(images))
    }

    /// The smallest `k` with `δ^k(x_i) = 0` for every `i`, i.e. the series
    /// index at which exponentiation terminates; bounded by `cap`.
    pub fn nilpotency_index(&self, cap: usize) -> Result<usize, ExpError> {
        let ctx = self.context();
        let mut top = 0usize;
        for i in 0..self.arity() {
            let mut term = CommPoly::<Rational>::var(ctx, i);
            let mut k = 0usize;
            while !term.is_zero() {
                term = self.apply(&term);
                k += 1;
                if k > cap {
                    return Err(ExpError::NotNilpotentWithinCap { cap });
                }
            }
            top = top.max(k);
        }
        Ok(top)
    }
}

/// Re-express `p` in a larger context whose leading variables are exactly
/// `p`'s variables.
pub fn extend_poly(p: &CommPoly<Rational>, target: &Arc<VarContext>) -> CommPoly<Rational> {
    assert!(
        target.arity() >= p.arity()
            && p.context().names() == &target.names()[..p.arity()],
        "target context must extend the source"
    );
    CommPoly::from_terms(
        target,
        p.terms().map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            exps.resize(target.arity(), 0);
            (CommMonomial::new(exps), c.clone())
        }),
    )
}

fn fresh_name(ctx: &Arc<VarContext>) -> String {
    for cand in ["t", "u", "s", "v"] {
        if ctx.index_of(cand).is_none() {
            return cand.to_string();
        }
    }
    (0..)
        .map(|k| format!("t{k}"))
        .find(|n| ctx.index_of(n).is_none())
        .unwrap()
}

/// Verify the stabilization identity
/// `exp(wδ) = exp(t·δ)^{-1} · θ · exp(t·δ) · θ^{-1}` in one extra variable
/// `t`, where `θ` sends `t` to `t + w` and fixes the rest, `δ` kills `w`
/// and `t`, and products apply the right factor's polynomials to the left
/// factor's images. Returns the two sides' equality.
pub fn smith_identity_check(
    w: &CommPoly<Rational>,
    delta: &Derivation,
    cap: usize,
) -> Result<bool, ExpError> {
    assert!(
        delta.annihilates(w),
        "the multiplier must lie in the kernel of the derivation"
    );
    let ctx = delta.context();
    let n = ctx.arity();
    let mut names: Vec<String> = ctx.names().to_vec();
    names.push(fresh_name(ctx));
    let big = VarContext::new(names);
    let t = CommPoly::<Rational>::var(&big, n);
    let w_big = extend_poly(w, &big);

    // δ extended by δ(t) = 0, then scaled by t and by w.
    let mut delta_images: Vec<CommPoly<Rational>> =
        delta.images().iter().map(|d| extend_poly(d, &big)).collect();
    delta_images.push(CommPoly::zero(&big));
    let delta_big = Derivation::new(delta_images);
    let e = delta_big.scaled(&t).exp(cap)?;
    let e_inv = delta_big.scaled(&-&t).exp(cap)?;

    let mut theta_images: Vec<CommPoly<Rational>> =
        (0..=n).map(|i| CommPoly::var(&big, i)).collect();
    theta_images[n] = &theta_images[n] + &w_big;
    let theta = CommEndo::new(theta_images);
    let mut theta_inv_images: Vec<CommPoly<Rational>> =
        (0..=n).map(|i| CommPoly::var(&big, i)).collect();
    theta_inv_images[n] = &theta_inv_images[n] - &w_big;
    let theta_inv = CommEndo::new(theta_inv_images);

    let rhs = endo_compose(
        &endo_compose(&endo_compose(&e_inv, &theta), &e),
        &theta_inv,
    );
    let lhs = delta_big.scaled(&w_big).exp(cap)?;
    Ok(lhs == rhs)
}

/// The Jacobian derivation `u -> det(∇f, ∇g, ∇u)` on three variables; it
/// kills both `f` and `g`.
pub fn freudenburg_derivation(
    f: &CommPoly<Rational>,
    g: &CommPoly<Rational>,
) -> Derivation {
    let ctx = f.context().clone();
    assert_eq!(ctx.arity(), 3, "jacobian derivation needs three variables");
    let grad = |p: &CommPoly<Rational>| -> Vec<CommPoly<Rational>> {
        (0..3).map(|i| p.partial_derivative(i)).collect()
    };
    let images = (0..3)
        .map(|i| {
            let u = CommPoly::<Rational>::var(&ctx, i);
            matrix_det(&[grad(f), grad(g), grad(&u)])
        })
        .collect();
    Derivation::new(images)
}
