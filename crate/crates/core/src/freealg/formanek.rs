use std::collections::BTreeMap;
use std::sync::Arc;

use crate::rational::Rational;
use crate::ring::{CommMonomial, CommPoly, VarContext};

use super::poly::FreePoly;
use super::word::FreeMonomial;

/// The gap encoding of elements whose every word uses exactly `d` letters
/// other than the distinguished variable `z`.
///
/// A word `z^{a0} u1 z^{a1} u2 ... ud z^{ad}` with `ui != z` is stored as
/// the pattern `u1...ud` (a word avoiding `z`, letters kept in the original
/// context indices) together with the gap monomial `t0^{a0} * ... * td^{ad}`.
/// Each pattern therefore carries a polynomial in `t0..td` recording all
/// its gap configurations.
#[derive(Clone, PartialEq, Debug)]
pub struct FormanekElement {
    d: usize,
    tctx: Arc<VarContext>,
    coeffs: BTreeMap<FreeMonomial, CommPoly<Rational>>,
}

impl FormanekElement {
    pub fn new(
        d: usize,
        coeffs: impl IntoIterator<Item = (FreeMonomial, CommPoly<Rational>)>,
    ) -> Self {
        let tctx = VarContext::formanek(d);
        let mut map = BTreeMap::new();
        for (pattern, poly) in coeffs {
            assert_eq!(pattern.len(), d, "pattern length must equal d");
            assert_eq!(poly.arity(), d + 1, "gap polynomial needs d+1 variables");
            if !poly.is_zero() {
                map.insert(pattern, poly);
            }
        }
        FormanekElement {
            d,
            tctx,
            coeffs: map,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn gap_context(&self) -> &Arc<VarContext> {
        &self.tctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, pattern: &FreeMonomial) -> CommPoly<Rational> {
        self.coeffs
            .get(pattern)
            .cloned()
            .unwrap_or_else(|| CommPoly::zero(&self.tctx))
    }

    pub fn patterns(&self) -> impl Iterator<Item = (&FreeMonomial, &CommPoly<Rational>)> {
        self.coeffs.iter()
    }

    /// Lex-least pattern in the support (all patterns share length `d`, so
    /// the storage order restricted to the support is plain lex).
    pub fn least_pattern(&self) -> Option<&FreeMonomial> {
        self.coeffs.keys().next()
    }

    /// Concatenation of encoded elements: the last gap of the left factor
    /// fuses with the first gap of the right factor.
    pub fn mul(&self, rhs: &FormanekElement) -> FormanekElement {
        let d = self.d + rhs.d;
        let tctx = VarContext::formanek(d);
        let mut coeffs: BTreeMap<FreeMonomial, CommPoly<Rational>> = BTreeMap::new();
        for (pa, qa) in &self.coeffs {
            for (pb, qb) in &rhs.coeffs {
                let pattern = pa.concat(pb);
                let mut terms = Vec::new();
                for (ma, ca) in qa.terms() {
                    for (mb, cb) in qb.terms() {
                        let mut exps = Vec::with_capacity(d + 1);
                        exps.extend_from_slice(&ma.exps()[..self.d]);
                        exps.push(ma.exp(self.d) + mb.exp(0));
                        exps.extend_from_slice(&mb.exps()[1..]);
                        terms.push((CommMonomial::new(exps), ca.clone() * cb.clone()));
                    }
                }
                let poly = CommPoly::from_terms(&tctx, terms);
                let entry = coeffs
                    .entry(pattern)
                    .or_insert_with(|| CommPoly::zero(&tctx));
                *entry = &*entry + &poly;
            }
        }
        coeffs.retain(|_, p| !p.is_zero());
        FormanekElement { d, tctx, coeffs }
    }
}

/// Encode `p`; every word of `p` must use exactly `d` letters other than
/// `z`, where `d` is read off the first word. Returns `None` when the
/// letter counts disagree (zero encodes at `d = 0`).
pub fn hn_encode(p: &FreePoly, z: usize) -> Option<FormanekElement> {
    let d = p
        .terms()
        .next()
        .map(|(w, _)| (w.total_degree() - w.degree_in(z)) as usize)
        .unwrap_or(0);
    let tctx = VarContext::formanek(d);
    let mut coeffs: BTreeMap<FreeMonomial, CommPoly<Rational>> = BTreeMap::new();
    for (w, c) in p.terms() {
        let mut pattern = Vec::new();
        let mut gaps = vec![0u32; d + 1];
        for &l in w.letters() {
            if l as usize == z {
                gaps[pattern.len()] += 1;
            } else {
                if pattern.len() == d {
                    return None;
                }
                pattern.push(l);
            }
        }
        if pattern.len() != d {
            return None;
        }
        let mono = CommPoly::monomial(&tctx, CommMonomial::new(gaps), c.clone());
        let entry = coeffs
            .entry(FreeMonomial::new(pattern))
            .or_insert_with(|| CommPoly::zero(&tctx));
        *entry = &*entry + &mono;
    }
    coeffs.retain(|_, p| !p.is_zero());
    Some(FormanekElement { d, tctx, coeffs })
}

/// Inverse of [`hn_encode`], back into the free algebra on `ctx`.
pub fn hn_decode(elem: &FormanekElement, ctx: &Arc<VarContext>, z: usize) -> FreePoly {
    let mut terms = Vec::new();
    for (pattern, poly) in elem.patterns() {
        for (mono, c) in poly.terms() {
            let mut letters = Vec::new();
            for (i, &l) in pattern.letters().iter().enumerate() {
                letters.extend(std::iter::repeat(z as u8).take(mono.exp(i) as usize));
                letters.push(l);
            }
            letters.extend(std::iter::repeat(z as u8).take(mono.exp(elem.d) as usize));
            terms.push((FreeMonomial::new(letters), c.clone()));
        }
    }
    FreePoly::from_terms(ctx, terms)
}
