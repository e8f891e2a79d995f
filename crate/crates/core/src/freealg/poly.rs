use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::field::Field;
use crate::rational::Rational;
use crate::ring::{CommMonomial, CommPoly, VarContext};

use super::word::FreeMonomial;

/// An element of the free associative algebra over `Q` on the context
/// variables. Invariants: no stored coefficient is zero.
#[derive(Clone, Debug)]
pub struct FreePoly {
    ctx: Arc<VarContext>,
    terms: BTreeMap<FreeMonomial, Rational>,
}

impl PartialEq for FreePoly {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.names() == other.ctx.names() && self.terms == other.terms
    }
}

impl FreePoly {
    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        FreePoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<VarContext>) -> Self {
        FreePoly::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Arc<VarContext>, c: Rational) -> Self {
        FreePoly::from_terms(ctx, [(FreeMonomial::one(), c)])
    }

    pub fn var(ctx: &Arc<VarContext>, i: usize) -> Self {
        assert!(i < ctx.arity());
        FreePoly::from_terms(ctx, [(FreeMonomial::var(i), Rational::one())])
    }

    pub fn monomial(ctx: &Arc<VarContext>, word: FreeMonomial, c: Rational) -> Self {
        FreePoly::from_terms(ctx, [(word, c)])
    }

    pub fn from_terms(
        ctx: &Arc<VarContext>,
        terms: impl IntoIterator<Item = (FreeMonomial, Rational)>,
    ) -> Self {
        let mut map: BTreeMap<FreeMonomial, Rational> = BTreeMap::new();
        for (w, c) in terms {
            assert!(
                w.letters().iter().all(|&l| (l as usize) < ctx.arity()),
                "letter out of range for context"
            );
            let entry = map.entry(w).or_insert_with(Rational::zero);
            *entry = entry.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        FreePoly {
            ctx: ctx.clone(),
            terms: map,
        }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn arity(&self) -> usize {
        self.ctx.arity()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(FreeMonomial::is_one)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&FreeMonomial::one())
    }

    pub fn coeff(&self, w: &FreeMonomial) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(FreeMonomial::total_degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u64> {
        self.terms.keys().map(|w| w.degree_in(var)).max()
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.terms.keys().any(|w| w.degree_in(var) > 0)
    }

    pub fn scale(&self, c: &Rational) -> FreePoly {
        if c.is_zero() {
            return FreePoly::zero(&self.ctx);
        }
        FreePoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> FreePoly {
        let mut acc = FreePoly::one(&self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `[a, b] = a*b - b*a`.
    pub fn commutator(a: &FreePoly, b: &FreePoly) -> FreePoly {
        &(a * b) - &(b * a)
    }

    /// Bidegree of a word relative to the distinguished variable `z`:
    /// `(degree in the other letters, degree in z)`.
    pub fn word_bidegree(w: &FreeMonomial, z: usize) -> (u64, u64) {
        let e = w.degree_in(z);
        (w.total_degree() - e, e)
    }

    /// Lexicographically greatest bidegree over the support; `None` for
    /// the zero polynomial.
    pub fn bidegree(&self, z: usize) -> Option<(u64, u64)> {
        self.terms
            .keys()
            .map(|w| FreePoly::word_bidegree(w, z))
            .max()
    }

    /// Sum of terms of bidegree exactly `(d, e)`.
    pub fn bidegree_component(&self, z: usize, d: u64, e: u64) -> FreePoly {
        FreePoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| FreePoly::word_bidegree(w, z) == (d, e))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when all terms share one bidegree (zero counts as homogeneous).
    pub fn is_bihomogeneous(&self, z: usize) -> bool {
        match self.bidegree(z) {
            None => true,
            Some(de) => self
                .terms
                .keys()
                .all(|w| FreePoly::word_bidegree(w, z) == de),
        }
    }

    /// Substitute `images[i]` for variable `i`; images share one context.
    pub fn substitute(&self, images: &[FreePoly]) -> FreePoly {
        assert_eq!(images.len(), self.arity(), "arity mismatch in substitution");
        let target = images
            .first()
            .map(|p| p.ctx.clone())
            .expect("substitution needs at least one image");
        let mut acc = FreePoly::zero(&target);
        for (w, c) in &self.terms {
            let mut term = FreePoly::constant(&target, c.clone());
            for &l in w.letters() {
                term = &term * &images[l as usize];
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Image in the polynomial algebra on the same variables.
    pub fn abelianize(&self) -> CommPoly<Rational> {
        let n = self.arity();
        CommPoly::from_terms(
            &self.ctx,
            self.terms.iter().map(|(w, c)| {
                let mut exps = vec![0u32; n];
                for &l in w.letters() {
                    exps[l as usize] += 1;
                }
                (CommMonomial::new(exps), c.clone())
            }),
        )
    }

    /// Canonical text: terms by descending length then ascending lex,
    /// explicit `*` between letters.
    pub fn format_canonical(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut words: Vec<&FreeMonomial> = self.terms.keys().collect();
        words.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut out = String::new();
        for (idx, w) in words.iter().enumerate() {
            let c = &self.terms[*w];
            let (neg, mag, is_one) = c.display_signed();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !is_one || w.is_one() {
                factors.push(mag);
            }
            let letters = w.letters();
            let mut i = 0;
            while i < letters.len() {
                let l = letters[i];
                let mut run = 1;
                while i + run < letters.len() && letters[i + run] == l {
                    run += 1;
                }
                let name = self.ctx.name(l as usize);
                if run == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{run}"));
                }
                i += run;
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl Add for &FreePoly {
    type Output = FreePoly;
    fn add(self, rhs: &FreePoly) -> FreePoly {
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            let entry = terms.entry(w.clone()).or_insert_with(Rational::zero);
            *entry = entry.clone() + c.clone();
        }
        terms.retain(|_, c| !c.is_zero());
        FreePoly {
            ctx: self.ctx.clone(),
            terms,
        }
    }
}

impl Sub for &FreePoly {
    type Output = FreePoly;
    fn sub(self, rhs: &FreePoly) -> FreePoly {
        self + &(-rhs)
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        FreePoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &FreePoly {
    type Output = FreePoly;
    fn mul(self, rhs: &FreePoly) -> FreePoly {
        let mut terms: BTreeMap<FreeMonomial, Rational> = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                let w = wa.concat(wb);
                let entry = terms.entry(w).or_insert_with(Rational::zero);
                *entry = entry.clone() + ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        FreePoly {
            ctx: self.ctx.clone(),
            terms,
        }
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_canonical())
    }
}
