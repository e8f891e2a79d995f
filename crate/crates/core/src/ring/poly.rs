use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::field::Field;
use crate::rational::Rational;
use crate::ratfunc::RatFunc;
use crate::zpoly::ZPoly;

use super::context::VarContext;
use super::monomial::CommMonomial;
use super::order::TermOrder;

/// Sparse multivariate polynomial with exact coefficients.
///
/// Invariants: no stored coefficient is zero and each monomial appears at
/// most once. Values are immutable after construction and freely shared.
#[derive(Clone, Debug)]
pub struct CommPoly<C: Field> {
    ctx: Arc<VarContext>,
    terms: BTreeMap<CommMonomial, C>,
}

impl<C: Field> PartialEq for CommPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.names() == other.ctx.names() && self.terms == other.terms
    }
}

impl<C: Field> CommPoly<C> {
    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        CommPoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<VarContext>) -> Self {
        CommPoly::constant(ctx, C::one())
    }

    pub fn constant(ctx: &Arc<VarContext>, c: C) -> Self {
        CommPoly::from_terms(ctx, [(CommMonomial::one(ctx.arity()), c)])
    }

    pub fn var(ctx: &Arc<VarContext>, i: usize) -> Self {
        assert!(i < ctx.arity());
        CommPoly::from_terms(ctx, [(CommMonomial::var(ctx.arity(), i), C::one())])
    }

    pub fn monomial(ctx: &Arc<VarContext>, mon: CommMonomial, c: C) -> Self {
        CommPoly::from_terms(ctx, [(mon, c)])
    }

    pub fn from_terms(
        ctx: &Arc<VarContext>,
        terms: impl IntoIterator<Item = (CommMonomial, C)>,
    ) -> Self {
        let mut map: BTreeMap<CommMonomial, C> = BTreeMap::new();
        for (mon, c) in terms {
            assert_eq!(mon.arity(), ctx.arity(), "monomial arity mismatch");
            let entry = map.entry(mon).or_insert_with(C::zero);
            *entry = entry.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        CommPoly {
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

    pub fn terms(&self) -> impl Iterator<Item = (&CommMonomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(CommMonomial::is_one)
    }

    /// The value as a field constant, when it is one (zero included).
    pub fn as_constant(&self) -> Option<C> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&CommMonomial::one(self.arity()))
    }

    pub fn coeff(&self, mon: &CommMonomial) -> C {
        self.terms.get(mon).cloned().unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(CommMonomial::total_degree).max()
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    pub fn leading(&self, order: &TermOrder) -> Option<(&CommMonomial, &C)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    /// Homogeneous component of maximal total degree; zero maps to zero.
    pub fn top_degree_form(&self) -> CommPoly<C> {
        match self.total_degree() {
            None => self.clone(),
            Some(d) => CommPoly {
                ctx: self.ctx.clone(),
                terms: self
                    .terms
                    .iter()
                    .filter(|(m, _)| m.total_degree() == d)
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect(),
            },
        }
    }

    /// Sum of all terms attaining the maximal weighted degree. Weights may
    /// be zero here (z rides along as a coefficient in the (d,1)-grading);
    /// zero input yields zero.
    pub fn weighted_leading_form(&self, weights: &[u64]) -> CommPoly<C> {
        assert_eq!(weights.len(), self.arity(), "weight vector arity mismatch");
        let top = match self.terms.keys().map(|m| m.weighted_degree(weights)).max() {
            None => return self.clone(),
            Some(d) => d,
        };
        CommPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(weights) == top)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> CommPoly<C> {
        if c.is_zero() {
            return CommPoly::zero(&self.ctx);
        }
        CommPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiply by a single term `c * mon`.
    pub fn mul_term(&self, mon: &CommMonomial, c: &C) -> CommPoly<C> {
        if c.is_zero() {
            return CommPoly::zero(&self.ctx);
        }
        CommPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mon), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> CommPoly<C> {
        let mut acc = CommPoly::one(&self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial_derivative(&self, var: usize) -> CommPoly<C> {
        assert!(var < self.arity(), "variable index out of range");
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] = e - 1;
            let coeff = c.clone() * C::from_i64(e as i64);
            if !coeff.is_zero() {
                terms.insert(CommMonomial::new(exps), coeff);
            }
        }
        CommPoly {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    /// Substitute `images[i]` for variable `i`. The result lives in the
    /// images' shared context.
    pub fn compose(&self, images: &[CommPoly<C>]) -> CommPoly<C> {
        assert_eq!(images.len(), self.arity(), "arity mismatch in composition");
        let target = images
            .first()
            .map(|p| p.ctx.clone())
            .expect("composition needs at least one image");
        for img in images {
            assert!(
                img.ctx.names() == target.names(),
                "images must share one context"
            );
        }
        // Cache powers of each image up to the largest exponent used.
        let mut max_exp = vec![0u32; self.arity()];
        for m in self.terms.keys() {
            for (i, e) in max_exp.iter_mut().enumerate() {
                *e = (*e).max(m.exp(i));
            }
        }
        let powers: Vec<Vec<CommPoly<C>>> = images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let mut p = vec![CommPoly::one(&target)];
                for k in 1..=max_exp[i] as usize {
                    p.push(&p[k - 1] * img);
                }
                p
            })
            .collect();
        let mut acc = CommPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = CommPoly::constant(&target, c.clone());
            for (i, pows) in powers.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    term = &term * &pows[e as usize];
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Rebuild over a new coefficient field.
    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> CommPoly<D> {
        CommPoly::from_terms(
            &self.ctx,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    /// Canonical text: terms descending under `order`, explicit `*` and
    /// `^`, rational coefficients as `a` or `a/b`.
    pub fn format_with(&self, order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut mons: Vec<&CommMonomial> = self.terms.keys().collect();
        mons.sort_by(|a, b| order.cmp(b, a));
        let mut out = String::new();
        for (idx, m) in mons.iter().enumerate() {
            let c = &self.terms[*m];
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
            if !is_one || m.is_one() {
                factors.push(mag);
            }
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self.ctx.name(i);
                if e == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl<C: Field> Add for &CommPoly<C> {
    type Output = CommPoly<C>;
    fn add(self, rhs: &CommPoly<C>) -> CommPoly<C> {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(C::zero);
            *entry = entry.clone() + c.clone();
        }
        terms.retain(|_, c| !c.is_zero());
        CommPoly {
            ctx: self.ctx.clone(),
            terms,
        }
    }
}

impl<C: Field> Sub for &CommPoly<C> {
    type Output = CommPoly<C>;
    fn sub(self, rhs: &CommPoly<C>) -> CommPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Field> Neg for &CommPoly<C> {
    type Output = CommPoly<C>;
    fn neg(self) -> CommPoly<C> {
        CommPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<C: Field> Mul for &CommPoly<C> {
    type Output = CommPoly<C>;
    fn mul(self, rhs: &CommPoly<C>) -> CommPoly<C> {
        let mut terms: BTreeMap<CommMonomial, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let entry = terms.entry(m).or_insert_with(C::zero);
                *entry = entry.clone() + ca.clone() * cb.clone();
            }
        }
        terms.retain(|_, c| !c.is_zero());
        CommPoly {
            ctx: self.ctx.clone(),
            terms,
        }
    }
}

impl<C: Field> fmt::Display for CommPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&TermOrder::default()))
    }
}

/// Reinterpret `p` in `Q[..., z, ...]` as a polynomial over `Q(z)` in the
/// remaining variables.
pub fn with_ratfunc_coeffs(p: &CommPoly<Rational>, z_index: usize) -> CommPoly<RatFunc> {
    let names: Vec<String> = p
        .context()
        .names()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != z_index)
        .map(|(_, n)| n.clone())
        .collect();
    let ctx = VarContext::new(names);
    CommPoly::from_terms(
        &ctx,
        p.terms().map(|(m, c)| {
            let zexp = m.exp(z_index) as usize;
            let exps: Vec<u32> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != z_index)
                .map(|(_, &e)| e)
                .collect();
            (
                CommMonomial::new(exps),
                RatFunc::from_poly(ZPoly::monomial(c.clone(), zexp)),
            )
        }),
    )
}

/// Inverse of [`with_ratfunc_coeffs`]: succeeds when every coefficient is
/// a `K[z]` polynomial. `z` is appended as the last variable of `ctx`.
pub fn into_z_polynomial(
    p: &CommPoly<RatFunc>,
    target: &Arc<VarContext>,
) -> Option<CommPoly<Rational>> {
    assert_eq!(target.arity(), p.arity() + 1);
    let z = target.arity() - 1;
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        let zp = c.as_polynomial()?;
        for (k, a) in zp.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps.push(0);
            exps[z] = k as u32;
            terms.push((CommMonomial::new(exps), a.clone()));
        }
    }
    Some(CommPoly::from_terms(target, terms))
}
