use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::field::Field;

use super::context::VarContext;
use super::order::TermOrder;
use super::poly::CommPoly;
use super::reduce::leading_term_reduce;

/// A 2x2 matrix over a polynomial ring, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat2Poly<C: Field> {
    rows: [[CommPoly<C>; 2]; 2],
}

impl<C: Field> Mat2Poly<C> {
    pub fn new(rows: [[CommPoly<C>; 2]; 2]) -> Self {
        Mat2Poly { rows }
    }

    pub fn identity(ctx: &Arc<VarContext>) -> Self {
        let one = CommPoly::one(ctx);
        let zero = CommPoly::zero(ctx);
        Mat2Poly {
            rows: [[one.clone(), zero.clone()], [zero, one]],
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &CommPoly<C> {
        &self.rows[i][j]
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.rows[0][0].context()
    }

    pub fn det(&self) -> CommPoly<C> {
        &(&self.rows[0][0] * &self.rows[1][1]) - &(&self.rows[0][1] * &self.rows[1][0])
    }

    pub fn mul(&self, rhs: &Mat2Poly<C>) -> Mat2Poly<C> {
        let e = |i: usize, j: usize| {
            &(&self.rows[i][0] * &rhs.rows[0][j]) + &(&self.rows[i][1] * &rhs.rows[1][j])
        };
        Mat2Poly {
            rows: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }
}

impl<C: Field> fmt::Display for Mat2Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}; {}, {}]",
            self.rows[0][0], self.rows[0][1], self.rows[1][0], self.rows[1][1]
        )
    }
}

/// One factor of a `GE_2` factorization.
#[derive(Clone, PartialEq, Debug)]
pub enum ElemFactor<C: Field> {
    /// `[[1, 0], [p, 1]]`
    Lower(CommPoly<C>),
    /// `[[1, p], [0, 1]]`
    Upper(CommPoly<C>),
    /// `[[a, 0], [0, d]]` with `a, d` nonzero constants
    Diag(C, C),
}

impl<C: Field> ElemFactor<C> {
    pub fn matrix(&self, ctx: &Arc<VarContext>) -> Mat2Poly<C> {
        let one = CommPoly::one(ctx);
        let zero = CommPoly::zero(ctx);
        match self {
            ElemFactor::Lower(p) => Mat2Poly::new([[one.clone(), zero], [p.clone(), one]]),
            ElemFactor::Upper(p) => Mat2Poly::new([[one.clone(), p.clone()], [zero, one]]),
            ElemFactor::Diag(a, d) => Mat2Poly::new([
                [CommPoly::constant(ctx, a.clone()), zero.clone()],
                [zero, CommPoly::constant(ctx, d.clone())],
            ]),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum Ge2Outcome<C: Field> {
    /// Elementary and diagonal factors whose ordered product is the input.
    Factors(Vec<ElemFactor<C>>),
    /// Column pair where the Euclidean reduction got stuck: both entries
    /// nonzero and nonconstant, neither leading term dividing the other.
    Obstruction {
        a: CommPoly<C>,
        b: CommPoly<C>,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Ge2Error {
    #[error("determinant is zero")]
    ZeroDeterminant,
    #[error("determinant is not constant")]
    NonConstantDeterminant,
}

/// Try to factor `m` (with nonzero constant determinant) as a product of
/// elementary and diagonal matrices, by Euclidean reduction of the first
/// column under `order`.
///
/// Row operations are applied on the left; their inverses accumulate in
/// `factors` so that `m = E_1 * ... * E_k * Diag(a, d) * Upper(c/a)` at
/// every stage. When the leading terms of the column pair are mutually
/// indivisible the matrix lies outside `GE_2` for this reduction strategy
/// and the stuck pair is returned as the obstruction.
pub fn ge2_reduce<C: Field>(
    m: &Mat2Poly<C>,
    order: &TermOrder,
) -> Result<Ge2Outcome<C>, Ge2Error> {
    let det = m.det();
    if det.is_zero() {
        return Err(Ge2Error::ZeroDeterminant);
    }
    if !det.is_constant() {
        return Err(Ge2Error::NonConstantDeterminant);
    }
    let ctx = m.context().clone();
    let mut cur = m.clone();
    let mut factors: Vec<ElemFactor<C>> = Vec::new();
    let row_op = |cur: &Mat2Poly<C>, f: &ElemFactor<C>| f.matrix(&ctx).mul(cur);
    loop {
        let a = cur.entry(0, 0).clone();
        let b = cur.entry(1, 0).clone();
        if b.is_zero() {
            break;
        }
        if a.is_zero() {
            // Swap rows (with a sign) via S = L(1) U(-1) L(1); push S^-1.
            let one = CommPoly::one(&ctx);
            for f in [
                ElemFactor::Lower(one.clone()),
                ElemFactor::Upper(-&one),
                ElemFactor::Lower(one.clone()),
            ] {
                cur = row_op(&cur, &f);
            }
            factors.push(ElemFactor::Lower(-&CommPoly::one(&ctx)));
            factors.push(ElemFactor::Upper(CommPoly::one(&ctx)));
            factors.push(ElemFactor::Lower(-&CommPoly::one(&ctx)));
            continue;
        }
        let (am, _) = a.leading(order).unwrap();
        let (bm, _) = b.leading(order).unwrap();
        if am.divides(bm) {
            // row2 -= g * row1
            let (g, _) = leading_term_reduce(&b, &a, order);
            cur = row_op(&cur, &ElemFactor::Lower(-&g));
            factors.push(ElemFactor::Lower(g));
        } else if bm.divides(am) {
            // row1 -= g * row2
            let (g, _) = leading_term_reduce(&a, &b, order);
            cur = row_op(&cur, &ElemFactor::Upper(-&g));
            factors.push(ElemFactor::Upper(g));
        } else {
            return Ok(Ge2Outcome::Obstruction { a, b });
        }
    }
    // First column is (a, 0); a * d = det(m) is a nonzero constant, so
    // both diagonal entries are constants.
    let a = cur
        .entry(0, 0)
        .as_constant()
        .expect("triangular factor with constant determinant");
    let d = cur
        .entry(1, 1)
        .as_constant()
        .expect("triangular factor with constant determinant");
    factors.push(ElemFactor::Diag(a.clone(), d));
    let c_over_a = cur.entry(0, 1).scale(&a.inv());
    if !c_over_a.is_zero() {
        factors.push(ElemFactor::Upper(c_over_a));
    }
    Ok(Ge2Outcome::Factors(factors))
}
