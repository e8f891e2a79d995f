use crate::field::Field;

use super::monomial::CommMonomial;
use super::order::TermOrder;
use super::poly::CommPoly;

/// Head reduction of `p` by a single nonzero `q`: returns `(g, r)` with
/// `p = g*q + r` and either `r = 0` or the leading monomial of `r` under
/// `order` not divisible by the leading monomial of `q`.
pub fn leading_term_reduce<C: Field>(
    p: &CommPoly<C>,
    q: &CommPoly<C>,
    order: &TermOrder,
) -> (CommPoly<C>, CommPoly<C>) {
    assert!(!q.is_zero(), "reduction by the zero polynomial");
    let (qm, qc) = {
        let (m, c) = q.leading(order).unwrap();
        (m.clone(), c.clone())
    };
    let mut g = CommPoly::zero(p.context());
    let mut r = p.clone();
    while let Some((rm, rc)) = r.leading(order) {
        if !qm.divides(rm) {
            break;
        }
        let mon = qm.div_into(rm);
        let coeff = rc.clone() / qc.clone();
        let step = CommPoly::monomial(p.context(), mon, coeff);
        r = &r - &(&step * q);
        g = &g + &step;
    }
    (g, r)
}

/// Reduce every term of `p` modulo the set `basis`, leading terms first.
/// For a Groebner basis this is the unique normal form.
pub fn normal_form<C: Field>(
    p: &CommPoly<C>,
    basis: &[CommPoly<C>],
    order: &TermOrder,
) -> CommPoly<C> {
    let heads: Vec<(CommMonomial, C, &CommPoly<C>)> = basis
        .iter()
        .filter(|q| !q.is_zero())
        .map(|q| {
            let (m, c) = q.leading(order).unwrap();
            (m.clone(), c.clone(), q)
        })
        .collect();
    let mut rest = p.clone();
    let mut done = CommPoly::zero(p.context());
    'outer: while let Some((rm, rc)) = rest.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        for (qm, qc, q) in &heads {
            if qm.divides(&rm) {
                let step =
                    CommPoly::monomial(p.context(), qm.div_into(&rm), rc.clone() / qc.clone());
                rest = &rest - &(&step * *q);
                continue 'outer;
            }
        }
        // Leading term irreducible: move it to the output.
        let lt = CommPoly::monomial(p.context(), rm, rc);
        done = &done + &lt;
        rest = &rest - &lt;
    }
    done
}

/// Exact quotient `p / q` when the division leaves no remainder.
pub fn divide_exact<C: Field>(
    p: &CommPoly<C>,
    q: &CommPoly<C>,
    order: &TermOrder,
) -> Option<CommPoly<C>> {
    let (g, r) = leading_term_reduce(p, q, order);
    r.is_zero().then_some(g)
}
