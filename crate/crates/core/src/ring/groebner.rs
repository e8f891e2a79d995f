use thiserror::Error;

use crate::field::Field;

use super::order::TermOrder;
use super::poly::CommPoly;
use super::reduce::normal_form;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("no nonzero generators supplied")]
    EmptyGeneratingSet,
}

fn s_poly<C: Field>(f: &CommPoly<C>, g: &CommPoly<C>, order: &TermOrder) -> CommPoly<C> {
    let (fm, fc) = f.leading(order).unwrap();
    let (gm, gc) = g.leading(order).unwrap();
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&fm.div_into(&lcm), &fc.inv());
    let b = g.mul_term(&gm.div_into(&lcm), &gc.inv());
    &a - &b
}

/// The reduced Groebner basis of the ideal generated by `gens` under
/// `order`: classic Buchberger with the coprimality criterion, followed by
/// inter-reduction and normalization to monic leading coefficients. The
/// result is sorted by leading monomial (ascending) and is the unique
/// reduced basis for the ideal and order.
pub fn buchberger_reduced<C: Field>(
    gens: &[CommPoly<C>],
    order: &TermOrder,
) -> Result<Vec<CommPoly<C>>, GroebnerError> {
    let mut basis: Vec<CommPoly<C>> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Err(GroebnerError::EmptyGeneratingSet);
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..i).map(move |j| (j, i)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (mi, _) = basis[i].leading(order).unwrap();
        let (mj, _) = basis[j].leading(order).unwrap();
        if mi.coprime(mj) {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            pairs.extend((0..k).map(|i| (i, k)));
            basis.push(r);
        }
    }
    // Drop members whose head is covered by another, then fully reduce
    // each survivor against the rest and make it monic.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        let (mi, _) = basis[i].leading(order).unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mj, _) = basis[j].leading(order).unwrap();
            if mj.divides(mi) && (mj != mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let kept: Vec<CommPoly<C>> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();
    let mut reduced = Vec::with_capacity(kept.len());
    for (i, p) in kept.iter().enumerate() {
        let others: Vec<CommPoly<C>> = kept
            .iter()
            .enumerate()
            .filter_map(|(j, q)| (j != i).then(|| q.clone()))
            .collect();
        let r = if others.is_empty() {
            p.clone()
        } else {
            normal_form(p, &others, order)
        };
        let (_, lc) = r.leading(order).unwrap();
        let lc = lc.clone();
        reduced.push(r.scale(&lc.inv()));
    }
    reduced.sort_by(|a, b| {
        order.cmp(
            a.leading(order).unwrap().0,
            b.leading(order).unwrap().0,
        )
    });
    Ok(reduced)
}

/// Whether the generated ideal is all of the ring, i.e. the reduced
/// Groebner basis is `{1}`. An empty or all-zero generating set gives the
/// zero ideal, which is not the unit ideal.
pub fn ideal_is_unit<C: Field>(gens: &[CommPoly<C>], order: &TermOrder) -> bool {
    match buchberger_reduced(gens, order) {
        Err(GroebnerError::EmptyGeneratingSet) => false,
        Ok(basis) => basis.len() == 1 && basis[0].is_constant(),
    }
}
