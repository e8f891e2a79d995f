use std::cmp::Ordering;
use std::fmt;

use super::monomial::CommMonomial;

/// A multiplicatively compatible well-order on monomials. Variable 0 is
/// the greatest variable in every kind.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TermOrder {
    Lex,
    DegLex,
    DegRevLex,
    /// Weighted degree with lexicographic tie-break; weights must be
    /// strictly positive so the order stays a well-order.
    Weighted(Vec<u64>),
}

impl TermOrder {
    pub fn cmp(&self, a: &CommMonomial, b: &CommMonomial) -> Ordering {
        match self {
            TermOrder::Lex => lex(a, b),
            TermOrder::DegLex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| lex(a, b)),
            TermOrder::DegRevLex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| revlex(a, b)),
            TermOrder::Weighted(w) => {
                debug_assert!(w.iter().all(|&wi| wi > 0));
                a.weighted_degree(w)
                    .cmp(&b.weighted_degree(w))
                    .then_with(|| lex(a, b))
            }
        }
    }

    pub fn parse(name: &str) -> Option<TermOrder> {
        match name {
            "lex" => Some(TermOrder::Lex),
            "deglex" => Some(TermOrder::DegLex),
            "degrevlex" => Some(TermOrder::DegRevLex),
            _ => None,
        }
    }
}

fn lex(a: &CommMonomial, b: &CommMonomial) -> Ordering {
    for (x, y) in a.exps().iter().zip(b.exps()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn revlex(a: &CommMonomial, b: &CommMonomial) -> Ordering {
    for (x, y) in a.exps().iter().zip(b.exps()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

impl Default for TermOrder {
    fn default() -> Self {
        TermOrder::DegLex
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::DegLex => write!(f, "deglex"),
            TermOrder::DegRevLex => write!(f, "degrevlex"),
            TermOrder::Weighted(w) => write!(
                f,
                "weighted({})",
                w.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }
}
