use std::fmt;

/// Exponent vector of a commutative monomial; length equals the context
/// arity. The derived `Ord` (plain lex on the exponent vector) is only the
/// storage order of polynomial terms, not a term order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CommMonomial {
    exps: Vec<u32>,
}

impl CommMonomial {
    pub fn new(exps: Vec<u32>) -> Self {
        CommMonomial { exps }
    }

    pub fn one(arity: usize) -> Self {
        CommMonomial {
            exps: vec![0; arity],
        }
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[i] = 1;
        CommMonomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn mul(&self, other: &CommMonomial) -> CommMonomial {
        CommMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &CommMonomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must have checked divisibility.
    pub fn div_into(&self, other: &CommMonomial) -> CommMonomial {
        CommMonomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &CommMonomial) -> CommMonomial {
        CommMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// True when the two monomials share no variable (Buchberger's
    /// coprimality criterion).
    pub fn coprime(&self, other: &CommMonomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl fmt::Display for CommMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "v{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
