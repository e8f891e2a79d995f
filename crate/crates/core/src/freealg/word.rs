use std::fmt;

/// A word in the free monoid on the context variables, stored as variable
/// indices. The derived `Ord` (length-insensitive lex on indices) is the
/// storage order; note that shorter prefixes sort first, so the *least*
/// element under `Ord` within a fixed length is the lex-least word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FreeMonomial {
    letters: Vec<u8>,
}

impl FreeMonomial {
    pub fn new(letters: Vec<u8>) -> Self {
        FreeMonomial { letters }
    }

    pub fn one() -> Self {
        FreeMonomial {
            letters: Vec::new(),
        }
    }

    pub fn var(i: usize) -> Self {
        FreeMonomial {
            letters: vec![i as u8],
        }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn is_one(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &FreeMonomial) -> FreeMonomial {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        FreeMonomial { letters }
    }

    /// Number of occurrences of variable `i`.
    pub fn degree_in(&self, i: usize) -> u64 {
        self.letters.iter().filter(|&&l| l as usize == i).count() as u64
    }

    pub fn total_degree(&self) -> u64 {
        self.letters.len() as u64
    }
}

impl fmt::Display for FreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &l in &self.letters {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "v{l}")?;
        }
        Ok(())
    }
}
