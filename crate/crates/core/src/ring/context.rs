use std::fmt;
use std::sync::Arc;

/// An ordered set of distinct variable names. Earlier variables are
/// greater in every term order (`x > y > z` for the default contexts).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarContext {
    names: Vec<String>,
}

impl VarContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(!names.is_empty(), "empty variable context");
        for (i, a) in names.iter().enumerate() {
            for b in &names[i + 1..] {
                assert!(a != b, "duplicate variable name {a:?}");
            }
        }
        Arc::new(VarContext { names })
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `x, y`.
    pub fn xy() -> Arc<Self> {
        VarContext::new(["x", "y"])
    }

    /// `x, y, z`.
    pub fn xyz() -> Arc<Self> {
        VarContext::new(["x", "y", "z"])
    }

    /// `x, y, t, z` (the Mennicke factorization lives here).
    pub fn xytz() -> Arc<Self> {
        VarContext::new(["x", "y", "t", "z"])
    }

    /// `z1, z2`, home of the z-Jacobian entries.
    pub fn z1z2() -> Arc<Self> {
        VarContext::new(["z1", "z2"])
    }

    /// `x1, y1, z1, x2, y2, z2`, home of the metabelian derivatives.
    pub fn metabelian() -> Arc<Self> {
        VarContext::new(["x1", "y1", "z1", "x2", "y2", "z2"])
    }

    /// `t0, ..., tn` for the Formanek module action on `H_n`.
    pub fn formanek(n: usize) -> Arc<Self> {
        VarContext::new((0..=n).map(|i| format!("t{i}")))
    }
}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}
