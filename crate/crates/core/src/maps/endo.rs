use std::fmt;
use std::sync::Arc;

use crate::field::Field;
use crate::freealg::FreePoly;
use crate::rational::Rational;
use crate::ring::{CommPoly, VarContext};

/// An endomorphism of the polynomial algebra, given by the images of the
/// variables.
#[derive(Clone, PartialEq, Debug)]
pub struct CommEndo<C: Field> {
    images: Vec<CommPoly<C>>,
}

impl<C: Field> CommEndo<C> {
    pub fn new(images: Vec<CommPoly<C>>) -> Self {
        let ctx = images.first().expect("empty endomorphism").context();
        assert_eq!(images.len(), ctx.arity(), "one image per variable");
        let ctx = ctx.clone();
        for img in &images {
            assert!(img.context().names() == ctx.names(), "context mismatch");
        }
        CommEndo { images }
    }

    pub fn identity(ctx: &Arc<VarContext>) -> Self {
        CommEndo::new((0..ctx.arity()).map(|i| CommPoly::var(ctx, i)).collect())
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.images[0].context()
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> &CommPoly<C> {
        &self.images[i]
    }

    pub fn images(&self) -> &[CommPoly<C>] {
        &self.images
    }

    /// Apply as a substitution: `x_i -> image(i)` in `p`.
    pub fn apply(&self, p: &CommPoly<C>) -> CommPoly<C> {
        p.compose(&self.images)
    }

    pub fn is_identity(&self) -> bool {
        self == &CommEndo::identity(self.context())
    }

    pub fn fixes(&self, var: usize) -> bool {
        self.images[var] == CommPoly::var(self.context(), var)
    }
}

impl<C: Field> fmt::Display for CommEndo<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, ")")
    }
}

/// The product `φψ`, applying `ψ` first: `(φψ)(x_i)` is `ψ`'s i-th image
/// with `φ`'s images substituted for the variables.
pub fn endo_compose<C: Field>(phi: &CommEndo<C>, psi: &CommEndo<C>) -> CommEndo<C> {
    assert!(
        phi.context().names() == psi.context().names(),
        "context mismatch in composition"
    );
    CommEndo::new(psi.images.iter().map(|p| phi.apply(p)).collect())
}

/// An endomorphism of the free associative algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct FreeEndo {
    images: Vec<FreePoly>,
}

impl FreeEndo {
    pub fn new(images: Vec<FreePoly>) -> Self {
        let ctx = images.first().expect("empty endomorphism").context();
        assert_eq!(images.len(), ctx.arity(), "one image per variable");
        let ctx = ctx.clone();
        for img in &images {
            assert!(img.context().names() == ctx.names(), "context mismatch");
        }
        FreeEndo { images }
    }

    pub fn identity(ctx: &Arc<VarContext>) -> Self {
        FreeEndo::new((0..ctx.arity()).map(|i| FreePoly::var(ctx, i)).collect())
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.images[0].context()
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> &FreePoly {
        &self.images[i]
    }

    pub fn images(&self) -> &[FreePoly] {
        &self.images
    }

    pub fn apply(&self, p: &FreePoly) -> FreePoly {
        p.substitute(&self.images)
    }

    pub fn is_identity(&self) -> bool {
        self == &FreeEndo::identity(self.context())
    }

    pub fn fixes(&self, var: usize) -> bool {
        self.images[var] == FreePoly::var(self.context(), var)
    }

    /// The induced endomorphism of the polynomial algebra.
    pub fn abelianized(&self) -> CommEndo<Rational> {
        CommEndo::new(self.images.iter().map(FreePoly::abelianize).collect())
    }
}

impl fmt::Display for FreeEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, ")")
    }
}

/// Same product convention as [`endo_compose`].
pub fn free_endo_compose(phi: &FreeEndo, psi: &FreeEndo) -> FreeEndo {
    assert!(
        phi.context().names() == psi.context().names(),
        "context mismatch in composition"
    );
    FreeEndo::new(psi.images.iter().map(|p| phi.apply(p)).collect())
}

/// Jacobian matrix with entry `(i, j) = ∂ image_j / ∂ x_i`.
pub fn jacobian_comm<C: Field>(phi: &CommEndo<C>) -> Vec<Vec<CommPoly<C>>> {
    let n = phi.arity();
    (0..n)
        .map(|i| (0..n).map(|j| phi.image(j).partial_derivative(i)).collect())
        .collect()
}

/// Determinant by Laplace expansion along the first row; fine at the
/// 2x2 / 3x3 sizes used here.
pub fn matrix_det<C: Field>(m: &[Vec<CommPoly<C>>]) -> CommPoly<C> {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|row| row.len() == n), "square matrix");
    if n == 1 {
        return m[0][0].clone();
    }
    let ctx = m[0][0].context().clone();
    let mut det = CommPoly::zero(&ctx);
    for j in 0..n {
        let minor: Vec<Vec<CommPoly<C>>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&k| k != j)
                    .map(|k| m[i][k].clone())
                    .collect()
            })
            .collect();
        let cofactor = &m[0][j] * &matrix_det(&minor);
        det = if j % 2 == 0 {
            &det + &cofactor
        } else {
            &det - &cofactor
        };
    }
    det
}
