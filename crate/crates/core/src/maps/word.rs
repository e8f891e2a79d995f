use std::sync::Arc;

use crate::field::Field;
use crate::freealg::FreePoly;
use crate::rational::Rational;
use crate::ring::{CommPoly, VarContext};
use crate::zpoly::ZPoly;

use super::endo::{endo_compose, free_endo_compose, CommEndo, FreeEndo};

/// A tame generator of the polynomial algebra.
#[derive(Clone, PartialEq, Debug)]
pub enum CommGen<C: Field> {
    /// `x_i -> Σ_j matrix[i][j] x_j + translation[i]`; matrix invertible.
    Affine {
        matrix: Vec<Vec<C>>,
        translation: Vec<C>,
    },
    /// `x_var -> scale * x_var + offset`, offset free of `x_var`, scale a
    /// unit. This is the generator `σ(var, scale, offset)`.
    Triangular {
        var: usize,
        scale: C,
        offset: CommPoly<C>,
    },
}

impl<C: Field> CommGen<C> {
    /// The transposition of two variables as an affine generator.
    pub fn tau(ctx: &Arc<VarContext>, k: usize, s: usize) -> Self {
        let n = ctx.arity();
        let mut matrix = vec![vec![C::zero(); n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            let j = if i == k { s } else if i == s { k } else { i };
            row[j] = C::one();
        }
        CommGen::Affine {
            matrix,
            translation: vec![C::zero(); n],
        }
    }

    pub fn endo(&self, ctx: &Arc<VarContext>) -> CommEndo<C> {
        match self {
            CommGen::Affine {
                matrix,
                translation,
            } => {
                let n = ctx.arity();
                assert_eq!(matrix.len(), n);
                let images = (0..n)
                    .map(|i| {
                        let mut p = CommPoly::constant(ctx, translation[i].clone());
                        for (j, c) in matrix[i].iter().enumerate() {
                            p = &p + &CommPoly::var(ctx, j).scale(c);
                        }
                        p
                    })
                    .collect();
                CommEndo::new(images)
            }
            CommGen::Triangular { var, scale, offset } => {
                assert!(!offset.depends_on(*var), "offset must avoid its variable");
                assert!(!scale.is_zero(), "triangular scale must be a unit");
                let mut images: Vec<CommPoly<C>> =
                    (0..ctx.arity()).map(|i| CommPoly::var(ctx, i)).collect();
                images[*var] = &images[*var].scale(scale) + offset;
                CommEndo::new(images)
            }
        }
    }

    pub fn inverse(&self) -> CommGen<C> {
        match self {
            CommGen::Affine {
                matrix,
                translation,
            } => {
                let inv = invert_matrix(matrix).expect("affine generator must be invertible");
                // x -> A x + b inverts to x -> A^{-1} x - A^{-1} b.
                let n = matrix.len();
                let neg_tr = (0..n)
                    .map(|i| {
                        let mut s = C::zero();
                        for (j, b) in translation.iter().enumerate() {
                            s = s + inv[i][j].clone() * b.clone();
                        }
                        -s
                    })
                    .collect();
                CommGen::Affine {
                    matrix: inv,
                    translation: neg_tr,
                }
            }
            CommGen::Triangular { var, scale, offset } => CommGen::Triangular {
                var: *var,
                scale: scale.inv(),
                offset: offset.scale(&-scale.inv()),
            },
        }
    }
}

/// Field-matrix inverse via Gauss-Jordan; `None` when singular.
pub fn invert_matrix<C: Field>(m: &[Vec<C>]) -> Option<Vec<Vec<C>>> {
    let n = m.len();
    let mut a: Vec<Vec<C>> = m.to_vec();
    let mut inv: Vec<Vec<C>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { C::one() } else { C::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone().inv();
        for j in 0..n {
            a[col][j] = a[col][j].clone() * p.clone();
            inv[col][j] = inv[col][j].clone() * p.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                a[r][j] = a[r][j].clone() - f.clone() * a[col][j].clone();
                inv[r][j] = inv[r][j].clone() - f.clone() * inv[col][j].clone();
            }
        }
    }
    Some(inv)
}

/// A tame generator of the free algebra with `z` fixed ( `z` optional ).
#[derive(Clone, PartialEq, Debug)]
pub enum FreeGen {
    /// Acts on variables 0 and 1 with left `K[z]` coefficients:
    /// `x_i -> Σ_j matrix[i][j](z)·x_j + translation[i](z)`; other
    /// variables fixed. The matrix determinant must be a nonzero constant.
    Affine {
        matrix: [[ZPoly; 2]; 2],
        translation: [ZPoly; 2],
    },
    /// `x_var -> scale*x_var + offset`, offset avoiding `x_var`.
    Triangular {
        var: usize,
        scale: Rational,
        offset: FreePoly,
    },
    /// `ε_{source,target}(coeff z1^left z2^right)`:
    /// `x_target -> x_target + coeff * z^left x_source z^right`.
    EpsilonZ {
        target: usize,
        source: usize,
        coeff: Rational,
        left: usize,
        right: usize,
    },
}

impl FreeGen {
    pub fn endo(&self, ctx: &Arc<VarContext>, z_index: Option<usize>) -> FreeEndo {
        let mut images: Vec<FreePoly> =
            (0..ctx.arity()).map(|i| FreePoly::var(ctx, i)).collect();
        let zpow = |k: usize| -> FreePoly {
            match z_index {
                Some(z) => FreePoly::var(ctx, z).pow(k as u32),
                None => {
                    assert!(k == 0, "z power in a z-free word");
                    FreePoly::one(ctx)
                }
            }
        };
        let zcoeff = |p: &ZPoly, body: &FreePoly| -> FreePoly {
            let mut acc = FreePoly::zero(ctx);
            for (k, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc = &acc + &(&zpow(k).scale(c) * body);
                }
            }
            acc
        };
        match self {
            FreeGen::Affine {
                matrix,
                translation,
            } => {
                for i in 0..2 {
                    let mut p = zcoeff(&translation[i], &FreePoly::one(ctx));
                    for (j, a) in matrix[i].iter().enumerate() {
                        p = &p + &zcoeff(a, &FreePoly::var(ctx, j));
                    }
                    images[i] = p;
                }
            }
            FreeGen::Triangular { var, scale, offset } => {
                assert!(!offset.depends_on(*var));
                assert!(!scale.is_zero());
                images[*var] = &FreePoly::var(ctx, *var).scale(scale) + offset;
            }
            FreeGen::EpsilonZ {
                target,
                source,
                coeff,
                left,
                right,
            } => {
                assert_ne!(target, source);
                let term = &(&zpow(*left) * &FreePoly::var(ctx, *source)) * &zpow(*right);
                images[*target] = &images[*target] + &term.scale(coeff);
            }
        }
        FreeEndo::new(images)
    }

    pub fn inverse(&self) -> FreeGen {
        match self {
            FreeGen::Affine {
                matrix,
                translation,
            } => {
                let det = (&matrix[0][0] * &matrix[1][1])
                    + (-(&matrix[0][1] * &matrix[1][0]));
                assert!(
                    det.is_constant() && !det.is_zero(),
                    "free affine generator needs unit determinant"
                );
                let d = det.constant_term();
                let dinv = d.inv();
                let inv = [
                    [matrix[1][1].scale(&dinv), (-matrix[0][1].clone()).scale(&dinv)],
                    [(-matrix[1][0].clone()).scale(&dinv), matrix[0][0].scale(&dinv)],
                ];
                let neg_tr = [
                    -((&inv[0][0] * &translation[0]) + (&inv[0][1] * &translation[1])),
                    -((&inv[1][0] * &translation[0]) + (&inv[1][1] * &translation[1])),
                ];
                FreeGen::Affine {
                    matrix: inv,
                    translation: neg_tr,
                }
            }
            FreeGen::Triangular { var, scale, offset } => FreeGen::Triangular {
                var: *var,
                scale: scale.inv(),
                offset: offset.scale(&-scale.inv()),
            },
            FreeGen::EpsilonZ {
                target,
                source,
                coeff,
                left,
                right,
            } => FreeGen::EpsilonZ {
                target: *target,
                source: *source,
                coeff: -coeff.clone(),
                left: *left,
                right: *right,
            },
        }
    }
}

/// An ordered word of tame generators; evaluation multiplies them
/// left-to-right with the convention that in `φψ` the right factor's
/// polynomials receive the left factor's images.
#[derive(Clone, PartialEq, Debug)]
pub struct TameWord<G> {
    pub arity: usize,
    pub z_index: Option<usize>,
    pub gens: Vec<G>,
}

impl<G> TameWord<G> {
    pub fn new(arity: usize, z_index: Option<usize>, gens: Vec<G>) -> Self {
        TameWord {
            arity,
            z_index,
            gens,
        }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

impl<C: Field> TameWord<CommGen<C>> {
    pub fn eval(&self, ctx: &Arc<VarContext>) -> CommEndo<C> {
        assert_eq!(ctx.arity(), self.arity);
        self.gens.iter().fold(CommEndo::identity(ctx), |acc, g| {
            endo_compose(&acc, &g.endo(ctx))
        })
    }

    pub fn inverse(&self) -> Self {
        TameWord {
            arity: self.arity,
            z_index: self.z_index,
            gens: self.gens.iter().rev().map(CommGen::inverse).collect(),
        }
    }
}

impl TameWord<FreeGen> {
    pub fn eval(&self, ctx: &Arc<VarContext>) -> FreeEndo {
        assert_eq!(ctx.arity(), self.arity);
        self.gens.iter().fold(FreeEndo::identity(ctx), |acc, g| {
            free_endo_compose(&acc, &g.endo(ctx, self.z_index))
        })
    }

    pub fn inverse(&self) -> Self {
        TameWord {
            arity: self.arity,
            z_index: self.z_index,
            gens: self.gens.iter().rev().map(FreeGen::inverse).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn triangular_generator_evaluates_and_cancels() {
        let ctx = VarContext::xy();
        let y2 = CommPoly::<Rational>::var(&ctx, 1).pow(2);
        let word = TameWord::new(
            2,
            None,
            vec![CommGen::Triangular {
                var: 0,
                scale: rat(1, 1),
                offset: y2.clone(),
            }],
        );
        let phi = word.eval(&ctx);
        let x = CommPoly::var(&ctx, 0);
        assert_eq!(phi.image(0), &(&x + &y2));
        let both = TameWord::new(
            2,
            None,
            word.gens
                .iter()
                .cloned()
                .chain(word.inverse().gens)
                .collect(),
        );
        assert!(both.eval(&ctx).is_identity());
    }

    #[test]
    fn random_comm_word_times_inverse_is_identity() {
        let ctx = VarContext::xy();
        let y = CommPoly::<Rational>::var(&ctx, 1);
        let x = CommPoly::<Rational>::var(&ctx, 0);
        let gens = vec![
            CommGen::Affine {
                matrix: vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(1, 1)]],
                translation: vec![rat(0, 1), rat(-3, 1)],
            },
            CommGen::Triangular {
                var: 0,
                scale: rat(1, 2),
                offset: &y.pow(3) - &y,
            },
            CommGen::tau(&ctx, 0, 1),
            CommGen::Triangular {
                var: 1,
                scale: rat(-1, 1),
                offset: x.pow(2),
            },
        ];
        let word = TameWord::new(2, None, gens);
        let phi = word.eval(&ctx);
        let inv = word.inverse().eval(&ctx);
        assert!(endo_compose(&phi, &inv).is_identity());
        assert!(endo_compose(&inv, &phi).is_identity());
    }

    #[test]
    fn epsilon_generators_cancel_in_the_free_algebra() {
        let ctx = VarContext::xyz();
        let word = TameWord::new(
            3,
            Some(2),
            vec![
                FreeGen::EpsilonZ {
                    target: 0,
                    source: 1,
                    coeff: rat(3, 1),
                    left: 1,
                    right: 2,
                },
                FreeGen::Triangular {
                    var: 1,
                    scale: rat(1, 1),
                    offset: FreePoly::var(&ctx, 2).pow(2),
                },
            ],
        );
        let phi = word.eval(&ctx);
        assert!(phi.fixes(2));
        let inv = word.inverse().eval(&ctx);
        assert!(free_endo_compose(&phi, &inv).is_identity());
    }

    #[test]
    fn free_affine_with_z_coefficients_inverts() {
        let ctx = VarContext::xyz();
        let z2 = ZPoly::monomial(rat(1, 1), 2);
        // theta = (x + (x-y) z^2-ish with left coefficients): matrix
        // [[1+z^2, -z^2],[z^2, 1-z^2]], det 1.
        let g = FreeGen::Affine {
            matrix: [
                [ZPoly::one() + z2.clone(), -z2.clone()],
                [z2.clone(), ZPoly::one() + (-z2.clone())],
            ],
            translation: [ZPoly::zero(), ZPoly::monomial(rat(5, 1), 1)],
        };
        let word = TameWord::new(3, Some(2), vec![g]);
        let phi = word.eval(&ctx);
        let inv = word.inverse().eval(&ctx);
        assert!(free_endo_compose(&phi, &inv).is_identity());
        assert!(free_endo_compose(&inv, &phi).is_identity());
    }
}
