//! Sparse exact commutative polynomial arithmetic: term orders, weighted
//! leading forms, Euclidean leading-term reduction, reduced Groebner bases
//! and 2x2 elementary matrix reduction over `K[z1,z2]`.

mod context;
mod groebner;
mod mat2;
mod monomial;
mod order;
mod poly;
mod reduce;

pub use context::VarContext;
pub use groebner::{buchberger_reduced, ideal_is_unit, GroebnerError};
pub use mat2::{ge2_reduce, ElemFactor, Ge2Error, Ge2Outcome, Mat2Poly};
pub use monomial::CommMonomial;
pub use order::TermOrder;
pub use poly::{into_z_polynomial, with_ratfunc_coeffs, CommPoly};
pub use reduce::{divide_exact, leading_term_reduce, normal_form};
