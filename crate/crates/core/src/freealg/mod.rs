//! The free associative algebra `K<x1,...,xn>`: exact noncommutative
//! polynomials, bidegrees, the gap encoding of `z`-homogeneous elements,
//! `z`-derivatives of linear parts, and metabelian (Fox-style) partial
//! derivatives.

mod formanek;
mod metab;
mod poly;
mod word;
mod zderiv;

pub use formanek::{hn_decode, hn_encode, FormanekElement};
pub use metab::{m_derivative, metabelian_context, metabelian_equal, MetabelianView};
pub use poly::FreePoly;
pub use word::FreeMonomial;
pub use zderiv::{z_derivatives, ZLinearParts};
