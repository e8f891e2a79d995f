//! Decision procedures for the free associative algebras `K<x,y>` and
//! `K<x,y,z>` with `z` fixed: the commutator test, rank-2 recognition via
//! abelianization, the z-Jacobian criterion for linear z-automorphisms,
//! bidegree peak reduction for z-tame automorphisms, wildness tests via
//! linear parts and the metabelian quotient, and the named example maps.

mod dicks;
mod examples;
mod linear;
mod metabelian;
mod rank2;
mod ztame3;

pub use dicks::dicks_test;
pub use examples::{
    anick, extended_anick, mennicke_factorization, omega_m, psi_w, sigma_h, th_context,
};
pub use linear::{
    linear_z_tame_test, wild_via_linear_part, z_jacobian, z_linear_data, LinearInputError,
    ZLinearData,
};
pub use metabelian::{
    eta, j2_matrix, jm_matrix, metabelian_aut_test, metabelian_wild, metabelian_wild_test,
    MetabelianPreconditionError,
};
pub use rank2::{lift_comm_word, recognize_aut_free2, recognize_coord_free2};
pub use ztame3::recognize_z_tame_aut3;
