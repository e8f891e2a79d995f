//! Decision procedures for the commutative algebras `K[x,y]` and
//! `K[z][x,y]`: automorphism recognition with tame decompositions,
//! coordinate recognition with mates, the gradient Euclidean coordinate
//! test, and the z-coordinate / z-tameness tests.

mod coord;
mod recognize;
mod sy;
mod zcoord;

pub use coord::recognize_coord_k2;
pub use recognize::{recognize_aut_k2, recognize_aut_k2_ratfunc, recognize_aut_k2_word, AutOutcome};
pub use sy::{coord_test_sy, coord_test_sy_verdict, z_tame_coord_test, SyOutcome};
pub use zcoord::{recognize_z_tame_aut_comm, z_coord_test};
