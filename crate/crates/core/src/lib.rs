//! Exact computer algebra for automorphism, tameness and coordinate
//! questions over `K[x,y]`, `K[z][x,y]`, `K<x,y>` and `K<x,y,z>` (fixing z).
//!
//! Decision procedures return [`Verdict`]s carrying verifiable
//! certificates: decompositions into elementary generators for tame
//! objects, and concrete obstructions (a stuck Euclidean pair, a bidegree
//! deadlock) for wild ones. All arithmetic is exact over the rationals or
//! over rational functions in `z`; there is no floating point anywhere.

pub mod field;
pub mod rational;
pub mod zpoly;
pub mod ratfunc;

pub mod ring;
pub mod freealg;
pub mod maps;
pub mod decide_comm;
pub mod decide_free;

pub use field::Field;
pub use rational::Rational;
pub use ratfunc::RatFunc;
pub use zpoly::ZPoly;

pub use ring::{
    buchberger_reduced, ideal_is_unit, CommMonomial, CommPoly, ElemFactor, Ge2Outcome, Mat2Poly,
    TermOrder, VarContext,
};

pub use freealg::{FreeMonomial, FreePoly};
pub use maps::{CommEndo, Derivation, FreeEndo, Verdict, VerdictTag};
