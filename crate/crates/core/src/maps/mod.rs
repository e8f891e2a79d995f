//! Endomorphisms, tame generator words, triangular derivations and the
//! verdict/certificate vocabulary shared by the decision procedures.

mod derivation;
mod endo;
mod relations;
mod verdict;
mod word;

pub use derivation::{extend_poly, freudenburg_derivation, smith_identity_check, Derivation, ExpError};
pub use endo::{endo_compose, free_endo_compose, jacobian_comm, matrix_det, CommEndo, FreeEndo};
pub use relations::{
    relation_conjugation_holds, relation_merge_holds, relation_transposition_holds, sigma,
    sigma_endo, tau_endo, RelationReport,
};
pub use verdict::{Certificate, Verdict, VerdictTag};
pub use word::{invert_matrix, CommGen, FreeGen, TameWord};
