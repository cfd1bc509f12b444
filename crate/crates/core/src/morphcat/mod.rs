//! Morphism and monomorphism categories over a representation-finite
//! base algebra.
//!
//! An object is a map `f: A -> B` of modules over a common base Λ; the
//! whole category is equivalent to modules over the triangular matrix
//! algebra `T₂(Λ)`, and that translation (`as_t2_module`) powers the
//! indecomposability tests and the brute-force almost-split oracle. On top
//! of the objects this module builds the Auslander algebra `A = End(⊕Mᵢ)`
//! of a complete list of indecomposables and its stable quotient `Γ`, the
//! functor `theta` into `mod A` (cokernel of the induced map of Hom
//! functors) and `psi` into `mod Γ` (cokernel of `Hom(-, B) -> Hom(-,
//! Coker f)`), and explicit almost-split-sequence constructions: closed
//! formulas for the trivial shapes, and horseshoe lifts of almost split
//! sequences over `A` resp. `Γ` for the proper ones.

mod arseq;
mod auslander;
mod object;

use thiserror::Error;

use crate::fdmod::ArsError;

pub use arseq::{ar_seq_proper_h, ar_seq_proper_s, ar_seq_trivial_h, ar_seq_trivial_s};
pub(crate) use arseq::morph_map_from_t2;
pub use auslander::{
    auslander_algebra, auslander_data_from_list, find_algebra_iso, ind_counts, psi, theta,
    yoneda_map, yoneda_module, AuslanderData, CountVerdict, Yoneda,
};
pub use object::{
    classify, cok_map, cok_object, cok_ses, Classification, MorphMap, MorphObject, MorphSes,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphError {
    #[error("the object is not indecomposable")]
    NotIndecomposable,
    #[error("the structure map is not injective")]
    NotMono,
    #[error("the object is one of the trivial shapes")]
    NotMorProper,
    #[error("the object is a trivial shape or a syzygy-into-cover inclusion")]
    NotMonoProper,
    #[error("the input sequence is not almost split")]
    NotAlmostSplit,
    #[error("the object lives over a different base than the Auslander data")]
    AuslanderMismatch,
    #[error("auxiliary data is missing: {0}")]
    MissingAuxiliary(&'static str),
    #[error("the module category is not finite within the given bounds")]
    NotFinite,
    #[error("the stable Auslander algebra is zero (the base is semisimple)")]
    GammaZero,
    #[error("undecided: {0}")]
    Undecided(String),
}

impl From<ArsError> for MorphError {
    fn from(e: ArsError) -> Self {
        MorphError::Undecided(e.to_string())
    }
}
