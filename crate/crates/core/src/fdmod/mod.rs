//! Finite-dimensional left modules over the algebras of [`crate::fdalg`],
//! with exact structural linear algebra throughout.
//!
//! A module is stored per idempotent component: `dims[p]` is the dimension
//! of `e_p M`, and each algebra basis element `b` in `e_p A e_q` acts by a
//! single `dims[p] x dims[q]` block. Morphisms are per-component blocks.
//!
//! The layers above this one (almost split sequences, knitting, morphism
//! categories) only consume the public surface here: homomorphism spaces,
//! projective covers and presentations, duality, transpose and the
//! Auslander-Reiten translate, extensions, and certified decompositions.

mod ars;
mod decomp;
mod hom;
mod module;
mod present;

pub use ars::{
    almost_split_ending_at, ext_class_of, is_almost_split, is_almost_split_quick,
    ses_from_class, AlmostSplit, ArsError, Ext1, Ses,
};
pub use decomp::{
    decompose, decompose_with_hints, is_indecomposable, is_isomorphic, iso_between_indecs,
    DirectSumDecomposition, Indecomposability, IsoAnswer,
};
pub(crate) use decomp::end_algebra_data;
pub use hom::{hom_space, hom_space_intertwiner, stable_hom, MapSpace};
pub use module::{
    direct_sum, dual_map, dual_module, same_module, ModError, ModMap, Module,
};
pub use present::{
    injective_envelope, is_injective, is_projective, presentation, projective_cover, syzygy,
    tau, tau_inverse, transpose, FreeModule, Presentation,
};
