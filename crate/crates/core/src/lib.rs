//! Exact-arithmetic engine for finite-dimensional algebra representation
//! theory: Auslander-Reiten knitting, morphism categories, and line coverings
//! of self-injective Nakayama algebras.
//!
//! Everything is computed over the rationals with no floating point anywhere.
//! The layers, bottom to top:
//!
//! * [`exactla`]: exact scalars and dense linear algebra (rref, kernels,
//!   solving, cokernels) with deterministic pivoting.
//! * [`fdalg`]: finite-dimensional algebras presented by structure constants
//!   or by bound quivers, radicals, quotients, triangular and opposite
//!   algebras.
//! * [`fdmod`]: finite-dimensional modules, Hom-spaces, decompositions,
//!   projective covers, the AR translate, Ext groups and almost split
//!   sequences.
//! * [`knit`]: mesh-by-mesh enumeration of the AR quiver with explicit
//!   bounds, plus DOT export.
//! * [`morphcat`]: (mono)morphism categories over an algebra, the cokernel
//!   functors into modules over the (stable) Auslander algebra, and the
//!   lifted almost split sequences.
//! * [`covering`]: the infinite-line cover of a cyclic Nakayama algebra on a
//!   finite window, push-down functors and covering-theory verifications.

pub mod covering;
pub mod exactla;
pub mod fdalg;
pub mod fdmod;
pub mod knit;
pub mod morphcat;

pub use exactla::{Mat, Scalar};
pub use fdalg::{Algebra, AlgebraError, QuiverPresentation};
pub use fdmod::{ModMap, Module, Ses};
pub use knit::{KnitBounds, TranslationQuiver, Verdict};
