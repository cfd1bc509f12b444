//! Projective covers, minimal presentations, syzygies, the transpose, and
//! the Auslander-Reiten translates.
//!
//! A minimal presentation `P1 -> P0 -> M -> 0` is stored with its element
//! matrix: the map `P1 -> P0` between free modules is determined by one
//! algebra element per (relation generator, top generator) pair, acting by
//! right multiplication. That element form is what homomorphism spaces, the
//! transpose, and the functor constructions all consume.

use crate::exactla::{Mat, Scalar};
use crate::fdalg::{opposite_algebra, Algebra};
use std::sync::Arc;

use super::module::{dual_map, dual_module, ModMap, Module};

/// A free module `⊕_k A e_{g_k}` with bookkeeping for its generators.
pub struct FreeModule {
    pub gens: Vec<usize>,
    pub module: Module,
    /// `offsets[k][p]`: first coordinate of summand `k` inside component `p`.
    offsets: Vec<Vec<usize>>,
}

impl FreeModule {
    pub fn new(algebra: Arc<Algebra>, gens: Vec<usize>) -> FreeModule {
        let r = algebra.num_idempotents();
        let mut offsets = Vec::with_capacity(gens.len());
        let mut acc = vec![0usize; r];
        for &g in &gens {
            offsets.push(acc.clone());
            for (p, a) in acc.iter_mut().enumerate() {
                *a += algebra.basis_by_grade(p, g).len();
            }
        }
        let module = if gens.is_empty() {
            Module::zero(algebra)
        } else {
            let parts: Vec<Module> = gens
                .iter()
                .map(|&g| Module::projective(algebra.clone(), g))
                .collect();
            super::module::direct_sum(&parts).0
        };
        FreeModule {
            gens,
            module,
            offsets,
        }
    }

    /// First coordinate of summand `k` inside component `p`.
    pub fn summand_offset(&self, k: usize, p: usize) -> usize {
        self.offsets[k][p]
    }

    /// Coordinate of the generator `e_{g_k}` inside component `g_k`.
    pub fn gen_coord(&self, k: usize) -> usize {
        let a = self.module.algebra();
        let g = self.gens[k];
        self.offsets[k][g] + Module::projective_generator_coord(a, g)
    }

    /// The module map determined by sending generator `k` to the given
    /// element of `target` at component `gens[k]` (coordinates in that
    /// component).
    pub fn map_to(&self, target: &Module, images: &[Vec<Scalar>]) -> ModMap {
        assert_eq!(images.len(), self.gens.len());
        let a = self.module.algebra().clone();
        let r = a.num_idempotents();
        let mut blocks = Vec::with_capacity(r);
        for p in 0..r {
            let mut blk = Mat::zeros(target.dim_at(p), self.module.dim_at(p));
            for (k, &g) in self.gens.iter().enumerate() {
                for (c, &b) in a.basis_by_grade(p, g).iter().enumerate() {
                    // basis element (k, b) maps to b . images[k]
                    let col = self.offsets[k][p] + c;
                    let act = target.action_of(b);
                    for i in 0..target.dim_at(p) {
                        let mut v = Scalar::zero();
                        for (j, x) in images[k].iter().enumerate() {
                            if !x.is_zero() {
                                v = &v + &(act.at(i, j) * x);
                            }
                        }
                        blk.set(i, col, v);
                    }
                }
            }
            blocks.push(blk);
        }
        ModMap::new_unchecked(self.module.clone(), target.clone(), blocks)
    }

    /// Read a map out of this free module back as one algebra element per
    /// generator and target summand of another free module: the result
    /// `rel[l][k]` is a dense element of `e_{self.gens[l]} A e_{other.gens[k]}`
    /// with `f(gen_l) = Σ_k rel[l][k]` placed in summand `k`.
    pub fn element_matrix(&self, other: &FreeModule, f: &ModMap) -> Vec<Vec<Vec<Scalar>>> {
        let a = self.module.algebra();
        let mut rel = Vec::with_capacity(self.gens.len());
        for (l, &s) in self.gens.iter().enumerate() {
            let col = self.gen_coord(l);
            let block = f.block(s);
            let mut row = Vec::with_capacity(other.gens.len());
            for (k, &t) in other.gens.iter().enumerate() {
                let mut elem = vec![Scalar::zero(); a.dim()];
                for (c, &b) in a.basis_by_grade(s, t).iter().enumerate() {
                    elem[b] = block.at(other.offsets[k][s] + c, col).clone();
                }
                row.push(elem);
            }
            rel.push(row);
        }
        rel
    }
}

/// Minimal presentation data for a module.
pub struct Presentation {
    /// Idempotent positions of the projective cover generators.
    pub gens: Vec<usize>,
    pub p0: Module,
    /// The cover `P0 -> M` (surjective, kernel inside rad P0).
    pub cover: ModMap,
    pub syzygy: Module,
    pub syzygy_incl: ModMap,
    /// Idempotent positions of the relation generators.
    pub rel_gens: Vec<usize>,
    /// `rel[l][k]`: element of `e_{s_l} A e_{t_k}` giving `P1 -> P0`.
    pub rel: Vec<Vec<Vec<Scalar>>>,
    pub p1: Module,
    pub p1_to_p0: ModMap,
    pub(crate) f0: FreeModule,
    pub(crate) f1: FreeModule,
}

/// Projective cover generators and map, without the syzygy layer: returns
/// the free cover and the epimorphism onto `m`.
fn cover_data(m: &Module) -> (FreeModule, ModMap) {
    let a = m.algebra().clone();
    let r = a.num_idempotents();
    let mut gens = Vec::new();
    let mut images: Vec<Vec<Scalar>> = Vec::new();
    for p in 0..r {
        let rad_p = m.radical_comp(p);
        let cok = rad_p.cokernel_data();
        for j in 0..cok.dim {
            gens.push(p);
            images.push((0..m.dim_at(p)).map(|i| cok.section.at(i, j).clone()).collect());
        }
    }
    let f = FreeModule::new(a, gens);
    let cover = f.map_to(m, &images);
    debug_assert!(cover.is_surjective_map(), "top lifts must generate");
    (f, cover)
}

/// Cached minimal presentation of a module.
pub fn presentation(m: &Module) -> &Presentation {
    m.presentation_cache().get_or_init(|| {
        let (f0, cover) = cover_data(m);
        let (syzygy, syzygy_incl) = cover.kernel();
        let (f1, syz_cover) = cover_data(&syzygy);
        let p1_to_p0 = syzygy_incl.compose(&syz_cover);
        let rel = f1.element_matrix(&f0, &p1_to_p0);
        Presentation {
            gens: f0.gens.clone(),
            p0: f0.module.clone(),
            cover,
            syzygy,
            syzygy_incl,
            rel_gens: f1.gens.clone(),
            rel,
            p1: f1.module.clone(),
            p1_to_p0,
            f0,
            f1,
        }
    })
}

/// Projective cover as a standalone pair (cover module, epimorphism).
pub fn projective_cover(m: &Module) -> (Module, ModMap) {
    let pres = presentation(m);
    (pres.p0.clone(), pres.cover.clone())
}

/// First syzygy (kernel of the projective cover) with its inclusion.
pub fn syzygy(m: &Module) -> (Module, ModMap) {
    let pres = presentation(m);
    (pres.syzygy.clone(), pres.syzygy_incl.clone())
}

pub fn is_projective(m: &Module) -> bool {
    presentation(m).syzygy.is_zero()
}

pub fn is_injective(m: &Module) -> bool {
    is_projective(&dual_module(m))
}

/// Injective envelope with the embedding `M -> I`.
pub fn injective_envelope(m: &Module) -> (Module, ModMap) {
    let d = dual_module(m);
    let (_, cov) = projective_cover(&d);
    let emb = dual_map(&cov);
    // emb: D(D(M)) -> D(P); the source is structurally equal to m.
    (emb.dst().clone(), ModMap::new_unchecked(m.clone(), emb.dst().clone(), (0..m.algebra().num_idempotents()).map(|p| emb.block(p).clone()).collect()))
}

/// Transpose along the minimal presentation: an explicit module over the
/// opposite algebra, with no projective direct summands.
pub fn transpose(m: &Module) -> Module {
    let pres = presentation(m);
    let a = m.algebra().clone();
    let op = opposite_algebra(&a);
    let f0op = FreeModule::new(op.clone(), pres.gens.clone());
    let f1op = FreeModule::new(op.clone(), pres.rel_gens.clone());
    // Dualizing Hom(-, A) turns the element matrix into its transpose, with
    // each entry now acting on the opposite side. The map goes
    // ⊕_k A^op e_{t_k} -> ⊕_l A^op e_{s_l}, generator k to Σ_l rel[l][k].
    if f0op.gens.is_empty() {
        return Module::zero(op);
    }
    let images: Vec<Vec<Scalar>> = (0..f0op.gens.len())
        .map(|k| {
            let t = pres.gens[k];
            let mut img = vec![Scalar::zero(); f1op.module.dim_at(t)];
            for (l, &s) in pres.rel_gens.iter().enumerate() {
                // rel[l][k] has A-grade (s, t), so opposite grade (t, s):
                // it sits in component t of summand l of F1op.
                for (c, &b) in op.basis_by_grade(t, s).iter().enumerate() {
                    img[f1op.offsets[l][t] + c] = pres.rel[l][k][b].clone();
                }
            }
            img
        })
        .collect();
    let d_op = f0op.map_to(&f1op.module, &images);
    d_op.cokernel().0
}

/// Auslander-Reiten translate: dual of the transpose. Zero exactly on
/// projectives (for indecomposable input).
pub fn tau(m: &Module) -> Module {
    dual_module(&transpose(m))
}

/// Inverse translate: transpose of the dual.
pub fn tau_inverse(m: &Module) -> Module {
    transpose(&dual_module(m))
}
