//! Almost split sequences in the morphism category and in the
//! monomorphism category, built from almost split sequences over the base
//! algebra, the Auslander algebra, or its stable quotient.
//!
//! The trivial families have closed displays driven by an almost split
//! sequence `0 -> A -> B -> C -> 0` over the base algebra. The proper
//! families are reconstructed from an almost split sequence over the
//! Auslander algebra (for the morphism category) or over its stable
//! quotient (for the monomorphism category) via projective presentations
//! by Hom functors, gluing the end object back on with a solved component.

use crate::exactla::{Mat, Scalar};
use crate::fdalg::{same_algebra, t2_algebra};
use crate::fdmod::{
    almost_split_ending_at, direct_sum, hom_space, injective_envelope, is_almost_split_quick,
    presentation, FreeModule, ModMap, Module, Ses,
};

use super::auslander::{
    descend_module, inflate_map, inflate_module, yoneda_map, yoneda_module, AuslanderData, Yoneda,
};
use super::object::{
    classify, combo_coords, combo_map, solve_factor_left, solve_factor_right, Classification,
    MorphMap, MorphObject, MorphSes,
};
use super::MorphError;

fn check_almost_split_input(ars: &Ses, seed: u64) -> Result<(), MorphError> {
    match is_almost_split_quick(ars, seed) {
        Ok(true) => Ok(()),
        Ok(false) => Err(MorphError::NotAlmostSplit),
        Err(e) => Err(e.into()),
    }
}

/// Read a map of morphism objects back off a map of triangular-matrix
/// modules whose layers match the given source and target objects.
pub(crate) fn morph_map_from_t2(src: &MorphObject, dst: &MorphObject, f: &ModMap) -> MorphMap {
    let r = src.algebra().num_idempotents();
    let on_a = ModMap::new(
        src.a().clone(),
        dst.a().clone(),
        (0..r).map(|p| f.block(p).clone()).collect(),
    )
    .expect("upper layer intertwines");
    let on_b = ModMap::new(
        src.b().clone(),
        dst.b().clone(),
        (0..r).map(|p| f.block(r + p).clone()).collect(),
    )
    .expect("lower layer intertwines");
    MorphMap::new(src.clone(), dst.clone(), on_a, on_b)
}

/// Direct sum of the listed indecomposables with its inclusions and
/// projections; the empty sum is the zero module.
fn sum_of_inds(data: &AuslanderData, gens: &[usize]) -> (Module, Vec<ModMap>, Vec<ModMap>) {
    if gens.is_empty() {
        return (Module::zero(data.base.clone()), Vec::new(), Vec::new());
    }
    let mods: Vec<Module> = gens.iter().map(|&g| data.inds[g].clone()).collect();
    direct_sum(&mods)
}

/// Realize a dense algebra element of grade `(src, dst)` as the matching
/// map of indecomposables.
fn realize_elem(data: &AuslanderData, src: usize, dst: usize, elem: &[Scalar]) -> ModMap {
    let mut out = ModMap::zero(data.inds[src].clone(), data.inds[dst].clone());
    for (b, c) in elem.iter().enumerate() {
        if !c.is_zero() {
            debug_assert_eq!(data.algebra.grade(b), (src, dst));
            out = out.add(&data.basis_maps[b].scale(c));
        }
    }
    out
}

/// Realize a generator-level relation matrix as a map of sums of
/// indecomposables: `rel[l][k]` is an algebra element of grade
/// `(srcs[l], dsts[k])` sending source summand `l` into target summand `k`.
fn element_map(
    data: &AuslanderData,
    srcs: &[usize],
    dsts: &[usize],
    rel: &[Vec<Vec<Scalar>>],
    src: (&Module, &[ModMap]),
    dst: (&Module, &[ModMap]),
) -> ModMap {
    let (src_mod, src_projs) = src;
    let (dst_mod, dst_incls) = dst;
    let mut out = ModMap::zero(src_mod.clone(), dst_mod.clone());
    for (l, row) in rel.iter().enumerate() {
        for (k, elem) in row.iter().enumerate() {
            if elem.iter().all(|c| c.is_zero()) {
                continue;
            }
            let h = realize_elem(data, srcs[l], dsts[k], elem);
            out = out.add(&dst_incls[k].compose(&h).compose(&src_projs[l]));
        }
    }
    out
}

/// The map of Hom-functor modules `Y(src) -> F` induced by a map from
/// `src` into the sum of `free`'s generators, given through its components
/// into each summand. `F` is a free module over the Auslander algebra, so
/// its coordinates per summand are exactly the chosen Hom bases.
fn yoneda_into_free(
    data: &AuslanderData,
    ysrc: &Yoneda,
    free: &FreeModule,
    comps: &[ModMap],
) -> ModMap {
    let n = data.inds.len();
    let mut blocks = Vec::with_capacity(n);
    for i in 0..n {
        let mut block = Mat::zeros(free.module.dim_at(i), ysrc.module.dim_at(i));
        for (c, xi) in ysrc.basis(i).iter().enumerate() {
            for (k, comp) in comps.iter().enumerate() {
                let g = free.gens[k];
                let coords = data.spaces[i][g]
                    .coords(&comp.compose(xi))
                    .expect("composites stay inside the Hom space");
                let off = free.summand_offset(k, i);
                for (r, v) in coords.iter().enumerate() {
                    if !v.is_zero() {
                        block.set(off + r, c, v.clone());
                    }
                }
            }
        }
        blocks.push(block);
    }
    ModMap::new(ysrc.module.clone(), free.module.clone(), blocks)
        .expect("induced maps of Hom functors intertwine")
}

/// Solve for `u: src_lam -> dst_lam` with `post ∘ Y(u) = target`, where
/// `dst_lam` is a sum of indecomposables with the given projections and
/// `Y(u)` maps into the free module on those summands.
#[allow(clippy::too_many_arguments)]
fn solve_through_yoneda(
    data: &AuslanderData,
    ysrc: &Yoneda,
    free: &FreeModule,
    dst_projs: &[ModMap],
    post: &ModMap,
    src_lam: &Module,
    dst_lam: &Module,
    target: &ModMap,
) -> Option<ModMap> {
    let basis = hom_space(src_lam, dst_lam);
    if basis.is_empty() {
        return target
            .is_zero()
            .then(|| ModMap::zero(src_lam.clone(), dst_lam.clone()));
    }
    let images: Vec<ModMap> = basis
        .iter()
        .map(|u| {
            let comps: Vec<ModMap> = dst_projs.iter().map(|p| p.compose(u)).collect();
            post.compose(&yoneda_into_free(data, ysrc, free, &comps))
        })
        .collect();
    let coords = combo_coords(&images, target)?;
    Some(combo_map(src_lam, dst_lam, &basis, &coords))
}

/// The almost split sequence in the monomorphism category ending at one of
/// the trivial families, driven by the almost split sequence
/// `0 -> A -f-> B -g-> C -> 0` over the base algebra:
///
/// 1. ending at `(0 -> C)`, with left term `(A -1-> A)`;
/// 2. ending at `(C -1-> C)`, with left term `(A ↪ I(A))`;
/// 3. ending at `(ΩC ↪ P(C))`, with left term `(0 -> A)`.
pub fn ar_seq_trivial_s(case: usize, ars: &Ses, seed: u64) -> Result<MorphSes, MorphError> {
    assert!((1..=3).contains(&case), "trivial cases are numbered 1 to 3");
    check_almost_split_input(ars, seed)?;
    let (a, c) = (ars.left(), ars.right());
    let f = &ars.sub;
    let g = &ars.epi;
    match case {
        1 => {
            let l = MorphObject::identity_on(a);
            let m = MorphObject::new(f.clone());
            let r = MorphObject::zero_to(c);
            let on_a = ModMap::zero(a.clone(), r.a().clone());
            let sub = MorphMap::new(l, m.clone(), ModMap::identity(a), f.clone());
            let epi = MorphMap::new(m, r, on_a, g.clone());
            Ok(MorphSes { sub, epi })
        }
        2 => {
            let (i_mod, e) = injective_envelope(a);
            let eprime = solve_factor_right(f, &e)
                .expect("envelopes extend along monomorphisms");
            let (_, ic_incls, ic_projs) = direct_sum(&[i_mod, c.clone()]);
            let h = ic_incls[0]
                .compose(&eprime)
                .add(&ic_incls[1].compose(g));
            let l = MorphObject::new(e);
            let m = MorphObject::new(h);
            let r = MorphObject::identity_on(c);
            let sub = MorphMap::new(l, m.clone(), f.clone(), ic_incls[0].clone());
            let epi = MorphMap::new(m, r, g.clone(), ic_projs[1].clone());
            Ok(MorphSes { sub, epi })
        }
        _ => {
            let pres = presentation(c);
            let iota = &pres.syzygy_incl;
            let bprime = solve_factor_left(g, &pres.cover)
                .expect("covers lift along epimorphisms");
            let a_comp = solve_factor_left(f, &bprime.compose(iota).neg())
                .expect("the syzygy lands in the kernel");
            let (_, ap_incls, ap_projs) = direct_sum(&[a.clone(), pres.p0.clone()]);
            let h = ap_incls[0]
                .compose(&a_comp)
                .add(&ap_incls[1].compose(iota));
            let l = MorphObject::zero_to(a);
            let m = MorphObject::new(h);
            let r = MorphObject::new(iota.clone());
            let on_a = ModMap::zero(l.a().clone(), m.a().clone());
            let sub = MorphMap::new(l, m.clone(), on_a, ap_incls[0].clone());
            let epi = MorphMap::new(m, r, ModMap::identity(&pres.syzygy), ap_projs[1].clone());
            Ok(MorphSes { sub, epi })
        }
    }
}

/// The almost split sequence in the full morphism category ending at one
/// of the trivial families, driven by the almost split sequence
/// `0 -> A -f-> B -g-> C -> 0` over the base algebra:
///
/// 1. ending at `(0 -> C)` (shared with the monomorphism category);
/// 2. ending at `(C -1-> C)`, with left term `(A -> 0)`;
/// 3. ending at `(C -> 0)`, computed over the triangular matrix algebra.
///
/// On case 3: applying the cokernel functor to the second monomorphism
/// display gives a sequence that is exact and non-split but almost split
/// only relative to the epimorphism objects — maps out of objects with a
/// non-surjective structure map need not factor through its middle term.
/// The genuine sequence ending at `(C -> 0)` has left term the Nakayama
/// functor applied to the minimal presentation of `C` (checked against
/// the brute-force oracle; see the tests), so it is produced by the
/// generic machinery instead of a closed display.
pub fn ar_seq_trivial_h(case: usize, ars: &Ses, seed: u64) -> Result<MorphSes, MorphError> {
    assert!((1..=3).contains(&case), "trivial cases are numbered 1 to 3");
    match case {
        1 => ar_seq_trivial_s(1, ars, seed),
        2 => {
            check_almost_split_input(ars, seed)?;
            let (a, c) = (ars.left(), ars.right());
            let l = MorphObject::to_zero(a);
            let m = MorphObject::new(ars.epi.clone());
            let r = MorphObject::identity_on(c);
            let on_b = ModMap::zero(l.b().clone(), m.b().clone());
            let sub = MorphMap::new(l, m.clone(), ars.sub.clone(), on_b);
            let epi = MorphMap::new(m, r, ars.epi.clone(), ModMap::identity(c));
            Ok(MorphSes { sub, epi })
        }
        _ => {
            check_almost_split_input(ars, seed)?;
            let c = ars.right();
            let t2 = t2_algebra(c.algebra());
            let x = MorphObject::to_zero(c);
            let asp = almost_split_ending_at(&x.as_t2_module(&t2), &[], seed)?;
            let l = MorphObject::from_t2_module(c.algebra(), asp.ses.left());
            let m = MorphObject::from_t2_module(c.algebra(), asp.ses.middle());
            let sub = morph_map_from_t2(&l, &m, &asp.ses.sub);
            let epi = morph_map_from_t2(&m, &x, &asp.ses.epi);
            Ok(MorphSes { sub, epi })
        }
    }
}

/// The almost split sequence in the full morphism category ending at a
/// proper indecomposable object `x` (anything outside the two families
/// killed by the first functor and the family of Hom-functor projectives).
/// Reconstructed from the almost split sequence over the Auslander algebra
/// ending at the image of `x`.
pub fn ar_seq_proper_h(
    x: &MorphObject,
    data: &AuslanderData,
    seed: u64,
) -> Result<MorphSes, MorphError> {
    if !same_algebra(x.algebra(), &data.base) {
        return Err(MorphError::AuslanderMismatch);
    }
    match classify(x, seed)? {
        Classification::ZeroToC | Classification::CtoZero | Classification::IdentityOnC => {
            return Err(MorphError::NotMorProper)
        }
        Classification::SyzygyIntoCover
        | Classification::MonoProper
        | Classification::MorProper => {}
    }
    let ya = yoneda_module(data, x.a());
    let yb = yoneda_module(data, x.b());
    let yf = yoneda_map(data, &ya, &yb, x.map());
    let (theta_mod, pi_theta) = yf.cokernel();
    let ars = almost_split_ending_at(&theta_mod, &[], seed)?;
    let k_mod = ars.ses.left().clone();
    let pres = presentation(&k_mod);
    // Left object: the presentation of the translate, realized as a map of
    // sums of indecomposables.
    let (c_mod, _, c_projs) = sum_of_inds(data, &pres.rel_gens);
    let (d_mod, d_incls, d_projs) = sum_of_inds(data, &pres.gens);
    let g_map = element_map(
        data,
        &pres.rel_gens,
        &pres.gens,
        &pres.rel,
        (&c_mod, &c_projs),
        (&d_mod, &d_incls),
    );
    // Gluing component: lift the defining projection along the ending
    // epimorphism, then solve against the cover of the translate.
    let psi_b = solve_factor_left(&ars.ses.epi, &pi_theta)
        .expect("Hom-functor modules are projective, so the projection lifts");
    let phi_d = ars.ses.sub.compose(&pres.cover);
    let target = psi_b.compose(&yf).neg();
    let u = solve_through_yoneda(
        data, &ya, &pres.f0, &d_projs, &phi_d, x.a(), &d_mod, &target,
    )
    .expect("the gluing component exists");
    let (_, ms_incls, ms_projs) = direct_sum(&[c_mod.clone(), x.a().clone()]);
    let (_, mt_incls, mt_projs) = direct_sum(&[d_mod.clone(), x.b().clone()]);
    let h = mt_incls[0]
        .compose(&g_map)
        .compose(&ms_projs[0])
        .add(&mt_incls[0].compose(&u).compose(&ms_projs[1]))
        .add(&mt_incls[1].compose(x.map()).compose(&ms_projs[1]));
    let l_obj = MorphObject::new(g_map);
    let m_obj = MorphObject::new(h);
    let sub = MorphMap::new(l_obj, m_obj.clone(), ms_incls[0].clone(), mt_incls[0].clone());
    let epi = MorphMap::new(m_obj, x.clone(), ms_projs[1].clone(), mt_projs[1].clone());
    Ok(MorphSes { sub, epi })
}

/// The almost split sequence in the monomorphism category ending at a
/// proper monomorphism `x` (a monomorphism that is not an inclusion family
/// member and not a syzygy-into-cover). Reconstructed from the almost
/// split sequence over the stable quotient ending at the image of `x`,
/// using that the Auslander algebra has global dimension at most two.
pub fn ar_seq_proper_s(
    x: &MorphObject,
    data: &AuslanderData,
    seed: u64,
) -> Result<MorphSes, MorphError> {
    if !same_algebra(x.algebra(), &data.base) {
        return Err(MorphError::AuslanderMismatch);
    }
    if !x.is_mono() {
        return Err(MorphError::NotMono);
    }
    match classify(x, seed)? {
        Classification::ZeroToC
        | Classification::IdentityOnC
        | Classification::SyzygyIntoCover => return Err(MorphError::NotMonoProper),
        Classification::MonoProper => {}
        Classification::CtoZero | Classification::MorProper => {
            unreachable!("monomorphisms classify as monomorphism shapes")
        }
    }
    let q = data.gamma.as_ref().ok_or(MorphError::GammaZero)?;
    // The image of x over the stable quotient, with its defining data kept.
    let (cok, pi) = x.cokernel();
    let yb = yoneda_module(data, x.b());
    let yc = yoneda_module(data, &cok);
    let ypi = yoneda_map(data, &yb, &yc, &pi);
    let (psi_full, eps) = ypi.cokernel();
    let psi_bar = descend_module(data, q, &psi_full);
    let ars = almost_split_ending_at(&psi_bar, &[], seed)?;
    // Inflate the sequence back; the inflated end term is coordinate-equal
    // to the cokernel it descended from.
    let v_mod = inflate_module(data, q, ars.ses.left());
    let w_mod = inflate_module(data, q, ars.ses.middle());
    let end_mod = inflate_module(data, q, ars.ses.right());
    let kappa = inflate_map(q, &ars.ses.sub, &v_mod, &w_mod);
    let rho = inflate_map(q, &ars.ses.epi, &w_mod, &end_mod);
    let psi_cok = solve_factor_left(&rho, &eps)
        .expect("Hom-functor modules are projective, so the projection lifts");
    // Present the inflated left term; its second syzygy is projective, so
    // the two-step presentation realizes the left object.
    let pres_v = presentation(&v_mod);
    let (z_mod, _, z_projs) = sum_of_inds(data, &pres_v.gens);
    let (y_mod, y_incls, y_projs) = sum_of_inds(data, &pres_v.rel_gens);
    let pres_o = presentation(&pres_v.syzygy);
    assert_eq!(pres_o.gens, pres_v.rel_gens, "minimal covers agree");
    assert!(
        pres_o.p1_to_p0.is_injective_map(),
        "second syzygies are projective over the Auslander algebra"
    );
    let (xx_mod, _, xx_projs) = sum_of_inds(data, &pres_o.rel_gens);
    let q_map = element_map(
        data,
        &pres_o.rel_gens,
        &pres_o.gens,
        &pres_o.rel,
        (&xx_mod, &xx_projs),
        (&y_mod, &y_incls),
    );
    assert!(
        q_map.is_injective_map(),
        "the reconstructed left object is a monomorphism"
    );
    // First gluing component, against the cover of the inflated left term.
    let phi_z = kappa.compose(&pres_v.cover);
    let target_v = psi_cok.compose(&ypi).neg();
    let v = solve_through_yoneda(
        data, &yb, &pres_v.f0, &z_projs, &phi_z, x.b(), &z_mod, &target_v,
    )
    .expect("the first gluing component exists");
    // Second gluing component, against the presentation map.
    let ya = yoneda_module(data, x.a());
    let vf = v.compose(x.map());
    let comps: Vec<ModMap> = z_projs.iter().map(|p| p.compose(&vf)).collect();
    let target_u = yoneda_into_free(data, &ya, &pres_v.f0, &comps).neg();
    let u = solve_through_yoneda(
        data,
        &ya,
        &pres_v.f1,
        &y_projs,
        &pres_v.p1_to_p0,
        x.a(),
        &y_mod,
        &target_u,
    )
    .expect("the second gluing component exists");
    let (_, ms_incls, ms_projs) = direct_sum(&[xx_mod.clone(), x.a().clone()]);
    let (_, mt_incls, mt_projs) = direct_sum(&[y_mod.clone(), x.b().clone()]);
    let h = mt_incls[0]
        .compose(&q_map)
        .compose(&ms_projs[0])
        .add(&mt_incls[0].compose(&u).compose(&ms_projs[1]))
        .add(&mt_incls[1].compose(x.map()).compose(&ms_projs[1]));
    assert!(h.is_injective_map(), "the middle object is a monomorphism");
    let l_obj = MorphObject::new(q_map);
    let m_obj = MorphObject::new(h);
    let sub = MorphMap::new(l_obj, m_obj.clone(), ms_incls[0].clone(), mt_incls[0].clone());
    let epi = MorphMap::new(m_obj, x.clone(), ms_projs[1].clone(), mt_projs[1].clone());
    Ok(MorphSes { sub, epi })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fdalg::{nakayama, t2_algebra, Algebra};
    use crate::fdmod::{is_almost_split, projective_cover};
    use crate::knit::{enumerate_with, KnitBounds, Verdict};
    use crate::morphcat::object::cok_ses;
    use crate::morphcat::auslander_data_from_list;

    const SEED: u64 = 0xA12;

    fn knitted(alg: &Arc<Algebra>) -> Vec<Module> {
        match enumerate_with(alg, &KnitBounds::default()).unwrap() {
            Verdict::Finite { modules, .. } => modules,
            Verdict::ExceededBound { .. } => panic!("expected a finite enumeration"),
        }
    }

    fn mono_sublist(lam: &Arc<Algebra>, all: &[Module]) -> Vec<Module> {
        all.iter()
            .filter(|m| MorphObject::from_t2_module(lam, m).is_mono())
            .cloned()
            .collect()
    }

    fn lam_ar(c: &Module) -> Ses {
        almost_split_ending_at(c, &[], SEED).unwrap().ses
    }

    #[test]
    fn trivial_sequences_over_the_dual_numbers() {
        let lam = nakayama(1, 2);
        let t2 = t2_algebra(&lam);
        let all = knitted(&t2);
        let monos = mono_sublist(&lam, &all);
        assert_eq!(monos.len(), 5);
        let s = Module::simple(lam.clone(), 0);
        let ars = lam_ar(&s);
        for case in 1..=3 {
            let ses = ar_seq_trivial_s(case, &ars, SEED).unwrap();
            assert_eq!(
                is_almost_split(&ses.to_t2(&t2), &monos, SEED),
                Ok(true),
                "monomorphism case {case}"
            );
        }
        for case in 1..=3 {
            let ses = ar_seq_trivial_h(case, &ars, SEED).unwrap();
            assert_eq!(
                is_almost_split(&ses.to_t2(&t2), &all, SEED),
                Ok(true),
                "morphism case {case}"
            );
        }
    }

    #[test]
    fn trivial_sequences_over_the_truncated_cubic() {
        let lam = nakayama(1, 3);
        let t2 = t2_algebra(&lam);
        let all = knitted(&t2);
        let monos = mono_sublist(&lam, &all);
        assert_eq!(monos.len(), 10);
        let m2 = knitted(&lam)
            .into_iter()
            .find(|m| m.total_dim() == 2)
            .unwrap();
        let ars = lam_ar(&m2);
        for case in 1..=3 {
            let ses = ar_seq_trivial_s(case, &ars, SEED).unwrap();
            assert_eq!(
                is_almost_split(&ses.to_t2(&t2), &monos, SEED),
                Ok(true),
                "monomorphism case {case}"
            );
        }
        for case in 1..=3 {
            let ses = ar_seq_trivial_h(case, &ars, SEED).unwrap();
            assert_eq!(
                is_almost_split(&ses.to_t2(&t2), &all, SEED),
                Ok(true),
                "morphism case {case}"
            );
        }
    }

    /// Frozen counterexample: applying the cokernel functor to the
    /// monomorphism display ending at `(C -1-> C)` gives an exact,
    /// non-split sequence ending at `(C -> 0)` that is almost split
    /// relative to the epimorphism objects but not in the full morphism
    /// category — over the dual numbers its left term is `(Λ ->> k)` of
    /// total dimension 3, while the genuine sequence produced by
    /// `ar_seq_trivial_h` has left term `(Λ -x-> Λ)` of dimension 4.
    #[test]
    fn cokernel_of_the_second_display_is_almost_split_only_among_epimorphisms() {
        let lam = nakayama(1, 2);
        let t2 = t2_algebra(&lam);
        let all = knitted(&t2);
        let s = Module::simple(lam.clone(), 0);
        let ars = lam_ar(&s);
        let cok = cok_ses(&ar_seq_trivial_s(2, &ars, SEED).unwrap());
        let cand = cok.to_t2(&t2);
        assert!(cand.verify_exact());
        assert!(!cand.is_split());
        let epis: Vec<Module> = all
            .iter()
            .filter(|m| {
                MorphObject::from_t2_module(&lam, m)
                    .map()
                    .is_surjective_map()
            })
            .cloned()
            .collect();
        assert_eq!(epis.len(), 5);
        assert_eq!(is_almost_split(&cand, &epis, SEED), Ok(true));
        assert_eq!(is_almost_split(&cand, &all, SEED), Ok(false));
        assert_eq!(cok.left().total_dim(), 3);
        let genuine = ar_seq_trivial_h(3, &ars, SEED).unwrap();
        assert_eq!(genuine.left().total_dim(), 4);
    }

    #[test]
    fn rejects_inputs_that_are_not_almost_split() {
        let lam = nakayama(1, 2);
        let s = Module::simple(lam.clone(), 0);
        let (_, incls, projs) = direct_sum(&[s.clone(), s.clone()]);
        let split = Ses {
            sub: incls[0].clone(),
            epi: projs[1].clone(),
        };
        assert!(matches!(
            ar_seq_trivial_s(1, &split, SEED),
            Err(MorphError::NotAlmostSplit)
        ));
        assert!(matches!(
            ar_seq_trivial_h(2, &split, SEED),
            Err(MorphError::NotAlmostSplit)
        ));
    }

    #[test]
    fn proper_morphism_sequences_over_the_dual_numbers() {
        let lam = nakayama(1, 2);
        let data = auslander_data_from_list(&knitted(&lam));
        let t2 = t2_algebra(&lam);
        let all = knitted(&t2);
        let s = Module::simple(lam.clone(), 0);
        // A syzygy inclusion and a proper non-monomorphism.
        let objects = vec![
            MorphObject::syzygy_into_cover(&s),
            MorphObject::new(projective_cover(&s).1),
        ];
        for x in &objects {
            let ses = ar_seq_proper_h(x, &data, SEED).unwrap();
            assert_eq!(is_almost_split(&ses.to_t2(&t2), &all, SEED), Ok(true));
        }
    }

    #[test]
    fn proper_morphism_sequences_over_the_truncated_cubic() {
        let lam = nakayama(1, 3);
        let data = auslander_data_from_list(&knitted(&lam));
        let t2 = t2_algebra(&lam);
        let all = knitted(&t2);
        let m2 = data
            .inds
            .iter()
            .find(|m| m.total_dim() == 2)
            .unwrap()
            .clone();
        let x = MorphObject::new(projective_cover(&m2).1);
        let ses = ar_seq_proper_h(&x, &data, SEED).unwrap();
        assert_eq!(is_almost_split(&ses.to_t2(&t2), &all, SEED), Ok(true));
    }

    #[test]
    fn proper_monomorphism_sequences_over_the_truncated_cubic() {
        let lam = nakayama(1, 3);
        let data = auslander_data_from_list(&knitted(&lam));
        let t2 = t2_algebra(&lam);
        let all = knitted(&t2);
        let monos = mono_sublist(&lam, &all);
        assert_eq!(monos.len(), 10);
        let m2 = data
            .inds
            .iter()
            .find(|m| m.total_dim() == 2)
            .unwrap()
            .clone();
        let s = Module::simple(lam.clone(), 0);
        let socle = hom_space(&s, &m2);
        assert_eq!(socle.len(), 1);
        let x = MorphObject::new(socle[0].clone());
        assert_eq!(classify(&x, SEED), Ok(Classification::MonoProper));
        let ses = ar_seq_proper_s(&x, &data, SEED).unwrap();
        assert_eq!(is_almost_split(&ses.to_t2(&t2), &monos, SEED), Ok(true));
    }

    #[test]
    fn proper_constructions_reject_trivial_shapes() {
        let lam = nakayama(1, 3);
        let data = auslander_data_from_list(&knitted(&lam));
        let s = Module::simple(lam.clone(), 0);
        let m2 = data
            .inds
            .iter()
            .find(|m| m.total_dim() == 2)
            .unwrap()
            .clone();
        assert!(matches!(
            ar_seq_proper_h(&MorphObject::identity_on(&m2), &data, SEED),
            Err(MorphError::NotMorProper)
        ));
        assert!(matches!(
            ar_seq_proper_s(&MorphObject::syzygy_into_cover(&s), &data, SEED),
            Err(MorphError::NotMonoProper)
        ));
        assert!(matches!(
            ar_seq_proper_s(&MorphObject::new(projective_cover(&s).1), &data, SEED),
            Err(MorphError::NotMono)
        ));
        assert!(matches!(
            ar_seq_proper_s(&MorphObject::zero_to(&m2), &data, SEED),
            Err(MorphError::NotMonoProper)
        ));
    }
}
