//! Objects and maps of the morphism category, their translation to
//! triangular-matrix-algebra modules, and the shape classification.

use std::sync::Arc;

use crate::exactla::{Mat, Scalar};
use crate::fdalg::{t2_corner_index, t2_lower_index, t2_upper_index, t2_algebra, Algebra};
use crate::fdmod::{
    hom_space, is_indecomposable, is_projective, presentation, Indecomposability, ModMap,
    Module, Ses,
};

use super::MorphError;

/// An object of the morphism category: a map `f: A -> B` of modules over a
/// common base algebra.
#[derive(Clone)]
pub struct MorphObject {
    f: ModMap,
    mono: bool,
}

impl MorphObject {
    pub fn new(f: ModMap) -> MorphObject {
        let mono = f.is_injective_map();
        MorphObject { f, mono }
    }

    /// The source module.
    pub fn a(&self) -> &Module {
        self.f.src()
    }

    /// The target module.
    pub fn b(&self) -> &Module {
        self.f.dst()
    }

    pub fn map(&self) -> &ModMap {
        &self.f
    }

    pub fn is_mono(&self) -> bool {
        self.mono
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.f.src().algebra()
    }

    pub fn total_dim(&self) -> usize {
        self.a().total_dim() + self.b().total_dim()
    }

    /// `(0 -> C)`.
    pub fn zero_to(c: &Module) -> MorphObject {
        MorphObject::new(ModMap::zero(Module::zero(c.algebra().clone()), c.clone()))
    }

    /// `(C -> 0)`.
    pub fn to_zero(c: &Module) -> MorphObject {
        MorphObject::new(ModMap::zero(c.clone(), Module::zero(c.algebra().clone())))
    }

    /// `(C -1-> C)`.
    pub fn identity_on(c: &Module) -> MorphObject {
        MorphObject::new(ModMap::identity(c))
    }

    /// The inclusion `(ΩC ↪ P(C))` of the syzygy into the minimal cover,
    /// realized by the kernel embedding matrix of the cover.
    pub fn syzygy_into_cover(c: &Module) -> MorphObject {
        MorphObject::new(presentation(c).syzygy_incl.clone())
    }

    pub fn cokernel(&self) -> (Module, ModMap) {
        self.f.cokernel()
    }

    /// Translate to a module over the triangular matrix algebra of the
    /// base: the source sits on the upper idempotents, the target on the
    /// lower ones, and the corner copy of each base element acts through
    /// the structure map.
    pub fn as_t2_module(&self, t2: &Arc<Algebra>) -> Module {
        let lam = self.algebra();
        let r = lam.num_idempotents();
        assert_eq!(t2.dim(), 3 * lam.dim(), "wrong triangular matrix algebra");
        assert_eq!(t2.num_idempotents(), 2 * r);
        let a = self.a();
        let b = self.b();
        let mut dims = vec![0usize; 2 * r];
        for p in 0..r {
            dims[p] = a.dim_at(p);
            dims[r + p] = b.dim_at(p);
        }
        let mut action = vec![Mat::zeros(0, 0); t2.dim()];
        for bb in 0..lam.dim() {
            let (_, q) = lam.grade(bb);
            action[t2_upper_index(lam, bb)] = a.action_of(bb).clone();
            action[t2_lower_index(lam, bb)] = b.action_of(bb).clone();
            action[t2_corner_index(lam, bb)] = b.action_of(bb).mul(self.f.block(q));
        }
        Module::new(t2.clone(), dims, action).expect("the translation is a module")
    }

    /// Read a morphism object back off a triangular-matrix-algebra module.
    pub fn from_t2_module(lambda: &Arc<Algebra>, m: &Module) -> MorphObject {
        let r = lambda.num_idempotents();
        let t2 = m.algebra();
        assert_eq!(t2.dim(), 3 * lambda.dim(), "wrong triangular matrix algebra");
        assert_eq!(m.dims().len(), 2 * r);
        let a_dims = m.dims()[..r].to_vec();
        let b_dims = m.dims()[r..].to_vec();
        let mut a_action = vec![Mat::zeros(0, 0); lambda.dim()];
        let mut b_action = vec![Mat::zeros(0, 0); lambda.dim()];
        for bb in 0..lambda.dim() {
            a_action[bb] = m.action_of(t2_upper_index(lambda, bb)).clone();
            b_action[bb] = m.action_of(t2_lower_index(lambda, bb)).clone();
        }
        let a = Module::new(lambda.clone(), a_dims, a_action).expect("upper layer");
        let b = Module::new(lambda.clone(), b_dims, b_action).expect("lower layer");
        let blocks: Vec<Mat> = (0..r)
            .map(|p| {
                m.action_of(t2_corner_index(lambda, lambda.idempotent(p)))
                    .clone()
            })
            .collect();
        let f = ModMap::new(a, b, blocks).expect("corner layer intertwines");
        MorphObject::new(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    ZeroToC,
    CtoZero,
    IdentityOnC,
    SyzygyIntoCover,
    MonoProper,
    MorProper,
}

/// Classify an indecomposable object by shape. The three trivial shapes
/// are recognized structurally (zero source, zero target, invertible map);
/// a monomorphism into the radical of a projective is exactly a
/// syzygy-into-cover inclusion; everything else is proper, split by
/// whether the map is injective.
pub fn classify(x: &MorphObject, seed: u64) -> Result<Classification, MorphError> {
    if x.total_dim() == 0 {
        return Err(MorphError::NotIndecomposable);
    }
    let t2 = t2_algebra(x.algebra());
    match is_indecomposable(&x.as_t2_module(&t2), seed) {
        Indecomposability::Yes => {}
        Indecomposability::No => return Err(MorphError::NotIndecomposable),
        Indecomposability::Indeterminate => {
            return Err(MorphError::Undecided(
                "indecomposability of the translated module".into(),
            ))
        }
    }
    if x.a().is_zero() {
        return Ok(Classification::ZeroToC);
    }
    if x.b().is_zero() {
        return Ok(Classification::CtoZero);
    }
    if x.map().inverse().is_some() {
        return Ok(Classification::IdentityOnC);
    }
    if x.is_mono() {
        if is_projective(x.b()) && maps_into_radical(x.map()) {
            return Ok(Classification::SyzygyIntoCover);
        }
        return Ok(Classification::MonoProper);
    }
    Ok(Classification::MorProper)
}

/// Does the image of `f` lie inside the radical of its target?
fn maps_into_radical(f: &ModMap) -> bool {
    let b = f.dst();
    (0..b.algebra().num_idempotents()).all(|p| {
        let rad = b.radical_comp(p);
        Mat::hstack(&[&rad, f.block(p)]).rank() == rad.rank()
    })
}

/// A map of morphism objects: a commuting square.
#[derive(Clone)]
pub struct MorphMap {
    src: MorphObject,
    dst: MorphObject,
    on_a: ModMap,
    on_b: ModMap,
}

impl MorphMap {
    pub fn new(src: MorphObject, dst: MorphObject, on_a: ModMap, on_b: ModMap) -> MorphMap {
        let down = dst.map().compose(&on_a);
        let around = on_b.compose(src.map());
        assert!(down.sub(&around).is_zero(), "the square must commute");
        MorphMap {
            src,
            dst,
            on_a,
            on_b,
        }
    }

    pub fn src(&self) -> &MorphObject {
        &self.src
    }

    pub fn dst(&self) -> &MorphObject {
        &self.dst
    }

    pub fn on_a(&self) -> &ModMap {
        &self.on_a
    }

    pub fn on_b(&self) -> &ModMap {
        &self.on_b
    }

    /// Translate to a map of triangular-matrix-algebra modules.
    pub fn as_t2_map(&self, t2: &Arc<Algebra>) -> ModMap {
        let r = self.src.algebra().num_idempotents();
        let mut blocks = Vec::with_capacity(2 * r);
        for p in 0..r {
            blocks.push(self.on_a.block(p).clone());
        }
        for p in 0..r {
            blocks.push(self.on_b.block(p).clone());
        }
        ModMap::new(self.src.as_t2_module(t2), self.dst.as_t2_module(t2), blocks)
            .expect("a commuting square translates to a module map")
    }
}

/// A short exact sequence of morphism objects. Exactness means exactness
/// of the translated sequence of triangular-matrix-algebra modules
/// (equivalently: row-wise exactness on sources and targets).
#[derive(Clone)]
pub struct MorphSes {
    pub sub: MorphMap,
    pub epi: MorphMap,
}

impl MorphSes {
    pub fn left(&self) -> &MorphObject {
        self.sub.src()
    }

    pub fn middle(&self) -> &MorphObject {
        self.sub.dst()
    }

    pub fn right(&self) -> &MorphObject {
        self.epi.dst()
    }

    pub fn to_t2(&self, t2: &Arc<Algebra>) -> Ses {
        Ses {
            sub: self.sub.as_t2_map(t2),
            epi: self.epi.as_t2_map(t2),
        }
    }
}

/// The cokernel functor from monomorphism objects to epimorphism objects:
/// `(A ↪ B)` goes to `(B ↠ B/A)`.
pub fn cok_object(x: &MorphObject) -> MorphObject {
    assert!(x.is_mono(), "the cokernel functor applies to monomorphisms");
    MorphObject::new(x.cokernel().1)
}

/// The cokernel functor on a map of monomorphism objects: the target
/// component is carried over, and the new target component is the unique
/// descent of the square to the cokernels.
pub fn cok_map(m: &MorphMap) -> MorphMap {
    let src = cok_object(m.src());
    let dst = cok_object(m.dst());
    let target = dst.map().compose(m.on_b());
    let sigma = solve_factor_right(src.map(), &target).expect("descends to the cokernel");
    MorphMap::new(src, dst, m.on_b().clone(), sigma)
}

pub fn cok_ses(s: &MorphSes) -> MorphSes {
    MorphSes {
        sub: cok_map(&s.sub),
        epi: cok_map(&s.epi),
    }
}

/// Coordinates expressing `target` as a linear combination of `images`
/// (all maps between one fixed pair of modules), if one exists.
pub(crate) fn combo_coords(images: &[ModMap], target: &ModMap) -> Option<Vec<Scalar>> {
    let tflat = target.flatten();
    let mut m = Mat::zeros(tflat.len(), images.len());
    for (j, h) in images.iter().enumerate() {
        for (i, x) in h.flatten().iter().enumerate() {
            if !x.is_zero() {
                m.set(i, j, x.clone());
            }
        }
    }
    let mut rhs = Mat::zeros(tflat.len(), 1);
    for (i, x) in tflat.iter().enumerate() {
        if !x.is_zero() {
            rhs.set(i, 0, x.clone());
        }
    }
    let sol = m.solve(&rhs)?;
    Some((0..images.len()).map(|j| sol.at(j, 0).clone()).collect())
}

/// The linear combination `Σ coords[j] · basis[j]` as a map `src -> dst`.
pub(crate) fn combo_map(
    src: &Module,
    dst: &Module,
    basis: &[ModMap],
    coords: &[Scalar],
) -> ModMap {
    let mut out = ModMap::zero(src.clone(), dst.clone());
    for (h, c) in basis.iter().zip(coords) {
        if !c.is_zero() {
            out = out.add(&h.scale(c));
        }
    }
    out
}

/// Find `L` with `through ∘ L = target` (a lift through `through`).
pub(crate) fn solve_factor_left(through: &ModMap, target: &ModMap) -> Option<ModMap> {
    let basis = hom_space(target.src(), through.src());
    let images: Vec<ModMap> = basis.iter().map(|h| through.compose(h)).collect();
    let coords = combo_coords(&images, target)?;
    Some(combo_map(target.src(), through.src(), &basis, &coords))
}

/// Find `R` with `R ∘ through = target` (a factorization past `through`).
pub(crate) fn solve_factor_right(through: &ModMap, target: &ModMap) -> Option<ModMap> {
    let basis = hom_space(through.dst(), target.dst());
    let images: Vec<ModMap> = basis.iter().map(|h| h.compose(through)).collect();
    let coords = combo_coords(&images, target)?;
    Some(combo_map(through.dst(), target.dst(), &basis, &coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdalg::nakayama;
    use crate::fdmod::projective_cover;

    const SEED: u64 = 0xA12;

    fn socle_into_cover(lam: &Arc<Algebra>) -> MorphObject {
        let s = Module::simple(lam.clone(), 0);
        MorphObject::syzygy_into_cover(&s)
    }

    #[test]
    fn translation_roundtrips() {
        let lam = nakayama(1, 2);
        let t2 = t2_algebra(&lam);
        let x = socle_into_cover(&lam);
        let m = x.as_t2_module(&t2);
        assert_eq!(m.dims(), &[1, 2]);
        let y = MorphObject::from_t2_module(&lam, &m);
        assert!(y.map().sub(x.map()).is_zero());
        assert!(y.is_mono());
    }

    #[test]
    fn translated_hom_spaces_match_commuting_squares() {
        let lam = nakayama(1, 2);
        let t2 = t2_algebra(&lam);
        let p = Module::projective(lam.clone(), 0);
        let s = Module::simple(lam.clone(), 0);
        let objects = [
            socle_into_cover(&lam),
            MorphObject::identity_on(&s),
            MorphObject::zero_to(&p),
            MorphObject::new(projective_cover(&s).1),
        ];
        for x in &objects {
            for y in &objects {
                let translated =
                    hom_space(&x.as_t2_module(&t2), &y.as_t2_module(&t2)).len();
                assert_eq!(translated, square_dim(x, y), "Hom dimensions must agree");
            }
        }
    }

    /// Independent count of commuting squares `(h_a, h_b)` from `x` to `y`:
    /// the kernel of `(h_a, h_b) -> y.f ∘ h_a − h_b ∘ x.f`.
    fn square_dim(x: &MorphObject, y: &MorphObject) -> usize {
        let on_a = hom_space(x.a(), y.a());
        let on_b = hom_space(x.b(), y.b());
        let probe = ModMap::zero(x.a().clone(), y.b().clone());
        let rows = probe.flatten().len();
        let mut m = Mat::zeros(rows, on_a.len() + on_b.len());
        for (j, h) in on_a.iter().enumerate() {
            for (i, v) in y.map().compose(h).flatten().iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        for (j, h) in on_b.iter().enumerate() {
            for (i, v) in h.compose(x.map()).flatten().iter().enumerate() {
                m.set(i, on_a.len() + j, (-v).clone());
            }
        }
        m.kernel_basis().cols()
    }

    #[test]
    fn classification_recognizes_the_shapes() {
        let lam = nakayama(1, 3);
        let p = Module::projective(lam.clone(), 0);
        let s = Module::simple(lam.clone(), 0);
        assert_eq!(
            classify(&MorphObject::zero_to(&s), SEED),
            Ok(Classification::ZeroToC)
        );
        assert_eq!(
            classify(&MorphObject::to_zero(&p), SEED),
            Ok(Classification::CtoZero)
        );
        assert_eq!(
            classify(&MorphObject::identity_on(&p), SEED),
            Ok(Classification::IdentityOnC)
        );
        // Socle of the dim-2 quotient: a monomorphism with non-projective
        // target.
        let m2 = {
            let mut soc = Mat::zeros(3, 1);
            soc.set(2, 0, Scalar::one());
            p.quotient(&[soc]).0
        };
        let mut into = Mat::zeros(2, 1);
        into.set(1, 0, Scalar::one());
        let f = ModMap::new(s.clone(), m2.clone(), vec![into]).unwrap();
        assert_eq!(
            classify(&MorphObject::new(f), SEED),
            Ok(Classification::MonoProper)
        );
        let cover = projective_cover(&m2).1;
        assert_eq!(
            classify(&MorphObject::new(cover), SEED),
            Ok(Classification::MorProper)
        );
        // The zero map between two copies of the simple splits apart.
        let z = ModMap::zero(s.clone(), s.clone());
        assert_eq!(
            classify(&MorphObject::new(z), SEED),
            Err(MorphError::NotIndecomposable)
        );
    }

    #[test]
    fn syzygies_into_covers_are_recognized() {
        for (n, t) in [(1, 2), (1, 3), (2, 3)] {
            let lam = nakayama(n, t);
            let s = Module::simple(lam.clone(), 0);
            assert_eq!(
                classify(&MorphObject::syzygy_into_cover(&s), SEED),
                Ok(Classification::SyzygyIntoCover)
            );
        }
    }

    #[test]
    fn cokernel_functor_flips_inclusions_to_covers() {
        let lam = nakayama(1, 2);
        let x = socle_into_cover(&lam);
        let c = cok_object(&x);
        assert_eq!(classify(&c, SEED), Ok(Classification::MorProper));
        assert!(c.map().is_surjective_map());
        assert_eq!(c.b().total_dim(), 1);
    }
}
