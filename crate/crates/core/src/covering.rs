//! Galois covering of a self-injective Nakayama algebra by the infinite
//! line, with the push-down functor computed on finite windows.
//!
//! The cyclic quiver with `n` vertices and nilpotency bound `t` is covered
//! by the doubly infinite line quiver `… → i → i+1 → …` carrying the same
//! length-`t` monomial relations; the integers act on the line by shifting
//! `n` vertices at a time, and the orbit algebra of that action is the
//! cyclic algebra again. The push-down functor sums a line module's fibers
//! over each shift orbit and is exact, dimension-preserving, and sends
//! indecomposables to indecomposables for this family.
//!
//! Everything here is represented on a finite window `[lo, hi]` of the
//! line, wide enough that the operations cannot feel the cut-off: each
//! operation documents the margin it needs between a module's support and
//! the window edge and refuses (with a typed error) to return an answer
//! the boundary could have distorted, rather than silently truncating.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::exactla::{Mat, Scalar};
use crate::fdalg::{
    compile_bound_quiver, nakayama, same_algebra, t2_algebra, Algebra, Arrow, QuiverPresentation,
};
use crate::fdmod::{
    almost_split_ending_at, hom_space, is_almost_split, is_indecomposable, is_projective,
    iso_between_indecs, presentation, ArsError, Indecomposability, ModMap, Module, Ses,
};
use crate::knit::{enumerate_with, KnitBounds, TranslationQuiver, Verdict};
use crate::morphcat::{morph_map_from_t2, MorphMap, MorphObject, MorphSes};

/// Why a covering-side operation refused to answer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    /// The window cannot hold the data the operation needs.
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    /// Intervals of length `>= t` do not satisfy the nilpotency relations.
    #[error("an interval with {len} vertices exceeds the nilpotency bound {t}")]
    IntervalTooLong { len: usize, t: usize },
    /// The requested interval is not contained in the window.
    #[error("the interval [{i}, {j}] leaves the window [{lo}, {hi}]")]
    OutOfWindow { i: i64, j: i64, lo: i64, hi: i64 },
    /// Pushing down needs at least one empty vertex on each side.
    #[error("the support touches the window edge; push-down would be ambiguous")]
    SupportTouchesEdge,
    /// The margin between support and edge is too small for a faithful
    /// answer to this particular question.
    #[error("the window margin is too small for a faithful answer: {0}")]
    BoundaryEffect(String),
    /// No almost split sequence ends at a projective (or zero) module.
    #[error("no almost split sequence ends at a projective module")]
    ProjectiveInput,
    /// A knitting pass tripped a bound, so the downstairs list of
    /// indecomposables is not available.
    #[error("the enumeration downstairs did not terminate within bounds")]
    NotFinite,
    /// An internal certificate could not be produced.
    #[error("undecided: {0}")]
    Undecided(String),
}

impl From<ArsError> for CoverError {
    fn from(e: ArsError) -> CoverError {
        match e {
            ArsError::Projective | ArsError::ZeroModule => CoverError::ProjectiveInput,
            other => CoverError::Undecided(other.to_string()),
        }
    }
}

/// Multiply basis paths and insist the result is a single basis path with
/// coefficient one — true in any monomial algebra when the product is
/// nonzero, and every product this module forms is nonzero by construction.
fn single_product(alg: &Algebra, i: usize, j: usize) -> usize {
    let prod = alg.product(i, j);
    assert_eq!(prod.len(), 1, "path product must be a single basis path");
    assert_eq!(prod[0].1, Scalar::one(), "path product must have coefficient one");
    prod[0].0
}

/// A finite window `[lo, hi]` on the line cover of the cyclic algebra with
/// `n` vertices and nilpotency bound `t`.
///
/// The window algebra is the path algebra of `lo → lo+1 → … → hi` modulo
/// paths of length `t`; the orbit algebra is the cyclic one. Vertex `v` of
/// the line sits over vertex `v mod n` of the cycle, and the chosen orbit
/// representatives are `0, …, n-1`, which the window is required to
/// contain. Both path tables are indexed `paths[position][length]`.
pub struct LineCover {
    pub n: usize,
    pub t: usize,
    pub lo: i64,
    pub hi: i64,
    window: Arc<Algebra>,
    orbit: Arc<Algebra>,
    /// `wpaths[p][l]`: basis index of the window path starting at position
    /// `p` of length `l` (`l < min(t, w - p)`).
    wpaths: Vec<Vec<usize>>,
    /// `opaths[a][l]`: basis index of the cyclic path starting at vertex
    /// `a` of length `l < t`.
    opaths: Vec<Vec<usize>>,
}

impl LineCover {
    /// Build the window `[lo, hi]`. Requires `n >= 1`, `t >= 2`, a width
    /// of at least `3t`, and `[0, n) ⊆ [lo, hi]` so every orbit
    /// representative is visible.
    pub fn new(n: usize, t: usize, lo: i64, hi: i64) -> Result<LineCover, CoverError> {
        assert!(n >= 1, "the cycle needs at least one vertex");
        assert!(t >= 2, "nilpotency bound below two leaves a semisimple algebra");
        let width = hi - lo + 1;
        if width < 3 * t as i64 {
            return Err(CoverError::WindowTooSmall(format!(
                "width {width} is below the minimum 3t = {}",
                3 * t
            )));
        }
        if lo > 0 || hi < n as i64 - 1 {
            return Err(CoverError::WindowTooSmall(format!(
                "the window [{lo}, {hi}] must contain the representatives [0, {})",
                n
            )));
        }
        let w = width as usize;

        // Window algebra: a linear quiver on w vertices, arrows ascending,
        // all length-t paths set to zero.
        let vertices: Vec<String> = (0..w).map(|p| format!("w{}", lo + p as i64)).collect();
        let arrows: Vec<Arrow> = (0..w - 1)
            .map(|p| Arrow {
                name: format!("x{}", lo + p as i64),
                source: p,
                target: p + 1,
            })
            .collect();
        let relations: Vec<Vec<(Scalar, Vec<usize>)>> = (0..w - t)
            .map(|p| vec![(Scalar::one(), (p..p + t).collect())])
            .collect();
        let window = compile_bound_quiver(&QuiverPresentation {
            vertices,
            arrows,
            relations,
            path_cap: t + 2,
        })
        .expect("the windowed line quiver is admissible");
        let orbit = nakayama(n, t);

        // Path tables by name lookup for arrows, then chained products.
        let wname: BTreeMap<&str, usize> = window
            .names()
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut wpaths: Vec<Vec<usize>> = vec![Vec::new(); w];
        for p in (0..w).rev() {
            let maxlen = t.min(w - p);
            let mut row = Vec::with_capacity(maxlen);
            row.push(window.idempotent(p));
            if maxlen > 1 {
                let name = format!("x{}", lo + p as i64);
                row.push(wname[name.as_str()]);
            }
            for l in 2..maxlen {
                row.push(single_product(&window, wpaths[p + 1][l - 1], row[1]));
            }
            wpaths[p] = row;
        }
        let oname: BTreeMap<&str, usize> = orbit
            .names()
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut opaths: Vec<Vec<usize>> = vec![Vec::with_capacity(t); n];
        for (a, row) in opaths.iter_mut().enumerate() {
            row.push(orbit.idempotent(a));
            let name = format!("a{a}");
            row.push(oname[name.as_str()]);
        }
        for l in 2..t {
            let level: Vec<usize> = (0..n)
                .map(|a| single_product(&orbit, opaths[(a + 1) % n][l - 1], opaths[a][1]))
                .collect();
            for (a, row) in opaths.iter_mut().enumerate() {
                row.push(level[a]);
            }
        }

        // Graded dimension audit, two independent routes. Upstairs, the
        // space of paths q → p is at most one-dimensional and nonzero
        // exactly when 0 <= p - q < t. Downstairs, the space of paths
        // a → b counts the lengths l < t with a + l ≡ b (mod n) — i.e. the
        // window paths out of a fixed lift of a, bucketed by the shift
        // orbit of their endpoint, which is the covering property at the
        // level of the algebras themselves.
        for q in 0..w {
            for p in 0..w {
                let expect = usize::from(p >= q && p - q < t);
                assert_eq!(
                    window.basis_by_grade(p, q).len(),
                    expect,
                    "window path space {q} -> {p}"
                );
            }
        }
        for a in 0..n {
            for b in 0..n {
                let expect = (0..t).filter(|&l| (a + l) % n == b).count();
                assert_eq!(
                    orbit.basis_by_grade(b, a).len(),
                    expect,
                    "orbit path space {a} -> {b}"
                );
            }
        }
        for (a, row) in opaths.iter().enumerate() {
            for (l, &b) in row.iter().enumerate() {
                assert_eq!(orbit.grade(b), ((a + l) % n, a), "orbit path grading");
            }
        }

        Ok(LineCover {
            n,
            t,
            lo,
            hi,
            window,
            orbit,
            wpaths,
            opaths,
        })
    }

    /// The bound path algebra of the windowed line quiver.
    pub fn window_algebra(&self) -> &Arc<Algebra> {
        &self.window
    }

    /// The cyclic orbit algebra downstairs.
    pub fn orbit_algebra(&self) -> &Arc<Algebra> {
        &self.orbit
    }

    /// Number of window vertices.
    pub fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    /// Index of line vertex `v` among the window idempotents.
    fn pos(&self, v: i64) -> usize {
        debug_assert!(self.lo <= v && v <= self.hi, "vertex {v} outside window");
        (v - self.lo) as usize
    }

    /// All shifts `g` with `a + g·n` inside the window, increasing. The
    /// push-down fiber over orbit vertex `a` is ordered by these labels.
    fn shift_labels(&self, a: usize) -> Vec<i64> {
        let (n, a) = (self.n as i64, a as i64);
        (self.lo..=self.hi)
            .filter(|v| (v - a).rem_euclid(n) == 0)
            .map(|v| (v - a).div_euclid(n))
            .collect()
    }
}

/// A module over the window algebra together with its support hull, the
/// datum all margin checks read.
pub struct WindowModule {
    pub module: Module,
    /// Smallest and largest line vertex carrying a nonzero fiber; `None`
    /// for the zero module.
    pub support: Option<(i64, i64)>,
}

impl WindowModule {
    /// Wrap a module over the window algebra, computing its support hull.
    pub fn new(c: &LineCover, module: Module) -> WindowModule {
        assert!(
            same_algebra(module.algebra(), c.window_algebra()),
            "the module must live over the window algebra"
        );
        let mut support = None;
        for p in 0..c.width() {
            if module.dim_at(p) > 0 {
                let v = c.lo + p as i64;
                support = Some(match support {
                    None => (v, v),
                    Some((a, _)) => (a, v),
                });
            }
        }
        WindowModule { module, support }
    }

    /// Distance from the support hull to the nearer window edge; the zero
    /// module has unbounded margin.
    pub fn margin(&self, c: &LineCover) -> i64 {
        match self.support {
            None => i64::MAX,
            Some((a, b)) => (a - c.lo).min(c.hi - b),
        }
    }
}

/// The interval module with fiber `k` on line vertices `i..=j` and every
/// arrow in between acting as the identity. These are exactly the
/// indecomposables of the line with its nilpotency relations, so they are
/// the raw material of every covering-side test.
pub fn interval_module(c: &LineCover, i: i64, j: i64) -> Result<WindowModule, CoverError> {
    if i < c.lo || j > c.hi || i > j {
        return Err(CoverError::OutOfWindow {
            i,
            j,
            lo: c.lo,
            hi: c.hi,
        });
    }
    let len = (j - i + 1) as usize;
    if len > c.t {
        return Err(CoverError::IntervalTooLong { len, t: c.t });
    }
    let w = c.width();
    let alg = c.window_algebra().clone();
    let mut dims = vec![0usize; w];
    for d in dims[c.pos(i)..=c.pos(j)].iter_mut() {
        *d = 1;
    }
    let mut action: Vec<Mat> = (0..alg.dim())
        .map(|b| {
            let (o, q) = alg.grade(b);
            Mat::zeros(dims[o], dims[q])
        })
        .collect();
    for p in 0..w {
        for (l, &b) in c.wpaths[p].iter().enumerate() {
            let s = c.lo + p as i64;
            if s >= i && s + l as i64 <= j {
                action[b] = Mat::identity(1);
            }
        }
    }
    let module = Module::new(alg, dims, action).expect("interval satisfies the relations");
    Ok(WindowModule::new(c, module))
}

/// The shift `^g M`: the same module moved `g·n` vertices up the line.
/// Fails if the moved support would leave the window.
pub fn shift_module(c: &LineCover, m: &WindowModule, g: i64) -> Result<WindowModule, CoverError> {
    let gn = g * c.n as i64;
    if let Some((a, b)) = m.support {
        if a + gn < c.lo || b + gn > c.hi {
            return Err(CoverError::WindowTooSmall(format!(
                "shifting support [{a}, {b}] by {gn} leaves the window [{}, {}]",
                c.lo, c.hi
            )));
        }
    }
    let w = c.width();
    let alg = c.window_algebra().clone();
    let old = &m.module;
    let old_dim = |p: i64| -> usize {
        if 0 <= p && p < w as i64 {
            old.dim_at(p as usize)
        } else {
            0
        }
    };
    let dims: Vec<usize> = (0..w).map(|p| old_dim(p as i64 - gn)).collect();
    let mut action: Vec<Mat> = (0..alg.dim())
        .map(|b| {
            let (o, q) = alg.grade(b);
            Mat::zeros(dims[o], dims[q])
        })
        .collect();
    for p in 0..w {
        for (l, &b) in c.wpaths[p].iter().enumerate() {
            let po = p as i64 - gn;
            if po >= 0 && (po as usize) < w && l < c.wpaths[po as usize].len() {
                action[b] = old.action_of(c.wpaths[po as usize][l]).clone();
            }
        }
    }
    let module = Module::new(alg, dims, action).expect("shifting preserves the relations");
    let out = WindowModule::new(c, module);
    debug_assert_eq!(
        out.support,
        m.support.map(|(a, b)| (a + gn, b + gn)),
        "support must move rigidly"
    );
    Ok(out)
}

/// Dimension of `Hom([a,b], [c,d])` between interval modules on the line:
/// a homomorphism is determined by the image of the generator sitting at
/// `a`, and a nonzero one exists exactly when `c <= a <= d <= b` (the
/// generator lands inside the target and the overlap closes under the
/// arrows). Kept as an independent closed-form oracle for the solver-based
/// Hom spaces.
#[cfg(test)]
pub(crate) fn interval_hom_dim(src: (i64, i64), dst: (i64, i64)) -> usize {
    let ((a, b), (c, d)) = (src, dst);
    usize::from(c <= a && a <= d && d <= b)
}

/// Labels and starting offsets of the push-down fiber over orbit vertex
/// `a`, for the given window module.
fn fiber_offsets(c: &LineCover, m: &Module, a: usize) -> (Vec<i64>, Vec<usize>, usize) {
    let labels = c.shift_labels(a);
    let mut offsets = Vec::with_capacity(labels.len());
    let mut acc = 0;
    for &g in &labels {
        offsets.push(acc);
        acc += m.dim_at(c.pos(a as i64 + g * c.n as i64));
    }
    (labels, offsets, acc)
}

/// Push a window module down to the orbit algebra: the fiber over cyclic
/// vertex `a` is the direct sum of the module's fibers over all window
/// vertices `a + g·n` (ordered by increasing `g`), and a cyclic path acts
/// blockwise by the corresponding line paths. Requires margin `>= 1`: a
/// support touching the edge could be the restriction of something longer,
/// and the answer would depend on the cut-off.
pub fn push_down(c: &LineCover, m: &WindowModule) -> Result<Module, CoverError> {
    if m.margin(c) < 1 {
        return Err(CoverError::SupportTouchesEdge);
    }
    let n = c.n;
    let mut fibers = Vec::with_capacity(n);
    let mut dims = vec![0usize; n];
    for (a, dim) in dims.iter_mut().enumerate() {
        let f = fiber_offsets(c, &m.module, a);
        *dim = f.2;
        fibers.push(f);
    }
    let orbit = c.orbit_algebra().clone();
    let mut action: Vec<Mat> = (0..orbit.dim())
        .map(|b| {
            let (o, q) = orbit.grade(b);
            Mat::zeros(dims[o], dims[q])
        })
        .collect();
    for a in 0..n {
        let (src_labels, src_off, _) = &fibers[a];
        for (l, &bidx) in c.opaths[a].iter().enumerate() {
            let b = (a + l) % n;
            let (dst_labels, dst_off, _) = &fibers[b];
            let mut mat = Mat::zeros(dims[b], dims[a]);
            for (gi, &g) in src_labels.iter().enumerate() {
                let x = a as i64 + g * n as i64;
                let sp = c.pos(x);
                if m.module.dim_at(sp) == 0 {
                    continue;
                }
                let y = x + l as i64;
                if y > c.hi {
                    // The window module extends by zero beyond the edge,
                    // and margin >= 1 guarantees the fiber there is zero.
                    continue;
                }
                let blk = m.module.action_of(c.wpaths[sp][l]);
                let h = (y - b as i64) / n as i64;
                let hi_idx = dst_labels
                    .iter()
                    .position(|&k| k == h)
                    .expect("the endpoint's shift label lies in the window");
                for r in 0..blk.rows() {
                    for cc in 0..blk.cols() {
                        mat.set(dst_off[hi_idx] + r, src_off[gi] + cc, blk.at(r, cc).clone());
                    }
                }
            }
            action[bidx] = mat;
        }
    }
    let out = Module::new(orbit, dims, action).expect("push-down satisfies the orbit relations");
    debug_assert_eq!(
        out.total_dim(),
        m.module.total_dim(),
        "push-down preserves total dimension"
    );
    Ok(out)
}

/// Push a map of window modules down: blockwise diagonal in the fiber
/// decomposition, one block per shift label.
pub fn push_down_map(c: &LineCover, f: &ModMap) -> Result<ModMap, CoverError> {
    let src = WindowModule::new(c, f.src().clone());
    let dst = WindowModule::new(c, f.dst().clone());
    let ps = push_down(c, &src)?;
    let pd = push_down(c, &dst)?;
    let mut blocks = Vec::with_capacity(c.n);
    for a in 0..c.n {
        let labels = c.shift_labels(a);
        let mut mat = Mat::zeros(pd.dim_at(a), ps.dim_at(a));
        let mut roff = 0;
        let mut coff = 0;
        for &g in &labels {
            let p = c.pos(a as i64 + g * c.n as i64);
            let blk = f.block(p);
            for r in 0..blk.rows() {
                for cc in 0..blk.cols() {
                    mat.set(roff + r, coff + cc, blk.at(r, cc).clone());
                }
            }
            roff += dst.module.dim_at(p);
            coff += src.module.dim_at(p);
        }
        blocks.push(mat);
    }
    ModMap::new(ps, pd, blocks)
        .map_err(|e| CoverError::Undecided(format!("pushed map must intertwine: {e}")))
}

/// Push a monomorphism-category object down. Exactness of the push-down
/// means kernels are preserved, so monos stay monos.
pub fn push_down_morph(c: &LineCover, x: &MorphObject) -> Result<MorphObject, CoverError> {
    let f = push_down_map(c, x.map())?;
    let out = MorphObject::new(f);
    debug_assert_eq!(x.is_mono(), out.is_mono(), "push-down preserves kernels");
    Ok(out)
}

/// Push a short exact sequence of window modules down termwise.
pub fn push_down_ses(c: &LineCover, ses: &Ses) -> Result<Ses, CoverError> {
    let sub = push_down_map(c, &ses.sub)?;
    let epi = push_down_map(c, &ses.epi)?;
    let out = Ses { sub, epi };
    debug_assert!(out.verify_exact(), "push-down preserves exactness");
    Ok(out)
}

/// The canonical isomorphism `F(^g M) → F(M)` between the push-downs of a
/// shifted module and the module itself: the summand labeled `h` in the
/// source is the summand labeled `h - g` in the target, identically. In
/// the increasing-label coordinates used here every block is a partial
/// permutation with unit entries; the content of the construction is that
/// these blocks intertwine the two actions, which `ModMap::new` certifies.
pub fn stabilizer_map(c: &LineCover, m: &WindowModule, g: i64) -> Result<ModMap, CoverError> {
    let shifted = shift_module(c, m, g)?;
    let src = push_down(c, &shifted)?;
    let dst = push_down(c, m)?;
    let mut blocks = Vec::with_capacity(c.n);
    for a in 0..c.n {
        let (labels, src_off, _) = fiber_offsets(c, &shifted.module, a);
        let (_, dst_off, _) = fiber_offsets(c, &m.module, a);
        let lab_index: BTreeMap<i64, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut mat = Mat::zeros(dst.dim_at(a), src.dim_at(a));
        for (hi_idx, &h) in labels.iter().enumerate() {
            let d = shifted.module.dim_at(c.pos(a as i64 + h * c.n as i64));
            if d == 0 {
                continue;
            }
            let k = h - g;
            let Some(&ki) = lab_index.get(&k) else {
                return Err(CoverError::WindowTooSmall(format!(
                    "shift label {k} falls outside the window over vertex {a}"
                )));
            };
            for r in 0..d {
                mat.set(dst_off[ki] + r, src_off[hi_idx] + r, Scalar::one());
            }
        }
        blocks.push(mat);
    }
    ModMap::new(src, dst, blocks)
        .map_err(|e| CoverError::Undecided(format!("the stabilizer must intertwine: {e}")))
}

/// Check the cocycle law of the stabilizer isomorphisms on a concrete
/// module: `δ_g(M) ∘ δ_h(^g M) = δ_{g+h}(M)` as maps `F(^{g+h}M) → F(M)`.
pub fn verify_stabilizer(
    c: &LineCover,
    g: i64,
    h: i64,
    m: &WindowModule,
) -> Result<bool, CoverError> {
    let shifted_g = shift_module(c, m, g)?;
    let d_g = stabilizer_map(c, m, g)?;
    let d_h = stabilizer_map(c, &shifted_g, h)?;
    let lhs = d_g.compose(&d_h);
    let rhs = stabilizer_map(c, m, g + h)?;
    Ok((0..c.n).all(|a| lhs.block(a) == rhs.block(a)))
}

/// Both sides of the covering's Hom identity for one pair of modules, in
/// the module category and in the monomorphism category.
#[derive(Debug)]
pub struct PrecoveringReport {
    /// `dim Hom(F M, F N)` downstairs.
    pub module_lhs: usize,
    /// `Σ_g dim Hom(M, ^g N)` upstairs.
    pub module_rhs: usize,
    pub module_per_shift: Vec<(i64, usize)>,
    /// Same pair run through minimal-presentation objects `Ω ↪ P`.
    pub morph_lhs: usize,
    pub morph_rhs: usize,
    pub morph_per_shift: Vec<(i64, usize)>,
    pub pass: bool,
}

/// Support hull of a morphism object (both layers together).
fn morph_hull(c: &LineCover, x: &MorphObject) -> Option<(i64, i64)> {
    let ha = WindowModule::new(c, x.a().clone()).support;
    let hb = WindowModule::new(c, x.b().clone()).support;
    match (ha, hb) {
        (None, s) | (s, None) => s,
        (Some((a, b)), Some((p, q))) => Some((a.min(p), b.max(q))),
    }
}

fn hulls_overlap(x: Option<(i64, i64)>, y: Option<(i64, i64)>, shift: i64) -> bool {
    match (x, y) {
        (Some((a, b)), Some((p, q))) => p + shift <= b && q + shift >= a,
        _ => false,
    }
}

/// Verify, for one pair `(M, N)`, that the push-down is a precovering:
/// `dim Hom(F M, F N) = Σ_g dim Hom(M, ^g N)`, with every potentially
/// nonzero shift inside `[-shift_bound, shift_bound]` (anything that could
/// overlap but exceeds the bound is an error, so a pass is a complete
/// count, not a sampled one). The same identity is then checked in the
/// monomorphism category on the objects `Ω M ↪ P M` and `Ω N ↪ P N`,
/// which requires margin `>= t` on both inputs so the minimal projective
/// covers upstairs are the honest line covers.
pub fn verify_precovering(
    c: &LineCover,
    m: &WindowModule,
    n_mod: &WindowModule,
    shift_bound: i64,
) -> Result<PrecoveringReport, CoverError> {
    assert!(shift_bound >= 0, "the shift bound is a radius");
    let nn = c.n as i64;
    if let (Some((ml, mh)), Some((nl, nh))) = (m.support, n_mod.support) {
        let g_max = (mh - nl).div_euclid(nn);
        let g_min = -((nh - ml).div_euclid(nn));
        if g_min < -shift_bound || g_max > shift_bound {
            return Err(CoverError::WindowTooSmall(format!(
                "shifts {g_min}..={g_max} can meet the support but the bound is {shift_bound}"
            )));
        }
    }

    let pm = push_down(c, m)?;
    let pn = push_down(c, n_mod)?;
    let module_lhs = hom_space(&pm, &pn).len();
    let mut module_per_shift = Vec::new();
    let mut module_rhs = 0;
    for g in -shift_bound..=shift_bound {
        let d = if hulls_overlap(m.support, n_mod.support, g * nn) {
            let sg = shift_module(c, n_mod, g)?;
            hom_space(&m.module, &sg.module).len()
        } else {
            0
        };
        module_per_shift.push((g, d));
        module_rhs += d;
    }

    // Monomorphism-category side. Building Ω ↪ P upstairs reads the
    // projective covers of the window algebra, which agree with the line's
    // only when the support stays t-1 short of the upper edge; pushing the
    // result needs one more vertex of air.
    for (wm, who) in [(m, "first"), (n_mod, "second")] {
        if wm.margin(c) < c.t as i64 {
            return Err(CoverError::WindowTooSmall(format!(
                "the {who} module needs margin >= t = {} for the morphism-category check",
                c.t
            )));
        }
    }
    let t2w = t2_algebra(c.window_algebra());
    let t2o = t2_algebra(c.orbit_algebra());
    let x = MorphObject::new(presentation(&m.module).syzygy_incl.clone());
    let y = MorphObject::new(presentation(&n_mod.module).syzygy_incl.clone());
    let px = push_down_morph(c, &x)?;
    let py = push_down_morph(c, &y)?;
    let morph_lhs = hom_space(&px.as_t2_module(&t2o), &py.as_t2_module(&t2o)).len();
    let xt = x.as_t2_module(&t2w);
    let hull_x = morph_hull(c, &x);
    let mut morph_per_shift = Vec::new();
    let mut morph_rhs = 0;
    for g in -shift_bound..=shift_bound {
        let d = {
            // Hull of ^g Y without building it: the construction commutes
            // with the shift as long as the shifted module keeps margin
            // t - 1 for its projective cover.
            let hull_yg = morph_hull(c, &y).map(|(a, b)| (a + g * nn, b + g * nn));
            if !hulls_overlap(hull_x, hull_yg, 0) {
                0
            } else {
                let sg = shift_module(c, n_mod, g)?;
                if sg.margin(c) < c.t as i64 - 1 {
                    return Err(CoverError::WindowTooSmall(format!(
                        "shift {g} leaves no room for a faithful projective cover"
                    )));
                }
                let yg = MorphObject::new(presentation(&sg.module).syzygy_incl.clone());
                hom_space(&xt, &yg.as_t2_module(&t2w)).len()
            }
        };
        morph_per_shift.push((g, d));
        morph_rhs += d;
    }

    let pass = module_lhs == module_rhs && morph_lhs == morph_rhs;
    Ok(PrecoveringReport {
        module_lhs,
        module_rhs,
        module_per_shift,
        morph_lhs,
        morph_rhs,
        morph_per_shift,
        pass,
    })
}

/// An almost split sequence upstairs and its push-down, with the verdict
/// of the downstairs brute-force oracle.
pub struct ArPreservationReport {
    pub window_ses: Ses,
    pub pushed_ses: Ses,
    /// Whether the pushed sequence is almost split over the orbit algebra,
    /// certified against the complete list of indecomposables downstairs.
    pub almost_split: bool,
}

fn knitted_modules(a: &Arc<Algebra>, seed: u64) -> Result<Vec<Module>, CoverError> {
    let bounds = KnitBounds {
        seed,
        ..KnitBounds::default()
    };
    match enumerate_with(a, &bounds) {
        Ok(Verdict::Finite { modules, .. }) => Ok(modules),
        Ok(Verdict::ExceededBound { .. }) => Err(CoverError::NotFinite),
        Err(e) => Err(CoverError::Undecided(e.to_string())),
    }
}

/// Compute the almost split sequence ending at an interior window module,
/// push it down, and certify the result is almost split over the orbit
/// algebra — the exactness and AR-preservation property of the push-down
/// on one concrete mesh. Requires margin `>= t` (the upstairs computation
/// builds projective covers and the translate, each reaching up to `t - 1`
/// vertices beyond the support) and a non-projective input.
pub fn verify_ar_preservation(
    c: &LineCover,
    m: &WindowModule,
    seed: u64,
) -> Result<ArPreservationReport, CoverError> {
    if is_projective(&m.module) || m.module.total_dim() == 0 {
        return Err(CoverError::ProjectiveInput);
    }
    if m.margin(c) < c.t as i64 {
        return Err(CoverError::BoundaryEffect(format!(
            "margin {} is below t = {}; the mesh could touch the edge",
            m.margin(c),
            c.t
        )));
    }
    let asp = almost_split_ending_at(&m.module, &[], seed)?;
    let window_ses = asp.ses;
    let pushed_ses = push_down_ses(c, &window_ses)?;
    let downstairs = knitted_modules(c.orbit_algebra(), seed)?;
    let almost_split = is_almost_split(&pushed_ses, &downstairs, seed)
        .map_err(|e| CoverError::Undecided(e.to_string()))?;
    Ok(ArPreservationReport {
        window_ses,
        pushed_ses,
        almost_split,
    })
}

/// As `verify_ar_preservation`, but one level up: the input is an object
/// of the monomorphism category over the window algebra, the almost split
/// sequence is computed over its triangular matrix algebra, pushed down
/// layerwise, and certified against the complete list of indecomposables
/// over the orbit's triangular matrix algebra.
pub struct MorphArPreservationReport {
    pub window_ses: MorphSes,
    pub pushed_ses: MorphSes,
    pub almost_split: bool,
}

pub fn verify_ar_preservation_morph(
    c: &LineCover,
    x: &MorphObject,
    seed: u64,
) -> Result<MorphArPreservationReport, CoverError> {
    for layer in [x.a(), x.b()] {
        let wm = WindowModule::new(c, layer.clone());
        if wm.margin(c) < c.t as i64 {
            return Err(CoverError::BoundaryEffect(format!(
                "a layer has margin {} below t = {}",
                wm.margin(c),
                c.t
            )));
        }
    }
    let t2w = t2_algebra(c.window_algebra());
    let xt = x.as_t2_module(&t2w);
    if is_projective(&xt) || xt.total_dim() == 0 {
        return Err(CoverError::ProjectiveInput);
    }
    let asp = almost_split_ending_at(&xt, &[], seed)?;
    let lam = c.window_algebra();
    let left = MorphObject::from_t2_module(lam, asp.ses.left());
    let middle = MorphObject::from_t2_module(lam, asp.ses.middle());
    let right = MorphObject::from_t2_module(lam, asp.ses.right());
    let sub = morph_map_from_t2(&left, &middle, &asp.ses.sub);
    let epi = morph_map_from_t2(&middle, &right, &asp.ses.epi);

    let pl = push_down_morph(c, &left)?;
    let pm = push_down_morph(c, &middle)?;
    let pr = push_down_morph(c, &right)?;
    let psub = MorphMap::new(
        pl,
        pm.clone(),
        push_down_map(c, sub.on_a())?,
        push_down_map(c, sub.on_b())?,
    );
    let pepi = MorphMap::new(
        pm,
        pr,
        push_down_map(c, epi.on_a())?,
        push_down_map(c, epi.on_b())?,
    );
    let window_ses = MorphSes { sub, epi };
    let pushed_ses = MorphSes {
        sub: psub,
        epi: pepi,
    };

    let t2o = t2_algebra(c.orbit_algebra());
    let downstairs = knitted_modules(&t2o, seed)?;
    let pushed_t2 = pushed_ses.to_t2(&t2o);
    debug_assert!(pushed_t2.verify_exact());
    let almost_split = is_almost_split(&pushed_t2, &downstairs, seed)
        .map_err(|e| CoverError::Undecided(e.to_string()))?;
    Ok(MorphArPreservationReport {
        window_ses,
        pushed_ses,
        almost_split,
    })
}

/// Axiom-by-axiom audit that the vertex map induced by the push-down is a
/// covering of valued translation quivers on the window's interior.
#[derive(Debug)]
pub struct TranslationCoverReport {
    /// Interior vertices (margin `>= t`) the axioms were checked on.
    pub fragment_vertices: usize,
    /// Every downstairs vertex is hit by the interior fragment.
    pub surjective: bool,
    /// The vertex map is constant on shift orbits (where both are defined).
    pub constant_on_shifts: bool,
    /// Two fragment vertices map together exactly when they are shifts of
    /// one another — fibers are exactly the shift orbits.
    pub fibers_are_shift_orbits: bool,
    /// Arrows out of / into a fragment vertex biject with arrows out of /
    /// into its image.
    pub neighbor_bijections: bool,
    /// Downstairs valuations are the fiber sums of upstairs valuations.
    pub valuation_sums: bool,
    /// Projective and injective vertices map to projective and injective
    /// vertices respectively.
    pub ends_preserved: bool,
    /// The translation commutes with the vertex map on non-projectives.
    pub translation_commutes: bool,
    pub pass: bool,
}

/// Interval `(i, j)` of an indecomposable window module, read off its
/// dimension vector; the window algebra is serial, so every indecomposable
/// is an interval with all fibers one-dimensional.
fn interval_of(c: &LineCover, m: &Module) -> Result<(i64, i64), CoverError> {
    let mut lo = None;
    let mut hi = None;
    for p in 0..c.width() {
        match m.dim_at(p) {
            0 => {
                if lo.is_some() && hi.is_none() {
                    hi = Some(c.lo + p as i64 - 1);
                }
            }
            1 => {
                if lo.is_none() {
                    lo = Some(c.lo + p as i64);
                } else if hi.is_some() {
                    return Err(CoverError::Undecided(
                        "window indecomposable with disconnected support".into(),
                    ));
                }
            }
            d => {
                return Err(CoverError::Undecided(format!(
                    "window indecomposable with a {d}-dimensional fiber"
                )))
            }
        }
    }
    match (lo, hi) {
        (Some(a), Some(b)) => Ok((a, b)),
        (Some(a), None) => Ok((a, c.hi)),
        _ => Err(CoverError::Undecided("zero module in the knitted list".into())),
    }
}

/// Knit the AR quivers of the window algebra and of the orbit algebra,
/// map each interior window vertex to its push-down downstairs, and check
/// every axiom of a covering of valued translation quivers on the interior
/// fragment: surjectivity, fibers = shift orbits, bijections on arrow
/// neighborhoods, valuation sums, preservation of projective/injective
/// ends, and commutation with the translation. Needs the window at least
/// `n + t - 1` wider than `2t`, so the interior fragment covers a full
/// period of the line's AR quiver.
pub fn verify_translation_cover(
    c: &LineCover,
    seed: u64,
) -> Result<TranslationCoverReport, CoverError> {
    let w = c.width() as i64;
    let (n, t) = (c.n as i64, c.t as i64);
    if w - 2 * t < n + t - 1 {
        return Err(CoverError::BoundaryEffect(format!(
            "interior width {} cannot cover a full period of {} vertices",
            w - 2 * t,
            n + t - 1
        )));
    }
    let bounds = KnitBounds {
        seed,
        ..KnitBounds::default()
    };
    let up = match enumerate_with(c.window_algebra(), &bounds) {
        Ok(Verdict::Finite { modules, quiver }) => (modules, quiver),
        Ok(Verdict::ExceededBound { .. }) => return Err(CoverError::NotFinite),
        Err(e) => return Err(CoverError::Undecided(e.to_string())),
    };
    let down = match enumerate_with(c.orbit_algebra(), &bounds) {
        Ok(Verdict::Finite { modules, quiver }) => (modules, quiver),
        Ok(Verdict::ExceededBound { .. }) => return Err(CoverError::NotFinite),
        Err(e) => return Err(CoverError::Undecided(e.to_string())),
    };
    let (ups, tq_up): (Vec<Module>, TranslationQuiver) = up;
    let (downs, tq_down): (Vec<Module>, TranslationQuiver) = down;

    let intervals: Vec<(i64, i64)> = ups
        .iter()
        .map(|m| interval_of(c, m))
        .collect::<Result<_, _>>()?;
    let margin = |x: usize| (intervals[x].0 - c.lo).min(c.hi - intervals[x].1);

    // The vertex map, defined wherever the push-down is legal.
    let mut phi: Vec<Option<usize>> = vec![None; ups.len()];
    for (x, m) in ups.iter().enumerate() {
        if margin(x) < 1 {
            continue;
        }
        let pushed = push_down(c, &WindowModule::new(c, m.clone()))?;
        if is_indecomposable(&pushed, seed) != Indecomposability::Yes {
            return Err(CoverError::Undecided(format!(
                "push-down of interval {:?} did not certify as indecomposable",
                intervals[x]
            )));
        }
        let matches: Vec<usize> = (0..downs.len())
            .filter(|&d| iso_between_indecs(&pushed, &downs[d]).is_some())
            .collect();
        if matches.len() != 1 {
            return Err(CoverError::Undecided(format!(
                "push-down of interval {:?} matched {} downstairs classes",
                intervals[x],
                matches.len()
            )));
        }
        phi[x] = Some(matches[0]);
    }
    let fragment: Vec<usize> = (0..ups.len()).filter(|&x| margin(x) >= t).collect();

    // (1) Surjectivity from the interior fragment alone.
    let mut hit = vec![false; downs.len()];
    for &x in &fragment {
        hit[phi[x].expect("fragment vertices have margin >= t >= 1")] = true;
    }
    let surjective = hit.iter().all(|&h| h);

    // (2) Constant on shift orbits: the shifted interval, wherever the map
    // is defined at all, pushes to the same class.
    let by_interval: BTreeMap<(i64, i64), usize> = intervals
        .iter()
        .enumerate()
        .map(|(x, &iv)| (iv, x))
        .collect();
    let mut constant_on_shifts = true;
    for &x in &fragment {
        let (i, j) = intervals[x];
        for s in [-1i64, 1] {
            if let Some(&y) = by_interval.get(&(i + s * n, j + s * n)) {
                if let Some(py) = phi[y] {
                    constant_on_shifts &= py == phi[x].unwrap();
                }
            }
        }
    }

    // (3) Fibers are exactly the shift orbits, checked within the fragment.
    let mut fibers_are_shift_orbits = true;
    for &x in &fragment {
        for &y in &fragment {
            let same_image = phi[x] == phi[y];
            let (xi, xj) = intervals[x];
            let (yi, yj) = intervals[y];
            let same_orbit = xj - xi == yj - yi && (xi - yi).rem_euclid(n) == 0;
            fibers_are_shift_orbits &= same_image == same_orbit;
        }
    }

    // (4)/(5) Arrow neighborhoods and valuations. Neighbors of a fragment
    // vertex have margin >= t - 1 >= 1, so the map is defined on them.
    let mut neighbor_bijections = true;
    let mut valuation_sums = true;
    for &x in &fragment {
        let px = phi[x].unwrap();
        let up_out: Vec<(usize, (usize, usize))> = tq_up
            .arrows
            .iter()
            .filter(|&&(s, _, _)| s == x)
            .map(|&(_, y, v)| (y, v))
            .collect();
        let down_out: Vec<(usize, (usize, usize))> = tq_down
            .arrows
            .iter()
            .filter(|&&(s, _, _)| s == px)
            .map(|&(_, y, v)| (y, v))
            .collect();
        let up_in: Vec<(usize, (usize, usize))> = tq_up
            .arrows
            .iter()
            .filter(|&&(_, d, _)| d == x)
            .map(|&(z, _, v)| (z, v))
            .collect();
        let down_in: Vec<(usize, (usize, usize))> = tq_down
            .arrows
            .iter()
            .filter(|&&(_, d, _)| d == px)
            .map(|&(z, _, v)| (z, v))
            .collect();

        // Out-neighbors: φ must biject the arrow set x⁺ onto (φx)⁺.
        let img_out: Vec<usize> = up_out
            .iter()
            .map(|&(y, _)| phi[y].expect("out-neighbors of the fragment have margin >= 1"))
            .collect();
        let mut uniq_out = img_out.clone();
        uniq_out.sort_unstable();
        uniq_out.dedup();
        let mut down_out_targets: Vec<usize> = down_out.iter().map(|&(a, _)| a).collect();
        down_out_targets.sort_unstable();
        neighbor_bijections &=
            uniq_out.len() == img_out.len() && uniq_out == down_out_targets;

        let img_in: Vec<usize> = up_in
            .iter()
            .map(|&(z, _)| phi[z].expect("in-neighbors of the fragment have margin >= 1"))
            .collect();
        let mut uniq_in = img_in.clone();
        uniq_in.sort_unstable();
        uniq_in.dedup();
        let mut down_in_sources: Vec<usize> = down_in.iter().map(|&(a, _)| a).collect();
        down_in_sources.sort_unstable();
        neighbor_bijections &= uniq_in.len() == img_in.len() && uniq_in == down_in_sources;

        // Valuations: each downstairs arrow's value is the sum over the
        // fiber of the upstairs values (first component on the out side,
        // second on the in side).
        for &(a, (u, _)) in &down_out {
            let s: usize = up_out
                .iter()
                .filter(|&&(y, _)| phi[y] == Some(a))
                .map(|&(_, (vy, _))| vy)
                .sum();
            valuation_sums &= s == u;
        }
        for &(b, (_, u2)) in &down_in {
            let s: usize = up_in
                .iter()
                .filter(|&&(z, _)| phi[z] == Some(b))
                .map(|&(_, (_, vz))| vz)
                .sum();
            valuation_sums &= s == u2;
        }
    }

    // (6) Projective and injective vertices go to projective and injective
    // vertices; on the line both ends behave like the cycle's.
    let mut ends_preserved = true;
    for &x in &fragment {
        let px = phi[x].unwrap();
        ends_preserved &= tq_up.projective[x] == tq_down.projective[px];
        ends_preserved &= tq_up.injective[x] == tq_down.injective[px];
    }

    // Translation: τ downstairs of the image is the image of τ upstairs.
    let mut translation_commutes = true;
    for &x in &fragment {
        let px = phi[x].unwrap();
        match tq_up.tau[x] {
            None => translation_commutes &= tq_down.tau[px].is_none(),
            Some(tx) => {
                let ptx = phi[tx].ok_or_else(|| {
                    CoverError::BoundaryEffect(
                        "the translate of a fragment vertex left the window".into(),
                    )
                })?;
                translation_commutes &= tq_down.tau[px] == Some(ptx);
            }
        }
    }

    let pass = surjective
        && constant_on_shifts
        && fibers_are_shift_orbits
        && neighbor_bijections
        && valuation_sums
        && ends_preserved
        && translation_commutes;
    Ok(TranslationCoverReport {
        fragment_vertices: fragment.len(),
        surjective,
        constant_on_shifts,
        fibers_are_shift_orbits,
        neighbor_bijections,
        valuation_sums,
        ends_preserved,
        translation_commutes,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdmod::same_module;

    const SEED: u64 = 0xA12;

    fn cover(n: usize, t: usize, lo: i64, hi: i64) -> LineCover {
        LineCover::new(n, t, lo, hi).expect("window fits")
    }

    #[test]
    fn orbit_algebra_has_the_cyclic_dimensions() {
        for (n, t, lo, hi) in [(1, 2, -3, 2), (2, 2, -6, 5), (2, 3, -9, 8), (3, 2, -6, 5)] {
            // The constructor itself audits every graded piece of both
            // algebras along the way.
            let c = cover(n, t, lo, hi);
            assert_eq!(c.orbit_algebra().dim(), n * t);
            assert_eq!(c.orbit_algebra().num_idempotents(), n);
            assert_eq!(c.window_algebra().num_idempotents(), c.width());
        }
        assert!(matches!(
            LineCover::new(1, 2, -2, 2),
            Err(CoverError::WindowTooSmall(_))
        ));
        assert!(matches!(
            LineCover::new(2, 2, 1, 8),
            Err(CoverError::WindowTooSmall(_))
        ));
    }

    #[test]
    fn intervals_and_their_guards() {
        let c = cover(1, 3, -4, 4);
        let m = interval_module(&c, 0, 2).unwrap();
        assert_eq!(m.support, Some((0, 2)));
        assert_eq!(m.margin(&c), 2);
        assert_eq!(m.module.total_dim(), 3);
        assert!(is_projective(&m.module));
        let s = interval_module(&c, 0, 0).unwrap();
        assert!(!is_projective(&s.module));
        assert!(matches!(
            interval_module(&c, 0, 3),
            Err(CoverError::IntervalTooLong { len: 4, t: 3 })
        ));
        assert!(matches!(
            interval_module(&c, -9, 0),
            Err(CoverError::OutOfWindow { .. })
        ));
    }

    #[test]
    fn interval_hom_formula_matches_the_solved_spaces() {
        // Dual route: the closed-form count against the generic
        // presentation-based Hom solver, across every interval pair in a
        // central patch of the window.
        let c = cover(1, 3, -4, 4);
        let mut pairs = 0;
        let mut nonzero = 0;
        for a in -2..=1 {
            for b in a..(a + 3).min(3) {
                for p in -2..=1 {
                    for q in p..(p + 3).min(3) {
                        let m = interval_module(&c, a, b).unwrap();
                        let n = interval_module(&c, p, q).unwrap();
                        let solved = hom_space(&m.module, &n.module).len();
                        assert_eq!(
                            solved,
                            interval_hom_dim((a, b), (p, q)),
                            "Hom([{a},{b}], [{p},{q}])"
                        );
                        pairs += 1;
                        nonzero += usize::from(solved > 0);
                    }
                }
            }
        }
        assert!(pairs > 50 && nonzero > 10);
    }

    #[test]
    fn push_down_hits_the_expected_orbit_modules() {
        let c = cover(1, 2, -3, 2);
        // The full-length interval pushes to the free module of rank one.
        let p = push_down(&c, &interval_module(&c, 0, 1).unwrap()).unwrap();
        assert_eq!(p.dims(), &[2]);
        let free = Module::projective(c.orbit_algebra().clone(), 0);
        assert!(iso_between_indecs(&p, &free).is_some());
        // A vertex pushes to the simple.
        let s = push_down(&c, &interval_module(&c, 0, 0).unwrap()).unwrap();
        assert_eq!(s.dims(), &[1]);

        let c = cover(2, 3, -9, 8);
        let m = interval_module(&c, 0, 2).unwrap();
        let pm = push_down(&c, &m).unwrap();
        assert_eq!(pm.dims(), &[2, 1]);
        assert_eq!(pm.total_dim(), m.module.total_dim());
        assert_eq!(is_indecomposable(&pm, SEED), Indecomposability::Yes);
    }

    #[test]
    fn push_down_is_invariant_under_the_group_action() {
        let c = cover(2, 3, -9, 8);
        let m = interval_module(&c, 0, 2).unwrap();
        for g in [-2i64, -1, 1, 2] {
            let shifted = shift_module(&c, &m, g).unwrap();
            let pg = push_down(&c, &shifted).unwrap();
            let p0 = push_down(&c, &m).unwrap();
            // Same dimensions at every vertex, and honestly isomorphic.
            assert_eq!(pg.dims(), p0.dims(), "shift by {g}");
            assert!(iso_between_indecs(&pg, &p0).is_some());
        }
        assert!(matches!(
            shift_module(&c, &m, 5),
            Err(CoverError::WindowTooSmall(_))
        ));
    }

    #[test]
    fn push_down_preserves_monomorphisms_and_exactness() {
        let c = cover(1, 2, -3, 2);
        // The syzygy inclusion of the simple at 0: [1,1] into [0,1].
        let s = interval_module(&c, 0, 0).unwrap();
        let x = MorphObject::new(presentation(&s.module).syzygy_incl.clone());
        assert!(x.is_mono());
        let px = push_down_morph(&c, &x).unwrap();
        assert!(px.is_mono());
        assert_eq!(px.a().total_dim(), 1);
        assert_eq!(px.b().total_dim(), 2);
        assert!(px.map().is_injective_map());
        // Edge guard: a support touching the boundary refuses to push.
        let edge = interval_module(&c, -3, -3).unwrap();
        assert!(matches!(
            push_down(&c, &edge),
            Err(CoverError::SupportTouchesEdge)
        ));
    }

    #[test]
    fn stabilizer_satisfies_the_cocycle_law() {
        let c = cover(1, 3, -6, 5);
        let m = interval_module(&c, 0, 1).unwrap();
        for (g, h) in [(0, 0), (1, -1), (1, 1), (-1, 2), (2, -1)] {
            assert_eq!(verify_stabilizer(&c, g, h, &m), Ok(true), "({g}, {h})");
        }
        let c2 = cover(2, 2, -6, 7);
        let m2 = interval_module(&c2, 0, 1).unwrap();
        assert_eq!(verify_stabilizer(&c2, 1, 1, &m2), Ok(true));
        assert!(matches!(
            stabilizer_map(&c2, &m2, 10),
            Err(CoverError::WindowTooSmall(_))
        ));
    }

    #[test]
    fn stabilizer_blocks_are_unit_permutations() {
        // In increasing-label coordinates the canonical isomorphism is a
        // relabeling, so each block is a partial permutation matrix; the
        // constructor has already certified it intertwines the actions.
        let c = cover(2, 3, -9, 8);
        let m = interval_module(&c, 0, 2).unwrap();
        let d = stabilizer_map(&c, &m, 1).unwrap();
        for a in 0..2 {
            let blk = d.block(a);
            for r in 0..blk.rows() {
                let ones = (0..blk.cols())
                    .filter(|&j| *blk.at(r, j) == Scalar::one())
                    .count();
                let zeros = (0..blk.cols())
                    .filter(|&j| *blk.at(r, j) == Scalar::zero())
                    .count();
                assert_eq!(ones + zeros, blk.cols());
                assert!(ones <= 1);
            }
        }
    }

    #[test]
    fn precovering_identity_for_the_regular_orbit() {
        let c = cover(1, 2, -3, 2);
        let m = interval_module(&c, 0, 0).unwrap();
        let r = verify_precovering(&c, &m, &m, 3).unwrap();
        assert!(r.pass);
        assert_eq!(r.module_lhs, 1);
        assert_eq!(r.module_rhs, 1);
    }

    #[test]
    fn precovering_identity_with_two_contributing_shifts() {
        // Hom(F[0,1], F[1,2]) over the cyclic algebra with t = 3 is
        // two-dimensional, and exactly the shifts -1 and -2 contribute one
        // dimension each upstairs.
        let c = cover(1, 3, -6, 6);
        let m = interval_module(&c, 0, 1).unwrap();
        let n = interval_module(&c, 1, 2).unwrap();
        let r = verify_precovering(&c, &m, &n, 4).unwrap();
        assert!(r.pass);
        assert_eq!(r.module_lhs, 2);
        assert_eq!(r.module_rhs, 2);
        for (g, d) in &r.module_per_shift {
            let expect = usize::from(*g == -1 || *g == -2);
            assert_eq!(*d, expect, "shift {g}");
        }
        // The dual route, by hand: Σ_g interval counts.
        let by_formula: usize = (-4..=4)
            .map(|g| interval_hom_dim((0, 1), (1 + g, 2 + g)))
            .sum();
        assert_eq!(by_formula, 2);
        // A bound that cannot cover the overlapping shifts is refused.
        assert!(matches!(
            verify_precovering(&c, &m, &n, 0),
            Err(CoverError::WindowTooSmall(_))
        ));
    }

    #[test]
    fn precovering_identity_across_two_orbits() {
        let c = cover(2, 2, -6, 5);
        let m = interval_module(&c, 0, 0).unwrap();
        let n = interval_module(&c, 1, 1).unwrap();
        // Simples over different cyclic vertices: no maps either way, and
        // the morphism-category count sees the projective covers overlap.
        let r = verify_precovering(&c, &m, &n, 3).unwrap();
        assert!(r.pass);
        assert_eq!(r.module_lhs, 0);
        assert_eq!(r.module_rhs, 0);
        let r2 = verify_precovering(&c, &m, &m, 3).unwrap();
        assert!(r2.pass);
        assert_eq!(r2.module_lhs, 1);
    }

    #[test]
    fn ar_sequence_of_an_interior_vertex_pushes_to_the_orbit_mesh() {
        let c = cover(1, 2, -3, 4);
        let m = interval_module(&c, 1, 1).unwrap();
        let r = verify_ar_preservation(&c, &m, SEED).unwrap();
        assert!(r.almost_split);
        // Upstairs the sequence is 0 → [2,2] → [1,2] → [1,1] → 0: the
        // translate is the next vertex up the line.
        let left = WindowModule::new(&c, r.window_ses.left().clone());
        assert_eq!(left.support, Some((2, 2)));
        assert_eq!(r.window_ses.middle().total_dim(), 2);
        // Downstairs: 0 → k → Λ → k → 0 at the unique vertex.
        assert_eq!(r.pushed_ses.left().dims(), &[1]);
        assert_eq!(r.pushed_ses.middle().dims(), &[2]);
        assert_eq!(r.pushed_ses.right().dims(), &[1]);
    }

    #[test]
    fn ar_preservation_across_two_orbits_and_its_guards() {
        let c = cover(2, 2, -6, 5);
        let m = interval_module(&c, 0, 0).unwrap();
        let r = verify_ar_preservation(&c, &m, SEED).unwrap();
        assert!(r.almost_split);
        assert_eq!(r.pushed_ses.middle().total_dim(), 2);
        // Projectives have no sequence ending at them.
        let p = interval_module(&c, 0, 1).unwrap();
        assert!(matches!(
            verify_ar_preservation(&c, &p, SEED),
            Err(CoverError::ProjectiveInput)
        ));
        // Too close to the edge: refused, not truncated.
        let e = interval_module(&c, 4, 4).unwrap();
        assert!(matches!(
            verify_ar_preservation(&c, &e, SEED),
            Err(CoverError::BoundaryEffect(_))
        ));
    }

    #[test]
    fn ar_preservation_lifts_to_the_monomorphism_category() {
        let c = cover(1, 2, -3, 4);
        let s = interval_module(&c, 1, 1).unwrap();
        let x = MorphObject::zero_to(&s.module);
        let r = verify_ar_preservation_morph(&c, &x, SEED).unwrap();
        assert!(r.almost_split);
        // The pushed sequence ends at (0 → S) downstairs; its middle has
        // one more total dimension than its end, as in the trivial-route
        // construction over the orbit algebra.
        assert_eq!(r.pushed_ses.right().total_dim(), 1);
        assert_eq!(
            r.pushed_ses.middle().total_dim(),
            r.pushed_ses.left().total_dim() + 1
        );
        // A projective object of the morphism category is refused.
        let p = interval_module(&c, 1, 2).unwrap();
        let xp = MorphObject::zero_to(&p.module);
        assert!(matches!(
            verify_ar_preservation_morph(&c, &xp, SEED),
            Err(CoverError::ProjectiveInput)
        ));
    }

    #[test]
    fn translation_quiver_covering_for_the_smallest_cycle() {
        let c = cover(1, 2, -3, 4);
        let r = verify_translation_cover(&c, SEED).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.fragment_vertices >= 2);
    }

    #[test]
    fn translation_quiver_covering_for_a_two_vertex_cycle() {
        let c = cover(2, 3, -7, 7);
        let r = verify_translation_cover(&c, SEED).unwrap();
        assert!(r.pass, "{r:?}");
        // The downstairs AR quiver has 2·3 = 6 vertices, all hit.
        assert!(r.surjective);
    }

    #[test]
    fn translation_cover_refuses_a_window_without_a_full_period() {
        let c = cover(2, 2, -3, 2);
        assert!(matches!(
            verify_translation_cover(&c, SEED),
            Err(CoverError::BoundaryEffect(_))
        ));
    }

    #[test]
    fn pushed_projectives_are_the_orbit_projectives() {
        // Full-length intervals are the window's interior projectives and
        // push to the cyclic algebra's projectives, matching the covering
        // picture vertex by vertex.
        let c = cover(2, 3, -9, 8);
        for a in 0..2i64 {
            let p = interval_module(&c, a, a + 2).unwrap();
            let pushed = push_down(&c, &p).unwrap();
            let proj = Module::projective(c.orbit_algebra().clone(), a as usize);
            assert!(iso_between_indecs(&pushed, &proj).is_some());
            assert!(is_projective(&pushed));
        }
        // And the push-down of a shifted projective is literally the same
        // matrix data, not merely isomorphic: the fiber ordering absorbs
        // the relabeling.
        let p = interval_module(&c, 0, 2).unwrap();
        let q = shift_module(&c, &p, 1).unwrap();
        assert!(same_module(
            &push_down(&c, &p).unwrap(),
            &push_down(&c, &q).unwrap()
        ));
    }
}
