//! Ideals of finite Krull-Schmidt windows: full additive subcategories
//! spanned by finitely many pairwise non-isomorphic indecomposables.
//!
//! Morphisms `X -> Y` are stored as coordinate vectors in the basis of
//! `Hom(X, Y)` fixed by the window. The product `I·J` means "`J` first".

mod closure;
mod quiver;
mod transfinite;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::algebra::PathAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{is_zero_vec, zero_vec, Subspace, Vector};
use crate::repmod::{decompose, hom, iso_indecomposable, trace_form_radical, HomSpace, Morphism, Representation};

pub use closure::{resolving_closure, ses_catalog, thick_closure, ClosureReport, Ses, SesCatalog};
pub use quiver::{quiver_dump, QuiverDump, QuiverEdge, QuiverNode};
pub use transfinite::{
    idempotent_decomposition, factorizable_search, radical_power, FactorSearch, transfinite_power, FactorTerm, SearchOutcome,
    SearchReport, IdempotentDecomposition, TransfiniteReport, WitnessNode,
};

static NEXT_WINDOW: AtomicU64 = AtomicU64::new(1);

#[derive(Clone, Debug)]
pub struct WindowObject {
    pub label: String,
    pub module: Representation,
}

/// Structure constants of composition `Hom(y,z) x Hom(x,y) -> Hom(x,z)`:
/// `entries[j][i]` holds the sparse coordinates of `g_j ∘ f_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct CompTensor {
    pub entries: Vec<Vec<Vec<(usize, Scalar)>>>,
}

pub struct Window {
    id: u64,
    algebra: Arc<PathAlgebra>,
    objects: Vec<WindowObject>,
    homs: Vec<HomSpace>,
    comps: Vec<OnceLock<CompTensor>>,
}

impl std::fmt::Debug for Window {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Window").field("objects", &self.labels()).finish()
    }
}

/// A morphism of the window, by endpoints and coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowMorphism {
    pub source: usize,
    pub target: usize,
    pub coords: Vector,
}

impl Window {
    /// Decomposes the inputs and keeps one object per isomorphism class.
    pub fn build(algebra: Arc<PathAlgebra>, modules: Vec<(String, Representation)>) -> Result<Window> {
        let mut objects: Vec<WindowObject> = Vec::new();
        for (label, m) in modules {
            if !crate::repmod::same_algebra(m.algebra(), &algebra) {
                return Err(Error::AlgebraMismatch);
            }
            let parts = decompose(&m)?.modules();
            let many = parts.len() > 1;
            'next: for (k, p) in parts.into_iter().enumerate() {
                for o in &objects {
                    if o.module.dims() == p.dims() && iso_indecomposable(&o.module, &p)? {
                        continue 'next;
                    }
                }
                let label = if many { format!("{label}#{}", k + 1) } else { label.clone() };
                objects.push(WindowObject { label, module: p });
            }
        }
        Window::from_objects(algebra, objects)
    }

    /// Takes the objects as given; they must be indecomposable and pairwise
    /// non-isomorphic.
    pub fn from_objects(algebra: Arc<PathAlgebra>, objects: Vec<WindowObject>) -> Result<Window> {
        let n = objects.len();
        let homs = (0..n * n)
            .into_par_iter()
            .map(|k| hom(&objects[k / n].module, &objects[k % n].module))
            .collect::<Result<Vec<_>>>()?;
        Ok(Window::from_parts(algebra, objects, homs))
    }

    pub(crate) fn from_parts(algebra: Arc<PathAlgebra>, objects: Vec<WindowObject>, homs: Vec<HomSpace>) -> Window {
        let n = objects.len();
        Window {
            id: NEXT_WINDOW.fetch_add(1, Ordering::Relaxed),
            algebra,
            objects,
            homs,
            comps: (0..n * n * n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn empty(algebra: Arc<PathAlgebra>) -> Window {
        Window::from_parts(algebra, vec![], vec![])
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[WindowObject] {
        &self.objects
    }

    pub fn object(&self, x: usize) -> &Representation {
        &self.objects[x].module
    }

    pub fn labels(&self) -> Vec<String> {
        self.objects.iter().map(|o| o.label.clone()).collect()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o.label == label)
    }

    /// Index of the window object isomorphic to an indecomposable `m`.
    pub fn identify(&self, m: &Representation) -> Result<Option<usize>> {
        for (i, o) in self.objects.iter().enumerate() {
            if o.module.dims() == m.dims() && iso_indecomposable(&o.module, m)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn hom(&self, x: usize, y: usize) -> &HomSpace {
        &self.homs[x * self.len() + y]
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.hom(x, y).dim()
    }

    pub fn morphism(&self, f: &WindowMorphism) -> Morphism {
        self.hom(f.source, f.target).from_coords(&f.coords)
    }

    pub fn coords(&self, x: usize, y: usize, f: &Morphism) -> Vector {
        self.hom(x, y).coords(f)
    }

    pub fn identity(&self, x: usize) -> Vector {
        self.coords(x, x, &Morphism::identity(self.object(x)))
    }

    pub fn composition(&self, x: usize, y: usize, z: usize) -> &CompTensor {
        let n = self.len();
        self.comps[(x * n + y) * n + z].get_or_init(|| {
            let (hf, hg, hr) = (self.hom(x, y), self.hom(y, z), self.hom(x, z));
            let entries = hg
                .basis
                .iter()
                .map(|g| {
                    hf.basis
                        .iter()
                        .map(|f| {
                            hr.free
                                .iter()
                                .enumerate()
                                .filter_map(|(k, &(v, r, c))| {
                                    let (gb, fb) = (&g.blocks[v], &f.blocks[v]);
                                    let mut s = Scalar::zero();
                                    for t in 0..gb.cols() {
                                        let (a, b) = (&gb[(r, t)], &fb[(t, c)]);
                                        if !a.is_zero() && !b.is_zero() {
                                            s.add_mul(a, b);
                                        }
                                    }
                                    (!s.is_zero()).then_some((k, s))
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect();
            CompTensor { entries }
        })
    }

    pub(crate) fn set_composition(&self, x: usize, y: usize, z: usize, t: CompTensor) {
        let n = self.len();
        let _ = self.comps[(x * n + y) * n + z].set(t);
    }

    /// Coordinates of `g ∘ f` for `f: x -> y`, `g: y -> z`.
    pub fn compose(&self, x: usize, y: usize, z: usize, g: &[Scalar], f: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.hom_dim(x, z));
        if is_zero_vec(g) || is_zero_vec(f) {
            return out;
        }
        let t = self.composition(x, y, z);
        for (j, gj) in g.iter().enumerate() {
            if gj.is_zero() {
                continue;
            }
            for (i, fi) in f.iter().enumerate() {
                if fi.is_zero() {
                    continue;
                }
                let c = gj.mul_ref(fi);
                for (k, s) in &t.entries[j][i] {
                    out[*k].add_mul(&c, s);
                }
            }
        }
        out
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n * n).map(|k| (k / n, k % n)).collect()
    }

    fn check(&self, i: &MorphismIdeal) -> Result<()> {
        if i.window != self.id {
            return Err(Error::WindowMismatch);
        }
        Ok(())
    }

    fn ideal_from(&self, subs: Vec<Subspace>) -> MorphismIdeal {
        MorphismIdeal { window: self.id, n: self.len(), subs }
    }

    pub fn zero_ideal(&self) -> MorphismIdeal {
        self.ideal_from(self.pairs().into_iter().map(|(x, y)| Subspace::zero(self.hom_dim(x, y))).collect())
    }

    /// The ideal of all morphisms.
    pub fn full_ideal(&self) -> MorphismIdeal {
        self.ideal_from(self.pairs().into_iter().map(|(x, y)| Subspace::full(self.hom_dim(x, y))).collect())
    }

    /// Builds an ideal from per-pair subspaces, checking two-sided closure.
    pub fn ideal(&self, subs: Vec<Subspace>) -> Result<MorphismIdeal> {
        let i = self.ideal_from(subs);
        if i.subs.len() != self.len() * self.len() {
            return Err(Error::Parse("ideal has the wrong number of pairs".into()));
        }
        if !self.is_two_sided(&i) {
            return Err(Error::Parse("subspaces are not closed under composition".into()));
        }
        Ok(i)
    }

    /// Checks `b ∘ u ∘ a ∈ I` over basis morphisms `a`, `b` and basis vectors `u`.
    pub fn is_two_sided(&self, i: &MorphismIdeal) -> bool {
        let n = self.len();
        self.pairs().into_par_iter().all(|(x, y)| {
            let sub = i.get(x, y);
            sub.basis().iter().all(|u| {
                (0..n).all(|z| {
                    self.hom(z, x).basis.iter().enumerate().all(|(ai, _)| {
                        let mut a = zero_vec(self.hom_dim(z, x));
                        a[ai] = Scalar::one();
                        i.get(z, y).contains(&self.compose(z, x, y, u, &a))
                    }) && self.hom(y, z).basis.iter().enumerate().all(|(bi, _)| {
                        let mut b = zero_vec(self.hom_dim(y, z));
                        b[bi] = Scalar::one();
                        i.get(x, z).contains(&self.compose(x, y, z, &b, u))
                    })
                })
            })
        })
    }
}

/// A two-sided ideal of a window: one subspace of `Hom(X, Y)` per pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismIdeal {
    window: u64,
    n: usize,
    subs: Vec<Subspace>,
}

impl MorphismIdeal {
    pub fn get(&self, x: usize, y: usize) -> &Subspace {
        &self.subs[x * self.n + y]
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subs
    }

    pub fn dims(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| (0..self.n).map(|y| self.get(x, y).dim()).collect()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.subs.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.subs.iter().all(Subspace::is_zero)
    }

    pub fn contains(&self, f: &WindowMorphism) -> bool {
        self.get(f.source, f.target).contains(&f.coords)
    }

    pub fn is_subideal_of(&self, o: &MorphismIdeal) -> bool {
        self.subs.iter().zip(&o.subs).all(|(a, b)| a.is_subspace_of(b))
    }

    pub fn intersect(&self, o: &MorphismIdeal) -> MorphismIdeal {
        MorphismIdeal {
            window: self.window,
            n: self.n,
            subs: self.subs.iter().zip(&o.subs).map(|(a, b)| a.intersect(b)).collect(),
        }
    }

    pub fn sum(&self, o: &MorphismIdeal) -> MorphismIdeal {
        MorphismIdeal {
            window: self.window,
            n: self.n,
            subs: self.subs.iter().zip(&o.subs).map(|(a, b)| a.sum(b)).collect(),
        }
    }
}

/// `rad(X, Y)`: everything for distinct objects, `rad End(X)` on the diagonal.
pub fn radical_ideal(w: &Window) -> Result<MorphismIdeal> {
    let chr = w.algebra.field().characteristic();
    let subs = w
        .pairs()
        .into_par_iter()
        .map(|(x, y)| {
            if x != y {
                Ok(Subspace::full(w.hom_dim(x, y)))
            } else {
                trace_form_radical(w.hom(x, x), chr)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(w.ideal_from(subs))
}

/// Smallest ideal containing `gens`: per pair, the span of `b ∘ g ∘ a`.
pub fn ideal_generated(w: &Window, gens: &[WindowMorphism]) -> MorphismIdeal {
    let n = w.len();
    let subs = w
        .pairs()
        .into_par_iter()
        .map(|(x, y)| {
            let dim = w.hom_dim(x, y);
            let mut sub = Subspace::zero(dim);
            for g in gens {
                if sub.is_full() {
                    break;
                }
                // g ∘ a for every basis a: x -> g.source
                let ga: Vec<Vector> = (0..w.hom_dim(x, g.source))
                    .map(|ai| w.compose(x, g.source, g.target, &g.coords, &unit(w.hom_dim(x, g.source), ai)))
                    .filter(|v| !is_zero_vec(v))
                    .collect();
                let mut vecs = Vec::new();
                for bi in 0..w.hom_dim(g.target, y) {
                    let b = unit(w.hom_dim(g.target, y), bi);
                    for u in &ga {
                        vecs.push(w.compose(x, g.target, y, &b, u));
                    }
                }
                sub = sub.extend(vecs);
            }
            sub
        })
        .collect();
    let _ = n;
    w.ideal_from(subs)
}

pub(crate) fn unit(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

/// `I·J`: per pair `(X, Y)` the span of `i ∘ j` with `j ∈ J(X, Z)` and
/// `i ∈ I(Z, Y)` over all objects `Z`.
pub fn ideal_product(w: &Window, i: &MorphismIdeal, j: &MorphismIdeal) -> Result<MorphismIdeal> {
    w.check(i)?;
    w.check(j)?;
    let n = w.len();
    let subs = w
        .pairs()
        .into_par_iter()
        .map(|(x, y)| {
            let mut sub = Subspace::zero(w.hom_dim(x, y));
            for z in 0..n {
                if sub.is_full() {
                    break;
                }
                let (jj, ii) = (j.get(x, z), i.get(z, y));
                if jj.is_zero() || ii.is_zero() {
                    continue;
                }
                let mut vecs = Vec::new();
                for b in ii.basis() {
                    for a in jj.basis() {
                        vecs.push(w.compose(x, z, y, b, a));
                    }
                }
                sub = sub.extend(vecs);
            }
            sub
        })
        .collect();
    Ok(w.ideal_from(subs))
}

pub fn is_idempotent(w: &Window, i: &MorphismIdeal) -> Result<bool> {
    Ok(ideal_product(w, i, i)? == *i)
}

/// Objects whose identity lies in `I`.
pub fn identity_objects(w: &Window, i: &MorphismIdeal) -> Result<Vec<usize>> {
    w.check(i)?;
    Ok((0..w.len()).filter(|&x| i.get(x, x).contains(&w.identity(x))).collect())
}

/// The sub-ideal generated by the identities contained in `I`.
pub fn identity_part(w: &Window, i: &MorphismIdeal) -> Result<MorphismIdeal> {
    let objs = identity_objects(w, i)?;
    Ok(factor_through_ideal(w, &objs))
}

/// Morphisms factoring through objects of `s`: per pair, the span of
/// `β ∘ α` with `α: X -> T`, `β: T -> Y`, `T ∈ s`.
pub fn factor_through_ideal(w: &Window, s: &[usize]) -> MorphismIdeal {
    let subs = w
        .pairs()
        .into_par_iter()
        .map(|(x, y)| {
            let mut sub = Subspace::zero(w.hom_dim(x, y));
            for &t in s {
                if sub.is_full() {
                    break;
                }
                let (da, db) = (w.hom_dim(x, t), w.hom_dim(t, y));
                let mut vecs = Vec::with_capacity(da * db);
                for bi in 0..db {
                    for ai in 0..da {
                        vecs.push(w.compose(x, t, y, &unit(db, bi), &unit(da, ai)));
                    }
                }
                sub = sub.extend(vecs);
            }
            sub
        })
        .collect();
    w.ideal_from(subs)
}
