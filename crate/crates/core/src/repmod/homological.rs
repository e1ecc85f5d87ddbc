//! Projectives, injectives, duality, syzygies, stable Hom and the
//! Auslander-Reiten translate.

use std::sync::Arc;

use super::{decompose, hom, is_indecomposable, iso_indecomposable, same_algebra, HomSpace, Morphism, Representation};
use crate::algebra::PathAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace, Vector};

fn local_index(a: &PathAlgebra, v: usize) -> Vec<usize> {
    let mut idx = vec![usize::MAX; a.dim()];
    for w in 0..a.num_vertices() {
        for (i, b) in a.basis_between(v, w).into_iter().enumerate() {
            idx[b] = i;
        }
    }
    idx
}

fn build_projective(a: &PathAlgebra, v: usize) -> (Vec<usize>, Vec<Mat>) {
    let n = a.num_vertices();
    let dims: Vec<usize> = (0..n).map(|w| a.basis_between(v, w).len()).collect();
    let idx = local_index(a, v);
    let maps = a
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, arrow)| {
            let mut m = Mat::zeros(dims[arrow.target], dims[arrow.source]);
            for (j, b) in a.basis_between(v, arrow.source).into_iter().enumerate() {
                let path = [&a.basis()[b].path[..], &[ai]].concat();
                for (k, c) in a.reduce_path(&path) {
                    m[(idx[k], j)] = c;
                }
            }
            m
        })
        .collect();
    (dims, maps)
}

/// The indecomposable projective `P(v) = A e_v`, spanned by paths starting at `v`.
pub fn projective(a: &Arc<PathAlgebra>, v: usize) -> Representation {
    let all = a
        .projective_cache()
        .get_or_init(|| (0..a.num_vertices()).map(|v| build_projective(a, v)).collect());
    let (dims, maps) = all[v].clone();
    Representation::from_parts(a.clone(), dims, maps)
}

pub fn simple(a: &Arc<PathAlgebra>, v: usize) -> Representation {
    let mut dims = vec![0; a.num_vertices()];
    dims[v] = 1;
    let maps = a.quiver().arrows.iter().map(|ar| Mat::zeros(dims[ar.target], dims[ar.source])).collect();
    Representation::from_parts(a.clone(), dims, maps)
}

/// Vector-space dual, a representation of the opposite algebra.
pub fn dual(m: &Representation) -> Representation {
    let op = m.algebra().opposite();
    Representation::from_parts(op, m.dims().to_vec(), m.maps().iter().map(Mat::transpose).collect())
}

/// The injective envelope `I(v)` of the simple at `v`.
pub fn injective(a: &Arc<PathAlgebra>, v: usize) -> Representation {
    let op = a.opposite();
    dual(&projective(&op, v)).rebind(a.clone()).expect("double opposite is the algebra")
}

/// Right multiplication by an arrow `a: u -> w`, as a map `P(w) -> P(u)`.
fn right_mul(a: &Arc<PathAlgebra>, arrow: usize) -> Morphism {
    let ar = &a.quiver().arrows[arrow];
    let (u, w) = (ar.source, ar.target);
    let idx = local_index(a, u);
    let blocks = (0..a.num_vertices())
        .map(|x| {
            let src = a.basis_between(w, x);
            let mut m = Mat::zeros(a.basis_between(u, x).len(), src.len());
            for (j, b) in src.into_iter().enumerate() {
                let path = [&[arrow][..], &a.basis()[b].path[..]].concat();
                for (k, c) in a.reduce_path(&path) {
                    m[(idx[k], j)] = c;
                }
            }
            m
        })
        .collect();
    Morphism { blocks }
}

pub fn is_selfinjective(a: &Arc<PathAlgebra>) -> bool {
    *a.selfinjective_cache().get_or_init(|| {
        let n = a.num_vertices();
        let inj: Vec<Representation> = (0..n).map(|w| injective(a, w)).collect();
        (0..n).all(|v| {
            let p = projective(a, v);
            inj.iter().any(|i| iso_indecomposable(&p, i).unwrap_or(false))
        })
    })
}

#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: Representation,
    pub surjection: Morphism,
    /// Vertex of each indecomposable summand, in order.
    pub tops: Vec<usize>,
}

/// Minimal projective cover, generated by a basis of a complement of `rad M`.
pub fn projective_cover(m: &Representation) -> ProjectiveCover {
    let a = m.algebra().clone();
    let rad = m.radical_subspaces();
    let mut gens: Vec<(usize, usize)> = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        gens.extend(r.complement_positions().into_iter().map(|c| (v, c)));
    }
    let tops: Vec<usize> = gens.iter().map(|g| g.0).collect();
    if gens.is_empty() {
        let z = Representation::zero(a);
        let s = Morphism::zero(&z, m);
        return ProjectiveCover { module: z, surjection: s, tops };
    }
    let parts: Vec<Representation> = tops.iter().map(|&v| projective(&a, v)).collect();
    let module = Representation::direct_sum_all(&parts).expect("same algebra");
    let blocks = (0..a.num_vertices())
        .map(|x| {
            let mut cols: Vec<Vector> = Vec::new();
            for &(v, c) in &gens {
                for b in a.basis_between(v, x) {
                    cols.push(m.basis_action(b).col(c));
                }
            }
            Mat::from_cols(m.dims()[x], &cols)
        })
        .collect();
    let surjection = Morphism { blocks };
    debug_assert!(surjection.is_intertwiner(&module, m));
    ProjectiveCover { module, surjection, tops }
}

pub fn is_projective(m: &Representation) -> bool {
    projective_cover(m).module.dim() == m.dim()
}

/// Drops projective summands.
fn strip_projectives(m: Representation) -> Result<Representation> {
    if m.is_zero() {
        return Ok(m);
    }
    let rep = decompose(&m)?;
    let keep: Vec<Representation> =
        rep.modules().into_iter().filter(|x| !is_projective(x)).collect();
    if keep.is_empty() {
        return Ok(Representation::zero(m.algebra().clone()));
    }
    if keep.len() == rep.len() {
        return Ok(m);
    }
    Representation::direct_sum_all(&keep)
}

/// Kernel of the projective cover, without projective summands.
pub fn syzygy(m: &Representation) -> Result<Representation> {
    let cover = projective_cover(m);
    let (k, _) = cover.surjection.kernel(&cover.module);
    // over a selfinjective algebra the kernel of a minimal cover has none
    if is_selfinjective(m.algebra()) {
        return Ok(k);
    }
    strip_projectives(k)
}

/// `D Ω D M`, the cokernel of the injective envelope.
pub fn cosyzygy(m: &Representation) -> Result<Representation> {
    let a = m.algebra().clone();
    if !is_selfinjective(&a) {
        return Err(Error::NotSelfinjective);
    }
    let d = dual(m);
    let om = syzygy(&d)?;
    dual(&om).rebind(a)
}

/// `Hom(M, N)` modulo the maps factoring through a projective.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub hom: HomSpace,
    /// Coordinates of the maps that factor through a projective module.
    pub projective_part: Subspace,
}

impl StableHom {
    pub fn dim(&self) -> usize {
        self.hom.dim() - self.projective_part.dim()
    }

    /// Hom basis elements whose classes form a basis of the quotient.
    pub fn complement(&self) -> Vec<Morphism> {
        self.projective_part
            .complement_positions()
            .into_iter()
            .map(|i| self.hom.basis[i].clone())
            .collect()
    }
}

/// A map into `N` factors through a projective iff it factors through the
/// projective cover of `N`.
pub fn stable_hom(m: &Representation, n: &Representation) -> Result<StableHom> {
    let h = hom(m, n)?;
    let cover = projective_cover(n);
    let through = hom(m, &cover.module)?;
    let vecs = through.basis.iter().map(|a| h.coords(&cover.surjection.compose(a))).collect();
    Ok(StableHom { projective_part: Subspace::new(h.dim(), vecs), hom: h })
}

/// Transpose `Tr M = coker Hom(p1, A)` of a minimal presentation
/// `P1 -> P0 -> M -> 0`, as a representation of the opposite algebra.
pub fn transpose(m: &Representation) -> Result<Representation> {
    let a = m.algebra().clone();
    let c0 = projective_cover(m);
    let (k, inc) = c0.surjection.kernel(&c0.module);
    let c1 = projective_cover(&k);
    let p1 = inc.compose(&c1.surjection);
    let n = a.num_vertices();
    let mut h1 = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    for v in 0..n {
        let pv = projective(&a, v);
        let hv1 = hom(&c1.module, &pv)?;
        let hv0 = hom(&c0.module, &pv)?;
        let img = hv0.basis.iter().map(|al| hv1.coords(&al.compose(&p1))).collect();
        w.push(Subspace::new(hv1.dim(), img));
        h1.push(hv1);
    }
    let comp: Vec<Vec<usize>> = w.iter().map(Subspace::complement_positions).collect();
    let dims: Vec<usize> = comp.iter().map(Vec::len).collect();
    let maps = a
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, ar)| {
            let (u, t) = (ar.source, ar.target);
            let rho = right_mul(&a, ai);
            let cols: Vec<Vector> = comp[t]
                .iter()
                .map(|&i| w[u].quotient_coords(&h1[u].coords(&rho.compose(&h1[t].basis[i]))))
                .collect();
            Mat::from_cols(dims[u], &cols)
        })
        .collect();
    Ok(Representation::from_parts(a.opposite(), dims, maps))
}

/// `τ M = D Tr M` for indecomposable `M`; zero on projectives.
pub fn ar_translate(m: &Representation) -> Result<Representation> {
    if !is_indecomposable(m)? {
        return Err(Error::NotIndecomposable);
    }
    let a = m.algebra().clone();
    if is_projective(m) {
        return Ok(Representation::zero(a));
    }
    let tr = transpose(m)?;
    let t = dual(&tr);
    if !same_algebra(t.algebra(), &a) {
        return Err(Error::AlgebraMismatch);
    }
    t.rebind(a)
}
