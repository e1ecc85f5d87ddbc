//! Finite-dimensional representations of bound quivers, intertwiners and
//! Hom spaces.

mod decompose;
mod homological;

use std::sync::Arc;

use crate::algebra::PathAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{rref, kernel_from_rref, zero_vec, Mat, Subspace, Vector};

pub use decompose::{decompose, is_indecomposable, iso, iso_indecomposable, DecompositionReport, Summand};
pub use homological::{
    ar_translate, cosyzygy, dual, injective, is_selfinjective, projective, projective_cover, simple,
    is_projective, stable_hom, syzygy, transpose, ProjectiveCover, StableHom,
};

/// A representation: one vector space per vertex and one matrix per arrow,
/// of shape `dims[target] x dims[source]`.
#[derive(Clone)]
pub struct Representation {
    algebra: Arc<PathAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let q = self.algebra.quiver();
        let mut s = f.debug_struct("Representation");
        s.field("dims", &self.dims);
        for (a, m) in q.arrows.iter().zip(&self.maps) {
            s.field(&a.name, m);
        }
        s.finish()
    }
}

impl PartialEq for Representation {
    fn eq(&self, o: &Self) -> bool {
        same_algebra(&self.algebra, &o.algebra) && self.dims == o.dims && self.maps == o.maps
    }
}

pub(crate) fn same_algebra(a: &Arc<PathAlgebra>, b: &Arc<PathAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Representation {
    /// Validates shapes, field membership and every relation.
    pub fn new(algebra: Arc<PathAlgebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Self> {
        let q = algebra.quiver();
        let bad = |m: String| Err(Error::InvalidRepresentation(m));
        if dims.len() != q.vertices.len() {
            return bad(format!("expected {} vertex dimensions, got {}", q.vertices.len(), dims.len()));
        }
        if maps.len() != q.arrows.len() {
            return bad(format!("expected {} arrow matrices, got {}", q.arrows.len(), maps.len()));
        }
        let field = algebra.field();
        let mut maps = maps;
        for (a, m) in q.arrows.iter().zip(maps.iter_mut()) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return bad(format!(
                    "matrix for {} is {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                ));
            }
            let data = m.data().iter().map(|x| field.element(x)).collect::<Result<Vec<_>>>();
            match data {
                Ok(d) => *m = Mat::from_flat(m.rows(), m.cols(), d),
                Err(e) => return bad(format!("matrix for {}: {e}", a.name)),
            }
        }
        let rep = Representation { algebra, dims, maps };
        for (i, r) in rep.algebra.relations().iter().enumerate() {
            let (s, t) = rep.algebra.quiver().endpoints(&r.terms[0].0).unwrap();
            let mut acc = Mat::zeros(rep.dims[t], rep.dims[s]);
            for (p, c) in &r.terms {
                acc.add_scaled(c, &rep.path_matrix(p));
            }
            if !acc.is_zero() {
                return bad(format!("relation {} does not vanish", i + 1));
            }
        }
        Ok(rep)
    }

    /// Builds without checking; callers guarantee the module axioms.
    pub(crate) fn from_parts(algebra: Arc<PathAlgebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Self {
        debug_assert_eq!(maps.len(), algebra.num_arrows());
        Representation { algebra, dims, maps }
    }

    pub fn zero(algebra: Arc<PathAlgebra>) -> Self {
        let dims = vec![0; algebra.num_vertices()];
        let maps = algebra.quiver().arrows.iter().map(|_| Mat::zeros(0, 0)).collect();
        Representation { algebra, dims, maps }
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Mat {
        &self.maps[arrow]
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Matrix of a traversal path (first arrow applied first).
    pub fn path_matrix(&self, path: &[usize]) -> Mat {
        let mut m = self.maps[path[0]].clone();
        for &a in &path[1..] {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of an algebra basis element, as a `dims[target] x dims[source]` block.
    pub fn basis_action(&self, b: usize) -> Mat {
        let e = &self.algebra.basis()[b];
        if e.path.is_empty() {
            Mat::identity(self.dims[e.source])
        } else {
            self.path_matrix(&e.path)
        }
    }

    /// Same data viewed over a structurally equal algebra.
    pub fn rebind(self, algebra: Arc<PathAlgebra>) -> Result<Self> {
        if !same_algebra(&self.algebra, &algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation { algebra, ..self })
    }

    pub fn direct_sum(&self, o: &Representation) -> Result<Representation> {
        Representation::direct_sum_all(&[self.clone(), o.clone()])
    }

    pub fn direct_sum_all(parts: &[Representation]) -> Result<Representation> {
        let Some(first) = parts.first() else {
            return Err(Error::InvalidRepresentation("empty direct sum has no algebra".into()));
        };
        if parts.iter().any(|p| !same_algebra(&p.algebra, &first.algebra)) {
            return Err(Error::AlgebraMismatch);
        }
        let n = first.dims.len();
        let dims = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..first.maps.len())
            .map(|a| Mat::block_diag(&parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
            .collect();
        Ok(Representation { algebra: first.algebra.clone(), dims, maps })
    }

    /// Canonical injections and projections of a direct sum of `parts`.
    pub fn sum_structure(parts: &[Representation]) -> (Vec<Morphism>, Vec<Morphism>) {
        let n = parts.first().map_or(0, |p| p.dims.len());
        let totals: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let mut offs = vec![0; n];
        let mut inc = Vec::new();
        let mut proj = Vec::new();
        for p in parts {
            let mut ib = Vec::new();
            let mut pb = Vec::new();
            for v in 0..n {
                let mut i = Mat::zeros(totals[v], p.dims[v]);
                i.set_block(offs[v], 0, &Mat::identity(p.dims[v]));
                pb.push(i.transpose());
                ib.push(i);
                offs[v] += p.dims[v];
            }
            inc.push(Morphism { blocks: ib });
            proj.push(Morphism { blocks: pb });
        }
        (inc, proj)
    }

    /// Subrepresentation on invariant subspaces, in their echelon bases, and
    /// its inclusion.
    pub fn subrepresentation(&self, subs: &[Subspace]) -> (Representation, Morphism) {
        let q = self.algebra.quiver();
        let dims: Vec<usize> = subs.iter().map(Subspace::dim).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let cols: Vec<Vector> = subs[arrow.source]
                    .basis()
                    .iter()
                    .map(|b| {
                        subs[arrow.target]
                            .coords(&self.maps[a].mul_vec(b))
                            .expect("subspaces must be invariant")
                    })
                    .collect();
                Mat::from_cols(dims[arrow.target], &cols)
            })
            .collect();
        let inc = Morphism {
            blocks: subs
                .iter()
                .zip(&self.dims)
                .map(|(s, &n)| Mat::from_cols(n, s.basis()))
                .collect(),
        };
        (Representation { algebra: self.algebra.clone(), dims, maps }, inc)
    }

    /// Quotient by invariant subspaces, on the standard complement, and the
    /// projection onto it.
    pub fn quotient(&self, subs: &[Subspace]) -> (Representation, Morphism) {
        let q = self.algebra.quiver();
        let comp: Vec<Vec<usize>> = subs.iter().map(Subspace::complement_positions).collect();
        let dims: Vec<usize> = comp.iter().map(Vec::len).collect();
        let unit = |n: usize, i: usize| {
            let mut v = zero_vec(n);
            v[i] = Scalar::one();
            v
        };
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let cols: Vec<Vector> = comp[arrow.source]
                    .iter()
                    .map(|&i| {
                        let img = self.maps[a].col(i);
                        subs[arrow.target].quotient_coords(&img)
                    })
                    .collect();
                Mat::from_cols(dims[arrow.target], &cols)
            })
            .collect();
        let proj = Morphism {
            blocks: (0..self.dims.len())
                .map(|v| {
                    let cols: Vec<Vector> = (0..self.dims[v])
                        .map(|j| subs[v].quotient_coords(&unit(self.dims[v], j)))
                        .collect();
                    Mat::from_cols(dims[v], &cols)
                })
                .collect(),
        };
        (Representation { algebra: self.algebra.clone(), dims, maps }, proj)
    }

    /// `rad M = sum of the images of all arrows`, per vertex.
    pub fn radical_subspaces(&self) -> Vec<Subspace> {
        let q = self.algebra.quiver();
        (0..self.dims.len())
            .map(|v| {
                let mut vecs = Vec::new();
                for (a, arrow) in q.arrows.iter().enumerate() {
                    if arrow.target == v {
                        vecs.extend((0..self.dims[arrow.source]).map(|c| self.maps[a].col(c)));
                    }
                }
                Subspace::new(self.dims[v], vecs)
            })
            .collect()
    }

    /// `soc M = common kernel of all arrows`, per vertex.
    pub fn socle_subspaces(&self) -> Vec<Subspace> {
        let q = self.algebra.quiver();
        (0..self.dims.len())
            .map(|v| {
                let mut rows = Vec::new();
                for (a, arrow) in q.arrows.iter().enumerate() {
                    if arrow.source == v {
                        rows.extend(self.maps[a].row_vecs());
                    }
                }
                let n = self.dims[v];
                let piv = rref(&mut rows, n);
                Subspace::new(n, kernel_from_rref(&rows, &piv, n).0)
            })
            .collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_subspaces().iter().zip(&self.dims).map(|(r, d)| d - r.dim()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_subspaces().iter().map(Subspace::dim).collect()
    }
}

/// A family of linear maps, one block per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub blocks: Vec<Mat>,
}

impl Morphism {
    pub fn zero(src: &Representation, tgt: &Representation) -> Self {
        Morphism { blocks: src.dims.iter().zip(&tgt.dims).map(|(&s, &t)| Mat::zeros(t, s)).collect() }
    }

    pub fn identity(m: &Representation) -> Self {
        Morphism { blocks: m.dims.iter().map(|&d| Mat::identity(d)).collect() }
    }

    /// `self ∘ f`
    pub fn compose(&self, f: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&f.blocks).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn add(&self, o: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        Morphism { blocks: self.blocks.iter().map(|b| b.scale(c)).collect() }
    }

    pub fn add_scaled(&mut self, c: &Scalar, o: &Morphism) {
        for (a, b) in self.blocks.iter_mut().zip(&o.blocks) {
            a.add_scaled(c, b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| b.rows() == b.cols() && b.rank() == b.rows())
    }

    /// Block-diagonal matrix on the total spaces.
    pub fn total(&self) -> Mat {
        Mat::block_diag(&self.blocks.iter().collect::<Vec<_>>())
    }

    pub fn is_intertwiner(&self, src: &Representation, tgt: &Representation) -> bool {
        if self.blocks.len() != src.dims.len() {
            return false;
        }
        for (v, b) in self.blocks.iter().enumerate() {
            if b.rows() != tgt.dims[v] || b.cols() != src.dims[v] {
                return false;
            }
        }
        src.algebra.quiver().arrows.iter().enumerate().all(|(a, arrow)| {
            tgt.maps[a].mul(&self.blocks[arrow.source]) == self.blocks[arrow.target].mul(&src.maps[a])
        })
    }

    pub fn kernel(&self, src: &Representation) -> (Representation, Morphism) {
        let subs: Vec<Subspace> = self
            .blocks
            .iter()
            .enumerate()
            .map(|(v, b)| Subspace::new(src.dims[v], b.kernel_basis()))
            .collect();
        src.subrepresentation(&subs)
    }

    pub fn image_subspaces(&self) -> Vec<Subspace> {
        self.blocks.iter().map(Mat::column_space).collect()
    }

    pub fn cokernel(&self, tgt: &Representation) -> (Representation, Morphism) {
        tgt.quotient(&self.image_subspaces())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }
}

/// Position of one unknown matrix entry of a morphism: `(vertex, row, col)`.
pub type Entry = (usize, usize, usize);

/// An explicit basis of `Hom(source, target)`. Each basis morphism has a 1 at
/// exactly one free entry and 0 at the others, so the coordinates of any
/// morphism are its values at the free entries.
#[derive(Clone, Debug, PartialEq)]
pub struct HomSpace {
    pub source_dims: Vec<usize>,
    pub target_dims: Vec<usize>,
    pub basis: Vec<Morphism>,
    pub free: Vec<Entry>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, f: &Morphism) -> Vector {
        self.free.iter().map(|&(v, r, c)| f.blocks[v][(r, c)].clone()).collect()
    }

    pub fn from_coords(&self, c: &[Scalar]) -> Morphism {
        let mut out = Morphism {
            blocks: self
                .source_dims
                .iter()
                .zip(&self.target_dims)
                .map(|(&s, &t)| Mat::zeros(t, s))
                .collect(),
        };
        for (x, b) in c.iter().zip(&self.basis) {
            if !x.is_zero() {
                out.add_scaled(x, b);
            }
        }
        out
    }

    pub fn zero_morphism(&self) -> Morphism {
        self.from_coords(&[])
    }
}

/// Basis of the space of intertwiners `M -> N`.
pub fn hom(m: &Representation, n: &Representation) -> Result<HomSpace> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let nv = m.dims.len();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[nv];
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vector> = Vec::new();
    for (a, arrow) in m.algebra.quiver().arrows.iter().enumerate() {
        let (u, w) = (arrow.source, arrow.target);
        let (na, ma) = (&n.maps[a], &m.maps[a]);
        // (N_a F_u - F_w M_a)[r][c] = 0
        for r in 0..n.dims[w] {
            for c in 0..m.dims[u] {
                let mut row = zero_vec(unknowns);
                let mut any = false;
                for k in 0..n.dims[u] {
                    let x = &na[(r, k)];
                    if !x.is_zero() {
                        row[var(u, k, c)] += x;
                        any = true;
                    }
                }
                for k in 0..m.dims[w] {
                    let x = &ma[(k, c)];
                    if !x.is_zero() {
                        row[var(w, r, k)] -= x;
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let piv = rref(&mut rows, unknowns);
    let (kernel, free_cols) = kernel_from_rref(&rows, &piv, unknowns);
    let entry = |x: usize| {
        let v = (0..nv).find(|&v| x < offset[v + 1]).unwrap();
        let local = x - offset[v];
        (v, local / m.dims[v], local % m.dims[v])
    };
    let basis: Vec<Morphism> = kernel
        .iter()
        .map(|k| Morphism {
            blocks: (0..nv)
                .map(|v| Mat::from_flat(n.dims[v], m.dims[v], k[offset[v]..offset[v + 1]].to_vec()))
                .collect(),
        })
        .collect();
    debug_assert!(basis.iter().all(|f| f.is_intertwiner(m, n)));
    Ok(HomSpace {
        source_dims: m.dims.clone(),
        target_dims: n.dims.clone(),
        basis,
        free: free_cols.into_iter().map(entry).collect(),
    })
}

/// `End(M)` together with its Jacobson radical, given in coordinates.
#[derive(Clone, Debug)]
pub struct EndRadical {
    pub end: HomSpace,
    pub radical: Subspace,
}

impl EndRadical {
    /// Dimension of `End(M)/rad End(M)`.
    pub fn semisimple_dim(&self) -> usize {
        self.end.dim() - self.radical.dim()
    }

    pub fn radical_morphisms(&self) -> Vec<Morphism> {
        self.radical.basis().iter().map(|c| self.end.from_coords(c)).collect()
    }

    pub fn contains(&self, f: &Morphism) -> bool {
        self.radical.contains(&self.end.coords(f))
    }
}

/// Radical of `End(M)`: the kernel of the trace form of the left regular
/// representation, `t(a, b) = tr(L_{ab})`.
pub fn end_radical(m: &Representation) -> Result<EndRadical> {
    let end = hom(m, m)?;
    let radical = trace_form_radical(&end, m.algebra.field().characteristic())?;
    Ok(EndRadical { end, radical })
}

pub(crate) fn trace_form_radical(end: &HomSpace, chr: u64) -> Result<Subspace> {
    let d = end.dim();
    if chr != 0 && chr as usize <= d {
        return Err(Error::FieldUnsupported { characteristic: chr, needed: d });
    }
    // c[i][j] = coords of phi_i ∘ phi_j
    let c: Vec<Vec<Vector>> = end
        .basis
        .iter()
        .map(|fi| end.basis.iter().map(|fj| end.coords(&fi.compose(fj))).collect())
        .collect();
    // tr(L_m) = sum_k c[m][k][k]
    let tr: Vec<Scalar> = (0..d)
        .map(|m| {
            let mut t = Scalar::zero();
            for k in 0..d {
                t += &c[m][k][k];
            }
            t
        })
        .collect();
    let form: Vec<Vector> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut t = Scalar::zero();
                    for (x, y) in c[i][j].iter().zip(&tr) {
                        t.add_mul(x, y);
                    }
                    t
                })
                .collect()
        })
        .collect();
    let mut rows = form;
    let piv = rref(&mut rows, d);
    Ok(Subspace::new(d, kernel_from_rref(&rows, &piv, d).0))
}
