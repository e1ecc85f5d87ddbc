//! Krull-Schmidt decomposition and isomorphism tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{end_radical, hom, same_algebra, Morphism, Representation};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Mat, Subspace, Vector};
use crate::poly::{self, Poly};

const SPLIT_SEED: u64 = 0x5eed_0001;
const RANDOM_CANDIDATES: usize = 24;

/// One indecomposable summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Representation,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

impl Summand {
    /// The idempotent endomorphism of the decomposed module.
    pub fn idempotent(&self) -> Morphism {
        self.inclusion.compose(&self.projection)
    }
}

#[derive(Clone, Debug, Default)]
pub struct DecompositionReport {
    pub summands: Vec<Summand>,
    /// Summand indices grouped by isomorphism class, in order of first appearance.
    pub classes: Vec<Vec<usize>>,
}

impl DecompositionReport {
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// `(representative summand, multiplicity)` per isomorphism class.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        self.classes.iter().map(|c| (c[0], c.len())).collect()
    }

    pub fn modules(&self) -> Vec<Representation> {
        self.summands.iter().map(|s| s.module.clone()).collect()
    }
}

pub fn decompose(m: &Representation) -> Result<DecompositionReport> {
    let mut summands = Vec::new();
    if !m.is_zero() {
        let id = Morphism::identity(m);
        split_rec(m.clone(), id.clone(), id, &mut summands)?;
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'next: for i in 0..summands.len() {
        for c in classes.iter_mut() {
            if iso_indecomposable(&summands[c[0]].module, &summands[i].module)? {
                c.push(i);
                continue 'next;
            }
        }
        classes.push(vec![i]);
    }
    Ok(DecompositionReport { summands, classes })
}

fn split_rec(x: Representation, inc: Morphism, proj: Morphism, out: &mut Vec<Summand>) -> Result<()> {
    match find_split(&x)? {
        None => out.push(Summand { module: x, inclusion: inc, projection: proj }),
        Some(parts) => {
            for (y, i, p) in parts {
                split_rec(y, inc.compose(&i), p.compose(&proj), out)?;
            }
        }
    }
    Ok(())
}

type Piece = (Representation, Morphism, Morphism);

/// `None` when `End(x)` is local. Otherwise two complementary summands.
fn find_split(x: &Representation) -> Result<Option<[Piece; 2]>> {
    let er = end_radical(x)?;
    let s = er.semisimple_dim();
    if s <= 1 {
        return Ok(None);
    }
    let chr = x.algebra().field().characteristic();
    let d = er.end.dim();
    let basis = &er.end.basis;
    let in_rad = |f: &Morphism| er.contains(f);
    let local = std::cell::Cell::new(false);
    let try_split = |a: &Morphism| -> Option<[Piece; 2]> {
        if local.get() || in_rad(a) {
            return None;
        }
        let mu = min_poly(a, &Morphism::identity(x));
        // k[a] fills End/rad and is a field: End(x) is local
        if s <= 3 && poly::roots(&mu, chr).is_empty() {
            if let Some(q) = poly::squarefree_part(&mu, chr) {
                if q.len() - 1 == s {
                    local.set(true);
                }
            }
        }
        fitting_split(x, a, &mu, chr)
    };
    for b in basis {
        if let Some(p) = try_split(b) {
            return Ok(Some(p));
        }
    }
    if local.get() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let random = |rng: &mut ChaCha8Rng| {
        let mut f = er.end.zero_morphism();
        for b in basis {
            let c: i64 = rng.gen_range(-3..=3);
            f.add_scaled(&Scalar::from_int(c), b);
        }
        f
    };
    for _ in 0..RANDOM_CANDIDATES / 2 {
        if let Some(p) = try_split(&random(&mut rng)) {
            return Ok(Some(p));
        }
        if local.get() {
            return Ok(None);
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            if let Some(p) = try_split(&basis[i].add(&basis[j])) {
                return Ok(Some(p));
            }
            if local.get() {
                return Ok(None);
            }
        }
    }
    for _ in 0..RANDOM_CANDIDATES / 2 {
        if let Some(p) = try_split(&random(&mut rng)) {
            return Ok(Some(p));
        }
        if local.get() {
            return Ok(None);
        }
    }
    Err(Error::Undecided(s))
}

fn flatten(f: &Morphism) -> Vector {
    f.blocks.iter().flat_map(|b| b.data().iter().cloned()).collect()
}

/// Minimal polynomial of an endomorphism, lowest degree first, monic.
fn min_poly(a: &Morphism, id: &Morphism) -> Poly {
    let mut powers: Vec<Vector> = vec![flatten(id)];
    let mut cur = id.clone();
    let n = powers[0].len();
    loop {
        cur = a.compose(&cur);
        powers.push(flatten(&cur));
        let m = Mat::from_cols(n, &powers);
        let ker = m.kernel_basis();
        if let Some(k) = ker.first() {
            let lead = k.last().unwrap().inv();
            return k.iter().map(|c| c * &lead).collect();
        }
    }
}

/// Splits `x` along the generalized eigenspaces of `a` at a rational
/// eigenvalue, if `a` has one and is not unipotent up to that eigenvalue.
fn fitting_split(x: &Representation, a: &Morphism, mu: &Poly, chr: u64) -> Option<[Piece; 2]> {
    let id = Morphism::identity(x);
    let deg = mu.len() - 1;
    for lambda in poly::roots(mu, chr) {
        let mut lin: Poly = vec![-&lambda, Scalar::one()];
        for _ in 1..deg {
            lin = poly::mul(&lin, &vec![-&lambda, Scalar::one()]);
        }
        if lin == *mu {
            continue;
        }
        let b = a.sub(&id.scale(&lambda));
        let bn = Morphism { blocks: b.blocks.iter().map(|m| m.pow(deg)).collect() };
        let ker: Vec<Subspace> = bn
            .blocks
            .iter()
            .zip(x.dims())
            .map(|(m, &n)| Subspace::new(n, m.kernel_basis()))
            .collect();
        let img: Vec<Subspace> = bn.blocks.iter().map(Mat::column_space).collect();
        if ker.iter().all(Subspace::is_zero) || img.iter().all(Subspace::is_zero) {
            continue;
        }
        let (km, ki) = x.subrepresentation(&ker);
        let (im, ii) = x.subrepresentation(&img);
        let mut kp = Vec::new();
        let mut ip = Vec::new();
        for v in 0..x.dims().len() {
            let p = Mat::hstack(&ki.blocks[v], &ii.blocks[v]);
            let pinv = p.inverse().expect("Fitting decomposition is direct");
            let k = km.dims()[v];
            kp.push(pinv.block(0, 0, k, p.cols()));
            ip.push(pinv.block(k, 0, p.rows() - k, p.cols()));
        }
        return Some([
            (km, ki, Morphism { blocks: kp }),
            (im, ii, Morphism { blocks: ip }),
        ]);
    }
    None
}

/// True iff `End(M)` is local. The zero module is not indecomposable.
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(find_split(m)?.is_none())
}

/// Isomorphism of two indecomposables: some `g ∘ f` over basis pairs
/// `f: X -> Y`, `g: Y -> X` lies outside `rad End(X)`, which in a local ring
/// means it is invertible.
pub fn iso_indecomposable(x: &Representation, y: &Representation) -> Result<bool> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if x.dims() != y.dims() {
        return Ok(false);
    }
    if x.is_zero() {
        return Ok(true);
    }
    if x.top_dims() != y.top_dims() || x.socle_dims() != y.socle_dims() {
        return Ok(false);
    }
    let fs = hom(x, y)?;
    if fs.dim() == 0 {
        return Ok(false);
    }
    let gs = hom(y, x)?;
    for f in &fs.basis {
        for g in &gs.basis {
            if g.compose(f).is_invertible() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

pub fn iso(m: &Representation, n: &Representation) -> Result<bool> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for s in &dm.summands {
        let mut hit = false;
        for (j, t) in dn.summands.iter().enumerate() {
            if !used[j] && iso_indecomposable(&s.module, &t.module)? {
                used[j] = true;
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}
