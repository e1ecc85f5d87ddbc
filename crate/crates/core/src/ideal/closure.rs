//! Short exact sequences among window objects and the closures they drive.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{unit, Window};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{zero_vec, Vector};
use crate::repmod::{cosyzygy, decompose, is_projective, is_selfinjective, projective, syzygy, Representation};

/// `0 -> ⊕left -> middle -> ⊕right -> 0`, by window indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Ses {
    pub left: Vec<usize>,
    pub middle: usize,
    pub right: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SesCatalog {
    pub sequences: Vec<Ses>,
    /// Summands of `Ω X` per object; `None` when one lies outside the window.
    pub syzygy: Vec<Option<Vec<usize>>>,
    /// Summands of `Ω⁻ X`; all `None` unless the algebra is selfinjective.
    pub cosyzygy: Vec<Option<Vec<usize>>>,
    pub projective: Vec<bool>,
    pub selfinjective: bool,
    /// Kernels, cokernels or syzygies that did not resolve to window objects.
    pub unidentified: usize,
}

impl SesCatalog {
    pub fn is_complete(&self) -> bool {
        self.unidentified == 0
    }
}

/// Basis vectors, small two-term combinations, then seeded random ones.
fn candidates(h: usize, rng: &mut ChaCha8Rng) -> Vec<Vector> {
    let mut out: Vec<Vector> = (0..h).map(|i| unit(h, i)).collect();
    let mut pairs = 0;
    'outer: for i in 0..h {
        for j in i + 1..h {
            if pairs == 15 {
                break 'outer;
            }
            pairs += 1;
            for a in 1..=2 {
                for b in -3..=3i64 {
                    if b == 0 || (a == 2 && b % 2 == 0) {
                        continue;
                    }
                    let mut v = zero_vec(h);
                    v[i] = Scalar::from_int(a);
                    v[j] = Scalar::from_int(b);
                    out.push(v);
                }
            }
        }
    }
    if h > 1 {
        for _ in 0..12 {
            out.push((0..h).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect());
        }
    }
    out
}

fn identify_all(w: &Window, m: &Representation) -> Result<Option<Vec<usize>>> {
    let mut ids = Vec::new();
    for p in decompose(m)?.modules() {
        match w.identify(&p)? {
            Some(i) => ids.push(i),
            None => return Ok(None),
        }
    }
    ids.sort_unstable();
    Ok(Some(ids))
}

/// Scans surjections `B -> C` and monomorphisms `A -> B` between window
/// objects, keeping those whose kernel or cokernel splits into window
/// objects, and records syzygies and cosyzygies of every object.
pub fn ses_catalog(w: &Window, seed: u64) -> Result<SesCatalog> {
    let n = w.len();
    let pairs: Vec<(usize, usize)> = (0..n * n)
        .map(|k| (k / n, k % n))
        .filter(|&(s, t)| s != t && w.hom_dim(s, t) > 0 && w.object(s).dim() != w.object(t).dim())
        .collect();
    let found = pairs
        .par_iter()
        .map(|&(s, t)| -> Result<(Vec<Ses>, usize)> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((s * n + t) as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let (ms, mt) = (w.object(s), w.object(t));
            let epi = ms.dim() > mt.dim();
            let mut seqs = Vec::new();
            let mut missed = 0;
            for c in candidates(w.hom_dim(s, t), &mut rng) {
                let f = w.hom(s, t).from_coords(&c);
                let seq = if epi {
                    if !f.is_surjective() {
                        continue;
                    }
                    identify_all(w, &f.kernel(ms).0)?.map(|left| Ses { left, middle: s, right: vec![t] })
                } else {
                    if !f.is_injective() {
                        continue;
                    }
                    identify_all(w, &f.cokernel(mt).0)?.map(|right| Ses { left: vec![s], middle: t, right })
                };
                match seq {
                    Some(q) if !seqs.contains(&q) => seqs.push(q),
                    Some(_) => {}
                    None => missed += 1,
                }
            }
            Ok((seqs, missed))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sequences: Vec<Ses> = Vec::new();
    let mut unidentified = 0;
    for (seqs, missed) in found {
        sequences.extend(seqs);
        unidentified += missed;
    }
    sequences.sort();
    sequences.dedup();

    let a = w.algebra();
    let selfinjective = is_selfinjective(a);
    let projective: Vec<bool> = (0..n).map(|x| is_projective(w.object(x))).collect();
    let shifts = (0..n)
        .into_par_iter()
        .map(|x| -> Result<(Option<Vec<usize>>, Option<Vec<usize>>)> {
            if projective[x] {
                return Ok((Some(vec![]), selfinjective.then(Vec::new)));
            }
            let om = identify_all(w, &syzygy(w.object(x))?)?;
            let co = if selfinjective { identify_all(w, &cosyzygy(w.object(x))?)? } else { None };
            Ok((om, co))
        })
        .collect::<Result<Vec<_>>>()?;
    let (syzygy, cosyzygy): (Vec<_>, Vec<_>) = shifts.into_iter().unzip();
    unidentified += syzygy.iter().filter(|s| s.is_none()).count();
    if selfinjective {
        unidentified += cosyzygy.iter().filter(|s| s.is_none()).count();
    }
    Ok(SesCatalog { sequences, syzygy, cosyzygy, projective, selfinjective, unidentified })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub objects: Vec<usize>,
    pub labels: Vec<String>,
    pub rounds: usize,
    /// The sequence catalog resolved every kernel, cokernel and shift.
    pub catalog_complete: bool,
}

fn report(w: &Window, member: &[bool], rounds: usize, cat: &SesCatalog) -> ClosureReport {
    let objects: Vec<usize> = (0..member.len()).filter(|&i| member[i]).collect();
    let labels = objects.iter().map(|&i| w.objects()[i].label.clone()).collect();
    ClosureReport { objects, labels, rounds, catalog_complete: cat.is_complete() }
}

fn check_catalog(w: &Window, cat: &SesCatalog, seeds: &[usize]) -> Result<()> {
    if cat.projective.len() != w.len() {
        return Err(Error::WindowMismatch);
    }
    if let Some(&s) = seeds.iter().find(|&&s| s >= w.len()) {
        return Err(Error::InvalidParameter(format!("no window object {s}")));
    }
    Ok(())
}

/// Smallest set of non-projective window objects containing `seeds` and
/// closed under `Ω`, `Ω⁻` and two-out-of-three along catalogued sequences,
/// projectives counting as zero.
pub fn thick_closure(w: &Window, cat: &SesCatalog, seeds: &[usize]) -> Result<ClosureReport> {
    check_catalog(w, cat, seeds)?;
    if !cat.selfinjective {
        return Err(Error::NotSelfinjective);
    }
    let proj = &cat.projective;
    let mut member = vec![false; w.len()];
    for &s in seeds {
        member[s] = !proj[s];
    }
    let mut rounds = 0;
    loop {
        rounds += 1;
        let before = member.clone();
        for x in 0..w.len() {
            if !before[x] {
                continue;
            }
            for shift in [&cat.syzygy[x], &cat.cosyzygy[x]].into_iter().flatten() {
                for &y in shift {
                    member[y] |= !proj[y];
                }
            }
        }
        let inside = |m: &[bool], xs: &[usize]| xs.iter().all(|&x| proj[x] || m[x]);
        for q in &cat.sequences {
            let mid = [q.middle];
            let parts = [&q.left[..], &mid[..], &q.right[..]];
            let ins: Vec<bool> = parts.iter().map(|p| inside(&member, p)).collect();
            if ins.iter().filter(|&&b| b).count() == 2 {
                let k = ins.iter().position(|&b| !b).unwrap();
                for &y in parts[k] {
                    member[y] |= !proj[y];
                }
            }
        }
        if member == before {
            return Ok(report(w, &member, rounds, cat));
        }
    }
}

/// Smallest set containing `seeds` and every indecomposable projective,
/// closed under extensions, kernels of epimorphisms and syzygies.
pub fn resolving_closure(w: &Window, cat: &SesCatalog, seeds: &[usize]) -> Result<ClosureReport> {
    check_catalog(w, cat, seeds)?;
    let a = w.algebra();
    let mut member = vec![false; w.len()];
    for v in 0..a.num_vertices() {
        match w.identify(&projective(a, v))? {
            Some(i) => member[i] = true,
            None => return Err(Error::MissingProjectives(a.quiver().vertices[v].clone())),
        }
    }
    for &s in seeds {
        member[s] = true;
    }
    let mut rounds = 0;
    loop {
        rounds += 1;
        let before = member.clone();
        for x in 0..w.len() {
            if before[x] {
                if let Some(om) = &cat.syzygy[x] {
                    for &y in om {
                        member[y] = true;
                    }
                }
            }
        }
        let inside = |m: &[bool], xs: &[usize]| xs.iter().all(|&x| m[x]);
        for q in &cat.sequences {
            let (l, r) = (inside(&member, &q.left), inside(&member, &q.right));
            if l && r {
                member[q.middle] = true;
            }
            if member[q.middle] && r {
                for &y in &q.left {
                    member[y] = true;
                }
            }
        }
        if member == before {
            return Ok(report(w, &member, rounds, cat));
        }
    }
}
