//! Transfinite powers, the idempotent decomposition `f = f1 + f2`, and the
//! dyadic factorization search.

use serde::Serialize;

use super::{identity_objects, ideal_product, radical_ideal, unit, MorphismIdeal, Window, WindowMorphism};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{is_zero_vec, solve_combination, Subspace, Vector};

/// Result of iterating `P_{k+1} = P_k · J` to stability and then replacing
/// `J` by that limit until it is idempotent.
#[derive(Clone, Debug)]
pub struct TransfiniteReport {
    /// Total dimensions of `P_1, P_2, ...` for each outer round.
    pub chains: Vec<Vec<usize>>,
    /// Index `k` with `P_k = P_{k+1}`, per outer round.
    pub stabilization: Vec<usize>,
    /// `I^ω`, the limit of the first round.
    pub omega: MorphismIdeal,
    /// The idempotent limit.
    pub star: MorphismIdeal,
    pub outer_rounds: usize,
}

/// Repeated multiplication until the chain stops shrinking.
fn omega_power(w: &Window, j: &MorphismIdeal) -> Result<(MorphismIdeal, Vec<usize>)> {
    let mut p = j.clone();
    let mut chain = vec![p.total_dim()];
    loop {
        let next = ideal_product(w, &p, j)?;
        if next == p {
            return Ok((p, chain));
        }
        chain.push(next.total_dim());
        p = next;
    }
}

pub fn transfinite_power(w: &Window, i: &MorphismIdeal) -> Result<TransfiniteReport> {
    w.check(i)?;
    let mut chains = Vec::new();
    let mut stabilization = Vec::new();
    let mut omega = None;
    let mut j = i.clone();
    loop {
        let (lim, chain) = omega_power(w, &j)?;
        stabilization.push(chain.len());
        chains.push(chain);
        omega.get_or_insert_with(|| lim.clone());
        if lim == j {
            break;
        }
        j = lim;
    }
    let outer_rounds = chains.len();
    Ok(TransfiniteReport { chains, stabilization, omega: omega.unwrap(), star: j, outer_rounds })
}

/// `rad^k` for `k >= 1`.
pub fn radical_power(w: &Window, k: usize) -> Result<MorphismIdeal> {
    let rad = radical_ideal(w)?;
    let mut p = rad.clone();
    for _ in 1..k.max(1) {
        if p.is_zero() {
            break;
        }
        p = ideal_product(w, &p, &rad)?;
    }
    Ok(p)
}

/// One summand `coeff · β ∘ α` with `α: X -> T`, `β: T -> Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorTerm {
    pub through: usize,
    pub alpha: Vector,
    pub beta: Vector,
    pub coeff: Scalar,
}

#[derive(Clone, Debug)]
pub struct IdempotentDecomposition {
    pub f1: WindowMorphism,
    pub f2: WindowMorphism,
    pub terms: Vec<FactorTerm>,
    /// Identity objects of the ideal, through which `f1` factors.
    pub identity_objects: Vec<usize>,
    /// `f2` was verified to lie in `(I ∩ rad)^*`.
    pub certified: bool,
}

/// Splits `f ∈ I` for idempotent `I` as `f1 + f2`, where `f1` is an explicit
/// sum of maps factoring through identities of `I` and `f2 ∈ (I ∩ rad)^*`.
pub fn idempotent_decomposition(w: &Window, i: &MorphismIdeal, f: &WindowMorphism) -> Result<IdempotentDecomposition> {
    w.check(i)?;
    if !super::is_idempotent(w, i)? {
        return Err(Error::NotIdempotent);
    }
    if !i.contains(f) {
        return Err(Error::NotMember);
    }
    let (x, y) = (f.source, f.target);
    let n = w.hom_dim(x, y);
    let ids = identity_objects(w, i)?;
    let star = transfinite_power(w, &i.intersect(&radical_ideal(w)?))?.star;
    let tail = star.get(x, y);

    // independent generators β ∘ α through identity objects
    let mut span = Subspace::zero(n);
    let mut gens: Vec<(FactorTerm, Vector)> = Vec::new();
    for &t in &ids {
        let (da, db) = (w.hom_dim(x, t), w.hom_dim(t, y));
        for bi in 0..db {
            for ai in 0..da {
                let (a, b) = (unit(da, ai), unit(db, bi));
                let v = w.compose(x, t, y, &b, &a);
                if !span.contains(&v) {
                    span = span.extend([v.clone()]);
                    gens.push((FactorTerm { through: t, alpha: a, beta: b, coeff: Scalar::one() }, v));
                }
            }
        }
    }
    let mut cols: Vec<Vector> = gens.iter().map(|(_, v)| v.clone()).collect();
    cols.extend(tail.basis().iter().cloned());
    let zero = || WindowMorphism { source: x, target: y, coords: vec![Scalar::zero(); n] };
    let Some(c) = solve_combination(n, &cols, &f.coords) else {
        return Ok(IdempotentDecomposition {
            f1: zero(),
            f2: f.clone(),
            terms: vec![],
            identity_objects: ids,
            certified: false,
        });
    };
    let mut f1 = zero();
    let mut terms = Vec::new();
    for ((mut t, v), coeff) in gens.into_iter().zip(&c) {
        if coeff.is_zero() {
            continue;
        }
        for (acc, e) in f1.coords.iter_mut().zip(&v) {
            acc.add_mul(coeff, e);
        }
        t.coeff = coeff.clone();
        terms.push(t);
    }
    let f2 = WindowMorphism {
        source: x,
        target: y,
        coords: f.coords.iter().zip(&f1.coords).map(|(a, b)| a - b).collect(),
    };
    let certified = tail.contains(&f2.coords);
    Ok(IdempotentDecomposition { f1, f2, terms, identity_objects: ids, certified })
}

/// A node of a factorization witness: the morphism, and at positive levels
/// its expression `Σ g_k ∘ h_k` with both factors one level down.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessNode {
    pub level: usize,
    pub source: usize,
    pub target: usize,
    pub coords: Vector,
    pub factors: Vec<(usize, WitnessNode, WitnessNode)>,
}

impl WitnessNode {
    pub fn size(&self) -> usize {
        1 + self.factors.iter().map(|(_, g, h)| g.size() + h.size()).sum::<usize>()
    }
}

#[derive(Clone, Debug, Serialize)]
pub enum SearchOutcome {
    /// A level-`d` system exists; the witness expands it.
    Found { witness: WitnessNode },
    /// No system exists at the requested level. `reached` is the largest
    /// level `e` with `f ∈ rad^(2^e)`, and `residue` is the nonzero class of
    /// `f` modulo `rad^(2^(e+1))`.
    Exhausted { reached: usize, residue: Vector },
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub depth: usize,
    pub outcome: SearchOutcome,
    /// Total dimension of `rad^(2^e)` for `e = 0..=depth`.
    pub power_dims: Vec<usize>,
}

/// Dyadic radical powers `rad^(2^e)` for `e = 0..=depth`, computed once
/// and reused across searches.
pub struct FactorSearch<'w> {
    window: &'w Window,
    powers: Vec<MorphismIdeal>,
}

impl<'w> FactorSearch<'w> {
    pub fn new(w: &'w Window, depth: usize) -> Result<Self> {
        let mut powers = vec![radical_ideal(w)?];
        while powers.len() <= depth {
            let p = powers.last().unwrap();
            let next = if p.is_zero() { p.clone() } else { ideal_product(w, p, p)? };
            powers.push(next);
        }
        Ok(FactorSearch { window: w, powers })
    }

    pub fn depth(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn power(&self, e: usize) -> &MorphismIdeal {
        &self.powers[e]
    }

    /// Decides whether `f` admits a system of radical morphisms `f_{pr}`
    /// indexed by dyadic rationals `0 <= p < r <= 1` of denominator
    /// `2^depth` with `f_{ps} = f_{pr} f_{rs}`, the intermediate objects
    /// ranging over finite direct sums of window objects. Such a system
    /// exists exactly when `f ∈ rad^(2^depth)`.
    pub fn search(&self, f: &WindowMorphism) -> Result<SearchReport> {
        let depth = self.depth();
        if is_zero_vec(&f.coords) || !self.powers[0].contains(f) {
            return Err(Error::NotRadical);
        }
        let power_dims = self.powers.iter().map(MorphismIdeal::total_dim).collect();
        let reached = (0..=depth).rev().find(|&e| self.powers[e].contains(f)).unwrap_or(0);
        let outcome = if reached == depth {
            SearchOutcome::Found { witness: witness(self.window, &self.powers, f, depth) }
        } else {
            let residue = self.powers[reached + 1].get(f.source, f.target).reduce(&f.coords);
            SearchOutcome::Exhausted { reached, residue }
        };
        Ok(SearchReport { depth, outcome, power_dims })
    }
}

/// One-off [`FactorSearch::search`].
pub fn factorizable_search(w: &Window, f: &WindowMorphism, depth: usize) -> Result<SearchReport> {
    FactorSearch::new(w, depth)?.search(f)
}

fn witness(w: &Window, powers: &[MorphismIdeal], f: &WindowMorphism, level: usize) -> WitnessNode {
    let (x, y) = (f.source, f.target);
    let mut node = WitnessNode { level, source: x, target: y, coords: f.coords.clone(), factors: vec![] };
    if level == 0 {
        return node;
    }
    let p = &powers[level - 1];
    // independent products b ∘ a with a ∈ p(x, z), b ∈ p(z, y), until f is spanned
    let mut cands: Vec<(usize, usize, usize)> = Vec::new();
    let mut vecs: Vec<Vector> = Vec::new();
    let mut span = Subspace::zero(w.hom_dim(x, y));
    'scan: for z in 0..w.len() {
        let (pa, pb) = (p.get(x, z), p.get(z, y));
        for (ai, a) in pa.basis().iter().enumerate() {
            for (bi, b) in pb.basis().iter().enumerate() {
                let v = w.compose(x, z, y, b, a);
                if span.contains(&v) {
                    continue;
                }
                span = span.extend([v.clone()]);
                cands.push((z, ai, bi));
                vecs.push(v);
                if span.contains(&f.coords) {
                    break 'scan;
                }
            }
        }
    }
    let c = solve_combination(w.hom_dim(x, y), &vecs, &f.coords).expect("member of the product ideal");
    // group as Σ_{z,a} (Σ_b c b) ∘ a
    let mut grouped: Vec<(usize, usize, Vector)> = Vec::new();
    for ((z, ai, bi), coeff) in cands.into_iter().zip(c) {
        if coeff.is_zero() {
            continue;
        }
        let b = &p.get(z, y).basis()[bi];
        let slot = match grouped.iter().position(|(gz, ga, _)| *gz == z && *ga == ai) {
            Some(k) => k,
            None => {
                grouped.push((z, ai, vec![Scalar::zero(); b.len()]));
                grouped.len() - 1
            }
        };
        for (acc, e) in grouped[slot].2.iter_mut().zip(b) {
            acc.add_mul(&coeff, e);
        }
    }
    for (z, ai, g) in grouped {
        let a = p.get(x, z).basis()[ai].clone();
        let gm = WindowMorphism { source: z, target: y, coords: g };
        let hm = WindowMorphism { source: x, target: z, coords: a };
        node.factors.push((z, witness(w, powers, &gm, level - 1), witness(w, powers, &hm, level - 1)));
    }
    node
}
