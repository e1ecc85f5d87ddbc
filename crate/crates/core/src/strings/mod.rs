//! Strings and bands of special biserial algebras.
//!
//! Words are written in composition order: the word `y x^-` has points
//! `p0, p1, p2`, the direct letter `y` maps `p1` to `p0` and the inverse
//! letter `x^-` means `x` maps `p1` to `p2`.

mod catalog;
mod modules;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{PathAlgebra, Relation, SpecialBiserial};
use crate::error::{Error, Result};
use crate::repmod::{injective, iso_indecomposable, projective};

pub use catalog::{band_label, build_catalog, domesticity_verdict, string_label, Catalog, CatalogItem, CatalogKind, Domesticity, DomesticityReport};
pub use modules::{band_module, string_module, P1Point, DEFAULT_SAMPLES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: usize) -> Self {
        Letter { arrow, inverse: false }
    }

    pub fn inv(arrow: usize) -> Self {
        Letter { arrow, inverse: true }
    }

    pub fn flip(self) -> Self {
        Letter { arrow: self.arrow, inverse: !self.inverse }
    }

    /// Vertex of the point before the letter.
    pub fn left(self, a: &PathAlgebra) -> usize {
        let ar = &a.quiver().arrows[self.arrow];
        if self.inverse { ar.source } else { ar.target }
    }

    /// Vertex of the point after the letter.
    pub fn right(self, a: &PathAlgebra) -> usize {
        let ar = &a.quiver().arrows[self.arrow];
        if self.inverse { ar.target } else { ar.source }
    }
}

/// A walk of letters; the empty word is the trivial string at `vertex`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StringWord {
    pub vertex: usize,
    pub letters: Vec<Letter>,
}

impl StringWord {
    pub fn trivial(vertex: usize) -> Self {
        StringWord { vertex, letters: vec![] }
    }

    pub fn from_letters(a: &PathAlgebra, letters: Vec<Letter>) -> Result<Self> {
        let Some(first) = letters.first() else {
            return Err(Error::InvalidString("empty word needs a vertex".into()));
        };
        Ok(StringWord { vertex: first.left(a), letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self, a: &PathAlgebra) -> StringWord {
        let letters: Vec<Letter> = self.letters.iter().rev().map(|l| l.flip()).collect();
        let vertex = letters.first().map_or(self.vertex, |l| l.left(a));
        StringWord { vertex, letters }
    }

    /// Vertices of the points `p0 .. pn`.
    pub fn points(&self, a: &PathAlgebra) -> Vec<usize> {
        let mut pts = vec![self.vertex];
        pts.extend(self.letters.iter().map(|l| l.right(a)));
        pts
    }

    pub fn format(&self, a: &PathAlgebra) -> String {
        if self.letters.is_empty() {
            return format!("e_{}", a.quiver().vertices[self.vertex]);
        }
        format_letters(a, &self.letters)
    }

    pub fn parse(a: &PathAlgebra, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            if a.num_vertices() == 1 {
                return Ok(StringWord::trivial(0));
            }
            return Err(Error::InvalidString("empty word is ambiguous; write e_<vertex>".into()));
        }
        if let Some(v) = s.strip_prefix("e_") {
            if let Some(i) = a.quiver().vertex_index(v) {
                return Ok(StringWord::trivial(i));
            }
        }
        let letters = parse_letters(a, s).map_err(Error::InvalidString)?;
        StringWord::from_letters(a, letters)
    }
}

fn format_letters(a: &PathAlgebra, letters: &[Letter]) -> String {
    letters
        .iter()
        .map(|l| {
            let n = &a.quiver().arrows[l.arrow].name;
            if l.inverse { format!("{n}^-") } else { n.clone() }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_letters(a: &PathAlgebra, s: &str) -> std::result::Result<Vec<Letter>, String> {
    s.split_whitespace()
        .map(|tok| {
            let (name, inverse) = match tok.strip_suffix("^-") {
                Some(n) => (n, true),
                None => (tok, false),
            };
            a.quiver()
                .arrow_index(name)
                .map(|arrow| Letter { arrow, inverse })
                .ok_or_else(|| format!("unknown arrow '{name}'"))
        })
        .collect()
}

/// A primitive cyclic word in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandWord {
    pub letters: Vec<Letter>,
}

impl BandWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Validates a cyclic word over the string quotient and canonicalizes it.
    pub fn new(a: &Arc<PathAlgebra>, letters: Vec<Letter>) -> Result<Self> {
        let b = string_quotient(a)?;
        let bad = |m: &str| Err(Error::InvalidBand(m.to_string()));
        if letters.is_empty() {
            return bad("band is empty");
        }
        if !letters.iter().any(|l| l.inverse) || letters.iter().all(|l| l.inverse) {
            return bad("band needs both direct and inverse letters");
        }
        if letters.last().unwrap().right(&b) != letters[0].left(&b) {
            return bad("band is not a closed walk");
        }
        if !is_primitive(&letters) {
            return bad("band is a proper power");
        }
        let doubled = [&letters[..], &letters[..]].concat();
        if !is_valid_word(&b, &doubled) {
            return bad("some rotation is not a valid string");
        }
        Ok(BandWord { letters: canonical_rotation(&letters) })
    }

    pub fn format(&self, a: &PathAlgebra) -> String {
        format_letters(a, &self.letters)
    }

    /// Accepts an optional `band:` prefix.
    pub fn parse(a: &Arc<PathAlgebra>, s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix("band:").unwrap_or(s);
        let letters = parse_letters(a, s).map_err(Error::InvalidBand)?;
        BandWord::new(a, letters)
    }
}

fn is_primitive(w: &[Letter]) -> bool {
    let n = w.len();
    (1..n).filter(|d| n % d == 0).all(|d| (0..n).any(|i| w[i] != w[i % d]))
}

fn inverse_letters(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.flip()).collect()
}

/// Least rotation of `w` or of its inverse.
pub fn canonical_rotation(w: &[Letter]) -> Vec<Letter> {
    let n = w.len();
    let inv = inverse_letters(w);
    let mut best: Option<Vec<Letter>> = None;
    for base in [w, &inv[..]] {
        for r in 0..n {
            let cand: Vec<Letter> = base[r..].iter().chain(&base[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| cand.cmp(b) == Ordering::Less) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Checks a word against a monomial string algebra `b`.
pub(crate) fn is_valid_word(b: &PathAlgebra, w: &[Letter]) -> bool {
    for i in 0..w.len() {
        if !extends(b, &w[..i], w[i]) {
            return false;
        }
    }
    true
}

/// Whether appending `l` to the valid word `w` keeps it valid.
pub(crate) fn extends(b: &PathAlgebra, w: &[Letter], l: Letter) -> bool {
    let Some(&last) = w.last() else {
        return true;
    };
    if last.right(b) != l.left(b) || last == l.flip() {
        return false;
    }
    if last.inverse != l.inverse {
        return true;
    }
    // maximal run of letters of the same direction ending at `l`
    let start = w.iter().rposition(|x| x.inverse != l.inverse).map_or(0, |i| i + 1);
    let mut run: Vec<usize> = w[start..].iter().map(|x| x.arrow).collect();
    run.push(l.arrow);
    if !l.inverse {
        // direct letters act right to left
        run.reverse();
    }
    !b.is_zero_path(&run)
}

/// The quotient by the socles of the projective-injective indecomposables;
/// monomial algebras are returned unchanged.
pub fn string_quotient(a: &Arc<PathAlgebra>) -> Result<Arc<PathAlgebra>> {
    if let SpecialBiserial::No(why) = a.special_biserial() {
        return Err(Error::NotSpecialBiserial(why));
    }
    let cached = a.string_quotient_cache().get_or_init(|| compute_string_quotient(a));
    match cached {
        Ok(Some(b)) => Ok(b.clone()),
        Ok(None) => Ok(a.clone()),
        Err(e) => Err(e.clone()),
    }
}

fn compute_string_quotient(a: &Arc<PathAlgebra>) -> Result<Option<Arc<PathAlgebra>>> {
    if a.is_monomial() {
        return Ok(None);
    }
    let n = a.num_vertices();
    let inj: Vec<_> = (0..n).map(|w| injective(a, w)).collect();
    let mut extra = Vec::new();
    for v in 0..n {
        let p = projective(a, v);
        let mut proj_inj = false;
        for i in &inj {
            if iso_indecomposable(&p, i)? {
                proj_inj = true;
                break;
            }
        }
        if !proj_inj {
            continue;
        }
        for (w, soc) in p.socle_subspaces().into_iter().enumerate() {
            let local = a.basis_between(v, w);
            for vec in soc.basis() {
                // homogeneous relations make the socle graded, split by length
                let mut by_len: std::collections::BTreeMap<usize, Vec<_>> = Default::default();
                for (i, c) in vec.iter().enumerate() {
                    if !c.is_zero() {
                        let path = a.basis()[local[i]].path.clone();
                        by_len.entry(path.len()).or_default().push((path, c.clone()));
                    }
                }
                for (len, terms) in by_len {
                    if len < 2 {
                        return Err(Error::NotSpecialBiserial(format!(
                            "socle of P({}) has an element of length {len}",
                            a.quiver().vertices[v]
                        )));
                    }
                    extra.push(Relation::new(terms));
                }
            }
        }
    }
    let mut rels = a.relations().to_vec();
    rels.extend(extra);
    let b = PathAlgebra::build(a.field(), a.quiver().clone(), rels)?;
    if !b.is_monomial() {
        return Err(Error::NotSpecialBiserial("string quotient is not monomial".into()));
    }
    Ok(Some(b))
}

/// All valid nonempty words of exactly length `n`, in lexicographic order.
fn words_of_length(b: &PathAlgebra, n: usize) -> Vec<Vec<Letter>> {
    let mut all: Vec<Letter> = Vec::new();
    for arrow in 0..b.num_arrows() {
        all.push(Letter::direct(arrow));
        all.push(Letter::inv(arrow));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(b: &PathAlgebra, all: &[Letter], n: usize, cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for &l in all {
            if extends(b, cur, l) {
                cur.push(l);
                rec(b, all, n, cur, out);
                cur.pop();
            }
        }
    }
    if n > 0 {
        rec(b, &all, n, &mut cur, &mut out);
    }
    out
}

/// Strings of length at most `max_len`, one per inversion class, ordered by
/// length then lexicographically.
pub fn enumerate_strings(a: &Arc<PathAlgebra>, max_len: usize) -> Result<Vec<StringWord>> {
    let b = string_quotient(a)?;
    let mut out: Vec<StringWord> = (0..b.num_vertices()).map(StringWord::trivial).collect();
    for n in 1..=max_len {
        for w in words_of_length(&b, n) {
            if w <= inverse_letters(&w) {
                out.push(StringWord { vertex: w[0].left(&b), letters: w });
            }
        }
    }
    Ok(out)
}

/// Canonical bands of length at most `max_len`, ordered by length then
/// lexicographically.
pub fn enumerate_bands(a: &Arc<PathAlgebra>, max_len: usize) -> Result<Vec<BandWord>> {
    let b = string_quotient(a)?;
    let mut found: BTreeSet<(usize, Vec<Letter>)> = BTreeSet::new();
    for n in 2..=max_len {
        for w in words_of_length(&b, n) {
            if w[n - 1].right(&b) != w[0].left(&b)
                || !w.iter().any(|l| l.inverse)
                || w.iter().all(|l| l.inverse)
                || !is_primitive(&w)
            {
                continue;
            }
            let canon = canonical_rotation(&w);
            if canon != w {
                continue;
            }
            if is_valid_word(&b, &[&w[..], &w[..]].concat()) {
                found.insert((n, w));
            }
        }
    }
    Ok(found.into_iter().map(|(_, letters)| BandWord { letters }).collect())
}
