//! Catalogs of indecomposables up to a dimension bound, and the band-count
//! domesticity heuristic.

use std::sync::Arc;

use super::{band_module, enumerate_bands, enumerate_strings, string_module, BandWord, P1Point, StringWord};
use crate::algebra::PathAlgebra;
use crate::error::Result;
use crate::repmod::{iso_indecomposable, projective, Representation};

#[derive(Clone, Debug, PartialEq)]
pub enum CatalogKind {
    Projective(usize),
    String(StringWord),
    Band { band: BandWord, point: P1Point, mult: usize },
}

#[derive(Clone, Debug)]
pub struct CatalogItem {
    pub label: String,
    pub kind: CatalogKind,
    pub module: Representation,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub algebra: Arc<PathAlgebra>,
    pub max_dim: usize,
    pub samples: Vec<P1Point>,
    pub items: Vec<CatalogItem>,
}

impl Catalog {
    pub fn modules(&self) -> Vec<Representation> {
        self.items.iter().map(|i| i.module.clone()).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.items.iter().map(|i| i.label.clone()).collect()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.items.iter().position(|i| i.label == label)
    }

    pub fn get(&self, label: &str) -> Option<&CatalogItem> {
        self.items.iter().find(|i| i.label == label)
    }
}

pub fn string_label(a: &PathAlgebra, w: &StringWord) -> String {
    format!("string:{}", w.format(a))
}

pub fn band_label(a: &PathAlgebra, b: &BandWord, p: &P1Point, m: usize) -> String {
    format!("band:{}@{}#{}", b.format(a), p, m)
}

/// Indecomposable projectives, string modules and band-module layers of
/// dimension at most `max_dim`, without repeated isomorphism classes.
pub fn build_catalog(a: &Arc<PathAlgebra>, max_dim: usize, samples: &[P1Point]) -> Result<Catalog> {
    let mut cands: Vec<(String, CatalogKind, Representation)> = Vec::new();
    for v in 0..a.num_vertices() {
        let p = projective(a, v);
        if p.dim() <= max_dim {
            cands.push((format!("proj:{}", a.quiver().vertices[v]), CatalogKind::Projective(v), p));
        }
    }
    if max_dim > 0 {
        for w in enumerate_strings(a, max_dim - 1)? {
            let m = string_module(a, &w)?;
            cands.push((string_label(a, &w), CatalogKind::String(w), m));
        }
    }
    let samples: Vec<P1Point> = samples.iter().map(|p| p.in_field(a)).collect::<Result<_>>()?;
    for b in enumerate_bands(a, max_dim)? {
        for p in &samples {
            for mult in 1..=max_dim / b.len() {
                let m = band_module(a, &b, p, mult)?;
                let kind = CatalogKind::Band { band: b.clone(), point: p.clone(), mult };
                cands.push((band_label(a, &b, p, mult), kind, m));
            }
        }
    }
    let mut items: Vec<CatalogItem> = Vec::new();
    'next: for (label, kind, module) in cands {
        for it in &items {
            if it.module.dims() == module.dims() && iso_indecomposable(&it.module, &module)? {
                continue 'next;
            }
        }
        items.push(CatalogItem { label, kind, module });
    }
    Ok(Catalog { algebra: a.clone(), max_dim, samples, items })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domesticity {
    FiniteBands(usize),
    Growing,
    Inconclusive,
}

/// Band counts at `ceil(L/2)` and `L` with the verdict they suggest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomesticityReport {
    pub verdict: Domesticity,
    pub half_length: usize,
    pub length: usize,
    pub half_count: usize,
    pub count: usize,
}

pub fn domesticity_verdict(a: &Arc<PathAlgebra>, max_len: usize) -> Result<DomesticityReport> {
    let half = max_len.div_ceil(2);
    let bands = enumerate_bands(a, max_len)?;
    let count = bands.len();
    let half_count = bands.iter().filter(|b| b.len() <= half).count();
    let verdict = if max_len < 2 {
        Domesticity::Inconclusive
    } else if count > half_count {
        Domesticity::Growing
    } else {
        Domesticity::FiniteBands(count)
    };
    Ok(DomesticityReport { verdict, half_length: half, length: max_len, half_count, count })
}
