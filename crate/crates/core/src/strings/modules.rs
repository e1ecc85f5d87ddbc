//! String and band modules.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::{is_valid_word, string_quotient, BandWord, StringWord};
use crate::algebra::PathAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Mat;
use crate::repmod::Representation;

/// A point of the projective line, normalized to `(1:t)` or `(0:1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum P1Point {
    Affine(Scalar),
    Infinity,
}

pub const DEFAULT_SAMPLES: &str = "1:0,0:1,1:1,1:-1,1:2";

impl P1Point {
    pub fn new(a: Scalar, b: Scalar) -> Result<Self> {
        if !a.is_zero() {
            Ok(P1Point::Affine(&b / &a))
        } else if !b.is_zero() {
            Ok(P1Point::Infinity)
        } else {
            Err(Error::InvalidParameter("(0:0) is not a point".into()))
        }
    }

    /// Parses a comma-separated list such as `1:0,0:1,1:-1/2`.
    pub fn parse_list(s: &str) -> Result<Vec<P1Point>> {
        s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
    }

    pub fn in_field(&self, a: &PathAlgebra) -> Result<P1Point> {
        match self {
            P1Point::Affine(t) => Ok(P1Point::Affine(
                a.field().element(t).map_err(|e| Error::InvalidParameter(e.to_string()))?,
            )),
            P1Point::Infinity => Ok(P1Point::Infinity),
        }
    }
}

impl FromStr for P1Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("expected a:b, got '{s}'"));
        let (a, b) = s.trim().split_once(':').ok_or_else(bad)?;
        let a: Scalar = a.trim().parse().map_err(|_| bad())?;
        let b: Scalar = b.trim().parse().map_err(|_| bad())?;
        P1Point::new(a, b)
    }
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Point::Affine(t) => write!(f, "1:{t}"),
            P1Point::Infinity => write!(f, "0:1"),
        }
    }
}

/// Dimensions and local index of every point, given their vertices.
fn layout(a: &PathAlgebra, pts: &[usize], block: usize) -> (Vec<usize>, Vec<usize>) {
    let mut dims = vec![0; a.num_vertices()];
    let mut idx = Vec::with_capacity(pts.len());
    for &v in pts {
        idx.push(dims[v]);
        dims[v] += block;
    }
    (dims, idx)
}

pub fn string_module(a: &Arc<PathAlgebra>, w: &StringWord) -> Result<Representation> {
    let b = string_quotient(a)?;
    if w.vertex >= a.num_vertices() {
        return Err(Error::InvalidString("unknown vertex".into()));
    }
    if let Some(l) = w.letters.first() {
        if l.left(a) != w.vertex {
            return Err(Error::InvalidString("word does not start at its vertex".into()));
        }
    }
    if !is_valid_word(&b, &w.letters) {
        return Err(Error::InvalidString(format!("'{}' is not a valid string", w.format(a))));
    }
    let pts = w.points(a);
    let (dims, idx) = layout(a, &pts, 1);
    let q = a.quiver();
    let mut maps: Vec<Mat> =
        q.arrows.iter().map(|ar| Mat::zeros(dims[ar.target], dims[ar.source])).collect();
    for (i, l) in w.letters.iter().enumerate() {
        // letter i+1 joins p_i and p_{i+1}
        let (from, to) = if l.inverse { (i, i + 1) } else { (i + 1, i) };
        maps[l.arrow][(idx[to], idx[from])] = Scalar::one();
    }
    Representation::new(a.clone(), dims, maps)
}

/// Band module at a point of the projective line with Jordan block size `m`.
/// With `D` the least direct and `E` the least inverse letter of the
/// canonical word, `(1:t)` puts `tI + N` on `D` and `-I` on `E`, and `(0:1)`
/// puts `I` on `D` and `N` on `E`; all other letters carry `I`.
pub fn band_module(a: &Arc<PathAlgebra>, band: &BandWord, point: &P1Point, m: usize) -> Result<Representation> {
    if m == 0 {
        return Err(Error::InvalidParameter("multiplicity must be at least 1".into()));
    }
    let band = BandWord::new(a, band.letters.clone())?;
    let point = point.in_field(a)?;
    let w = &band.letters;
    let n = w.len();
    let d_pos = (0..n).filter(|&i| !w[i].inverse).min_by_key(|&i| (w[i], i)).unwrap();
    let e_pos = (0..n).filter(|&i| w[i].inverse).min_by_key(|&i| (w[i], i)).unwrap();
    let mut nil = Mat::zeros(m, m);
    for i in 0..m.saturating_sub(1) {
        nil[(i, i + 1)] = Scalar::one();
    }
    let id = Mat::identity(m);
    let (d_block, e_block) = match &point {
        P1Point::Affine(t) => (Mat::scalar(m, t).add(&nil), id.scale(&Scalar::from_int(-1))),
        P1Point::Infinity => (id.clone(), nil),
    };
    // points p_0 .. p_{n-1}, cyclically
    let pts: Vec<usize> = (0..n).map(|i| w[i].left(a)).collect();
    let (dims, idx) = layout(a, &pts, m);
    let q = a.quiver();
    let mut maps: Vec<Mat> =
        q.arrows.iter().map(|ar| Mat::zeros(dims[ar.target], dims[ar.source])).collect();
    for (i, l) in w.iter().enumerate() {
        let block = if i == d_pos {
            &d_block
        } else if i == e_pos {
            &e_block
        } else {
            &id
        };
        let (p, q) = (i, (i + 1) % n);
        let (from, to) = if l.inverse { (p, q) } else { (q, p) };
        maps[l.arrow].set_block(idx[to], idx[from], block);
    }
    Representation::new(a.clone(), dims, maps)
}
