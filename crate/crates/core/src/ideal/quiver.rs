//! The part of the Auslander-Reiten quiver visible inside a window.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::{ideal_product, radical_ideal, Window};
use crate::error::Result;
use crate::repmod::{ar_translate, is_projective};

#[derive(Clone, Debug, Serialize)]
pub struct QuiverNode {
    pub label: String,
    pub dims: Vec<usize>,
}

/// `multiplicity = dim rad(X, Y) / rad²(X, Y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverEdge {
    pub source: usize,
    pub target: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuiverDump {
    pub nodes: Vec<QuiverNode>,
    pub edges: Vec<QuiverEdge>,
    /// `(X, τX)` when `τX` is a window object.
    pub tau: Vec<(usize, usize)>,
}

pub fn quiver_dump(w: &Window) -> Result<QuiverDump> {
    let rad = radical_ideal(w)?;
    let rad2 = ideal_product(w, &rad, &rad)?;
    let n = w.len();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let m = rad.get(x, y).dim() - rad2.get(x, y).dim();
            if m > 0 {
                edges.push(QuiverEdge { source: x, target: y, multiplicity: m });
            }
        }
    }
    let tau = (0..n)
        .into_par_iter()
        .map(|x| -> Result<Option<(usize, usize)>> {
            let m = w.object(x);
            if is_projective(m) {
                return Ok(None);
            }
            Ok(w.identify(&ar_translate(m)?)?.map(|t| (x, t)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let nodes = w
        .objects()
        .iter()
        .map(|o| QuiverNode { label: o.label.clone(), dims: o.module.dims().to_vec() })
        .collect();
    Ok(QuiverDump { nodes, edges, tau })
}

impl QuiverDump {
    /// Graphviz source; τ-links are dotted and point from `X` to `τX`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph ar {\n  rankdir=LR;\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let dims: Vec<String> = n.dims.iter().map(usize::to_string).collect();
            let _ = writeln!(s, "  n{i} [label=\"{}\\n[{}]\"];", n.label.replace('"', "\\\""), dims.join(","));
        }
        for e in &self.edges {
            let label = if e.multiplicity > 1 { format!(" [label=\"{}\"]", e.multiplicity) } else { String::new() };
            let _ = writeln!(s, "  n{} -> n{}{label};", e.source, e.target);
        }
        for (x, t) in &self.tau {
            let _ = writeln!(s, "  n{x} -> n{t} [style=dotted, constraint=false];");
        }
        s.push_str("}\n");
        s
    }
}
