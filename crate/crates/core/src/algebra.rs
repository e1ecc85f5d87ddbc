//! Quivers, length-homogeneous relations and finite-dimensional path
//! algebras.
//!
//! Paths are stored in traversal order: `path[0]` is the arrow applied first.
//! The product `a * b` of algebra elements means "apply `b` first", so the
//! class of the composite `x_{i+1} x_i` is the traversal path `[x_i, x_{i+1}]`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{rref, zero_vec, Mat, Vector};

pub const DEFAULT_LENGTH_CAP: usize = 32;
const LAYER_PATH_LIMIT: usize = 20_000;
/// Largest dense relation matrix (rows times paths) built for one layer.
const LAYER_ENTRY_LIMIT: usize = 1 << 22;
/// Largest basis accepted; the multiplication table is quadratic in it.
const BASIS_LIMIT: usize = 1500;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from labels; arrows are `(name, from, to)`.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if v.is_empty() || !seen.insert(v.clone()) {
                return Err(Error::MalformedQuiver(format!("duplicate or empty vertex '{v}'")));
            }
        }
        let idx = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::MalformedQuiver(format!("unknown vertex '{name}'")))
        };
        let mut out = Vec::new();
        for (name, from, to) in arrows {
            let name = name.as_ref().to_string();
            if name.is_empty() || !seen.insert(name.clone()) {
                return Err(Error::MalformedQuiver(format!(
                    "arrow '{name}' is empty or clashes with another label"
                )));
            }
            out.push(Arrow { name, source: idx(from.as_ref())?, target: idx(to.as_ref())? });
        }
        if vertices.is_empty() {
            return Err(Error::MalformedQuiver("no vertices".into()));
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Source and target of a nonempty traversal path, if it is a walk.
    pub fn endpoints(&self, path: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*path.first()?)?;
        let mut at = first.target;
        for &a in &path[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }

    pub fn path_name(&self, path: &[usize]) -> String {
        path.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join(" ")
    }
}

pub type Path = Vec<usize>;

/// A linear combination of parallel paths of equal length, set to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Path, Scalar)>,
}

impl Relation {
    pub fn new(terms: Vec<(Path, Scalar)>) -> Self {
        Relation { terms }
    }

    pub fn monomial(path: Path) -> Self {
        Relation { terms: vec![(path, Scalar::one())] }
    }

    pub fn len(&self) -> usize {
        self.terms.first().map_or(0, |t| t.0.len())
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn validate(&self, q: &Quiver) -> Result<(usize, usize)> {
        let bad = |m: String| Err(Error::MalformedRelation(m));
        if self.terms.is_empty() {
            return bad("relation has no terms".into());
        }
        let len = self.terms[0].0.len();
        if len < 2 {
            return bad(format!("relation paths must have length >= 2, got {len}"));
        }
        let mut ends = None;
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if p.len() != len {
                return bad("paths in a relation must have equal length".into());
            }
            let Some(e) = q.endpoints(p) else {
                return bad(format!("'{}' is not a path", q.path_name(p)));
            };
            if *ends.get_or_insert(e) != e {
                return bad("paths in a relation must be parallel".into());
            }
            if c.is_zero() {
                return bad("relation coefficients must be nonzero".into());
            }
            if self.terms[..i].iter().any(|(o, _)| o == p) {
                return bad(format!("path '{}' repeated in relation", q.path_name(p)));
            }
        }
        Ok(ends.unwrap())
    }
}

/// One basis element of the algebra: the class of a path (empty for `e_v`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub source: usize,
    pub target: usize,
    pub path: Path,
}

type Sparse = Vec<(usize, Scalar)>;

pub struct PathAlgebra {
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<BasisElement>,
    idempotents: Vec<usize>,
    /// normal forms of all surviving paths, one table per length
    layers: Vec<HashMap<Path, Sparse>>,
    products: Vec<Vec<Sparse>>,
    opposite: OnceLock<Arc<PathAlgebra>>,
    projectives: OnceLock<Vec<(Vec<usize>, Vec<Mat>)>>,
    selfinjective: OnceLock<bool>,
    /// `None` when the algebra is its own string quotient
    string_quotient: OnceLock<Result<Option<Arc<PathAlgebra>>>>,
}

impl std::fmt::Debug for PathAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PathAlgebra")
            .field("field", &self.field)
            .field("vertices", &self.quiver.vertices)
            .field("arrows", &self.quiver.arrows.iter().map(|a| &a.name).collect::<Vec<_>>())
            .field("dim", &self.basis.len())
            .finish()
    }
}

impl PartialEq for PathAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.quiver == o.quiver && self.relations == o.relations
    }
}

impl PathAlgebra {
    pub fn build(field: FieldSpec, quiver: Quiver, relations: Vec<Relation>) -> Result<Arc<Self>> {
        Self::build_with_cap(field, quiver, relations, DEFAULT_LENGTH_CAP)
    }

    pub fn build_with_cap(
        field: FieldSpec,
        quiver: Quiver,
        relations: Vec<Relation>,
        cap: usize,
    ) -> Result<Arc<Self>> {
        field.validate()?;
        let mut relations = relations;
        for r in relations.iter_mut() {
            r.validate(&quiver)?;
            for (_, c) in r.terms.iter_mut() {
                *c = field.element(c).map_err(|e| Error::MalformedRelation(e.to_string()))?;
            }
        }
        let mut basis: Vec<BasisElement> = (0..quiver.vertices.len())
            .map(|v| BasisElement { source: v, target: v, path: vec![] })
            .collect();
        let idempotents: Vec<usize> = (0..quiver.vertices.len()).collect();
        let mut layers: Vec<HashMap<Path, Sparse>> = vec![HashMap::new()];

        // layer 1: arrows (relations have length >= 2, so all survive)
        let mut cand: Vec<Path> = (0..quiver.arrows.len()).map(|a| vec![a]).collect();
        // rows of the relation ideal in the current layer, over `cand`
        let mut ideal_rows: Vec<Vector> = Vec::new();
        let mut len = 1;
        while !cand.is_empty() {
            if len > cap {
                return Err(Error::NonAdmissible(cap));
            }
            let col: HashMap<&Path, usize> = cand.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut rows = std::mem::take(&mut ideal_rows);
            for r in relations.iter().filter(|r| r.len() == len) {
                let mut v = zero_vec(cand.len());
                for (p, c) in &r.terms {
                    if let Some(&i) = col.get(p) {
                        v[i] = &v[i] + c;
                    }
                }
                rows.push(v);
            }
            let pivots = rref(&mut rows, cand.len());
            let mut is_pivot = vec![false; cand.len()];
            for &p in &pivots {
                is_pivot[p] = true;
            }
            let mut table = HashMap::new();
            let mut new_index = vec![usize::MAX; cand.len()];
            for (i, p) in cand.iter().enumerate() {
                if !is_pivot[i] {
                    let (s, t) = quiver.endpoints(p).unwrap();
                    new_index[i] = basis.len();
                    basis.push(BasisElement { source: s, target: t, path: p.clone() });
                }
            }
            for (i, p) in cand.iter().enumerate() {
                let nf: Sparse = if !is_pivot[i] {
                    vec![(new_index[i], Scalar::one())]
                } else {
                    let r = pivots.iter().position(|&q| q == i).unwrap();
                    rows[r]
                        .iter()
                        .enumerate()
                        .filter(|(j, c)| *j != i && !c.is_zero())
                        .map(|(j, c)| (new_index[j], -c))
                        .collect()
                };
                table.insert(p.clone(), nf);
            }
            layers.push(table);
            if basis.len() > BASIS_LIMIT {
                return Err(Error::NonAdmissible(len));
            }
            if pivots.len() == cand.len() {
                break;
            }
            // next layer: paths whose prefix and suffix both have nonzero class
            let layer = layers.last().unwrap();
            let alive = |p: &[usize]| layer.get(p).is_some_and(|nf| !nf.is_empty());
            let mut next = Vec::new();
            for p in &cand {
                if !alive(p) {
                    continue;
                }
                let t = quiver.arrows[*p.last().unwrap()].target;
                for (a, arrow) in quiver.arrows.iter().enumerate() {
                    if arrow.source == t && alive(&[&p[1..], &[a]].concat()) {
                        let mut q = p.clone();
                        q.push(a);
                        next.push(q);
                    }
                }
            }
            next.sort();
            let dense = rows.len().saturating_mul(2 * quiver.arrows.len()).saturating_mul(next.len());
            if next.len() > LAYER_PATH_LIMIT || dense > LAYER_ENTRY_LIMIT {
                return Err(Error::NonAdmissible(len + 1));
            }
            // extend every row of the ideal by one arrow on either side
            let ncol: HashMap<&Path, usize> = next.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut ext = Vec::new();
            for row in &rows {
                for a in 0..quiver.arrows.len() {
                    for side in 0..2 {
                        let mut v = zero_vec(next.len());
                        let mut any = false;
                        for (i, c) in row.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let q = if side == 0 {
                                [&cand[i][..], &[a]].concat()
                            } else {
                                [&[a][..], &cand[i][..]].concat()
                            };
                            if let Some(&j) = ncol.get(&q) {
                                v[j] = &v[j] + c;
                                any = true;
                            }
                        }
                        if any {
                            ext.push(v);
                        }
                    }
                }
            }
            ideal_rows = ext;
            cand = next;
            len += 1;
        }

        let n = basis.len();
        let mut alg = PathAlgebra {
            field,
            quiver,
            relations,
            basis,
            idempotents,
            layers,
            products: Vec::new(),
            opposite: OnceLock::new(),
            projectives: OnceLock::new(),
            selfinjective: OnceLock::new(),
            string_quotient: OnceLock::new(),
        };
        let mut products = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                products[i][j] = alg.compute_product(i, j);
            }
        }
        alg.products = products;
        Ok(Arc::new(alg))
    }

    fn compute_product(&self, i: usize, j: usize) -> Sparse {
        let (bi, bj) = (&self.basis[i], &self.basis[j]);
        if bj.target != bi.source {
            return vec![];
        }
        let path = [&bj.path[..], &bi.path[..]].concat();
        if path.is_empty() {
            return vec![(i, Scalar::one())];
        }
        self.reduce_path(&path)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    /// Length of the longest nonzero path.
    pub fn max_path_length(&self) -> usize {
        self.basis.iter().map(|b| b.path.len()).max().unwrap_or(0)
    }

    /// Basis indices of classes from `u` to `v`.
    pub fn basis_between(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source == u && self.basis[i].target == v).collect()
    }

    /// Normal form of a traversal path in the basis.
    pub fn reduce_path(&self, path: &[usize]) -> Sparse {
        if path.is_empty() {
            panic!("empty path has no endpoints; use idempotent()");
        }
        match self.layers.get(path.len()).and_then(|l| l.get(path)) {
            Some(nf) => nf.clone(),
            None => vec![],
        }
    }

    pub fn is_zero_path(&self, path: &[usize]) -> bool {
        self.reduce_path(path).is_empty()
    }

    /// Structure constants of `b_i * b_j` (`b_j` applied first).
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i][j]
    }

    /// Product of dense elements.
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim());
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.products[i][j] {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// Dense element of a relation, which must vanish.
    pub fn relation_element(&self, r: &Relation) -> Vector {
        let mut out = zero_vec(self.dim());
        for (p, c) in &r.terms {
            for (k, d) in self.reduce_path(p) {
                out[k].add_mul(c, &d);
            }
        }
        out
    }

    /// Dimension of `e_v A e_u` for all pairs, as `[u][v]`.
    pub fn pair_dims(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut d = vec![vec![0; n]; n];
        for b in &self.basis {
            d[b.source][b.target] += 1;
        }
        d
    }

    pub fn opposite(&self) -> Arc<PathAlgebra> {
        self.opposite
            .get_or_init(|| {
                let rel = self
                    .relations
                    .iter()
                    .map(|r| Relation {
                        terms: r
                            .terms
                            .iter()
                            .map(|(p, c)| (p.iter().rev().copied().collect(), c.clone()))
                            .collect(),
                    })
                    .collect();
                PathAlgebra::build(self.field, self.quiver.opposite(), rel)
                    .expect("opposite of a valid algebra is valid")
            })
            .clone()
    }

    pub(crate) fn projective_cache(&self) -> &OnceLock<Vec<(Vec<usize>, Vec<Mat>)>> {
        &self.projectives
    }

    pub(crate) fn selfinjective_cache(&self) -> &OnceLock<bool> {
        &self.selfinjective
    }

    pub(crate) fn string_quotient_cache(&self) -> &OnceLock<Result<Option<Arc<PathAlgebra>>>> {
        &self.string_quotient
    }

    /// True when the relation ideal is spanned by paths.
    pub fn is_monomial(&self) -> bool {
        self.layers.iter().all(|layer| {
            layer.iter().all(|(p, nf)| match nf.as_slice() {
                [] => true,
                [(k, c)] => c.is_one() && self.basis[*k].path == *p,
                _ => false,
            })
        })
    }

    /// Paths of the given length with nonzero class that are basis elements.
    pub fn basis_paths(&self, len: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].path.len() == len).collect()
    }

    /// Human-readable name of a basis element.
    pub fn basis_name(&self, i: usize) -> String {
        let b = &self.basis[i];
        if b.path.is_empty() {
            format!("e_{}", self.quiver.vertices[b.source])
        } else {
            self.quiver.path_name(&b.path)
        }
    }

    /// Special biserial test, with the first violation found.
    pub fn special_biserial(&self) -> SpecialBiserial {
        let q = &self.quiver;
        for v in 0..q.vertices.len() {
            let out = q.arrows.iter().filter(|a| a.source == v).count();
            let inc = q.arrows.iter().filter(|a| a.target == v).count();
            if out > 2 {
                return SpecialBiserial::No(format!(
                    "vertex {} has {out} outgoing arrows",
                    q.vertices[v]
                ));
            }
            if inc > 2 {
                return SpecialBiserial::No(format!(
                    "vertex {} has {inc} incoming arrows",
                    q.vertices[v]
                ));
            }
        }
        for (b, beta) in q.arrows.iter().enumerate() {
            let after: Vec<_> = (0..q.arrows.len())
                .filter(|&g| q.arrows[g].source == beta.target && !self.is_zero_path(&[b, g]))
                .collect();
            if after.len() > 1 {
                return SpecialBiserial::No(format!(
                    "arrow {} has {} nonzero continuations",
                    beta.name,
                    after.len()
                ));
            }
            let before: Vec<_> = (0..q.arrows.len())
                .filter(|&a| q.arrows[a].target == beta.source && !self.is_zero_path(&[a, b]))
                .collect();
            if before.len() > 1 {
                return SpecialBiserial::No(format!(
                    "arrow {} has {} nonzero predecessors",
                    beta.name,
                    before.len()
                ));
            }
        }
        SpecialBiserial::Yes
    }

    pub fn is_special_biserial(&self) -> bool {
        matches!(self.special_biserial(), SpecialBiserial::Yes)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialBiserial {
    Yes,
    No(String),
}

/// The named algebras.
#[derive(Clone, Debug, PartialEq)]
pub enum Preset {
    /// Exterior algebra `k<x,y>/(x^2, y^2, xy + yx)`.
    Lambda2,
    Kronecker,
    /// `k[x,y]/(xy, yx, x^m, y^n)`
    GelfandPonomarev { m: usize, n: usize },
    /// Cyclic quiver with double arrows and the relations
    /// `x_{i+1} y_i + q_i y_{i+1} x_i`, `x_{i+1} x_i`, `y_{i+1} y_i`.
    LambdaNq { q: Vec<Scalar> },
}

impl Preset {
    /// Parses a preset name with string parameters, e.g.
    /// `("gelfand_ponomarev", ["2", "3"])` or `("lambda_nq", ["1", "-1/2"])`.
    pub fn parse(name: &str, params: &[String]) -> Result<Preset> {
        let ints = || -> Result<Vec<usize>> {
            params
                .iter()
                .map(|p| p.parse::<usize>().map_err(|_| Error::InvalidParams(format!("bad integer '{p}'"))))
                .collect()
        };
        match name {
            "lambda2" => Ok(Preset::Lambda2),
            "kronecker" => Ok(Preset::Kronecker),
            "gelfand_ponomarev" | "gp" => {
                let v = ints()?;
                if v.len() != 2 {
                    return Err(Error::InvalidParams("gelfand_ponomarev takes m n".into()));
                }
                Ok(Preset::GelfandPonomarev { m: v[0], n: v[1] })
            }
            "gp23" => Ok(Preset::GelfandPonomarev { m: 2, n: 3 }),
            "lambda_nq" | "lambda-nq" => {
                let q = params.iter().map(|p| p.parse::<Scalar>()).collect::<Result<Vec<_>>>()?;
                Ok(Preset::LambdaNq { q })
            }
            _ => Err(Error::UnknownPreset(name.to_string())),
        }
    }

    pub fn build(&self, field: FieldSpec) -> Result<Arc<PathAlgebra>> {
        let rel = |terms: Vec<(Vec<usize>, i64)>| {
            Relation::new(terms.into_iter().map(|(p, c)| (p, Scalar::from_int(c))).collect())
        };
        match self {
            Preset::Lambda2 => {
                let q = Quiver::new(&["1"], &[("x", "1", "1"), ("y", "1", "1")])?;
                // x = 0, y = 1; xy means y first
                let r = vec![
                    rel(vec![(vec![0, 0], 1)]),
                    rel(vec![(vec![1, 1], 1)]),
                    rel(vec![(vec![1, 0], 1), (vec![0, 1], 1)]),
                ];
                PathAlgebra::build(field, q, r)
            }
            Preset::Kronecker => {
                let q = Quiver::new(&["1", "2"], &[("x", "1", "2"), ("y", "1", "2")])?;
                PathAlgebra::build(field, q, vec![])
            }
            Preset::GelfandPonomarev { m, n } => {
                if *m < 2 || *n < 2 {
                    return Err(Error::InvalidParams("gelfand_ponomarev needs m, n >= 2".into()));
                }
                let q = Quiver::new(&["1"], &[("x", "1", "1"), ("y", "1", "1")])?;
                let r = vec![
                    rel(vec![(vec![1, 0], 1)]),
                    rel(vec![(vec![0, 1], 1)]),
                    Relation::monomial(vec![0; *m]),
                    Relation::monomial(vec![1; *n]),
                ];
                PathAlgebra::build(field, q, r)
            }
            Preset::LambdaNq { q } => {
                let n = q.len();
                if n == 0 {
                    return Err(Error::InvalidParams("lambda_nq needs n >= 1".into()));
                }
                if q.iter().any(Scalar::is_zero) {
                    return Err(Error::InvalidParams("lambda_nq parameters must be nonzero".into()));
                }
                let verts: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
                let mut arrows = Vec::new();
                for i in 0..n {
                    let (s, t) = (verts[i].clone(), verts[(i + 1) % n].clone());
                    arrows.push((format!("x{}", i + 1), s.clone(), t.clone()));
                    arrows.push((format!("y{}", i + 1), s, t));
                }
                let quiver = Quiver::new(&verts, &arrows)?;
                let (x, y) = (|i: usize| 2 * (i % n), |i: usize| 2 * (i % n) + 1);
                let mut r = Vec::new();
                for i in 0..n {
                    r.push(Relation::new(vec![
                        (vec![y(i), x(i + 1)], Scalar::one()),
                        (vec![x(i), y(i + 1)], q[i].clone()),
                    ]));
                    r.push(Relation::monomial(vec![x(i), x(i + 1)]));
                    r.push(Relation::monomial(vec![y(i), y(i + 1)]));
                }
                PathAlgebra::build(field, quiver, r)
            }
        }
    }
}

/// Convenience: build a preset by name over a field.
pub fn preset(name: &str, params: &[String], field: FieldSpec) -> Result<Arc<PathAlgebra>> {
    Preset::parse(name, params)?.build(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn lambda2_basis() {
        let a = Preset::Lambda2.build(q()).unwrap();
        assert_eq!(a.dim(), 4);
        let names: Vec<String> = (0..4).map(|i| a.basis_name(i)).collect();
        // xy = y first, then x
        assert_eq!(names, vec!["e_1", "x", "y", "y x"]);
        // yx = -xy
        let yx = a.reduce_path(&[0, 1]);
        assert_eq!(yx, vec![(3, Scalar::from_int(-1))]);
        assert!(a.reduce_path(&[0, 0]).is_empty());
        assert_eq!(a.max_path_length(), 2);
    }

    #[test]
    fn gp23_basis() {
        let a = Preset::GelfandPonomarev { m: 2, n: 3 }.build(q()).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.reduce_path(&[1, 1, 1]).is_empty());
        assert!(!a.reduce_path(&[1, 1]).is_empty());
    }

    #[test]
    fn kronecker_dim() {
        let a = Preset::Kronecker.build(q()).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.is_special_biserial());
    }

    #[test]
    fn lambda_nq_dims() {
        for n in 1..=4 {
            let a = Preset::LambdaNq { q: vec![Scalar::one(); n] }.build(q()).unwrap();
            assert_eq!(a.dim(), 4 * n);
            assert!(a.is_special_biserial());
        }
    }

    #[test]
    fn three_kronecker_not_special_biserial() {
        let quiver =
            Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2"), ("c", "1", "2")]).unwrap();
        let a = PathAlgebra::build(q(), quiver, vec![]).unwrap();
        match a.special_biserial() {
            SpecialBiserial::No(msg) => assert!(msg.contains("3 outgoing")),
            SpecialBiserial::Yes => panic!("three arrows out of one vertex"),
        }
    }

    #[test]
    fn free_loop_is_not_admissible() {
        let quiver = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let e = PathAlgebra::build_with_cap(q(), quiver, vec![], 8).unwrap_err();
        assert_eq!(e, Error::NonAdmissible(8));
    }

    #[test]
    fn malformed_relations_rejected() {
        let quiver = Quiver::new(&["1", "2"], &[("x", "1", "2"), ("y", "2", "1")]).unwrap();
        let short = Relation::monomial(vec![0]);
        assert!(matches!(
            PathAlgebra::build(q(), quiver.clone(), vec![short]),
            Err(Error::MalformedRelation(_))
        ));
        let not_path = Relation::monomial(vec![0, 0]);
        assert!(matches!(
            PathAlgebra::build(q(), quiver.clone(), vec![not_path]),
            Err(Error::MalformedRelation(_))
        ));
        let not_parallel = Relation::new(vec![
            (vec![0, 1], Scalar::one()),
            (vec![1, 0], Scalar::one()),
        ]);
        assert!(matches!(
            PathAlgebra::build(q(), quiver.clone(), vec![not_parallel]),
            Err(Error::MalformedRelation(_))
        ));
        let zero_coeff = Relation::new(vec![(vec![0, 1], Scalar::zero())]);
        assert!(matches!(
            PathAlgebra::build(q(), quiver, vec![zero_coeff]),
            Err(Error::MalformedRelation(_))
        ));
    }

    #[test]
    fn preset_errors() {
        assert!(matches!(Preset::parse("nope", &[]), Err(Error::UnknownPreset(_))));
        let zero_q = Preset::LambdaNq { q: vec![Scalar::one(), Scalar::zero()] };
        assert!(matches!(zero_q.build(q()), Err(Error::InvalidParams(_))));
        assert!(matches!(
            Preset::GelfandPonomarev { m: 1, n: 3 }.build(q()),
            Err(Error::InvalidParams(_))
        ));
    }
}
