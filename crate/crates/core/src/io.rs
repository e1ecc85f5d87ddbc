//! JSON interchange for algebras, representations and window archives.
//!
//! Scalars are written as exact strings (`"-3/2"`), paths as arrow names in
//! the order they are traversed, and matrices as lists of rows.

use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::algebra::{PathAlgebra, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::ideal::{CompTensor, Window, WindowObject};
use crate::linalg::Mat;
use crate::repmod::{HomSpace, Morphism, Representation};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: Scalar,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub field: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<TermJson>>,
}

type MatJson = Vec<Vec<Scalar>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationJson {
    pub dims: IndexMap<String, usize>,
    pub maps: IndexMap<String, MatJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub algebra: AlgebraJson,
    #[serde(flatten)]
    pub module: RepresentationJson,
}

pub fn algebra_json(a: &PathAlgebra) -> AlgebraJson {
    let q = a.quiver();
    AlgebraJson {
        field: a.field().label(),
        vertices: q.vertices.clone(),
        arrows: q
            .arrows
            .iter()
            .map(|ar| ArrowJson {
                name: ar.name.clone(),
                source: q.vertices[ar.source].clone(),
                target: q.vertices[ar.target].clone(),
            })
            .collect(),
        relations: a
            .relations()
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|(p, c)| TermJson {
                        coeff: c.clone(),
                        path: p.iter().map(|&i| q.arrows[i].name.clone()).collect(),
                    })
                    .collect()
            })
            .collect(),
    }
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<Arc<PathAlgebra>> {
    let field: FieldSpec = j.field.parse()?;
    let arrows: Vec<(&str, &str, &str)> =
        j.arrows.iter().map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str())).collect();
    let verts: Vec<&str> = j.vertices.iter().map(String::as_str).collect();
    let quiver = Quiver::new(&verts, &arrows)?;
    let mut relations = Vec::with_capacity(j.relations.len());
    for terms in &j.relations {
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let path = t
                .path
                .iter()
                .map(|n| {
                    quiver.arrow_index(n).ok_or_else(|| Error::MalformedRelation(format!("unknown arrow '{n}'")))
                })
                .collect::<Result<Vec<_>>>()?;
            out.push((path, field.element(&t.coeff)?));
        }
        relations.push(Relation::new(out));
    }
    PathAlgebra::build(field, quiver, relations)
}

fn mat_json(m: &Mat) -> MatJson {
    m.row_vecs()
}

fn mat_from_json(field: &FieldSpec, rows: usize, cols: usize, j: &MatJson, what: &str) -> Result<Mat> {
    let bad = || Error::InvalidRepresentation(format!("{what}: expected a {rows}x{cols} matrix"));
    if j.len() != rows || j.iter().any(|r| r.len() != cols) {
        // an empty list stands for any matrix with no entries
        if !(rows * cols == 0 && j.iter().all(Vec::is_empty)) {
            return Err(bad());
        }
    }
    let mut data = Vec::with_capacity(rows * cols);
    for r in j.iter().take(rows) {
        for x in r {
            data.push(field.element(x)?);
        }
    }
    Ok(Mat::from_flat(rows, cols, data))
}

pub fn representation_json(m: &Representation) -> RepresentationJson {
    let q = m.algebra().quiver();
    RepresentationJson {
        dims: q.vertices.iter().cloned().zip(m.dims().iter().copied()).collect(),
        maps: q.arrows.iter().zip(m.maps()).map(|(a, x)| (a.name.clone(), mat_json(x))).collect(),
    }
}

/// Largest dimension accepted at a single vertex when reading.
pub const MAX_VERTEX_DIM: usize = 4096;

/// Reads a representation; vertices and arrows are matched by name and
/// missing maps default to zero.
pub fn representation_from_json(a: &Arc<PathAlgebra>, j: &RepresentationJson) -> Result<Representation> {
    let q = a.quiver();
    let mut dims = vec![0; q.vertices.len()];
    for (name, &d) in &j.dims {
        if d > MAX_VERTEX_DIM {
            return Err(Error::InvalidRepresentation(format!("dimension {d} at '{name}' exceeds {MAX_VERTEX_DIM}")));
        }
        let v = q.vertex_index(name).ok_or_else(|| Error::InvalidRepresentation(format!("unknown vertex '{name}'")))?;
        dims[v] = d;
    }
    for name in j.maps.keys() {
        if q.arrow_index(name).is_none() {
            return Err(Error::InvalidRepresentation(format!("unknown arrow '{name}'")));
        }
    }
    let maps = q
        .arrows
        .iter()
        .map(|ar| {
            let (r, c) = (dims[ar.target], dims[ar.source]);
            match j.maps.get(&ar.name) {
                Some(m) => mat_from_json(&a.field(), r, c, m, &ar.name),
                None => Ok(Mat::zeros(r, c)),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(a.clone(), dims, maps)
}

pub fn module_file(m: &Representation) -> ModuleFile {
    ModuleFile { algebra: algebra_json(m.algebra()), module: representation_json(m) }
}

pub fn module_from_file(f: &ModuleFile) -> Result<Representation> {
    representation_from_json(&algebra_from_json(&f.algebra)?, &f.module)
}

pub fn to_json_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

pub fn from_json_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub const ARCHIVE_FORMAT: &str = "transrad-window";
pub const ARCHIVE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArchiveObject {
    pub label: String,
    #[serde(flatten)]
    pub module: RepresentationJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArchiveHom {
    pub source: usize,
    pub target: usize,
    /// `(vertex, row, column)` of the entry carrying each coordinate.
    pub free: Vec<(usize, usize, usize)>,
    /// Per basis morphism, one matrix per vertex.
    pub basis: Vec<Vec<MatJson>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArchiveComposition {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub entries: Vec<Vec<Vec<(usize, Scalar)>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowArchive {
    pub format: String,
    pub version: u32,
    pub algebra: AlgebraJson,
    pub objects: Vec<ArchiveObject>,
    pub homs: Vec<ArchiveHom>,
    #[serde(default)]
    pub compositions: Vec<ArchiveComposition>,
}

/// Serializes a window. With `compositions`, every composition tensor is
/// computed and stored; only nonzero tensors are written.
pub fn window_archive(w: &Window, compositions: bool) -> WindowArchive {
    let n = w.len();
    let mut homs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let h = w.hom(x, y);
            if h.dim() == 0 {
                continue;
            }
            homs.push(ArchiveHom {
                source: x,
                target: y,
                free: h.free.clone(),
                basis: h.basis.iter().map(|f| f.blocks.iter().map(mat_json).collect()).collect(),
            });
        }
    }
    let mut comps = Vec::new();
    if compositions {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if w.hom_dim(x, y) == 0 || w.hom_dim(y, z) == 0 {
                        continue;
                    }
                    let t = w.composition(x, y, z);
                    if t.entries.iter().flatten().all(Vec::is_empty) {
                        continue;
                    }
                    comps.push(ArchiveComposition { x, y, z, entries: t.entries.clone() });
                }
            }
        }
    }
    WindowArchive {
        format: ARCHIVE_FORMAT.into(),
        version: ARCHIVE_VERSION,
        algebra: algebra_json(w.algebra()),
        objects: w
            .objects()
            .iter()
            .map(|o| ArchiveObject { label: o.label.clone(), module: representation_json(&o.module) })
            .collect(),
        homs,
        compositions: comps,
    }
}

/// Rebuilds a window. Hom bases are checked to be intertwiners in echelon
/// position with respect to their free entries; stored compositions are
/// taken as given.
pub fn window_from_archive(ar: &WindowArchive) -> Result<Window> {
    if ar.format != ARCHIVE_FORMAT || ar.version != ARCHIVE_VERSION {
        return Err(Error::Parse(format!("unsupported archive {} v{}", ar.format, ar.version)));
    }
    let a = algebra_from_json(&ar.algebra)?;
    let objects = ar
        .objects
        .iter()
        .map(|o| Ok(WindowObject { label: o.label.clone(), module: representation_from_json(&a, &o.module)? }))
        .collect::<Result<Vec<_>>>()?;
    let n = objects.len();
    let mut homs: Vec<Option<HomSpace>> = vec![None; n * n];
    for h in &ar.homs {
        if h.source >= n || h.target >= n {
            return Err(Error::Parse("hom refers to a missing object".into()));
        }
        let (m, t) = (&objects[h.source].module, &objects[h.target].module);
        let (sd, td) = (m.dims().to_vec(), t.dims().to_vec());
        if h.free.len() != h.basis.len() {
            return Err(Error::Parse("hom basis and free entries differ in length".into()));
        }
        let mut basis = Vec::with_capacity(h.basis.len());
        for f in &h.basis {
            if f.len() != sd.len() {
                return Err(Error::Parse("hom basis morphism has the wrong number of blocks".into()));
            }
            let blocks = f
                .iter()
                .enumerate()
                .map(|(v, b)| mat_from_json(&a.field(), td[v], sd[v], b, "hom block"))
                .collect::<Result<Vec<_>>>()?;
            let f = Morphism { blocks };
            if !f.is_intertwiner(m, t) {
                return Err(Error::Parse("hom basis element is not a morphism".into()));
            }
            basis.push(f);
        }
        for (i, f) in basis.iter().enumerate() {
            for (j, &(v, r, c)) in h.free.iter().enumerate() {
                if v >= sd.len() || r >= td[v] || c >= sd[v] {
                    return Err(Error::Parse("free entry out of range".into()));
                }
                let want = if i == j { Scalar::one() } else { Scalar::zero() };
                if f.blocks[v][(r, c)] != want {
                    return Err(Error::Parse("hom basis is not in echelon position".into()));
                }
            }
        }
        homs[h.source * n + h.target] = Some(HomSpace { source_dims: sd, target_dims: td, basis, free: h.free.clone() });
    }
    let homs = homs
        .into_iter()
        .enumerate()
        .map(|(k, h)| {
            h.unwrap_or_else(|| HomSpace {
                source_dims: objects[k / n].module.dims().to_vec(),
                target_dims: objects[k % n].module.dims().to_vec(),
                basis: vec![],
                free: vec![],
            })
        })
        .collect();
    let w = Window::from_parts(a, objects, homs);
    for c in &ar.compositions {
        if c.x >= n || c.y >= n || c.z >= n {
            return Err(Error::Parse("composition refers to a missing object".into()));
        }
        let (dg, df, dr) = (w.hom_dim(c.y, c.z), w.hom_dim(c.x, c.y), w.hom_dim(c.x, c.z));
        if c.entries.len() != dg
            || c.entries.iter().any(|r| r.len() != df || r.iter().flatten().any(|(k, _)| *k >= dr))
        {
            return Err(Error::Parse("composition tensor has the wrong shape".into()));
        }
        let entries = c
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.iter().map(|(k, s)| Ok((*k, a_elem(&w, s)?))).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        w.set_composition(c.x, c.y, c.z, CompTensor { entries });
    }
    Ok(w)
}

fn a_elem(w: &Window, s: &Scalar) -> Result<Scalar> {
    w.algebra().field().element(s)
}
