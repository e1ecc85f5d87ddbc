//! Input resolution shared by the subcommands.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Deserialize;
use transrad::ideal::{factor_through_ideal, ideal_generated, radical_ideal, radical_power, MorphismIdeal, Window, WindowMorphism};
use transrad::io::{self, ModuleFile, WindowArchive};
use transrad::strings::{build_catalog, P1Point};
use transrad::{Error, FieldSpec, PathAlgebra, Representation, Result, Scalar};

pub const CACHE_ENV: &str = "TRANSRAD_CACHE_DIR";

pub struct Context {
    pub field: FieldSpec,
    pub algebra_spec: String,
    pub max_dim: usize,
    pub max_len: usize,
    pub samples: String,
    pub seed: u64,
    pub window_file: Option<PathBuf>,
}

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// `name` or `name:p1,p2,...` for presets, anything else is a file.
pub fn parse_preset(spec: &str, field: FieldSpec) -> Result<Arc<PathAlgebra>> {
    let (name, params) = match spec.split_once(':') {
        Some((n, p)) => (n, p.split(',').map(|s| s.trim().to_string()).collect::<Vec<_>>()),
        None => (spec, vec![]),
    };
    transrad::algebra::preset(name, &params, field)
}

impl Context {
    pub fn algebra(&self) -> Result<Arc<PathAlgebra>> {
        let p = Path::new(&self.algebra_spec);
        if self.algebra_spec.ends_with(".json") || p.is_file() {
            load_algebra(p)
        } else {
            parse_preset(&self.algebra_spec, self.field)
        }
    }

    pub fn samples(&self) -> Result<Vec<P1Point>> {
        P1Point::parse_list(&self.samples)
    }

    /// The window from `--window`, from the cache, or freshly built.
    pub fn window(&self) -> Result<Window> {
        if let Some(f) = &self.window_file {
            return load_window(f);
        }
        let a = self.algebra()?;
        let cache = std::env::var_os(CACHE_ENV).map(PathBuf::from);
        let key = format!("{}|{}|{}", io::to_json_string(&io::algebra_json(&a)), self.max_dim, self.samples);
        let cached = cache.as_ref().map(|d| d.join(format!("window-{:016x}.json", fnv1a(key.as_bytes()))));
        if let Some(c) = &cached {
            if c.is_file() {
                return load_window(c);
            }
        }
        let w = build_window(&a, self.max_dim, &self.samples()?)?;
        if let (Some(dir), Some(c)) = (&cache, &cached) {
            fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
            write(c, &io::to_json_string(&io::window_archive(&w, false)))?;
        }
        Ok(w)
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

pub fn build_window(a: &Arc<PathAlgebra>, max_dim: usize, samples: &[P1Point]) -> Result<Window> {
    let cat = build_catalog(a, max_dim, samples)?;
    Window::build(a.clone(), cat.items.into_iter().map(|i| (i.label, i.module)).collect())
}

pub fn load_algebra(path: &Path) -> Result<Arc<PathAlgebra>> {
    io::algebra_from_json(&io::from_json_str(&read(path)?)?)
}

pub fn load_module(path: &Path) -> Result<Representation> {
    io::module_from_file(&io::from_json_str::<ModuleFile>(&read(path)?)?)
}

pub fn load_window(path: &Path) -> Result<Window> {
    io::window_from_archive(&io::from_json_str::<WindowArchive>(&read(path)?)?)
}

/// An object given by label or by index.
pub fn object(w: &Window, s: &str) -> Result<usize> {
    if let Some(i) = w.position(s) {
        return Ok(i);
    }
    match s.parse::<usize>() {
        Ok(i) if i < w.len() => Ok(i),
        _ => Err(Error::InvalidParameter(format!("no window object '{s}'"))),
    }
}

#[derive(Deserialize)]
struct MorphismJson {
    source: String,
    target: String,
    coords: Vec<Scalar>,
}

fn morphism_from(w: &Window, m: MorphismJson) -> Result<WindowMorphism> {
    let (source, target) = (object(w, &m.source)?, object(w, &m.target)?);
    if m.coords.len() != w.hom_dim(source, target) {
        return Err(Error::InvalidParameter(format!(
            "Hom({}, {}) has dimension {}, got {} coordinates",
            m.source,
            m.target,
            w.hom_dim(source, target),
            m.coords.len()
        )));
    }
    let f = w.algebra().field();
    let coords = m.coords.iter().map(|c| f.element(c)).collect::<Result<Vec<_>>>()?;
    Ok(WindowMorphism { source, target, coords })
}

/// A morphism file: `{"source": .., "target": .., "coords": [..]}`.
pub fn load_morphism(w: &Window, path: &Path) -> Result<WindowMorphism> {
    morphism_from(w, io::from_json_str(&read(path)?)?)
}

/// A list of morphisms in the same format.
pub fn load_morphisms(w: &Window, path: &Path) -> Result<Vec<WindowMorphism>> {
    let list: Vec<MorphismJson> = io::from_json_str(&read(path)?)?;
    list.into_iter().map(|m| morphism_from(w, m)).collect()
}

/// `radical`, `rad^k`, `zero`, `full`, `through:L1;L2` or `gen:<file>`.
pub fn ideal(w: &Window, spec: &str) -> Result<MorphismIdeal> {
    if spec == "radical" || spec == "rad" {
        return radical_ideal(w);
    }
    if spec == "zero" {
        return Ok(w.zero_ideal());
    }
    if spec == "full" {
        return Ok(w.full_ideal());
    }
    if let Some(k) = spec.strip_prefix("rad^") {
        let k = k.parse().map_err(|_| Error::InvalidParameter(format!("bad power in '{spec}'")))?;
        return radical_power(w, k);
    }
    if let Some(list) = spec.strip_prefix("through:") {
        let objs = list.split(';').filter(|s| !s.is_empty()).map(|s| object(w, s)).collect::<Result<Vec<_>>>()?;
        return Ok(factor_through_ideal(w, &objs));
    }
    if let Some(file) = spec.strip_prefix("gen:") {
        return Ok(ideal_generated(w, &load_morphisms(w, Path::new(file))?));
    }
    Err(Error::InvalidParameter(format!("unknown ideal '{spec}'")))
}
