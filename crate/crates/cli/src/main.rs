use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use transrad::ideal::{
    idempotent_decomposition, ideal_product, identity_objects, identity_part, is_idempotent, quiver_dump, resolving_closure,
    ses_catalog, thick_closure, transfinite_power, FactorSearch, MorphismIdeal, Window,
};
use transrad::io;
use transrad::linalg::Vector;
use transrad::repmod::{ar_translate, cosyzygy, hom, injective, iso_indecomposable, is_selfinjective, projective, stable_hom, Morphism};
use transrad::strings::{band_module, enumerate_bands, enumerate_strings, string_module, BandWord, P1Point, StringWord, DEFAULT_SAMPLES};
use transrad::{Error, FieldSpec, PathAlgebra, Representation, Result};

mod context;
mod suite;

use context::Context;

#[derive(Parser)]
#[command(name = "transrad", version, about = "Path algebras, string and band modules, and ideals of module windows")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Preset (`lambda2`, `kronecker`, `gp:2,3`, `lambda_nq:1,1`) or algebra JSON file
    #[arg(long, global = true, default_value = "lambda2")]
    algebra: String,
    /// `rationals` or `prime:p`
    #[arg(long, global = true, default_value = "rationals")]
    field: FieldSpec,
    /// Dimension bound for catalogs and windows
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    /// Word length bound for string and band enumeration
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Band parameters as `a:b` points, comma separated
    #[arg(long, global = true, default_value = DEFAULT_SAMPLES)]
    samples: String,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Output file for the command's artifact or report
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Window archive to use instead of building one
    #[arg(long, global = true)]
    window: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    #[command(subcommand)]
    Strings(EnumCmd),
    #[command(subcommand)]
    Bands(EnumCmd),
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Dimension and basis of Hom(A, B), or of the stable Hom
    Hom {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        stable: bool,
    },
    /// Auslander-Reiten translate of an indecomposable
    Tau { m: PathBuf },
    Cosyzygy { m: PathBuf },
    #[command(subcommand)]
    Window(WindowCmd),
    #[command(subcommand)]
    Ideal(IdealCmd),
    #[command(subcommand)]
    Closure(ClosureCmd),
    /// Run a reproduction suite: lambda2, kronecker, gp23 or lambda-nq
    Suite { name: String },
    #[command(subcommand)]
    Quiver(QuiverCmd),
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Validate an algebra file and print its basis
    Check { file: PathBuf },
    /// Emit the definition of a preset
    Preset { name: String, params: Vec<String> },
    /// Special biserial and selfinjective verdicts
    Predicates { file: Option<PathBuf> },
}

#[derive(Subcommand)]
enum EnumCmd {
    Enum,
}

#[derive(Subcommand)]
enum ModuleCmd {
    String { word: String },
    Band {
        word: String,
        #[arg(long, default_value = "1:0")]
        param: P1Point,
        #[arg(long, default_value_t = 1)]
        mult: usize,
    },
}

#[derive(Subcommand)]
enum WindowCmd {
    /// Build the catalog window and write its archive
    Build {
        /// Also store every composition tensor
        #[arg(long)]
        compositions: bool,
    },
}

/// Ideals are `radical`, `rad^k`, `zero`, `full`, `through:L1;L2` or `gen:<file>`.
#[derive(Subcommand)]
enum IdealCmd {
    Radical,
    Gen { file: PathBuf },
    Product { left: String, right: String },
    Transfinite {
        #[arg(long, default_value = "radical")]
        of: String,
    },
    Idempotent {
        #[arg(long, default_value = "radical")]
        of: String,
    },
    IdentityPart {
        #[arg(long, default_value = "radical")]
        of: String,
    },
    /// Split a member of an idempotent ideal as f1 + f2
    Decompose {
        morphism: PathBuf,
        #[arg(long)]
        of: String,
    },
    /// Dyadic factorization search for a radical morphism
    Search {
        morphism: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
}

#[derive(Subcommand)]
enum ClosureCmd {
    Thick { seeds: Vec<String> },
    Resolving { seeds: Vec<String> },
}

#[derive(Subcommand)]
enum QuiverCmd {
    /// Graphviz source of the window's part of the AR quiver
    Dump,
}

enum Outcome {
    Pass,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(2)
        }
    }
}

struct Io {
    out: Option<PathBuf>,
    format: Format,
}

impl Io {
    /// Prints a report and mirrors it to `--out`.
    fn report(&self, v: &impl Serialize) -> Result<()> {
        let s = io::to_json_string(v);
        println!("{s}");
        if let Some(p) = &self.out {
            context::write(p, &(s + "\n"))?;
        }
        Ok(())
    }

    fn csv(&self, header: &[String], rows: Vec<Vec<String>>) -> Result<()> {
        let mut w = csv::Writer::from_writer(vec![]);
        let err = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(header).map_err(err)?;
        for r in rows {
            w.write_record(&r).map_err(err)?;
        }
        let s = String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.to_string()))?).expect("utf-8");
        print!("{s}");
        if let Some(p) = &self.out {
            context::write(p, &s)?;
        }
        Ok(())
    }

    /// Writes an artifact to `--out` and a summary to stdout, or the
    /// artifact itself to stdout.
    fn artifact(&self, text: &str, summary: Value) -> Result<()> {
        match &self.out {
            Some(p) => {
                context::write(p, text)?;
                println!("{}", io::to_json_string(&summary));
            }
            None => print!("{text}"),
        }
        Ok(())
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let g = cli.global;
    let ctx = Context {
        field: g.field,
        algebra_spec: g.algebra.clone(),
        max_dim: g.max_dim.unwrap_or(6),
        max_len: g.max_len.unwrap_or(8),
        samples: g.samples.clone(),
        seed: g.seed,
        window_file: g.window.clone(),
    };
    let out = Io { out: g.out.clone(), format: g.format };
    match cli.command {
        Command::Algebra(c) => algebra_cmd(&ctx, &out, c),
        Command::Strings(EnumCmd::Enum) => {
            let a = ctx.algebra()?;
            let words: Vec<StringWord> = enumerate_strings(&a, ctx.max_len)?;
            let items: Vec<(String, usize)> = words.iter().map(|w| (w.format(&a), w.len())).collect();
            enum_report(&out, ctx.max_len, items)
        }
        Command::Bands(EnumCmd::Enum) => {
            let a = ctx.algebra()?;
            let items = enumerate_bands(&a, ctx.max_len)?.iter().map(|b| (b.format(&a), b.len())).collect();
            enum_report(&out, ctx.max_len, items)
        }
        Command::Module(c) => {
            let a = ctx.algebra()?;
            let m = match c {
                ModuleCmd::String { word } => string_module(&a, &StringWord::parse(&a, &word)?)?,
                ModuleCmd::Band { word, param, mult } => band_module(&a, &BandWord::parse(&a, &word)?, &param, mult)?,
            };
            emit_module(&out, &m)
        }
        Command::Hom { a, b, stable } => {
            let (m, n) = (context::load_module(&a)?, context::load_module(&b)?);
            let basis: Vec<Morphism> = if stable {
                stable_hom(&m, &n)?.complement()
            } else {
                hom(&m, &n)?.basis
            };
            let witnesses: Vec<Vec<Vec<Vector>>> =
                basis.iter().map(|f| f.blocks.iter().map(|b| b.row_vecs()).collect()).collect();
            out.report(&json!({ "stable": stable, "dim": basis.len(), "basis": witnesses }))?;
            Ok(Outcome::Pass)
        }
        Command::Tau { m } => emit_module(&out, &ar_translate(&context::load_module(&m)?)?),
        Command::Cosyzygy { m } => emit_module(&out, &cosyzygy(&context::load_module(&m)?)?),
        Command::Window(WindowCmd::Build { compositions }) => {
            let w = ctx.window()?;
            if out.format == Format::Csv {
                window_table(&out, &w)?;
                return Ok(Outcome::Pass);
            }
            let text = io::to_json_string(&io::window_archive(&w, compositions)) + "\n";
            out.artifact(&text, json!({ "objects": w.labels() }))?;
            Ok(Outcome::Pass)
        }
        Command::Ideal(c) => ideal_cmd(&ctx, &out, c),
        Command::Closure(c) => {
            let w = ctx.window()?;
            let (seeds, thick) = match &c {
                ClosureCmd::Thick { seeds } => (seeds, true),
                ClosureCmd::Resolving { seeds } => (seeds, false),
            };
            let seeds = seeds.iter().map(|s| context::object(&w, s)).collect::<Result<Vec<_>>>()?;
            let cat = ses_catalog(&w, ctx.seed)?;
            let r = if thick { thick_closure(&w, &cat, &seeds)? } else { resolving_closure(&w, &cat, &seeds)? };
            out.report(&json!({
                "closure": if thick { "thick" } else { "resolving" },
                "seed": ctx.seed,
                "sequences": cat.sequences.len(),
                "report": r,
            }))?;
            Ok(Outcome::Pass)
        }
        Command::Suite { name } => {
            let env = suite::Environment {
                field: g.field.label(),
                max_dim: g.max_dim,
                max_len: g.max_len,
                samples: g.samples,
                seed: g.seed,
            };
            let r = suite::run(&name, env)?;
            out.report(&r)?;
            Ok(if r.pass { Outcome::Pass } else { Outcome::CheckFailed })
        }
        Command::Quiver(QuiverCmd::Dump) => {
            let w = ctx.window()?;
            let q = quiver_dump(&w)?;
            out.artifact(&q.to_dot(), json!({ "nodes": q.nodes.len(), "edges": q.edges.len(), "tau": q.tau.len() }))?;
            Ok(Outcome::Pass)
        }
    }
}

fn algebra_cmd(ctx: &Context, out: &Io, c: AlgebraCmd) -> Result<Outcome> {
    match c {
        AlgebraCmd::Check { file } => {
            let a = context::load_algebra(&file)?;
            out.report(&describe(&a))?;
        }
        AlgebraCmd::Preset { name, params } => {
            let a = transrad::algebra::preset(&name, &params, ctx.field)?;
            let text = io::to_json_string(&io::algebra_json(&a)) + "\n";
            out.artifact(&text, describe(&a))?;
        }
        AlgebraCmd::Predicates { file } => {
            let a = match file {
                Some(f) => context::load_algebra(&f)?,
                None => ctx.algebra()?,
            };
            let sb = match a.special_biserial() {
                transrad::algebra::SpecialBiserial::Yes => Value::Null,
                transrad::algebra::SpecialBiserial::No(why) => Value::String(why),
            };
            // P(v) ≅ I(w) pairs certify selfinjectivity
            let mut pairs = Vec::new();
            for v in 0..a.num_vertices() {
                let p = projective(&a, v);
                for w in 0..a.num_vertices() {
                    if iso_indecomposable(&p, &injective(&a, w))? {
                        pairs.push((a.quiver().vertices[v].clone(), a.quiver().vertices[w].clone()));
                        break;
                    }
                }
            }
            out.report(&json!({
                "special_biserial": sb.is_null(),
                "special_biserial_violation": sb,
                "selfinjective": is_selfinjective(&a),
                "projective_injective_pairs": pairs,
            }))?;
        }
    }
    Ok(Outcome::Pass)
}

fn describe(a: &PathAlgebra) -> Value {
    json!({
        "field": a.field().label(),
        "vertices": a.num_vertices(),
        "arrows": a.num_arrows(),
        "relations": a.relations().len(),
        "dimension": a.dim(),
        "basis": (0..a.dim()).map(|i| a.basis_name(i)).collect::<Vec<_>>(),
    })
}

fn enum_report(out: &Io, max_len: usize, items: Vec<(String, usize)>) -> Result<Outcome> {
    if out.format == Format::Csv {
        let rows = items.into_iter().map(|(w, l)| vec![w, l.to_string()]).collect();
        out.csv(&["word".into(), "length".into()], rows)?;
    } else {
        let words: Vec<&String> = items.iter().map(|(w, _)| w).collect();
        out.report(&json!({ "max_len": max_len, "count": items.len(), "items": words }))?;
    }
    Ok(Outcome::Pass)
}

fn emit_module(out: &Io, m: &Representation) -> Result<Outcome> {
    let text = io::to_json_string(&io::module_file(m)) + "\n";
    out.artifact(&text, json!({ "dimension": m.dim(), "dims": m.dims() }))?;
    Ok(Outcome::Pass)
}

fn window_table(out: &Io, w: &Window) -> Result<()> {
    let q = w.algebra().quiver();
    let mut header = vec!["index".to_string(), "label".into(), "dimension".into()];
    header.extend(q.vertices.iter().map(|v| format!("dim_{v}")));
    let rows = w
        .objects()
        .iter()
        .enumerate()
        .map(|(i, o)| {
            let mut r = vec![i.to_string(), o.label.clone(), o.module.dim().to_string()];
            r.extend(o.module.dims().iter().map(usize::to_string));
            r
        })
        .collect();
    out.csv(&header, rows)
}

fn ideal_json(w: &Window, i: &MorphismIdeal) -> Value {
    let mut pairs = Vec::new();
    for x in 0..w.len() {
        for y in 0..w.len() {
            let s = i.get(x, y);
            if !s.is_zero() {
                pairs.push(json!({ "source": x, "target": y, "hom_dim": w.hom_dim(x, y), "basis": s.basis() }));
            }
        }
    }
    json!({ "objects": w.labels(), "total_dim": i.total_dim(), "dims": i.dims(), "pairs": pairs })
}

fn emit_ideal(out: &Io, w: &Window, i: &MorphismIdeal, extra: Value) -> Result<()> {
    if out.format == Format::Csv {
        let mut header = vec!["source".to_string()];
        header.extend(w.labels());
        let rows = i
            .dims()
            .into_iter()
            .zip(w.labels())
            .map(|(row, l)| std::iter::once(l).chain(row.iter().map(usize::to_string)).collect())
            .collect();
        return out.csv(&header, rows);
    }
    let mut v = ideal_json(w, i);
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    out.report(&v)
}

fn ideal_cmd(ctx: &Context, out: &Io, c: IdealCmd) -> Result<Outcome> {
    let w = ctx.window()?;
    match c {
        IdealCmd::Radical => emit_ideal(out, &w, &context::ideal(&w, "radical")?, json!({}))?,
        IdealCmd::Gen { file } => {
            let gens = context::load_morphisms(&w, &file)?;
            emit_ideal(out, &w, &transrad::ideal::ideal_generated(&w, &gens), json!({}))?
        }
        IdealCmd::Product { left, right } => {
            let (l, r) = (context::ideal(&w, &left)?, context::ideal(&w, &right)?);
            emit_ideal(out, &w, &ideal_product(&w, &l, &r)?, json!({}))?
        }
        IdealCmd::Transfinite { of } => {
            let t = transfinite_power(&w, &context::ideal(&w, &of)?)?;
            let extra = json!({
                "chains": t.chains,
                "stabilization": t.stabilization,
                "outer_rounds": t.outer_rounds,
                "omega_total_dim": t.omega.total_dim(),
                "star_is_zero": t.star.is_zero(),
            });
            emit_ideal(out, &w, &t.star, extra)?
        }
        IdealCmd::Idempotent { of } => {
            let i = context::ideal(&w, &of)?;
            out.report(&json!({ "ideal": of, "idempotent": is_idempotent(&w, &i)? }))?
        }
        IdealCmd::IdentityPart { of } => {
            let i = context::ideal(&w, &of)?;
            let objs: Vec<String> = identity_objects(&w, &i)?.iter().map(|&x| w.objects()[x].label.clone()).collect();
            emit_ideal(out, &w, &identity_part(&w, &i)?, json!({ "identity_objects": objs }))?
        }
        IdealCmd::Decompose { morphism, of } => {
            let i = context::ideal(&w, &of)?;
            let f = context::load_morphism(&w, &morphism)?;
            let d = idempotent_decomposition(&w, &i, &f)?;
            out.report(&json!({
                "f1": d.f1.coords,
                "f2": d.f2.coords,
                "f2_is_zero": d.f2.coords.iter().all(|c| c.is_zero()),
                "terms": d.terms.iter().map(|t| json!({
                    "through": w.objects()[t.through].label,
                    "alpha": t.alpha,
                    "beta": t.beta,
                    "coeff": t.coeff,
                })).collect::<Vec<_>>(),
                "certified": d.certified,
            }))?
        }
        IdealCmd::Search { morphism, depth } => {
            let f = context::load_morphism(&w, &morphism)?;
            let r = FactorSearch::new(&w, depth)?.search(&f)?;
            out.report(&r)?
        }
    }
    Ok(Outcome::Pass)
}
