use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_transrad"))
        .args(args)
        .env_remove("TRANSRAD_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

fn write_module(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let p = path(dir, name);
    let mut all = args.to_vec();
    all.extend(["--out", &p]);
    ok_json(&all);
    p
}

#[test]
fn preset_then_check() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "l2.json");
    let summary = ok_json(&["algebra", "preset", "lambda2", "--out", &file]);
    assert_eq!(summary["dimension"], 4);
    let check = ok_json(&["algebra", "check", &file]);
    assert_eq!(check["dimension"], 4);
    assert_eq!(check["basis"], serde_json::json!(["e_1", "x", "y", "y x"]));
    // the file also works as an algebra spec
    let bands = ok_json(&["--algebra", &file, "bands", "enum"]);
    assert_eq!(bands["count"], 1);
}

#[test]
fn predicates() {
    let p = ok_json(&["algebra", "predicates"]);
    assert_eq!(p["special_biserial"], true);
    assert_eq!(p["selfinjective"], true);
    let k = ok_json(&["--algebra", "kronecker", "algebra", "predicates"]);
    assert_eq!(k["selfinjective"], false);
}

#[test]
fn enumerations() {
    assert_eq!(ok_json(&["bands", "enum"])["count"], 1);
    assert_eq!(ok_json(&["--max-len", "3", "strings", "enum"])["count"], 7);
    let n = ok_json(&["--algebra", "lambda-nq:1,1", "bands", "enum"]);
    assert_eq!(n["count"], 2);
    let csv = run(&["--format", "csv", "--max-len", "2", "strings", "enum"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("word,length\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn modules_and_homs() {
    let dir = TempDir::new().unwrap();
    let x2 = write_module(&dir, "x2.json", &["module", "string", "y x^- y x^-"]);
    let band = write_module(&dir, "band.json", &["module", "band", "x y^-", "--param", "1:1"]);
    let text = std::fs::read_to_string(&x2).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["dims"]["1"], 5);

    assert!(ok_json(&["hom", &x2, &x2])["dim"].as_u64().unwrap() >= 1);
    let plain = ok_json(&["hom", &band, &x2])["dim"].as_u64().unwrap();
    let stable = ok_json(&["hom", &band, &x2, "--stable"])["dim"].as_u64().unwrap();
    assert!(stable <= plain);
    // no endomorphism of Λ/Λ(x + y) factors through Λ
    assert_eq!(ok_json(&["hom", &band, &band, "--stable"])["dim"], 2);

    let t = ok_json(&["tau", &band]);
    assert_eq!(t["dims"]["1"], 2);
    let c = ok_json(&["cosyzygy", &x2]);
    assert_eq!(c["dims"]["1"], 7);
}

#[test]
fn errors_exit_two_with_json() {
    let dir = TempDir::new().unwrap();
    let bad = path(&dir, "bad.json");
    std::fs::write(
        &bad,
        r#"{"field": "rationals", "vertices": ["1", "2"],
            "arrows": [{"name": "a", "source": "1", "target": "2"}],
            "relations": [[{"coeff": "1", "path": ["a", "a"]}]]}"#,
    )
    .unwrap();
    let o = run(&["algebra", "check", &bad]);
    assert_eq!(o.status.code(), Some(2));
    let e: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(e["error"], "MalformedRelation");

    let o = run(&["--algebra", "nope", "bands", "enum"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--algebra", "gp23", "cosyzygy", &bad]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--algebra", "gp23", "closure", "thick", "0", "--max-dim", "3"]);
    let e: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(e["error"], "NotSelfinjective");
}

#[test]
fn window_ideals_and_search() {
    let dir = TempDir::new().unwrap();
    let win = path(&dir, "w.json");
    let s = ok_json(&["--max-dim", "5", "window", "build", "--compositions", "--out", &win]);
    let labels: Vec<String> = serde_json::from_value(s["objects"].clone()).unwrap();
    assert!(labels.contains(&"string:x".to_string()));

    let t = ok_json(&["--window", &win, "ideal", "transfinite"]);
    assert_eq!(t["star_is_zero"], true);
    assert_eq!(ok_json(&["--window", &win, "ideal", "idempotent"])["idempotent"], false);
    assert_eq!(ok_json(&["--window", &win, "ideal", "idempotent", "--of", "full"])["idempotent"], true);

    let rad = ok_json(&["--window", &win, "ideal", "radical"]);
    let sq = ok_json(&["--window", &win, "ideal", "product", "radical", "radical"]);
    assert_eq!(ok_json(&["--window", &win, "ideal", "product", "rad", "rad^1"]), sq);
    assert!(sq["total_dim"].as_u64() < rad["total_dim"].as_u64());

    // the identity of an object is not radical
    let x = labels.iter().position(|l| l == "string:x").unwrap();
    let hom_dim = rad["dims"][x][x].as_u64().unwrap() as usize + 1;
    let mut coords = vec!["0".to_string(); hom_dim];
    let w: Value = serde_json::from_str(&std::fs::read_to_string(&win).unwrap()).unwrap();
    let free = w["homs"].as_array().unwrap().iter().find(|h| h["source"] == x && h["target"] == x).unwrap();
    // the identity has 1 at every free diagonal entry
    for (k, e) in free["free"].as_array().unwrap().iter().enumerate() {
        if e[1] == e[2] {
            coords[k] = "1".into();
        }
    }
    let f = path(&dir, "id.json");
    std::fs::write(&f, serde_json::json!({"source": "string:x", "target": "string:x", "coords": coords}).to_string())
        .unwrap();
    let o = run(&["--window", &win, "ideal", "search", &f]);
    assert_eq!(o.status.code(), Some(2));
    let d = ok_json(&["--window", &win, "ideal", "decompose", &f, "--of", "full"]);
    assert_eq!(d["certified"], true);
    assert_eq!(d["f2_is_zero"], true);

    let through = ok_json(&["--window", &win, "ideal", "identity-part", "--of", "through:string:x"]);
    assert_eq!(through["identity_objects"], serde_json::json!(["string:x"]));
}

#[test]
fn quiver_dump_to_file_and_stdout() {
    let dir = TempDir::new().unwrap();
    let dot = path(&dir, "q.dot");
    let s = ok_json(&["--max-dim", "4", "quiver", "dump", "--out", &dot]);
    assert!(s["nodes"].as_u64().unwrap() > 0);
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph"));
    let o = run(&["--max-dim", "0", "quiver", "dump"]);
    assert!(o.status.success());
    assert!(String::from_utf8(o.stdout).unwrap().starts_with("digraph"));
}

#[test]
fn closure_report() {
    let r = ok_json(&["--max-dim", "5", "closure", "resolving"]);
    assert_eq!(r["closure"], "resolving");
    assert!(r["report"]["objects"].as_array().unwrap().len() >= 1);
}

fn strip_runtimes(mut v: Value) -> Value {
    for c in v["checks"].as_array_mut().unwrap() {
        c.as_object_mut().unwrap().remove("runtime_ms");
    }
    v
}

#[test]
fn suite_is_deterministic() {
    let a = ok_json(&["suite", "lambda-nq"]);
    assert_eq!(a["pass"], true);
    assert!(a["checks"].as_array().unwrap().iter().all(|c| c["provenance"].is_string()));
    let b = ok_json(&["suite", "lambda-nq"]);
    assert_eq!(strip_runtimes(a), strip_runtimes(b));
    assert_eq!(run(&["suite", "nope"]).status.code(), Some(2));
}

#[test]
fn window_cache_is_reused() {
    let dir = TempDir::new().unwrap();
    let cache = dir.path().join("cache");
    let go = || {
        Command::new(env!("CARGO_BIN_EXE_transrad"))
            .args(["--max-dim", "3", "ideal", "radical"])
            .env("TRANSRAD_CACHE_DIR", &cache)
            .output()
            .unwrap()
    };
    let first = go();
    assert!(first.status.success());
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 1);
    assert_eq!(go().stdout, first.stdout);
    assert!(Path::new(&cache).is_dir());
}
