use proptest::prelude::*;
use transrad::io::*;
use transrad::repmod::{iso, simple};
use transrad::strings::{enumerate_strings, string_module};
use transrad::{Error, FieldSpec, Preset, Scalar};

const ALGEBRA: &str = r#"{
  "field": "Q",
  "vertices": ["1"],
  "arrows": [{"name": "x", "source": "1", "target": "1"}, {"name": "y", "source": "1", "target": "1"}],
  "relations": [
    [{"coeff": "1", "path": ["x", "x"]}],
    [{"coeff": "1", "path": ["y", "y"]}],
    [{"coeff": "1", "path": ["x", "y"]}, {"coeff": "1", "path": ["y", "x"]}]
  ]
}"#;

#[test]
fn lambda2_from_json_matches_preset() {
    let a = algebra_from_json(&from_json_str(ALGEBRA).unwrap()).unwrap();
    let p = Preset::Lambda2.build(FieldSpec::Rationals).unwrap();
    assert_eq!(a.field(), p.field());
    let names = |a: &transrad::PathAlgebra| (0..a.dim()).map(|i| a.basis_name(i)).collect::<Vec<_>>();
    assert_eq!(names(&a), names(&p));
}

#[test]
fn algebra_round_trip() {
    for a in [
        Preset::Kronecker.build(FieldSpec::Prime { p: 5 }).unwrap(),
        Preset::LambdaNq { q: vec![Scalar::from_frac(2, 3), Scalar::from_int(-1)] }.build(FieldSpec::Rationals).unwrap(),
        Preset::GelfandPonomarev { m: 3, n: 2 }.build(FieldSpec::Rationals).unwrap(),
    ] {
        let text = to_json_string(&algebra_json(&a));
        let b = algebra_from_json(&from_json_str(&text).unwrap()).unwrap();
        assert_eq!(b.dim(), a.dim());
        assert_eq!(b.field(), a.field());
        assert_eq!(algebra_json(&b), algebra_json(&a));
    }
}

#[test]
fn bad_inputs() {
    let unknown = ALGEBRA.replace(r#""path": ["y", "y"]"#, r#""path": ["y", "z"]"#);
    let err = algebra_from_json(&from_json_str(&unknown).unwrap()).unwrap_err();
    assert!(matches!(err, Error::MalformedRelation(_)));
    assert!(matches!(from_json_str::<AlgebraJson>("{"), Err(Error::Parse(_))));
    let extra = ALGEBRA.replacen('{', r#"{"colour": "red","#, 1);
    assert!(from_json_str::<AlgebraJson>(&extra).is_err());

    let a = algebra_from_json(&from_json_str(ALGEBRA).unwrap()).unwrap();
    let rep = |s: &str| representation_from_json(&a, &from_json_str(s).unwrap());
    assert!(matches!(rep(r#"{"dims": {"1": 2}, "maps": {"x": [["1"]]}}"#), Err(Error::InvalidRepresentation(_))));
    assert!(matches!(rep(r#"{"dims": {"2": 1}, "maps": {}}"#), Err(Error::InvalidRepresentation(_))));
    assert!(matches!(rep(r#"{"dims": {"1": 99999999}, "maps": {}}"#), Err(Error::InvalidRepresentation(_))));
    // x^2 = 0 fails
    assert!(rep(r#"{"dims": {"1": 1}, "maps": {"x": [["1"]]}}"#).is_err());
}

#[test]
fn missing_maps_are_zero() {
    let a = algebra_from_json(&from_json_str(ALGEBRA).unwrap()).unwrap();
    let m = representation_from_json(&a, &from_json_str(r#"{"dims": {"1": 1}, "maps": {}}"#).unwrap()).unwrap();
    assert!(iso(&m, &simple(&a, 0)).unwrap());
}

#[test]
fn archive_rejects_tampering() {
    let a = Preset::Kronecker.build(FieldSpec::Rationals).unwrap();
    let mods: Vec<_> = enumerate_strings(&a, 2).unwrap().iter().map(|w| string_module(&a, w).unwrap()).collect();
    let w = transrad::ideal::Window::build(a, mods.into_iter().enumerate().map(|(i, m)| (i.to_string(), m)).collect())
        .unwrap();
    let good = window_archive(&w, true);
    assert!(window_from_archive(&good).is_ok());

    let mut bad = good.clone();
    bad.version = 99;
    assert!(window_from_archive(&bad).is_err());

    let mut bad = good.clone();
    let h = bad.homs.iter_mut().find(|h| !h.basis.is_empty()).unwrap();
    let block = h.basis[0].iter_mut().find(|b| !b.is_empty() && !b[0].is_empty()).unwrap();
    block[0][0] = Scalar::from_int(7);
    assert!(window_from_archive(&bad).is_err());

    let mut bad = good.clone();
    if let Some(c) = bad.compositions.first_mut() {
        c.entries.push(vec![]);
        assert!(window_from_archive(&bad).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn module_file_round_trip(i in 0usize..1000) {
        let a = Preset::GelfandPonomarev { m: 2, n: 3 }.build(FieldSpec::Rationals).unwrap();
        let all = enumerate_strings(&a, 5).unwrap();
        let m = string_module(&a, &all[i % all.len()]).unwrap();
        let text = to_json_string(&module_file(&m));
        let back = module_from_file(&from_json_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back.dims(), m.dims());
        prop_assert_eq!(back.maps(), m.maps());
    }

    #[test]
    fn scalar_json_round_trip(n in any::<i64>(), d in 1i64..i64::MAX) {
        let s = Scalar::from_frac(n, d);
        let text = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&text).unwrap(), s);
    }
}
