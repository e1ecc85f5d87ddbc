use std::sync::Arc;

use proptest::prelude::*;
use transrad::repmod::{is_indecomposable, iso};
use transrad::strings::*;
use transrad::{Error, FieldSpec, PathAlgebra, Preset, Scalar};

fn lambda2() -> Arc<PathAlgebra> {
    Preset::Lambda2.build(FieldSpec::Rationals).unwrap()
}

fn gp23() -> Arc<PathAlgebra> {
    Preset::GelfandPonomarev { m: 2, n: 3 }.build(FieldSpec::Rationals).unwrap()
}

#[test]
fn lambda2_string_count() {
    // after the first letter, every string of the exterior algebra is forced
    let a = lambda2();
    for l in 0..7 {
        assert_eq!(enumerate_strings(&a, l).unwrap().len(), 1 + 2 * l);
    }
}

#[test]
fn string_module_dimension_is_length_plus_one() {
    for a in [lambda2(), gp23()] {
        for w in enumerate_strings(&a, 5).unwrap() {
            let m = string_module(&a, &w).unwrap();
            assert_eq!(m.dim(), w.len() + 1);
            assert!(is_indecomposable(&m).unwrap(), "{}", w.format(&a));
        }
    }
}

#[test]
fn inverse_strings_give_isomorphic_modules() {
    let a = gp23();
    for w in enumerate_strings(&a, 4).unwrap() {
        let m = string_module(&a, &w).unwrap();
        let n = string_module(&a, &w.inverse(&a)).unwrap();
        assert!(iso(&m, &n).unwrap());
    }
}

#[test]
fn invalid_words() {
    let a = lambda2();
    // parsing is syntactic; validity is checked when the module is built
    for w in ["x x^-", "x x", "x y", "y^- x^-"] {
        let w = StringWord::parse(&a, w).unwrap();
        assert!(matches!(string_module(&a, &w), Err(Error::InvalidString(_))), "{}", w.format(&a));
    }
    assert!(matches!(StringWord::parse(&a, "z"), Err(Error::InvalidString(_))));
    assert!(matches!(BandWord::parse(&a, "x y"), Err(Error::InvalidBand(_))));
    assert!(matches!(BandWord::parse(&a, "x y^- x y^-"), Err(Error::InvalidBand(_))));
}

#[test]
fn lambda2_has_a_single_band() {
    let a = lambda2();
    let b = enumerate_bands(&a, 12).unwrap();
    assert_eq!(b.len(), 1);
    assert_eq!(BandWord::parse(&a, "y^- x").unwrap(), b[0]);
}

#[test]
fn band_modules_are_indecomposable_and_distinct() {
    let a = gp23();
    let band = &enumerate_bands(&a, 6).unwrap()[0];
    let pts = P1Point::parse_list(DEFAULT_SAMPLES).unwrap();
    let mods: Vec<_> = pts.iter().map(|p| band_module(&a, band, p, 1).unwrap()).collect();
    for (i, m) in mods.iter().enumerate() {
        assert_eq!(m.dim(), band.len());
        assert!(is_indecomposable(m).unwrap());
        for n in &mods[i + 1..] {
            assert!(!iso(m, n).unwrap());
        }
    }
    let m2 = band_module(&a, band, &pts[2], 2).unwrap();
    assert_eq!(m2.dim(), 2 * band.len());
    assert!(is_indecomposable(&m2).unwrap());
}

#[test]
fn zero_multiplicity_is_rejected() {
    let a = gp23();
    let band = &enumerate_bands(&a, 6).unwrap()[0];
    assert!(band_module(&a, band, &P1Point::Infinity, 0).is_err());
}

#[test]
fn domesticity() {
    assert_eq!(domesticity_verdict(&lambda2(), 10).unwrap().verdict, Domesticity::FiniteBands(1));
    assert_eq!(domesticity_verdict(&gp23(), 12).unwrap().verdict, Domesticity::Growing);
    assert_eq!(domesticity_verdict(&gp23(), 1).unwrap().verdict, Domesticity::Inconclusive);
}

#[test]
fn catalog_has_no_repeated_classes() {
    let a = lambda2();
    let cat = build_catalog(&a, 5, &P1Point::parse_list(DEFAULT_SAMPLES).unwrap()).unwrap();
    let mods = cat.modules();
    assert!(mods.iter().all(|m| m.dim() <= 5));
    for i in 0..mods.len() {
        for j in i + 1..mods.len() {
            assert!(!iso(&mods[i], &mods[j]).unwrap(), "{} ~ {}", cat.items[i].label, cat.items[j].label);
        }
    }
}

#[test]
fn points_parse() {
    let p = P1Point::parse_list("1:0, 0:1 ,2:-1,3:1/2").unwrap();
    assert_eq!(p[0], P1Point::Affine(Scalar::zero()));
    assert_eq!(p[1], P1Point::Infinity);
    assert_eq!(p[2], P1Point::Affine(Scalar::from_frac(-1, 2)));
    assert_eq!(p[3], P1Point::Affine(Scalar::from_frac(1, 6)));
    assert!(P1Point::parse_list("0:0").is_err());
}

fn bands_gp() -> Vec<BandWord> {
    enumerate_bands(&gp23(), 8).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn string_format_round_trips(i in 0usize..1000) {
        let a = gp23();
        let all = enumerate_strings(&a, 6).unwrap();
        let w = &all[i % all.len()];
        prop_assert_eq!(&StringWord::parse(&a, &w.format(&a)).unwrap(), w);
        let inv = w.inverse(&a);
        prop_assert_eq!(inv.inverse(&a), w.clone());
    }

    #[test]
    fn band_canonical_form_is_rotation_invariant(i in 0usize..1000, r in 0usize..16, flip in any::<bool>()) {
        let a = gp23();
        let all = bands_gp();
        let b = &all[i % all.len()];
        let n = b.len();
        let mut w: Vec<Letter> = (0..n).map(|k| b.letters[(k + r) % n]).collect();
        if flip {
            w = w.iter().rev().map(|l| l.flip()).collect();
        }
        prop_assert_eq!(&BandWord::new(&a, w).unwrap(), b);
        prop_assert_eq!(&BandWord::parse(&a, &b.format(&a)).unwrap(), b);
    }
}
