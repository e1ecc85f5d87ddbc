use std::sync::Arc;

use proptest::prelude::*;
use transrad::{Error, FieldSpec, PathAlgebra, Preset, Quiver, Relation, Scalar};

fn presets() -> Vec<Arc<PathAlgebra>> {
    let q = FieldSpec::Rationals;
    vec![
        Preset::Lambda2.build(q).unwrap(),
        Preset::Kronecker.build(q).unwrap(),
        Preset::GelfandPonomarev { m: 2, n: 3 }.build(q).unwrap(),
        Preset::LambdaNq { q: vec![Scalar::one(), Scalar::from_frac(-1, 2)] }.build(q).unwrap(),
        Preset::Lambda2.build(FieldSpec::Prime { p: 7 }).unwrap(),
    ]
}

#[test]
fn preset_dimensions() {
    let dims: Vec<usize> = presets().iter().map(|a| a.dim()).collect();
    assert_eq!(dims, [4, 4, 4, 8, 4]);
}

#[test]
fn gelfand_ponomarev_dimension_formula() {
    for m in 2..5 {
        for n in 2..5 {
            let a = Preset::GelfandPonomarev { m, n }.build(FieldSpec::Rationals).unwrap();
            assert_eq!(a.dim(), m + n - 1, "m={m} n={n}");
        }
    }
}

#[test]
fn lambda_nq_is_selfinjective_special_biserial() {
    for n in 1..=3 {
        let a = Preset::LambdaNq { q: vec![Scalar::from_int(3); n] }.build(FieldSpec::Rationals).unwrap();
        assert_eq!(a.dim(), 4 * n);
        assert!(a.is_special_biserial());
        assert!(transrad::repmod::is_selfinjective(&a));
    }
}

#[test]
fn kronecker_is_hereditary_not_selfinjective() {
    let a = Preset::Kronecker.build(FieldSpec::Rationals).unwrap();
    assert!(a.relations().is_empty());
    assert!(!transrad::repmod::is_selfinjective(&a));
}

#[test]
fn malformed_relations_are_rejected() {
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
    // a then a is not a path
    let r = PathAlgebra::build(FieldSpec::Rationals, q.clone(), vec![Relation::monomial(vec![0, 0])]);
    assert!(matches!(r, Err(Error::MalformedRelation(_))));
    // terms with different endpoints
    let r = PathAlgebra::build(
        FieldSpec::Rationals,
        q,
        vec![Relation::new(vec![(vec![0, 1], Scalar::one()), (vec![1, 0], Scalar::one())])],
    );
    assert!(matches!(r, Err(Error::MalformedRelation(_))));
}

#[test]
fn unknown_preset() {
    assert!(matches!(transrad::algebra::preset("nope", &[], FieldSpec::Rationals), Err(Error::UnknownPreset(_))));
    assert!(Preset::parse("gp", &["1".into(), "3".into()]).unwrap().build(FieldSpec::Rationals).is_err());
}

#[test]
fn opposite_of_opposite_has_same_dimensions() {
    for a in presets() {
        let o = a.opposite().opposite();
        assert_eq!(o.dim(), a.dim());
        assert_eq!(o.pair_dims(), a.pair_dims());
    }
}

fn element(a: &PathAlgebra, coeffs: &[i64]) -> Vec<Scalar> {
    (0..a.dim()).map(|i| Scalar::from_int(coeffs[i % coeffs.len()])).collect()
}

proptest! {
    #[test]
    fn multiplication_is_associative(
        which in 0usize..5,
        x in prop::collection::vec(-4i64..5, 1..9),
        y in prop::collection::vec(-4i64..5, 1..9),
        z in prop::collection::vec(-4i64..5, 1..9),
    ) {
        let a = &presets()[which];
        let (x, y, z) = (element(a, &x), element(a, &y), element(a, &z));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
    }

    #[test]
    fn unit_is_sum_of_idempotents(which in 0usize..5, x in prop::collection::vec(-4i64..5, 1..9)) {
        let a = &presets()[which];
        let mut one = vec![Scalar::zero(); a.dim()];
        for v in 0..a.num_vertices() {
            one[a.idempotent(v)] = Scalar::one();
        }
        let x = element(a, &x);
        prop_assert_eq!(a.mul(&one, &x), x.clone());
        prop_assert_eq!(a.mul(&x, &one), x);
    }

    #[test]
    fn scalars_parse_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let s = Scalar::from_frac(n, d);
        prop_assert_eq!(s.to_string().parse::<Scalar>().unwrap(), s);
    }
}
