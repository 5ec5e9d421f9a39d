use boundsing::atlas::construct_representative;
use boundsing::classify::{
    classify, classify_f4, realized_catalog, BCSignature, F4Descriptor, F4Type, TypeKind, CATALOG_TYPES,
};
use boundsing::exactpoly::{rat, ratio, Rational};
use boundsing::models::{discriminant_membership, reduce_f4_minus, Parameter, Sign, SingularityClass};
use boundsing::{Error, Membership};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=8).prop_map(|(n, d)| ratio(n, d))
}

#[test]
fn quadratic_example() {
    let c = classify(&"B+2".parse().unwrap(), &Parameter::from_ints(&[0, -1])).unwrap();
    assert_eq!(c.membership, Membership::NonSingular);
    assert_eq!(c.kind, TypeKind::BC(BCSignature::new(1, 1)));
    assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"membership":"NonSingular","type":{"p":1,"q":1}}"#);
}

#[test]
fn discriminant_parameters_are_refused() {
    let f4: SingularityClass = "F4+".parse().unwrap();
    assert_eq!(
        classify(&f4, &Parameter::from_ints(&[1, -3, 0, 2])),
        Err(Error::DiscriminantParameter(Membership::Sigma1))
    );
    assert_eq!(
        classify(&"B+2".parse().unwrap(), &Parameter::from_ints(&[2, 1])),
        Err(Error::DiscriminantParameter(Membership::Sigma0))
    );
}

#[test]
fn every_signature_is_constructed_and_recovered() {
    for class in SingularityClass::all_bc(7) {
        let sigs = BCSignature::all(class.mu());
        assert_eq!(sigs.len(), class.expected_component_count(), "{class}");
        for sig in sigs {
            let l = construct_representative(&class, sig).unwrap();
            assert_eq!(classify(&class, &l).unwrap().kind, TypeKind::BC(sig), "{class} {sig:?}");
        }
    }
    let b4: SingularityClass = "B+4".parse().unwrap();
    assert!(matches!(construct_representative(&b4, BCSignature::new(2, 1)), Err(Error::InvalidSignature { .. })));
    assert!(matches!(construct_representative(&b4, BCSignature::new(3, 3)), Err(Error::InvalidSignature { .. })));
}

#[test]
fn catalog_layout() {
    let cat = realized_catalog().unwrap();
    assert_eq!(cat.len(), 8);
    for e in &cat.entries {
        assert_eq!(e.on_slice, e.id <= 6, "id {}", e.id);
        let c = classify(&"F4+".parse().unwrap(), &e.representative).unwrap();
        assert_eq!(c.catalog_id, Some(e.id));
    }
    let types: Vec<F4Type> = CATALOG_TYPES.iter().map(|(_, t)| *t).collect();
    for t in &types {
        assert!(types.contains(&t.mirror()), "{t} has no mirror in the catalog");
    }
    assert_eq!(F4Type::candidates().len(), 10);
    assert_eq!(F4Descriptor::candidates().len(), 38);
}

#[test]
fn type_six_example() {
    let c = classify(&"F4+".parse().unwrap(), &Parameter::from_ints(&[1, -1, 0, 0])).unwrap();
    assert_eq!(c.catalog_id, Some(6));
    assert_eq!(c.descriptor.unwrap().roots.len(), 3);
}

#[test]
fn f4_minus_uses_the_reduction() {
    let minus: SingularityClass = "F4-".parse().unwrap();
    let plus: SingularityClass = "F4+".parse().unwrap();
    for e in &realized_catalog().unwrap().entries {
        let l = reduce_f4_minus(&e.representative);
        let c = classify(&minus, &l).unwrap();
        assert!(c.reduced);
        assert_eq!(c.kind, classify(&plus, &e.representative).unwrap().kind);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// Reflecting `x -> -x` mirrors the descriptor.
    #[test]
    fn reflection_mirrors_descriptor(a in small_rational(), b in small_rational(), c in small_rational(), d in small_rational()) {
        let l = Parameter::new(vec![a.clone(), b.clone(), c.clone(), d.clone()]);
        let m = Parameter::new(vec![-a, b, -c, d]);
        let f4 = SingularityClass::f4(Sign::Plus);
        prop_assume!(discriminant_membership(&f4, &l).unwrap().is_nonsingular());
        match (classify_f4(&l), classify_f4(&m)) {
            (Ok(x), Ok(y)) => {
                prop_assert_eq!(y.clone(), x.mirror());
                prop_assert!(x.is_well_formed());
                prop_assert!(F4Descriptor::candidates().contains(&x));
            }
            (Err(Error::NonGenericConfiguration), Err(Error::NonGenericConfiguration)) => {}
            (x, y) => prop_assert!(false, "asymmetric outcome {:?} {:?}", x, y),
        }
    }

    /// Off the discriminant the signature accounts for all roots of `h`.
    #[test]
    fn signature_counts_roots(l in prop::collection::vec(small_rational(), 5)) {
        let class: SingularityClass = "+B5".parse().unwrap();
        let l = Parameter::new(l);
        match classify(&class, &l) {
            Ok(c) => {
                let TypeKind::BC(sig) = c.kind else { unreachable!() };
                prop_assert!(sig.p + sig.q <= 5 && (5 - sig.p - sig.q) % 2 == 0);
            }
            Err(Error::DiscriminantParameter(m)) => prop_assert!(!m.is_nonsingular()),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}

#[test]
fn zero_parameter_is_singular() {
    for class in SingularityClass::all_bc(5) {
        let l = Parameter::new(vec![rat(0); class.mu()]);
        assert!(matches!(classify(&class, &l), Err(Error::DiscriminantParameter(_))));
    }
}
