use boundsing::atlas::{
    certify_path, certify_segment, enumerate_components, expected_types, random_member, verify_against_table1,
    SamplingConfig, SegmentOutcome, DEFAULT_BUDGET,
};
use boundsing::classify::classify;
use boundsing::exactpoly::{rat, Interval};
use boundsing::models::{Parameter, SingularityClass};
use boundsing::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_config() -> SamplingConfig {
    SamplingConfig { random_count: 1500, grid_resolution: 3, ..SamplingConfig::default() }
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

#[test]
fn report_is_independent_of_thread_count() {
    for class in ["B+4", "-C5", "F4+"] {
        let class: SingularityClass = class.parse().unwrap();
        let cfg = small_config();
        let one = in_pool(1, || enumerate_components(&class, &cfg));
        let four = in_pool(4, || enumerate_components(&class, &cfg));
        assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap(), "{class}");
    }
}

#[test]
fn small_classes_match_the_table() {
    for class in SingularityClass::all_bc(5) {
        let report = enumerate_components(&class, &small_config());
        let check = verify_against_table1(&report);
        assert!(check.pass, "{class}: {check:?}");
        assert!(report.matches);
    }
}

#[test]
fn seeds_alone_complete_the_bc_atlas() {
    let cfg = SamplingConfig { random_count: 0, grid_resolution: 0, ..SamplingConfig::default() };
    for class in SingularityClass::all_bc(7) {
        assert!(enumerate_components(&class, &cfg).matches, "{class}");
    }
}

#[test]
fn f4_atlas_separates_slice_types() {
    let report = enumerate_components(&"F4+".parse().unwrap(), &SamplingConfig { random_count: 3000, ..small_config() });
    assert_eq!(report.realized_count, 8);
    assert_eq!(report.slice_types().len(), 6);
}

#[test]
fn same_type_paths_certify_and_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for class in ["B+4", "-C5", "B-6", "F4+", "F4-"] {
        let class: SingularityClass = class.parse().unwrap();
        for kind in expected_types(&class) {
            let a = random_member(&class, &kind, &mut rng).unwrap();
            let b = random_member(&class, &kind, &mut rng).unwrap();
            match certify_path(&class, &a, &b, DEFAULT_BUDGET) {
                Ok(cert) => {
                    assert!(cert.verify(), "{class}");
                    assert_eq!(cert.waypoints.first(), Some(&a));
                    assert_eq!(cert.waypoints.last(), Some(&b));
                    for w in &cert.waypoints {
                        assert_eq!(classify(&class, w).unwrap().kind, kind);
                    }
                }
                Err(Error::NotFound { .. }) if class.is_f4() => {}
                Err(e) => panic!("{class} {}: {e}", kind.canonical_json()),
            }
        }
    }
}

#[test]
fn cross_type_segments_carry_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for class in ["B+3", "C-4", "F4+"] {
        let class: SingularityClass = class.parse().unwrap();
        let types = expected_types(&class);
        for i in 0..types.len() {
            let j = (i + 1) % types.len();
            let a = random_member(&class, &types[i], &mut rng).unwrap();
            let b = random_member(&class, &types[j], &mut rng).unwrap();
            let SegmentOutcome::Crossing(w) = certify_segment(&class, &a, &b).unwrap() else {
                panic!("{class}: segment between different types certified");
            };
            assert!(!w.components.is_empty());
            assert!(Interval::closed(rat(0), rat(1)).contains(&w.interval.midpoint().unwrap()));
            assert_eq!(certify_path(&class, &a, &b, DEFAULT_BUDGET).unwrap_err(), Error::TypeMismatch);
        }
    }
}

#[test]
fn certify_rejects_discriminant_endpoints_and_exhausted_budgets() {
    let b2: SingularityClass = "B+2".parse().unwrap();
    let on = Parameter::from_ints(&[2, 1]);
    let off = Parameter::from_ints(&[0, -1]);
    assert_eq!(certify_segment(&b2, &on, &off).unwrap_err(), Error::DiscriminantEndpoint);
    assert_eq!(certify_path(&b2, &off, &on, 10).unwrap_err(), Error::DiscriminantEndpoint);
    // two positive roots: the region under the parabola l2 = l1^2/4 is not convex
    let a = Parameter::parse(&["-4", "39/10"]).unwrap();
    let b = Parameter::parse(&["-1", "6/25"]).unwrap();
    assert_eq!(classify(&b2, &a).unwrap().kind, classify(&b2, &b).unwrap().kind);
    assert!(!certify_segment(&b2, &a, &b).unwrap().is_certified());
    assert_eq!(certify_path(&b2, &a, &b, 1).unwrap_err(), Error::NotFound { budget: 1 });
    assert!(certify_path(&b2, &a, &b, DEFAULT_BUDGET).unwrap().verify());
}
