use coxconv::convexity::{verify_primal, Budgets};
use coxconv::coxeter::{generate_roots, stabilizer, OrbitTable};
use coxconv::root_systems::{Family, FiniteRootSystem};
use coxconv::{pair, DenseVector, Rational};
use proptest::prelude::*;

fn point(entries: Vec<(i64, i64)>) -> DenseVector {
    DenseVector::new(entries.into_iter().map(|(p, q)| Rational::frac(p, q)).collect())
}

fn family() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        Just((Family::A, 3)),
        Just((Family::B, 3)),
        Just((Family::C, 2)),
        Just((Family::D, 3)),
        Just((Family::BC, 2))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn witnesses_map_orbit_points_back((f, n) in family(), seed in prop::collection::vec((-9i64..10, 1i64..5), 4)) {
        let d = FiniteRootSystem::build(f, n).unwrap().reflection_data;
        let v = point(seed.into_iter().take(d.dim()).collect());
        let orbit = OrbitTable::enumerate(&d, &v, 10_000).unwrap();
        prop_assert!(!orbit.truncated());
        for (p, g) in orbit.iter() {
            prop_assert_eq!(&g.inverse().act(p), &v);
        }
    }

    #[test]
    fn roots_split_by_sign((f, n) in family()) {
        let d = FiniteRootSystem::build(f, n).unwrap().reflection_data;
        let roots = generate_roots(&d, 10_000).unwrap();
        let cone = d.root_cone();
        for r in roots.roots() {
            let pos = cone.contains_covector(r).unwrap();
            let neg = cone.contains_covector(&-r).unwrap();
            prop_assert!(pos != neg);
        }
    }

    #[test]
    fn chamber_points_have_convex_orbits((f, n) in family(), seed in prop::collection::vec((0i64..6, 1i64..4), 4)) {
        let d = FiniteRootSystem::build(f, n).unwrap().reflection_data;
        // Nonnegative values on the simple roots: solve in a basis adapted to the chamber.
        let v = point(seed.into_iter().take(d.dim()).collect());
        let v = match coxconv::coxeter::tits_cone_member(&d, &v, 1_000).unwrap() {
            coxconv::coxeter::TitsVerdict::Yes { chamber_point, .. } => chamber_point,
            other => panic!("finite groups have full Tits cone: {other:?}"),
        };
        let report = verify_primal(&d, &v, Budgets::default()).unwrap();
        prop_assert!(report.passed() && !report.truncated && !report.advisory);
        let st = stabilizer(&d, &v, 10_000).unwrap();
        for g in &st.elements {
            prop_assert_eq!(&g.act(&v), &v);
        }
        for s in 0..d.rank() {
            prop_assert!(!pair(d.alpha(s), &v).unwrap().is_negative());
        }
    }
}
