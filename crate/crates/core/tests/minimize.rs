use coxconv::affine::{d_value, minimize_d, AffineType, AffineWeight, MinimizeStatus};
use coxconv::{Rational, SparseVector};
use proptest::prelude::*;

/// All lattice points supported on `{1, …, k}` plus `aux` extra coordinates
/// with `‖x‖_∞ ≤ r`.
fn box_points(ty: AffineType, k: usize, aux: usize, r: i64) -> Vec<SparseVector> {
    let mut out = vec![Vec::new()];
    for _ in 0..k + aux {
        out = out.into_iter().flat_map(|p: Vec<i64>| (-r..=r).map(move |c| [p.clone(), vec![c]].concat())).collect();
    }
    out.into_iter()
        .map(|p| SparseVector::from_pairs(p.into_iter().enumerate().map(|(i, c)| (i + 1, Rational::int(c)))))
        .filter(|x| ty.lattice().contains(x))
        .collect()
}

fn ty() -> impl Strategy<Value = AffineType> {
    prop::sample::select(AffineType::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Two coordinates of support plus two fresh ones, by plain enumeration.
    /// Targets `-λ_j/λ_c` stay within 1, so two fresh coordinates cover any
    /// sum or parity repair.
    #[test]
    fn agrees_with_enumeration(ty in ty(), lc in 2i64..5, b1 in -4i64..5, b2 in -4i64..5, ld in -3i64..4) {
        let bar = SparseVector::from_pairs([(1, Rational::frac(b1, 4)), (2, Rational::frac(b2, 4))]);
        let lambda = AffineWeight::new(Rational::frac(lc, 2), bar, Rational::int(ld));
        let res = minimize_d(ty, &lambda);
        prop_assert_eq!(res.status, MinimizeStatus::Minimum);
        let brute = box_points(ty, 2, 2, 3).iter().map(|x| d_value(&lambda, x)).min().unwrap();
        prop_assert_eq!(res.min, Some(brute));
    }

    /// Integral weights attain their minimum, and nothing on the box goes below it.
    #[test]
    fn integral_weights_attain(ty in ty(), lc in 1i64..4, b in prop::collection::vec(-6i64..7, 3)) {
        let bar = SparseVector::from_pairs(b.iter().enumerate().map(|(i, &c)| (i + 1, Rational::int(c))));
        let lambda = AffineWeight::new(Rational::int(lc), bar, Rational::zero());
        let res = minimize_d(ty, &lambda);
        prop_assert_eq!(res.status, MinimizeStatus::Minimum);
        let min = res.min.unwrap();
        prop_assert_eq!(d_value(&lambda, res.argmin.as_ref().unwrap()), min.clone());
        for x in box_points(ty, 3, 0, 3) {
            prop_assert!(d_value(&lambda, &x) >= min);
        }
    }
}

#[test]
fn negative_level_is_unbounded() {
    let lambda = AffineWeight::new(-Rational::one(), SparseVector::new(), Rational::zero());
    for ty in AffineType::ALL {
        let res = minimize_d(ty, &lambda);
        assert_eq!(res.status, MinimizeStatus::Unbounded);
        let g = res.direction.unwrap();
        assert!(ty.lattice().contains(&g));
        let f = |k: i64| d_value(&lambda, &g.scale(&Rational::int(k)));
        assert!(f(2) < f(1) && f(1) < f(0));
    }
}
