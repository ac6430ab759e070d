use coxconv::coxeter::{enumerate_group, GroupElement};
use coxconv::{Covector, DenseVector, Matrix, PolyhedralCone, Rational, ReflectionData};
use proptest::prelude::*;

fn positive_quadrant() -> PolyhedralCone {
    PolyhedralCone::new(2, vec![DenseVector::from_ints(&[1, 0]), DenseVector::from_ints(&[0, 1])]).unwrap()
}

#[test]
fn products_of_the_displayed_reflections_stay_in_the_quadrant() {
    let quadrant = positive_quadrant();
    for a in 2..=4 {
        let r1 = Matrix::from_int_rows(&[&[-1, a], &[0, 1]]);
        let r2 = Matrix::from_int_rows(&[&[1, 0], &[a, -1]]);
        let r1r2 = r1.mul(&r2);
        assert_eq!(r1r2, Matrix::from_int_rows(&[&[a * a - 1, -a], &[a, -1]]));
        let mut v = DenseVector::from_ints(&[1, 0]);
        for n in 0..=10 {
            assert!(quadrant.contains(&v).unwrap(), "a = {a}, n = {n}");
            assert!(quadrant.contains(&r2.apply(&v)).unwrap(), "a = {a}, n = {n}");
            v = r1r2.apply(&v);
        }
    }
}

#[test]
fn first_product_for_a_two() {
    let r1r2 = Matrix::from_int_rows(&[&[-1, 2], &[0, 1]]).mul(&Matrix::from_int_rows(&[&[1, 0], &[2, -1]]));
    assert_eq!(r1r2.apply(&DenseVector::from_ints(&[1, 0])), DenseVector::from_ints(&[3, 2]));
}

/// Rank-2 data with `α_t(α̌_s) = -x`, `α_s(α̌_t) = -y`, satisfying (C1/2)
/// whenever `x = 0 ⟺ y = 0` and `xy ∈ {0, 1, 2, 3} ∪ [4, ∞)`.
fn rank_two(x: Rational, y: Rational) -> ReflectionData {
    ReflectionData::from_families(
        2,
        vec![Covector::from_ints(&[1, 0]), Covector::from_ints(&[0, 1])],
        vec![
            DenseVector::new(vec![Rational::int(2), -x]),
            DenseVector::new(vec![-y, Rational::int(2)]),
        ],
    )
    .unwrap()
}

fn pair_strategy() -> impl Strategy<Value = (Rational, Rational)> {
    // Split a product p into x = p/c, y = c.
    (prop_oneof![Just(0i64), Just(1), Just(2), Just(3), 4i64..9], 1i64..4, 1i64..4).prop_map(|(p, c, d)| {
        if p == 0 {
            (Rational::zero(), Rational::zero())
        } else {
            let c = Rational::frac(c, d);
            (Rational::int(p) / c.clone(), c)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn non_descent_keeps_the_coroot_in_the_coroot_cone((x, y) in pair_strategy()) {
        let d = rank_two(x, y);
        prop_assert!(d.check_lcs().valid);
        let cs = d.coroot_cone();
        let table = enumerate_group(&d, 40).unwrap();
        for g in &table.elements {
            let gs = GroupElement::from_word(&d, &[g.word(), &[0]].concat()).unwrap();
            let Some(longer) = table.find(gs.matrix()) else { continue };
            if longer.length() >= g.length() {
                prop_assert!(cs.contains(&g.act(d.alpha_check(0))).unwrap(), "word {:?}", g.word());
            }
        }
    }
}
