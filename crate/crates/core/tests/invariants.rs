use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use cypres::algebra::sylvester_matrix;
use cypres::invariants::{
    abelianization, bicyclic_u_ab_order, cyclic_ab_order, lemma33_order,
    relative_presentation_order,
};
use cypres::jfamily::JParams;
use cypres::presentation::{build_j_presentation, build_u_presentation};
use cypres::verify::{half_resultant, half_resultant_expected};
use cypres::{
    enumerate, AbelianGroup, BicyclicPresentation, CosetOutcome, CyclicPresentation,
    GroupPresentation, IntPolynomial, Order, Word,
};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn fin(v: i64) -> Order {
    Order::Finite(big(v))
}

fn cyclic(rank: usize, pairs: &[(usize, i64)]) -> CyclicPresentation {
    CyclicPresentation::new(rank, Word::from_pairs(pairs.iter().copied())).unwrap()
}

#[test]
fn j_abelianizes_to_cyclic_of_order_nm() {
    let p = JParams::new(4, 4, 1).unwrap();
    let ab = abelianization(&build_j_presentation(&p));
    assert_eq!(ab, AbelianGroup::from_cyclic_orders(&[big(16)]));
    for (n, m, k) in [(4, 5, 2), (6, 3, 1), (6, 5, 1)] {
        let p = JParams::new(n, m, k).unwrap();
        let ab = abelianization(&build_j_presentation(&p));
        assert_eq!(ab.order(), fin(n as i64 * m), "{p}");
        assert_eq!(ab.invariant_factors.len(), 1);
    }
}

#[test]
fn g12_order_by_snf_and_resultant() {
    // (2^3 - 1) * a_4(3,1) = 7 * 5.
    let cp = cyclic(12, &[(0, 1), (3, 1), (1, -1)]);
    assert_eq!(abelianization(&cp).order(), fin(35));
    assert_eq!(cyclic_ab_order(&cp), fin(35));
}

#[test]
fn g16_order_by_snf_and_resultant() {
    // (2^4 - 1) * a_4(4,1) = 15 * 17.
    let cp = cyclic(16, &[(0, 1), (4, 1), (1, -1)]);
    assert_eq!(cyclic_ab_order(&cp), fin(255));
    assert_eq!(abelianization(&cp).order(), fin(255));
}

#[test]
fn free_group_has_free_rank() {
    let p = GroupPresentation::indexed(2, vec![]).unwrap();
    assert_eq!(abelianization(&p), AbelianGroup { invariant_factors: vec![], free_rank: 2 });
}

#[test]
fn shared_root_is_infinite() {
    let cp = cyclic(4, &[(1, 1), (0, -1)]);
    assert!(!cyclic_ab_order(&cp).is_finite());
    assert_eq!(abelianization(&cp).free_rank, 1);
}

#[test]
fn lemma33() {
    assert_eq!(lemma33_order(2, 1, 4).unwrap(), big(15));
    assert!(lemma33_order(4, 4, 3).is_err());
    assert_eq!(lemma33_order(3, 2, 5).unwrap(), big(211));
    let ab = abelianization(&cyclic(5, &[(0, 3), (1, -2)]));
    assert_eq!(ab, AbelianGroup::from_cyclic_orders(&[big(211)]));
    assert_eq!(ab.invariant_factors.len(), 1);
}

#[test]
fn relative_presentation_orders_by_enumeration() {
    for (n, m, k) in [(4u32, 3i64, 1i64), (4, 5, 2), (6, 3, 1), (4, 4, 1), (6, 1, 0)] {
        let rel = Word::from_pairs([(1, m - k), (0, 1), (1, k), (0, -1)]);
        let p = GroupPresentation::new(vec!["t".into(), "y".into()], vec![Word::power(0, n as i64), rel])
            .unwrap();
        let want = relative_presentation_order(n, m, k).unwrap();
        let got = enumerate(&p, &[], 1_000_000).unwrap();
        assert_eq!(got, CosetOutcome::Index(want.try_into().unwrap()), "({n},{m},{k})");
    }
}

#[test]
fn bicyclic_u_examples() {
    let p = JParams::new(4, 3, 1).unwrap();
    assert_eq!(bicyclic_u_ab_order(&build_u_presentation(&p).unwrap()).unwrap(), fin(5));
    let p = JParams::new(6, 3, 1).unwrap();
    assert_eq!(bicyclic_u_ab_order(&build_u_presentation(&p).unwrap()).unwrap(), fin(19));
    let bp = BicyclicPresentation::new(8, Word::from_pairs([(2, 1), (2, -1)]), Word::product_of([0, 4]))
        .unwrap();
    assert_eq!(
        bicyclic_u_ab_order(&bp).unwrap(),
        Order::Infinite { free_rank: Some(4) }
    );
    let bad = BicyclicPresentation::new(8, Word::generator(0), Word::product_of([0, 2])).unwrap();
    assert!(bicyclic_u_ab_order(&bad).is_err());
}

#[test]
fn bicyclic_u_order_is_sylvester_determinant_and_snf() {
    for n in [4u32, 6] {
        for m in 1..=4 {
            for k in 0..n as i64 * m {
                let p = JParams::new(n, m, k).unwrap();
                let bp = build_u_presentation(&p).unwrap();
                let order = bicyclic_u_ab_order(&bp).unwrap();
                let f = bp.w().representer_polynomial(bp.rank()).unwrap();
                let det = sylvester_matrix(&f, &IntPolynomial::x_pow_plus_one(bp.rank() / 2))
                    .determinant()
                    .unwrap();
                let snf = abelianization(&bp);
                match &order {
                    Order::Finite(v) => {
                        assert_eq!(*v, num_traits::Signed::abs(&det), "{p}");
                        assert_eq!(snf.order(), order, "{p}");
                    }
                    Order::Infinite { .. } => {
                        assert!(det.is_zero(), "{p}");
                        assert!(!snf.is_finite(), "{p}");
                    }
                }
            }
        }
    }
}

#[test]
fn half_resultants_up_to_m8() {
    for n in [4u32, 6] {
        for m in 1..=8 {
            for k in 0..n as i64 * m {
                let p = JParams::new(n, m, k).unwrap();
                if p.is_coprime() {
                    assert_eq!(half_resultant(&p).unwrap(), half_resultant_expected(n, m), "{p}");
                }
            }
        }
    }
}

#[test]
fn display() {
    let g = AbelianGroup::from_cyclic_orders(&[big(0), big(0), big(3)]);
    assert_eq!(g.to_string(), "Z^2 + Z_3");
    assert_eq!(AbelianGroup::trivial().to_string(), "1");
    assert_eq!(Order::Infinite { free_rank: None }.to_string(), "infinite");
}

proptest! {
    #[test]
    fn cyclic_resultant_matches_snf(
        rank in 1usize..=9,
        pairs in prop::collection::vec((0usize..9, -3i64..=3), 0..6),
    ) {
        let pairs: Vec<(usize, i64)> = pairs.into_iter().map(|(g, e)| (g % rank, e)).collect();
        let cp = cyclic(rank, &pairs);
        let snf = abelianization(&cp);
        match cyclic_ab_order(&cp) {
            Order::Finite(v) => prop_assert_eq!(snf.order(), Order::Finite(v)),
            Order::Infinite { .. } => prop_assert!(!snf.is_finite()),
        }
    }

    #[test]
    fn cyclic_orders_normalize(orders in prop::collection::vec(0i64..40, 0..6)) {
        let bs: Vec<BigInt> = orders.iter().map(|&o| big(o)).collect();
        let g = AbelianGroup::from_cyclic_orders(&bs);
        let zeros = orders.iter().filter(|&&o| o == 0).count();
        prop_assert_eq!(g.free_rank, zeros);
        let product: BigInt = orders.iter().filter(|&&o| o > 0).map(|&o| big(o)).product();
        prop_assert_eq!(g.torsion_order(), product);
        for w in g.invariant_factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(g.invariant_factors.iter().all(|d| *d > big(1)));
    }
}
