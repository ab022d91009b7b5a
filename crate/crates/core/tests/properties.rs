use std::collections::BTreeMap;

use cubedet_core::verify::{random_cubic, GenSpec, SplitMix64};
use cubedet_core::{
    det_closed, det_laplace, det_permutation, expand, parse_json, parse_text, serialize_json, serialize_text,
    Axis, CubicMatrix, Index3, Scalar,
};
use proptest::prelude::*;

/// Brute-force determinant kept apart from the library: enumerate every
/// pair of index tuples, skip the non-bijective ones, and sign by counting
/// inversions. Integer entries only.
fn brute_force_det(a: &CubicMatrix) -> i128 {
    let n = a.order();
    let tuples: Vec<Vec<usize>> = (0..n.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d + 1
                })
                .collect()
        })
        .collect();
    let bijective = |t: &Vec<usize>| (1..=n).all(|x| t.contains(&x));
    let inversions = |t: &Vec<usize>| {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| t[a] > t[b]).count()
    };
    let mut total = 0i128;
    for js in tuples.iter().filter(|t| bijective(t)) {
        for ks in tuples.iter().filter(|t| bijective(t)) {
            let mut term: i128 = if (inversions(js) + inversions(ks)) % 2 == 0 { 1 } else { -1 };
            for i in 0..n {
                term *= a.get(Index3::new(i + 1, js[i], ks[i])).unwrap().numerator() as i128;
            }
            total += term;
        }
    }
    total
}

fn seeded(order: usize, seed: u64, range: i64) -> CubicMatrix {
    random_cubic(&GenSpec::new(order, seed, range).unwrap())
}

#[test]
fn closed_form_equals_permutation_oracle() {
    for order in 1..=3 {
        let mut seeds = SplitMix64::new(1000 + order as u64);
        for _ in 0..10_000 {
            let a = seeded(order, seeds.next_u64(), 9);
            assert_eq!(det_closed(&a).unwrap(), det_permutation(&a).unwrap(), "{a:?}");
        }
    }
}

#[test]
fn permutation_oracle_equals_brute_force() {
    for order in 1..=3 {
        let mut seeds = SplitMix64::new(77 + order as u64);
        for _ in 0..500 {
            let a = seeded(order, seeds.next_u64(), 20);
            let d = det_permutation(&a).unwrap();
            assert_eq!(d.numerator() as i128, brute_force_det(&a));
            assert!(d.is_integer());
        }
    }
}

#[test]
fn every_expansion_equals_oracle() {
    for order in 2..=3 {
        let mut seeds = SplitMix64::new(31 * order as u64);
        for _ in 0..2_000 {
            let a = seeded(order, seeds.next_u64(), 9);
            let det = det_permutation(&a).unwrap();
            for axis in Axis::ALL {
                for index in 1..=order {
                    assert_eq!(expand(&a, axis, index).unwrap().total, det);
                    assert_eq!(det_laplace(&a, axis, index).unwrap(), det);
                }
            }
        }
    }
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => (-50i64..=50).prop_map(Scalar::from_int),
        1 => (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Scalar::new(n, d).unwrap()),
    ]
}

fn matrix_of(order: usize) -> impl Strategy<Value = CubicMatrix> {
    prop::collection::vec(scalar(), order.pow(3))
        .prop_map(move |e| CubicMatrix::from_entries(order, e).unwrap())
}

fn matrix() -> impl Strategy<Value = CubicMatrix> {
    (1usize..=3).prop_flat_map(matrix_of)
}

fn same_order_pair() -> impl Strategy<Value = (CubicMatrix, CubicMatrix, CubicMatrix)> {
    (1usize..=3).prop_flat_map(|n| (matrix_of(n), matrix_of(n), matrix_of(n)))
}

fn canonical(x: Scalar) -> bool {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    x.denominator() >= 1 && gcd(x.numerator(), x.denominator()) == 1
}

fn axis() -> impl Strategy<Value = Axis> {
    prop::sample::select(Axis::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_is_an_abelian_group((a, b, c) in same_order_pair()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        let zero = CubicMatrix::zeros(a.order()).unwrap();
        prop_assert_eq!(a.add(&zero).unwrap(), a.clone());
        prop_assert_eq!(a.add(&a.neg().unwrap()).unwrap(), zero);
        prop_assert!(a.add(&b).unwrap().entries().iter().all(|&x| canonical(x)));
    }

    #[test]
    fn delete_sub_keeps_exactly_the_disjoint_entries(a in (2usize..=3).prop_flat_map(matrix_of), seed in any::<u64>()) {
        let n = a.order();
        let mut rng = SplitMix64::new(seed);
        let mut pick = || (rng.next_u64() % n as u64) as usize + 1;
        let at = Index3::new(pick(), pick(), pick());
        let sub = a.delete_sub(at).unwrap();
        prop_assert_eq!(sub.order(), n - 1);
        let mut expected: BTreeMap<Scalar, usize> = BTreeMap::new();
        for (p, x) in a.iter() {
            if p.i != at.i && p.j != at.j && p.k != at.k {
                *expected.entry(x).or_default() += 1;
            }
        }
        let mut got: BTreeMap<Scalar, usize> = BTreeMap::new();
        for &x in sub.entries() {
            *got.entry(x).or_default() += 1;
        }
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn layer_transforms_invert(a in matrix(), ax in axis(), x in 1usize..=3, y in 1usize..=3, c in scalar()) {
        let n = a.order();
        let (x, y) = ((x - 1) % n + 1, (y - 1) % n + 1);
        let swapped = a.swap_layers(ax, x, y).unwrap();
        prop_assert_eq!(swapped.swap_layers(ax, x, y).unwrap(), a.clone());
        if !c.is_zero() {
            let back = a.scale_layer(ax, x, c).unwrap().scale_layer(ax, x, c.recip().unwrap()).unwrap();
            prop_assert_eq!(back, a.clone());
        }
    }

    #[test]
    fn text_round_trip(a in matrix()) {
        let text = serialize_text(&a);
        prop_assert_eq!(parse_text(&text).unwrap(), a.clone());
        prop_assert!(!text.lines().any(|l| l.ends_with(' ')));
        prop_assert!(text.ends_with('\n'));
    }

    #[test]
    fn json_round_trip(a in matrix()) {
        prop_assert_eq!(parse_json(&serialize_json(&a)).unwrap(), a);
    }

    #[test]
    fn rational_determinants_agree(a in (2usize..=3).prop_flat_map(matrix_of), ax in axis()) {
        let det = det_permutation(&a).unwrap();
        prop_assert_eq!(det_closed(&a).unwrap(), det);
        prop_assert_eq!(det_laplace(&a, ax, 1).unwrap(), det);
        prop_assert!(canonical(det));
    }
}

#[test]
fn derived_laws_against_oracle() {
    let c = Scalar::new(5, 3).unwrap();
    for order in 2..=3 {
        let mut seeds = SplitMix64::new(500 + order as u64);
        for _ in 0..1_000 {
            let a = seeded(order, seeds.next_u64(), 9);
            let det = det_permutation(&a).unwrap();
            let neg = det.checked_neg().unwrap();
            for axis in Axis::ALL {
                for index in 1..=order {
                    let scaled = a.scale_layer(axis, index, c).unwrap();
                    assert_eq!(det_permutation(&scaled).unwrap(), det.checked_mul(c).unwrap());
                    let zeroed = a.scale_layer(axis, index, Scalar::ZERO).unwrap();
                    assert_eq!(det_permutation(&zeroed).unwrap(), Scalar::ZERO);
                    assert_eq!(det_closed(&zeroed).unwrap(), Scalar::ZERO);
                }
            }
            assert_eq!(det_permutation(&a.swap_layers(Axis::HorizontalLayer, 1, 2).unwrap()).unwrap(), det);
            assert_eq!(det_permutation(&a.swap_layers(Axis::VerticalPage, 1, order).unwrap()).unwrap(), neg);
            assert_eq!(det_permutation(&a.swap_layers(Axis::VerticalLayer, 1, order).unwrap()).unwrap(), neg);
        }
    }
}
