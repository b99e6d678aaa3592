mod common;

use common::{arb_field, arb_matrix, arb_matrix_with, arb_small, int, Q};
use exact_charpoly::identities::predicted_power_blocks;
use exact_charpoly::matrix::{chain_product, power_sequence, prefix_products};
use exact_charpoly::{CompanionSpec, Field, FieldElement, Matrix, ProductMode};
use proptest::prelude::*;

/// Schoolbook product through the total 1-based accessor, sharing no code
/// with `Matrix::mul`.
fn reference_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let f = a.field();
    Matrix::build(f, a.rows(), b.cols(), |i, j| {
        (1..=a.cols()).fold(f.zero(), |acc, t| &acc + &(&a.entry(i, t) * &b.entry(t, j)))
    })
    .unwrap()
}

fn arb_triple() -> impl Strategy<Value = (Matrix, Matrix, Matrix, Matrix)> {
    (arb_field(), 1usize..=6, 1usize..=6, 1usize..=6, 1usize..=6).prop_flat_map(|(f, m, n, k, l)| {
        (arb_matrix(f, m, n), arb_matrix(f, n, k), arb_matrix(f, n, k), arb_matrix(f, k, l))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ring_laws((a, b, b2, c) in arb_triple()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(&ab, &reference_mul(&a, &b));
        prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&b2).unwrap()).unwrap(),
            ab.add(&a.mul(&b2).unwrap()).unwrap()
        );
        let f = a.field();
        prop_assert_eq!(Matrix::identity(f, a.rows()).mul(&a).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&Matrix::identity(f, a.cols())).unwrap(), a.clone());
        prop_assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()).unwrap());
    }

    #[test]
    fn trace_is_cyclic((a, b) in (arb_field(), 1usize..=6, 1usize..=6)
        .prop_flat_map(|(f, m, n)| (arb_matrix(f, m, n), arb_matrix(f, n, m)))) {
        prop_assert_eq!(a.mul(&b).unwrap().trace().unwrap(), b.mul(&a).unwrap().trace().unwrap());
    }

    #[test]
    fn power_law(a in arb_field().prop_flat_map(|f| (1usize..=5).prop_flat_map(move |n| arb_matrix_with(f, n, n, true))),
                 j in 0usize..5, k in 0usize..5) {
        prop_assert_eq!(a.power(j + k).unwrap(), a.power(j).unwrap().mul(&a.power(k).unwrap()).unwrap());
        prop_assert_eq!(a.power_by_squaring(j + k).unwrap(), a.power(j + k).unwrap());
    }

    #[test]
    fn product_modes_agree(factors in (arb_field(), 1usize..=5, 1usize..=6).prop_flat_map(|(f, n, len)| {
        proptest::collection::vec(arb_matrix_with(f, n, n, true), len)
    })) {
        let seq = chain_product(&factors, ProductMode::Sequential).unwrap();
        let folded = factors.iter().skip(1).fold(factors[0].clone(), |acc, m| reference_mul(&acc, m));
        prop_assert_eq!(&seq, &folded);
        for mode in [ProductMode::BalancedTree, ProductMode::ParallelTree] {
            prop_assert_eq!(&chain_product(&factors, mode).unwrap(), &seq);
            let prefixes = prefix_products(&factors, mode).unwrap();
            prop_assert_eq!(prefixes.last().unwrap(), &seq);
            prop_assert_eq!(&prefixes[0], &factors[0]);
        }
    }

    #[test]
    fn power_sequence_matches_powers(a in arb_field().prop_flat_map(|f| arb_matrix_with(f, 3, 3, true)), k in 1usize..6) {
        for mode in [ProductMode::Sequential, ProductMode::BalancedTree, ProductMode::ParallelTree] {
            let seq = power_sequence(&a, k, mode).unwrap();
            prop_assert_eq!(seq.len(), k);
            for (i, p) in seq.iter().enumerate() {
                prop_assert_eq!(p, &a.power(i + 1).unwrap());
            }
        }
    }

    #[test]
    fn zero_padding_accessor(a in arb_field().prop_flat_map(|f| arb_matrix(f, 3, 2))) {
        let padded = a.pad(4, 5);
        for i in 1..=6 {
            for j in 1..=6 {
                let inside = i <= 3 && j <= 2;
                prop_assert_eq!(a.entry(i, j).is_zero() || inside, true);
                if i <= 4 && j <= 5 {
                    prop_assert_eq!(padded.entry(i, j), a.entry(i, j));
                }
            }
        }
    }
}

fn arb_companion() -> impl Strategy<Value = CompanionSpec> {
    (arb_field(), 2usize..=6).prop_flat_map(|(f, k)| {
        proptest::collection::vec(arb_small(f), k).prop_map(move |c| CompanionSpec::new(f, c).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Below the top power the block formula holds exactly, with a zero
    /// corner.
    #[test]
    fn companion_power_blocks(spec in arb_companion()) {
        let a = Matrix::companion(&spec);
        let k = spec.degree();
        for i in 1..k - 1 {
            let [w, x, y, z] = predicted_power_blocks(&a, i).unwrap();
            let (w1, x1, y1, z1) = a.power(i + 1).unwrap().split2x2(1).unwrap();
            prop_assert!(w1.is_zero());
            prop_assert_eq!((w1, x1, y1, z1), (w, x, y, z));
        }
    }

    /// At the top power `A^k` the corner is `-c_k`; the other three blocks
    /// still follow the formula.
    #[test]
    fn companion_top_power(spec in arb_companion()) {
        let a = Matrix::companion(&spec);
        let k = spec.degree();
        let [_, x, y, z] = predicted_power_blocks(&a, k - 1).unwrap();
        let (w1, x1, y1, z1) = a.power(k).unwrap().split2x2(1).unwrap();
        prop_assert_eq!(w1.entry(1, 1), -&spec.coeffs()[k - 1]);
        prop_assert_eq!((x1, y1, z1), (x, y, z));
    }
}

#[test]
fn companion_layout_examples() {
    let spec = CompanionSpec::from_ints(Q, &[-5, 6]).unwrap();
    assert_eq!(Matrix::companion(&spec), Matrix::from_ints(Q, &[&[0, -6], &[1, 5]]).unwrap());
    let one = CompanionSpec::new(Q, vec![int(Q, 7)]).unwrap();
    assert_eq!(Matrix::companion(&one), Matrix::from_ints(Q, &[&[-7]]).unwrap());
    let shift = CompanionSpec::from_ints(Q, &[0, 0]).unwrap();
    assert_eq!(Matrix::companion(&shift), Matrix::from_ints(Q, &[&[0, 0], &[1, 0]]).unwrap());
}

#[test]
fn strict_shapes() {
    let a = Matrix::zeros(Q, 2, 3);
    assert!(a.mul(&a).is_err());
    assert!(a.add(&Matrix::zeros(Q, 3, 2)).is_err());
    assert!(a.add(&Matrix::zeros(Field::Prime(5), 2, 3)).is_err());
    let entries: Vec<FieldElement> = a.row_major().to_vec();
    assert_eq!(entries.len(), 6);
}
