mod common;

use common::{arb_field, arb_matrix_with, arb_small, arb_square, int, Q};
use exact_charpoly::charpoly::{
    adjoint, berkowitz, charpoly, charpoly_oracle, charpoly_with, csanky, determinant, inverse, newton_coeffs,
    to_charpoly, triangular_charpoly, triangular_inverse, triangular_inverse_via_charpoly, triangular_inverse_with,
    Algorithm,
};
use exact_charpoly::corpus::Corpus;
use exact_charpoly::field::count_ops;
use exact_charpoly::{CompanionSpec, Error, Field, FieldElement, Matrix, Poly, ProductMode};
use proptest::prelude::*;

/// Determinant by the permutation expansion, sharing nothing with the
/// library's algorithms.
fn leibniz_det(a: &Matrix) -> FieldElement {
    fn go(a: &Matrix, row: usize, used: &mut Vec<bool>, sign: bool, acc: FieldElement, out: &mut FieldElement) {
        let n = a.rows();
        if row > n {
            *out = if sign { &*out - &acc } else { &*out + &acc };
            return;
        }
        for j in 1..=n {
            if used[j] {
                continue;
            }
            // inversions added by placing j after the already chosen columns
            let flips = (j + 1..=n).filter(|&k| used[k]).count() % 2 == 1;
            used[j] = true;
            go(a, row + 1, used, sign ^ flips, &acc * &a.entry(row, j), out);
            used[j] = false;
        }
    }
    let f = a.field();
    let mut out = f.zero();
    go(a, 1, &mut vec![false; a.rows() + 1], false, f.one(), &mut out);
    out
}

fn shifted(a: &Matrix, t: &FieldElement) -> Matrix {
    let f = a.field();
    let n = a.rows();
    Matrix::identity(f, n).scale(t).unwrap().sub(a).unwrap()
}

/// Usable algorithms for an `n x n` matrix over `field`.
fn algorithms(field: Field, n: usize) -> Vec<Algorithm> {
    let mut algs = vec![Algorithm::Berkowitz, Algorithm::Oracle];
    let p = field.characteristic();
    if p == 0 || p > n as u64 {
        algs.push(Algorithm::Csanky);
    }
    algs
}

fn arb_fixed_square(max_n: usize) -> impl Strategy<Value = Matrix> {
    arb_field().prop_flat_map(move |f| arb_square(f, max_n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// `p(t) = det(tI - A)` at n + 1 points, with the determinant from the
    /// permutation expansion.
    #[test]
    fn charpoly_matches_permutation_expansion(a in arb_fixed_square(5)) {
        let f = a.field();
        let n = a.rows();
        for alg in algorithms(f, n) {
            let p = charpoly(&a, alg).unwrap();
            prop_assert!(p.poly().is_monic());
            prop_assert_eq!(p.n(), n);
            for t in 0..=n as i64 {
                let t = f.from_integer(t - 2);
                prop_assert_eq!(p.poly().eval(&t), leibniz_det(&shifted(&a, &t)), "{} at {}", alg, t);
            }
            prop_assert_eq!(determinant(&a, alg).unwrap(), leibniz_det(&a));
        }
    }

    #[test]
    fn algorithms_and_modes_agree(a in arb_fixed_square(7)) {
        let f = a.field();
        let reference = charpoly_oracle(&a).unwrap();
        for alg in algorithms(f, a.rows()) {
            for mode in [ProductMode::Sequential, ProductMode::BalancedTree, ProductMode::ParallelTree] {
                prop_assert_eq!(&charpoly_with(&a, alg, mode).unwrap(), &reference);
            }
        }
    }

    #[test]
    fn csanky_refuses_small_characteristic(a in arb_square(Field::Prime(2), 5)) {
        prop_assume!(a.rows() >= 2);
        prop_assert_eq!(
            csanky(&a).unwrap_err(),
            Error::CharacteristicTooSmall { characteristic: 2, n: a.rows() }
        );
        prop_assert!(newton_coeffs(&a).is_err());
    }

    #[test]
    fn cayley_hamilton(a in arb_fixed_square(6)) {
        for alg in algorithms(a.field(), a.rows()) {
            prop_assert!(charpoly(&a, alg).unwrap().poly().eval_matrix(&a).unwrap().is_zero());
        }
    }

    #[test]
    fn adjugate_identity(a in arb_fixed_square(6)) {
        let f = a.field();
        let n = a.rows();
        for alg in algorithms(f, n) {
            let adj = adjoint(&a, alg).unwrap();
            let det_i = Matrix::identity(f, n).scale(&determinant(&a, alg).unwrap()).unwrap();
            prop_assert_eq!(a.mul(&adj).unwrap(), det_i.clone());
            prop_assert_eq!(adj.mul(&a).unwrap(), det_i);
            match inverse(&a, alg) {
                Ok(inv) => prop_assert!(a.mul(&inv).unwrap().is_identity()),
                Err(e) => {
                    prop_assert_eq!(e, Error::Singular);
                    prop_assert!(leibniz_det(&a).is_zero());
                }
            }
        }
    }

    #[test]
    fn similarity_invariance((f, n, seed) in (arb_field(), 1usize..=6, any::<u64>())) {
        let mut corpus = Corpus::new(f, seed, 0);
        let a = corpus.square(n);
        let (p, p_inv) = corpus.invertible_pair(n, 3 * n);
        prop_assert!(p.mul(&p_inv).unwrap().is_identity());
        let b = p_inv.mul(&a).unwrap().mul(&p).unwrap();
        for alg in algorithms(f, n) {
            prop_assert_eq!(charpoly(&a, alg).unwrap(), charpoly(&b, alg).unwrap());
        }
    }

    /// Block upper-triangular matrices factor: `p_M = p_A * p_B`.
    #[test]
    fn block_factorization(
        (a, x, b) in (arb_field(), 1usize..=4, 1usize..=4).prop_flat_map(|(f, k, l)| {
            (arb_matrix_with(f, k, k, true), arb_matrix_with(f, k, l, true), arb_matrix_with(f, l, l, true))
        })
    ) {
        let f = a.field();
        let m = Matrix::block2x2(&a, &x, &Matrix::zeros(f, b.rows(), a.rows()), &b).unwrap();
        for alg in algorithms(f, m.rows()) {
            let product = charpoly(&a, alg).unwrap().poly().mul(charpoly(&b, alg).unwrap().poly()).unwrap();
            prop_assert_eq!(charpoly(&m, alg).unwrap().into_poly(), product);
        }
    }

    #[test]
    fn determinant_is_multiplicative(
        (a, b) in (arb_field(), 1usize..=6).prop_flat_map(|(f, n)| {
            (arb_matrix_with(f, n, n, true), arb_matrix_with(f, n, n, true))
        })
    ) {
        for alg in algorithms(a.field(), a.rows()) {
            let ab = determinant(&a.mul(&b).unwrap(), alg).unwrap();
            prop_assert_eq!(ab, &determinant(&a, alg).unwrap() * &determinant(&b, alg).unwrap());
        }
    }

    /// The triangular-system route and the direct recurrence give the same
    /// polynomial.
    #[test]
    fn csanky_matches_direct_recurrence(a in prop_oneof![arb_square(Q, 7), arb_square(Field::Prime(101), 7)]) {
        let direct = to_charpoly(&newton_coeffs(&a).unwrap());
        prop_assert_eq!(&csanky(&a).unwrap(), &direct);
        let n = a.rows() as i64;
        prop_assert_eq!(newton_coeffs(&a).unwrap().values()[1].clone(), a.trace().unwrap());
        prop_assert_eq!(newton_coeffs(&a).unwrap().values().len() as i64, n + 1);
    }

    #[test]
    fn berkowitz_never_inverts(a in arb_fixed_square(7)) {
        let (p, ops) = count_ops(|| berkowitz(&a).unwrap());
        prop_assert_eq!(ops.inversions, 0);
        prop_assert_eq!(p.n(), a.rows());
    }

    #[test]
    fn triangular_inverse_laws((f, n, seed) in (arb_field(), 1usize..=8, any::<u64>())) {
        let mut corpus = Corpus::new(f, seed, 1);
        let l = corpus.unit_lower_triangular(n);
        let inv = triangular_inverse(&l).unwrap();
        prop_assert!(l.mul(&inv).unwrap().is_identity());
        prop_assert!(inv.is_lower_triangular());
        prop_assert_eq!(&triangular_inverse_with(&l, ProductMode::ParallelTree).unwrap(), &inv);
        prop_assert_eq!(&triangular_inverse_via_charpoly(&l).unwrap(), &inv);
        let ones = Poly::new(f, vec![-&f.one(), f.one()]);
        let expected = (0..n).try_fold(Poly::one(f), |acc, _| acc.mul(&ones)).unwrap();
        prop_assert_eq!(triangular_charpoly(&l).unwrap().into_poly(), expected);
    }

    #[test]
    fn companion_charpoly(
        spec in (arb_field(), 1usize..=7).prop_flat_map(|(f, k)| {
            proptest::collection::vec(arb_small(f), k).prop_map(move |c| CompanionSpec::new(f, c).unwrap())
        })
    ) {
        let f = spec.field();
        let k = spec.degree();
        let a = Matrix::companion(&spec);
        // x^k + c_1 x^(k-1) + ... + c_k
        let mut coeffs: Vec<FieldElement> = spec.coeffs().iter().rev().cloned().collect();
        coeffs.push(f.one());
        let expected = Poly::new(f, coeffs);
        for alg in algorithms(f, k) {
            prop_assert_eq!(charpoly(&a, alg).unwrap().into_poly(), expected.clone());
        }
    }
}

#[test]
fn known_values() {
    let a = Matrix::from_ints(Q, &[&[2, 1], &[1, 3]]).unwrap();
    for alg in Algorithm::ALL {
        assert_eq!(charpoly(&a, alg).unwrap().into_poly(), Poly::from_ints(Q, &[5, -5, 1]));
        assert_eq!(determinant(&a, alg).unwrap(), int(Q, 5));
    }
    let gf2 = Field::Prime(2);
    let b = Matrix::from_ints(gf2, &[&[1, 1], &[1, 0]]).unwrap();
    assert_eq!(berkowitz(&b).unwrap().into_poly(), Poly::from_ints(gf2, &[1, 1, 1]));
    let big = Corpus::new(Q, 3, 0).square(9);
    assert!(matches!(charpoly_oracle(&big), Err(Error::TooLarge { n: 9, .. })));
    assert_eq!(charpoly(&big, Algorithm::Csanky).unwrap(), charpoly(&big, Algorithm::Berkowitz).unwrap());
    assert!(matches!(triangular_inverse(&a), Err(Error::NotTriangular(_))));
}
