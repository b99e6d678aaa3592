#![allow(dead_code)]

use exact_charpoly::{Field, FieldElement, Matrix, Poly};
use num_bigint::BigInt;
use proptest::prelude::*;

pub const Q: Field = Field::Rationals;

/// Fields exercised by the property tests: small primes where wraparound
/// is frequent, and word-sized primes where products overflow `u64`.
pub const FIELDS: [Field; 6] = [
    Field::Rationals,
    Field::Prime(2),
    Field::Prime(5),
    Field::Prime(101),
    Field::Prime(1_000_000_007),
    Field::Prime(18_446_744_073_709_551_557),
];

pub fn arb_field() -> impl Strategy<Value = Field> {
    proptest::sample::select(FIELDS.to_vec())
}

/// Rationals as `a/b` with small numerators and denominators; residues
/// uniform, including values near the modulus.
pub fn arb_element(field: Field) -> BoxedStrategy<FieldElement> {
    match field {
        Field::Rationals => {
            (-30i64..=30, 1i64..=12).prop_map(|(a, b)| Q.parse_element(&format!("{a}/{b}")).unwrap()).boxed()
        }
        Field::Prime(p) => {
            prop_oneof![0..p, p.saturating_sub(3)..p].prop_map(move |v| field.from_bigint(&BigInt::from(v))).boxed()
        }
    }
}

/// Small integer entries, the regime of the random corpora.
pub fn arb_small(field: Field) -> BoxedStrategy<FieldElement> {
    (-5i64..=5).prop_map(move |k| field.from_integer(k)).boxed()
}

pub fn arb_matrix_with(field: Field, m: usize, n: usize, small: bool) -> BoxedStrategy<Matrix> {
    let elem = if small { arb_small(field) } else { arb_element(field) };
    proptest::collection::vec(elem, m * n)
        .prop_map(move |entries| {
            let rows: Vec<Vec<FieldElement>> = entries.chunks(n).map(<[_]>::to_vec).collect();
            Matrix::from_rows(field, rows).unwrap()
        })
        .boxed()
}

pub fn arb_matrix(field: Field, m: usize, n: usize) -> BoxedStrategy<Matrix> {
    arb_matrix_with(field, m, n, false)
}

pub fn arb_square(field: Field, max_n: usize) -> BoxedStrategy<Matrix> {
    (1..=max_n).prop_flat_map(move |n| arb_matrix_with(field, n, n, true)).boxed()
}

pub fn arb_poly(field: Field, max_degree: usize) -> BoxedStrategy<Poly> {
    proptest::collection::vec(arb_element(field), 0..=max_degree + 1).prop_map(move |c| Poly::new(field, c)).boxed()
}

pub fn arb_monic(field: Field, max_degree: usize) -> BoxedStrategy<Poly> {
    proptest::collection::vec(arb_small(field), 0..=max_degree)
        .prop_map(move |mut c| {
            c.push(field.one());
            Poly::new(field, c)
        })
        .boxed()
}

pub fn int(field: Field, k: i64) -> FieldElement {
    field.from_integer(k)
}
