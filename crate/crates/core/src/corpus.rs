//! Seeded random matrices and polynomials.
//!
//! A corpus is a ChaCha stream selected by `(seed, stream)`. Each consumer
//! takes its own stream number, so adding a consumer never shifts the draws
//! seen by another. Rational entries are integers in `[-5, 5]`; residues are
//! uniform.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FieldElement};
use crate::matrix::{CompanionSpec, Matrix};
use crate::poly::Poly;

pub const ENTRY_BOUND: i64 = 5;

pub struct Corpus {
    field: Field,
    rng: ChaCha8Rng,
}

impl Corpus {
    pub fn new(field: Field, seed: u64, stream: u64) -> Corpus {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Corpus { field, rng }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform in `lo..=hi`.
    pub fn dim(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    pub fn element(&mut self) -> FieldElement {
        match self.field {
            Field::Rationals => {
                let k = self.rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND);
                self.field.from_integer(k)
            }
            Field::Prime(p) => self.field.from_bigint(&BigInt::from(self.rng.random_range(0..p))),
        }
    }

    pub fn nonzero(&mut self) -> FieldElement {
        loop {
            let x = self.element();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn matrix(&mut self, m: usize, n: usize) -> Matrix {
        let entries: Vec<FieldElement> = (0..m * n).map(|_| self.element()).collect();
        Matrix::generate(self.field, m, n, |r, c| entries[r * n + c].clone())
    }

    pub fn square(&mut self, n: usize) -> Matrix {
        self.matrix(n, n)
    }

    /// Lower triangular with ones on the diagonal.
    pub fn unit_lower_triangular(&mut self, n: usize) -> Matrix {
        let field = self.field;
        let entries: Vec<FieldElement> = (0..n * n).map(|_| self.element()).collect();
        Matrix::generate(field, n, n, |r, c| match r.cmp(&c) {
            std::cmp::Ordering::Greater => entries[r * n + c].clone(),
            std::cmp::Ordering::Equal => field.one(),
            std::cmp::Ordering::Less => field.zero(),
        })
    }

    /// A product `P` of `steps` random elementary matrices together with
    /// `P^-1`, assembled from the elementary inverses in reverse order.
    pub fn invertible_pair(&mut self, n: usize, steps: usize) -> (Matrix, Matrix) {
        let field = self.field;
        let mut p = Matrix::identity(field, n);
        let mut p_inv = Matrix::identity(field, n);
        for _ in 0..steps {
            let (e, e_inv) = self.elementary(n);
            p = p.mul(&e).expect("same shape");
            p_inv = e_inv.mul(&p_inv).expect("same shape");
        }
        (p, p_inv)
    }

    fn elementary(&mut self, n: usize) -> (Matrix, Matrix) {
        let field = self.field;
        let id = Matrix::identity(field, n);
        let i = self.rng.random_range(0..n);
        let j = self.rng.random_range(0..n);
        let mut e = id.clone();
        let mut e_inv = id;
        match self.rng.random_range(0..3) {
            0 if i != j => {
                for m in [&mut e, &mut e_inv] {
                    *m.at_mut(i, i) = field.zero();
                    *m.at_mut(j, j) = field.zero();
                    *m.at_mut(i, j) = field.one();
                    *m.at_mut(j, i) = field.one();
                }
            }
            1 => {
                let c = self.nonzero();
                *e_inv.at_mut(i, i) = c.inv().expect("nonzero");
                *e.at_mut(i, i) = c;
            }
            _ if i != j => {
                let c = self.element();
                *e_inv.at_mut(i, j) = -&c;
                *e.at_mut(i, j) = c;
            }
            _ => {}
        }
        (e, e_inv)
    }

    pub fn monic(&mut self, degree: usize) -> Poly {
        let mut coeffs: Vec<FieldElement> = (0..degree).map(|_| self.element()).collect();
        coeffs.push(self.field.one());
        Poly::new(self.field, coeffs)
    }

    /// Companion data `c_1, ..., c_k`.
    pub fn companion_spec(&mut self, k: usize) -> CompanionSpec {
        let coeffs = (0..k).map(|_| self.element()).collect();
        CompanionSpec::new(self.field, coeffs).expect("k >= 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let draw = |stream| Corpus::new(Field::Rationals, 7, stream).square(4);
        assert_eq!(draw(0), draw(0));
        assert_ne!(draw(0), draw(1));
    }

    #[test]
    fn rational_entries_in_range() {
        let mut c = Corpus::new(Field::Rationals, 1, 0);
        let a = c.square(8);
        for x in a.row_major() {
            let r = x.as_rational().unwrap();
            assert!(r.is_integer());
            assert!(r.numer() >= &BigInt::from(-ENTRY_BOUND) && r.numer() <= &BigInt::from(ENTRY_BOUND));
        }
    }

    #[test]
    fn invertible_pair_multiplies_to_identity() {
        for f in [Field::Rationals, Field::Prime(2), Field::Prime(5)] {
            let mut c = Corpus::new(f, 3, 0);
            for n in 1..=5 {
                let (p, p_inv) = c.invertible_pair(n, 3 * n);
                assert!(p.mul(&p_inv).unwrap().is_identity());
                assert!(p_inv.mul(&p).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn unit_lower_has_unit_diagonal() {
        let a = Corpus::new(Field::Prime(3), 0, 0).unit_lower_triangular(5);
        assert!(a.is_lower_triangular());
        assert!(a.diagonal_entries().iter().all(|d| d.is_one()));
    }
}
