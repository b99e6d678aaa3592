//! Constructive witnesses for the classical matrix principles: linear
//! dependence of too many vectors, annihilating polynomials, the
//! inverse-or-zero-divisor alternative, basis exchange, and matrix powering
//! recovered from a single matrix inverse.
//!
//! Every construction here is exact and deterministic, and every returned
//! witness can be checked with a handful of matrix products.

mod annihilator;
mod exchange;
mod krylov;
mod powering;

pub use annihilator::{annihilating_poly, dependence_to_inverse_or_zero, inverse_or_zero_divisor};
pub use exchange::{steinitz_exchange, Exchange};
pub use krylov::{extend_to_basis, invariant_block_form, krylov_local_poly, BlockForm, KrylovResult};
pub use powering::{pow_via_inverse, unipotent_inverse};

use std::fmt;

use crate::elimination;
use crate::matrix::Matrix;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    KernelVector,
    Inverse,
    ZeroDivisor,
    AnnihilatingPoly,
    ExchangeSet,
    PowerList,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Result of a principle construction, tagged by what it proves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Nonzero `x` with `Vx = 0`.
    KernelVector(Matrix),
    /// `B` with `AB = BA = I`.
    Inverse(Matrix),
    /// Nonzero `B` with `AB = 0`.
    ZeroDivisor(Matrix),
    AnnihilatingPoly(Poly),
    /// 1-based indices of the removed columns, and the exchanged total set.
    ExchangeSet {
        removed: Vec<usize>,
        exchanged: Matrix,
    },
    /// `[I, A, A^2, ...]`.
    PowerList(Vec<Matrix>),
}

impl Witness {
    pub fn kind(&self) -> WitnessKind {
        match self {
            Witness::KernelVector(_) => WitnessKind::KernelVector,
            Witness::Inverse(_) => WitnessKind::Inverse,
            Witness::ZeroDivisor(_) => WitnessKind::ZeroDivisor,
            Witness::AnnihilatingPoly(_) => WitnessKind::AnnihilatingPoly,
            Witness::ExchangeSet { .. } => WitnessKind::ExchangeSet,
            Witness::PowerList(_) => WitnessKind::PowerList,
        }
    }

    /// The matrix payload of the single-matrix kinds.
    pub fn matrix(&self) -> Option<&Matrix> {
        match self {
            Witness::KernelVector(m) | Witness::Inverse(m) | Witness::ZeroDivisor(m) => Some(m),
            _ => None,
        }
    }
}

/// Outcome of [`kernel_vector`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dependence {
    Dependent(Witness),
    Independent,
}

/// A nonzero combination of the columns of `v` summing to zero, or
/// [`Dependence::Independent`]. More columns than rows always yields a
/// witness.
pub fn kernel_vector(v: &Matrix) -> Dependence {
    match elimination::kernel_vector(v) {
        Some(x) => Dependence::Dependent(Witness::KernelVector(x)),
        None => Dependence::Independent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    const Q: Field = Field::Rationals;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(Q, rows).unwrap()
    }

    fn kernel(v: &Matrix) -> Matrix {
        match kernel_vector(v) {
            Dependence::Dependent(Witness::KernelVector(x)) => x,
            other => panic!("expected a kernel vector, got {other:?}"),
        }
    }

    #[test]
    fn explicit_dependence() {
        // e1, e2, e1 + e2
        let v = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let x = kernel(&v);
        assert!(!x.is_zero());
        assert!(v.mul(&x).unwrap().is_zero());
        // proportional to (1, 1, -1)
        assert_eq!(x.scale(&Q.from_integer(-1)).unwrap(), m(&[&[1], &[1], &[-1]]));
    }

    #[test]
    fn standard_basis_is_independent() {
        assert_eq!(kernel_vector(&Matrix::identity(Q, 2)), Dependence::Independent);
    }

    #[test]
    fn zero_column() {
        assert_eq!(kernel(&m(&[&[0], &[0]])), m(&[&[1]]));
    }

    #[test]
    fn n_plus_one_vectors_always_dependent() {
        for f in [Q, Field::Prime(2), Field::Prime(5)] {
            let v = Matrix::build(f, 3, 4, |i, j| f.from_integer((i * i + 2 * j) as i64)).unwrap();
            let x = match kernel_vector(&v) {
                Dependence::Dependent(w) => w.matrix().unwrap().clone(),
                Dependence::Independent => panic!("4 vectors in F^3 must be dependent"),
            };
            assert!(v.mul(&x).unwrap().is_zero());
        }
    }
}
