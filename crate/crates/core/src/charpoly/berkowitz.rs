use super::{CharPoly, Provenance};
use crate::error::Result;
use crate::matrix::{chain_product, Matrix, ProductMode};
use crate::poly::Poly;

/// The `(n+1) x n` lower-triangular Toeplitz matrix relating the
/// characteristic vector of `A` to that of its trailing principal submatrix.
///
/// With `A = [[a11, R], [S, M]]` the first column is
/// `(1, -a11, -RS, -RMS, -RM^2 S, ...)`; each later column is the previous
/// one shifted down by a row.
pub fn berkowitz_column(a: &Matrix) -> Result<Matrix> {
    let n = a.require_square()?;
    let field = a.field();
    let mut first = Vec::with_capacity(n + 1);
    first.push(field.one());
    if n >= 1 {
        first.push(-a.at(0, 0));
    }
    if n >= 2 {
        let r = a.block(0, 1, 1, n);
        let m = a.block(1, n, 1, n);
        // v runs through S, MS, M^2 S, ...
        let mut v = a.block(1, n, 0, 1);
        for step in 0..n - 1 {
            first.push(-r.mul(&v)?.at(0, 0));
            if step + 1 < n - 1 {
                v = m.mul(&v)?;
            }
        }
    }
    Ok(Matrix::generate(field, n + 1, n, |row, col| if row >= col { first[row - col].clone() } else { field.zero() }))
}

pub fn berkowitz(a: &Matrix) -> Result<CharPoly> {
    berkowitz_with(a, ProductMode::Sequential)
}

/// `C_1 C_2 ... C_n`, where `C_i` is [`berkowitz_column`] of the principal
/// submatrix left after deleting the first `i - 1` rows and columns.
///
/// The product is the descending coefficient vector `(p_n, ..., p_0)`; it is
/// reversed into ascending order here. Only ring operations are used.
pub fn berkowitz_with(a: &Matrix, mode: ProductMode) -> Result<CharPoly> {
    let n = a.require_square()?;
    let field = a.field();
    if n == 0 {
        return Ok(CharPoly::new(Poly::one(field), Provenance::Berkowitz));
    }
    let factors: Vec<Result<Matrix>> = mode.map((0..n).collect(), |k| berkowitz_column(&a.trailing_principal(k)));
    let factors = factors.into_iter().collect::<Result<Vec<_>>>()?;
    let descending = chain_product(&factors, mode)?;
    let coeffs = (0..=n).rev().map(|r| descending.at(r, 0).clone()).collect();
    Ok(CharPoly::new(Poly::new(field, coeffs), Provenance::Berkowitz))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{charpoly_oracle, triangular_charpoly};
    use crate::field::{count_ops, Field};
    use crate::matrix::CompanionSpec;

    const Q: Field = Field::Rationals;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(Q, rows).unwrap()
    }

    #[test]
    fn column_one_by_one() {
        assert_eq!(berkowitz_column(&m(&[&[4]])).unwrap(), m(&[&[1], &[-4]]));
    }

    #[test]
    fn column_two_by_two() {
        let (a, b, c, d) = (2, 3, 5, 7);
        let col = berkowitz_column(&m(&[&[a, b], &[c, d]])).unwrap();
        // R = [b], S = [c]: third entry is -(R M^0 S) = -bc
        assert_eq!(col, m(&[&[1, 0], &[-a, 1], &[-b * c, -a]]));
        let zero = berkowitz_column(&Matrix::zeros(Q, 2, 2)).unwrap();
        assert_eq!(zero, m(&[&[1, 0], &[0, 1], &[0, 0]]));
    }

    #[test]
    fn column_three_by_three_entries() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let col = berkowitz_column(&a).unwrap();
        // R = (2 3), S = (4 7)^t, M = [[5 6] [8 10]]
        // RS = 8 + 21 = 29; MS = (20 + 42, 32 + 70) = (62, 102); RMS = 124 + 306 = 430
        assert_eq!(col.column(0), m(&[&[1], &[-1], &[-29], &[-430]]));
        assert_eq!(col.rows(), 4);
        assert_eq!(col.cols(), 3);
        assert_eq!(col.at(3, 2), &Q.from_integer(-1));
    }

    #[test]
    fn two_by_two_closed_form() {
        let (a, b, c, d) = (3, -1, 4, 2);
        let p = berkowitz(&m(&[&[a, b], &[c, d]])).unwrap();
        assert_eq!(p.poly(), &Poly::from_ints(Q, &[a * d - b * c, -(a + d), 1]));
        assert_eq!(p, charpoly_oracle(&m(&[&[a, b], &[c, d]])).unwrap());
    }

    #[test]
    fn companion_round_trip() {
        let spec = CompanionSpec::from_ints(Q, &[3, -1, 0, 7, 2]).unwrap();
        let p = berkowitz(&Matrix::companion(&spec)).unwrap();
        assert_eq!(p.poly(), &Poly::from_ints(Q, &[2, 7, 0, -1, 3, 1]));
    }

    #[test]
    fn gf2_unipotent() {
        let f = Field::Prime(2);
        let a = Matrix::from_ints(f, &[&[1, 1], &[0, 1]]).unwrap();
        let p = berkowitz(&a).unwrap();
        assert_eq!(p.poly(), &Poly::from_ints(f, &[1, 0, 1]));
        assert_eq!(p, triangular_charpoly(&a).unwrap());
    }

    #[test]
    fn never_inverts() {
        for f in [Q, Field::Prime(2), Field::Prime(7)] {
            let a = Matrix::build(f, 6, 6, |i, j| f.from_integer((i * j + i) as i64 % 5)).unwrap();
            let (p, ops) = count_ops(|| berkowitz(&a).unwrap());
            assert_eq!(ops.inversions, 0);
            assert!(ops.multiplications > 0);
            assert_eq!(p.n(), 6);
        }
    }

    #[test]
    fn modes_agree() {
        let a = Matrix::build(Q, 9, 9, |i, j| Q.from_integer(((i * 7 + j * 3) % 11) as i64 - 5)).unwrap();
        let seq = berkowitz(&a).unwrap();
        for mode in [ProductMode::BalancedTree, ProductMode::ParallelTree] {
            assert_eq!(berkowitz_with(&a, mode).unwrap(), seq);
        }
    }
}
