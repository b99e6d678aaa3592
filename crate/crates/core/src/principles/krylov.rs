use crate::charpoly::{inverse, Algorithm};
use crate::elimination::{self, rank};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// The Krylov sequence `e_i, A e_i, A^2 e_i, ...` up to its first linear
/// dependence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrylovResult {
    /// Length of the independent prefix.
    pub k: usize,
    /// `n x k`, columns `e_i, A e_i, ..., A^(k-1) e_i`.
    pub basis: Matrix,
    /// Monic, degree `k`, with `g(A) e_i = 0`.
    pub g: Poly,
}

/// Local minimal polynomial of `e_i` under `A` (1-based `i`).
///
/// Stops at the first `k` where `A^k e_i` lies in the span of the earlier
/// vectors, and reads `g` off the dependence found by elimination. At most
/// `n + 1` vectors are ever stacked, so `k <= n`.
pub fn krylov_local_poly(a: &Matrix, i: usize) -> Result<KrylovResult> {
    let n = a.require_square()?;
    let field = a.field();
    let mut vectors = vec![Matrix::unit_vector(field, n, i)?];
    loop {
        let next = a.mul(vectors.last().expect("non-empty"))?;
        vectors.push(next);
        let stacked = Matrix::from_columns(field, &vectors)?;
        if let Some(x) = elimination::kernel_vector(&stacked) {
            let k = vectors.len() - 1;
            // earlier vectors are independent, so the last weight is nonzero
            let lead = x.at(k, 0).inv()?;
            let g = Poly::new(field, (0..=k).map(|t| x.at(t, 0) * &lead).collect());
            vectors.pop();
            let basis = Matrix::from_columns(field, &vectors)?;
            return Ok(KrylovResult { k, basis, g });
        }
    }
}

/// Completes independent columns to a basis of `F^n` by appending, in
/// index order, each standard vector not already in the span.
pub fn extend_to_basis(b: &Matrix) -> Result<Matrix> {
    let n = b.rows();
    let field = b.field();
    let mut current = b.clone();
    let mut r = rank(&current);
    if r != b.cols() {
        return Err(Error::NotIndependent);
    }
    for j in 1..=n {
        if r == n {
            break;
        }
        let candidate = current.hcat(&Matrix::unit_vector(field, n, j)?)?;
        let candidate_rank = rank(&candidate);
        if candidate_rank > r {
            current = candidate;
            r = candidate_rank;
        }
    }
    Ok(current)
}

/// Block-triangular form exhibiting the Krylov subspace of `e_i`.
///
/// With `Q = extend_to_basis(krylov.basis)`, the matrix `Q^-1 A Q` is block
/// upper-triangular with the companion matrix of `g` in its top-left corner.
/// The form stored here is its transpose, `P A^t P^-1` with `P = Q^t`:
///
/// ```text
/// form = [ W  0 ]     W: k x k, charpoly(W) = g
///        [ *  E ]     E: (n-k) x (n-k), charpoly(A) = g * charpoly(E)
/// ```
///
/// `E` is 0x0 when the Krylov space is everything.
#[derive(Clone, Debug)]
pub struct BlockForm {
    pub krylov: KrylovResult,
    /// `Q`: Krylov columns followed by the standard vectors that complete them.
    pub basis: Matrix,
    /// `P = Q^t`.
    pub p: Matrix,
    pub form: Matrix,
    pub w: Matrix,
    pub e: Matrix,
}

impl BlockForm {
    pub fn k(&self) -> usize {
        self.krylov.k
    }

    /// The `k x (n-k)` block that invariance forces to zero.
    pub fn upper_right(&self) -> Matrix {
        let (n, k) = (self.form.rows(), self.k());
        self.form.block(0, k, k, n)
    }
}

pub fn invariant_block_form(a: &Matrix, i: usize) -> Result<BlockForm> {
    let n = a.require_square()?;
    let krylov = krylov_local_poly(a, i)?;
    let basis = extend_to_basis(&krylov.basis)?;
    let basis_inv = inverse(&basis, Algorithm::Berkowitz)?;
    let form = basis_inv.mul(a)?.mul(&basis)?.transpose();
    let k = krylov.k;
    let w = form.block(0, k, 0, k);
    let e = form.block(k, n, k, n);
    Ok(BlockForm { p: basis.transpose(), krylov, basis, form, w, e })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::berkowitz;
    use crate::field::Field;
    use crate::matrix::CompanionSpec;

    const Q: Field = Field::Rationals;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(Q, rows).unwrap()
    }

    #[test]
    fn nilpotent_shift() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let r1 = krylov_local_poly(&a, 1).unwrap();
        assert_eq!((r1.k, r1.g.clone()), (1, Poly::from_ints(Q, &[0, 1])));
        let r2 = krylov_local_poly(&a, 2).unwrap();
        assert_eq!((r2.k, r2.g.clone()), (2, Poly::from_ints(Q, &[0, 0, 1])));
        assert_eq!(r2.basis, m(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn companion_recovers_polynomial() {
        let g0 = Poly::from_ints(Q, &[-6, 11, -6, 1]);
        let spec = CompanionSpec::from_ints(Q, &[-6, 11, -6]).unwrap();
        let r = krylov_local_poly(&Matrix::companion(&spec), 1).unwrap();
        assert_eq!(r.k, 3);
        assert_eq!(r.g, g0);
    }

    #[test]
    fn g_annihilates_start_vector() {
        let a = m(&[&[2, 0, 0], &[1, 2, 0], &[0, 0, 3]]);
        for i in 1..=3 {
            let r = krylov_local_poly(&a, i).unwrap();
            let e = Matrix::unit_vector(Q, 3, i).unwrap();
            assert!(r.g.eval_matrix(&a).unwrap().mul(&e).unwrap().is_zero());
            assert_eq!(rank(&r.basis), r.k);
        }
        assert_eq!(krylov_local_poly(&a, 4).unwrap_err(), Error::BadIndex { index: 4, n: 3 });
        assert!(matches!(krylov_local_poly(&m(&[&[1, 2]]), 1), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn extend_examples() {
        assert_eq!(extend_to_basis(&m(&[&[0], &[1]])).unwrap(), m(&[&[0, 1], &[1, 0]]));
        let ext = extend_to_basis(&m(&[&[1], &[1]])).unwrap();
        assert_eq!(ext, m(&[&[1, 1], &[1, 0]]));
        assert!(!crate::charpoly::determinant(&ext, Algorithm::Oracle).unwrap().is_zero());
        assert_eq!(extend_to_basis(&Matrix::identity(Q, 3)).unwrap(), Matrix::identity(Q, 3));
        assert_eq!(extend_to_basis(&m(&[&[1, 2], &[2, 4]])), Err(Error::NotIndependent));
    }

    #[test]
    fn block_form_diagonal() {
        let bf = invariant_block_form(&m(&[&[2, 0], &[0, 3]]), 1).unwrap();
        assert_eq!(bf.k(), 1);
        assert_eq!(bf.w, m(&[&[2]]));
        assert_eq!(bf.e, m(&[&[3]]));
        assert!(bf.upper_right().is_zero());
    }

    #[test]
    fn block_form_full_krylov_space() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let bf = invariant_block_form(&a, 2).unwrap();
        assert_eq!(bf.k(), 2);
        assert_eq!((bf.e.rows(), bf.e.cols()), (0, 0));
        assert_eq!(berkowitz(&bf.w).unwrap(), berkowitz(&a).unwrap());
    }

    #[test]
    fn block_form_proper_subspace() {
        // e1 spans an invariant line; e3 generates a 2-dimensional one
        let a = m(&[&[5, 1, 0], &[0, 2, 1], &[0, 0, 2]]);
        for (i, k) in [(1, 1), (2, 2), (3, 3)] {
            let bf = invariant_block_form(&a, i).unwrap();
            assert_eq!(bf.k(), k);
            assert!(bf.upper_right().is_zero());
            let inv_p = inverse(&bf.p, Algorithm::Berkowitz).unwrap();
            assert_eq!(bf.form, bf.p.mul(&a.transpose()).unwrap().mul(&inv_p).unwrap());
            assert_eq!(berkowitz(&bf.w).unwrap().poly(), &bf.krylov.g);
            let product = bf.krylov.g.mul(berkowitz(&bf.e).unwrap().poly()).unwrap();
            assert_eq!(&product, berkowitz(&a).unwrap().poly());
        }
    }
}
