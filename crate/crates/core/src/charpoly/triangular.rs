use super::{adjoint_from, determinant_from, CharPoly, Provenance};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, ProductMode};
use crate::poly::Poly;

fn check_invertible_lower(c: &Matrix) -> Result<usize> {
    let n = c.require_square()?;
    if !c.is_lower_triangular() {
        return Err(Error::NotTriangular("lower"));
    }
    if let Some(k) = c.diagonal_entries().iter().position(|d| d.is_zero()) {
        return Err(Error::SingularDiagonal(k + 1));
    }
    Ok(n)
}

/// Inverse of a lower-triangular matrix with nonzero diagonal, by the block
/// recursion
///
/// ```text
/// [C1 0 ]^-1   [ C1^-1             0     ]
/// [E  C2]    = [-C2^-1 E C1^-1     C2^-1 ]
/// ```
///
/// with `C1` of size `ceil(n/2)`.
pub fn triangular_inverse(c: &Matrix) -> Result<Matrix> {
    triangular_inverse_with(c, ProductMode::Sequential)
}

/// [`triangular_inverse`] with the two diagonal blocks optionally inverted
/// in parallel.
pub fn triangular_inverse_with(c: &Matrix, mode: ProductMode) -> Result<Matrix> {
    check_invertible_lower(c)?;
    block_inverse(c, mode)
}

fn block_inverse(c: &Matrix, mode: ProductMode) -> Result<Matrix> {
    let n = c.rows();
    if n == 1 {
        return Ok(Matrix::diagonal(c.field(), &[c.at(0, 0).inv()?]));
    }
    let h = n.div_ceil(2);
    let (c1, _, e, c2) = c.split2x2(h)?;
    let (c1_inv, c2_inv) = mode.join(|| block_inverse(&c1, mode), || block_inverse(&c2, mode));
    let (c1_inv, c2_inv) = (c1_inv?, c2_inv?);
    let lower_left = c2_inv.mul(&e)?.mul(&c1_inv)?.neg();
    Matrix::block2x2(&c1_inv, &Matrix::zeros(c.field(), h, n - h), &lower_left, &c2_inv)
}

/// `prod (x - c_ii)` for an upper- or lower-triangular matrix.
pub fn triangular_charpoly(c: &Matrix) -> Result<CharPoly> {
    c.require_square()?;
    if !c.is_lower_triangular() && !c.is_upper_triangular() {
        return Err(Error::NotTriangular("upper or lower"));
    }
    let field = c.field();
    let poly = c.diagonal_entries().iter().try_fold(Poly::one(field), |acc, d| acc.mul(&Poly::x_minus(d)))?;
    Ok(CharPoly::new(poly, Provenance::Triangular))
}

/// Inverse of an invertible triangular matrix through its characteristic
/// polynomial: `adj(C) / det(C)`. When `det(C) = 1` (unipotent `C`) no
/// division happens at all.
pub fn triangular_inverse_via_charpoly(c: &Matrix) -> Result<Matrix> {
    let p = triangular_charpoly(c)?;
    let det = determinant_from(&p);
    if det.is_zero() {
        let k = c.diagonal_entries().iter().position(|d| d.is_zero()).unwrap_or(0);
        return Err(Error::SingularDiagonal(k + 1));
    }
    let adj = adjoint_from(c, &p)?;
    if det.is_one() {
        Ok(adj)
    } else {
        adj.scale(&det.inv()?)
    }
}
