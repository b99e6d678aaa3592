use super::Witness;
use crate::error::Result;
use crate::matrix::Matrix;

/// Inverse of `U = I - N` for `N` with `N^m = 0`.
///
/// The characteristic polynomial of such `U` is a power of `x - 1`, so the
/// adjugate-over-determinant inverse collapses to `I + N + ... + N^(m-1)`.
/// It is evaluated by Horner's rule `R <- I + N R`, using no division.
pub fn unipotent_inverse(u: &Matrix, m: usize) -> Result<Matrix> {
    let n = u.require_square()?;
    let id = Matrix::identity(u.field(), n);
    let nil = id.sub(u)?;
    let mut r = id.clone();
    for _ in 1..m {
        r = id.add(&nil.mul(&r)?)?;
    }
    Ok(r)
}

/// `[I, A, ..., A^(m-1)]` read off the inverse of one `nm x nm` matrix.
///
/// `N` carries `m - 1` copies of `A` on its block superdiagonal, so
/// `(I - N)^-1 = I + N + ... + N^(m-1)` and its top block row is the list of
/// powers of `A`.
pub fn pow_via_inverse(a: &Matrix, m: usize) -> Result<Witness> {
    let n = a.require_square()?;
    let field = a.field();
    let size = n * m;
    let nil = Matrix::generate(field, size, size, |r, c| {
        let (br, bc) = (r / n, c / n);
        if bc == br + 1 {
            a.at(r % n, c % n).clone()
        } else {
            field.zero()
        }
    });
    let u = Matrix::identity(field, size).sub(&nil)?;
    let inv = unipotent_inverse(&u, m)?;
    Ok(Witness::PowerList((0..m).map(|j| inv.block(0, n, j * n, (j + 1) * n)).collect()))
}
