//! Closed forms for powers of a companion matrix.
//!
//! Split a companion matrix as `A = [[0, R], [S, M]]` with `R` a row,
//! `S = e_1` a column and `M` the trailing companion block. The functions
//! here evaluate the block formulas for powers of `A` from `R`, `S`, `M`
//! alone, so they can be compared against actual powers.

use crate::error::Result;
use crate::matrix::{CompanionSpec, Matrix};

/// `(R, S, M)` of a square matrix of size at least 2.
pub fn companion_parts(a: &Matrix) -> Result<(Matrix, Matrix, Matrix)> {
    let (_, r, s, m) = a.split2x2(1)?;
    Ok((r, s, m))
}

/// Predicted blocks `(w, X, Y, Z)` of `A^(i+1)`:
///
/// ```text
/// w = 0,  X = R M^i,  Y = M^i S,  Z = sum_{j<i} M^j S R M^(i-1-j) + M^(i+1)
/// ```
///
/// The scalar `w` is exactly zero only while `i + 1 < k`; the top power
/// `A^k` has `w = -c_k`.
pub fn predicted_power_blocks(a: &Matrix, i: usize) -> Result<[Matrix; 4]> {
    let (r, s, m) = companion_parts(a)?;
    let field = a.field();
    let m_pow = |e: usize| m.power(e);
    let w = Matrix::zeros(field, 1, 1);
    let x = r.mul(&m_pow(i)?)?;
    let y = m_pow(i)?.mul(&s)?;
    let sr = s.mul(&r)?;
    let mut z = m_pow(i + 1)?;
    for j in 0..i {
        z = z.add(&m_pow(j)?.mul(&sr)?.mul(&m_pow(i - 1 - j)?)?)?;
    }
    Ok([w, x, y, z])
}

/// `sum_{i=2..k} c_(k-i) sum_{j=0..i-2} M^j S R M^(i-2-j)` with `c_0 = 1`,
/// which equals `-c_k I` for every companion matrix with `k >= 2`.
pub fn companion_tail_sum(spec: &CompanionSpec) -> Result<Matrix> {
    let a = Matrix::companion(spec);
    let k = spec.degree();
    let (r, s, m) = companion_parts(&a)?;
    let field = spec.field();
    let coeff = |t: usize| if t == 0 { field.one() } else { spec.coeffs()[t - 1].clone() };
    let sr = s.mul(&r)?;
    let mut total = Matrix::zeros(field, k - 1, k - 1);
    for i in 2..=k {
        let mut inner = Matrix::zeros(field, k - 1, k - 1);
        for j in 0..=i - 2 {
            inner = inner.add(&m.power(j)?.mul(&sr)?.mul(&m.power(i - 2 - j)?)?)?;
        }
        total = total.add(&inner.scale(&coeff(k - i))?)?;
    }
    Ok(total)
}
