use super::Witness;
use crate::elimination;
use crate::error::Result;
use crate::matrix::Matrix;
use crate::poly::Poly;

/// The minimal polynomial of `A`.
///
/// Scans `d = 0, 1, ...` for the first dependence among the vectorized
/// powers `I, A, ..., A^d`; the dependence is normalized to be monic. The
/// scan stops by `d = n`.
pub fn annihilating_poly(a: &Matrix) -> Result<Poly> {
    let n = a.require_square()?;
    let field = a.field();
    if n == 0 {
        return Ok(Poly::one(field));
    }
    let mut power = Matrix::identity(field, n);
    let mut columns = vec![power.vectorize()];
    loop {
        let stacked = Matrix::from_columns(field, &columns)?;
        if let Some(x) = elimination::kernel_vector(&stacked) {
            let d = columns.len() - 1;
            let lead = x.at(d, 0).inv()?;
            return Ok(Poly::new(field, (0..=d).map(|t| x.at(t, 0) * &lead).collect()));
        }
        power = power.mul(a)?;
        columns.push(power.vectorize());
    }
}

/// Either an inverse of `A` or a nonzero `B` with `AB = BA = 0`.
///
/// Writes the minimal polynomial as `q(x) x^s` with `q(0) != 0`. When
/// `q(A) = 0`, the relation `q(0) I + A r(A) = 0` gives the inverse
/// `-r(A) / q(0)`. Otherwise `s >= 1`, and the last nonzero matrix in
/// `q(A), q(A) A, ..., q(A) A^(s-1)` is killed by `A`.
pub fn inverse_or_zero_divisor(a: &Matrix) -> Result<Witness> {
    let p = annihilating_poly(a)?;
    let q = p.shift_down(p.x_valuation());
    let q_at_a = q.eval_matrix(a)?;
    if q_at_a.is_zero() {
        let r = q.shift_down(1);
        let scale = -&q.coeff(0).inv()?;
        return Ok(Witness::Inverse(r.eval_matrix(a)?.scale(&scale)?));
    }
    let mut b = q_at_a;
    loop {
        let next = b.mul(a)?;
        if next.is_zero() {
            return Ok(Witness::ZeroDivisor(b));
        }
        b = next;
    }
}

/// The same alternative reached through linear dependence alone.
///
/// For each `i` the `n + 1` columns of `[A | e_i]` are dependent. A
/// dependence `(b, c)` with `c != 0` gives `A (-b / c) = e_i`; one with
/// `c = 0` gives `A b = 0` with `b != 0`. If any column lands in the second
/// case those kernel columns form a zero divisor, otherwise the solved
/// columns form the inverse.
pub fn dependence_to_inverse_or_zero(a: &Matrix) -> Result<Witness> {
    let n = a.require_square()?;
    let field = a.field();
    if n == 0 {
        return Ok(Witness::Inverse(Matrix::empty(field)));
    }
    let mut solved = Vec::with_capacity(n);
    let mut kernel = Vec::with_capacity(n);
    for i in 1..=n {
        let augmented = a.hcat(&Matrix::unit_vector(field, n, i)?)?;
        let x = elimination::kernel_vector(&augmented).expect("n + 1 vectors in F^n are dependent");
        let b = x.block(0, n, 0, 1);
        let c = x.at(n, 0);
        if c.is_zero() {
            solved.push(Matrix::zeros(field, n, 1));
            kernel.push(b);
        } else {
            solved.push(b.scale(&-&c.inv()?)?);
            kernel.push(Matrix::zeros(field, n, 1));
        }
    }
    if kernel.iter().any(|col| !col.is_zero()) {
        Ok(Witness::ZeroDivisor(Matrix::from_columns(field, &kernel)?))
    } else {
        Ok(Witness::Inverse(Matrix::from_columns(field, &solved)?))
    }
}
