use super::triangular::triangular_inverse_with;
use super::{CharPoly, Provenance};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::matrix::{power_sequence, Matrix, ProductMode};
use crate::poly::Poly;

/// Newton's symmetric polynomials `s_0 = 1, s_1, ..., s_n` of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonCoeffs {
    field: Field,
    s: Vec<FieldElement>,
}

impl NewtonCoeffs {
    /// Requires `s[0] = 1`.
    pub fn new(field: Field, s: Vec<FieldElement>) -> Result<NewtonCoeffs> {
        match s.first() {
            Some(s0) if s0.is_one() && s.iter().all(|x| x.field() == field) => Ok(NewtonCoeffs { field, s }),
            Some(s0) if !s0.is_one() => Err(Error::parse(1, 1, "s_0 must be 1")),
            Some(_) => Err(Error::FieldMismatch(field.to_string(), "mixed".into())),
            None => Err(Error::ZeroDimension),
        }
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.s.len() - 1
    }
}

/// Fails unless `1/1, ..., 1/n` exist in the field.
fn check_characteristic(field: Field, n: usize) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && p <= n as u64 {
        Err(Error::CharacteristicTooSmall { characteristic: p, n })
    } else {
        Ok(())
    }
}

fn reciprocals(field: Field, n: usize) -> Result<Vec<FieldElement>> {
    (1..=n as i64).map(|k| field.from_integer(k).inv()).collect()
}

fn power_traces(a: &Matrix, n: usize, mode: ProductMode) -> Result<Vec<FieldElement>> {
    power_sequence(a, n, mode)?.iter().map(Matrix::trace).collect()
}

/// `s_k = (1/k) sum_{i=1..k} (-1)^(i-1) s_(k-i) tr(A^i)`, evaluated directly.
pub fn newton_coeffs(a: &Matrix) -> Result<NewtonCoeffs> {
    let n = a.require_square()?;
    let field = a.field();
    check_characteristic(field, n)?;
    let traces = power_traces(a, n, ProductMode::Sequential)?;
    let recip = reciprocals(field, n)?;
    let mut s = vec![field.one()];
    for k in 1..=n {
        let mut acc = field.zero();
        for i in 1..=k {
            let term = &s[k - i] * &traces[i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        s.push(&acc * &recip[k - 1]);
    }
    Ok(NewtonCoeffs { field, s })
}

/// `s_0 x^n - s_1 x^(n-1) + s_2 x^(n-2) - ... ± s_n`.
pub fn to_charpoly(s: &NewtonCoeffs) -> CharPoly {
    let n = s.n();
    let coeffs = (0..=n)
        .map(|j| {
            let v = &s.s[n - j];
            if (n - j).is_multiple_of(2) {
                v.clone()
            } else {
                -v
            }
        })
        .collect();
    CharPoly::new(Poly::new(s.field, coeffs), Provenance::Newton)
}

pub fn csanky(a: &Matrix) -> Result<CharPoly> {
    csanky_with(a, ProductMode::Sequential)
}

/// Newton's recurrence solved as the linear system `(I - T) s = b` with
///
/// ```text
/// T[k][j] = (-1)^(k-j-1) tr(A^(k-j)) / k    (j < k)
/// b[k]    = (-1)^(k-1)   tr(A^k)     / k
/// ```
///
/// `I - T` is unit lower-triangular and is inverted by the recursive block
/// formula; in tree modes the powers of `A` come from a balanced prefix
/// product and the two halves of the inverse are computed independently.
pub fn csanky_with(a: &Matrix, mode: ProductMode) -> Result<CharPoly> {
    let n = a.require_square()?;
    let field = a.field();
    check_characteristic(field, n)?;
    if n == 0 {
        return Ok(CharPoly::new(Poly::one(field), Provenance::Csanky));
    }
    let traces = power_traces(a, n, mode)?;
    let recip = reciprocals(field, n)?;
    let signed = |e: usize, v: FieldElement| if e.is_multiple_of(2) { v } else { -v };

    // rows/cols here are 0-based: row r holds the equation for s_(r+1)
    let system = Matrix::generate(field, n, n, |r, c| {
        if r == c {
            field.one()
        } else if c < r {
            let t = signed(r - c - 1, &traces[r - c - 1] * &recip[r]);
            -t
        } else {
            field.zero()
        }
    });
    let rhs = Matrix::generate(field, n, 1, |r, _| signed(r, &traces[r] * &recip[r]));
    let solution = triangular_inverse_with(&system, mode)?.mul(&rhs)?;

    let mut s = vec![field.one()];
    s.extend((0..n).map(|r| solution.at(r, 0).clone()));
    let poly = to_charpoly(&NewtonCoeffs { field, s }).into_poly();
    Ok(CharPoly::new(poly, Provenance::Csanky))
}
