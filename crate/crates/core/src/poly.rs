//! Univariate polynomials with coefficients in a [`Field`].
//!
//! Coefficients are ascending (`coeffs[i]` multiplies `x^i`) and carry no
//! trailing zeros; the zero polynomial is the empty list.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    /// Normalizes away trailing zeros. Panics if a coefficient is from a
    /// different field.
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> Poly {
        assert!(coeffs.iter().all(|c| c.field() == field), "coefficient outside {field}");
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_ints(field: Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_integer(c)).collect())
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Poly {
        Poly::new(c.field(), vec![c])
    }

    /// `x - a`.
    pub fn x_minus(a: &FieldElement) -> Poly {
        let field = a.field();
        Poly::new(field, vec![-a, field.one()])
    }

    /// `c x^deg`.
    pub fn monomial(c: FieldElement, deg: usize) -> Poly {
        let field = c.field();
        let mut coeffs = vec![field.zero(); deg];
        coeffs.push(c);
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(FieldElement::is_one)
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()))
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Poly::new(self.field, (0..len).map(|i| &self.coeff(i) + &other.coeff(i)).collect()))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Poly::new(self.field, (0..len).map(|i| &self.coeff(i) - &other.coeff(i)).collect()))
    }

    pub fn scale(&self, a: &FieldElement) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| a * c).collect())
    }

    /// Convolution product.
    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(Poly::new(self.field, out))
    }

    /// `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let d = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lead_inv = divisor.coeffs[d].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(deg) = self.degree().filter(|&deg| deg >= d) else {
            return Ok((Poly::zero(self.field), self.clone()));
        };
        let mut quot = vec![self.field.zero(); deg - d + 1];
        for shift in (0..=deg - d).rev() {
            let factor = &rem[shift + d] * &lead_inv;
            if factor.is_zero() {
                continue;
            }
            for (j, g) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = &rem[shift + j] - &(&factor * g);
            }
            quot[shift] = factor;
        }
        rem.truncate(d);
        Ok((Poly::new(self.field, quot), Poly::new(self.field, rem)))
    }

    /// True when `divisor` divides `self` exactly.
    pub fn divisible_by(&self, divisor: &Poly) -> Result<bool> {
        Ok(self.divmod(divisor)?.1.is_zero())
    }

    /// Scalar evaluation by Horner's rule.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// `sum c_i A^i` with `A^0 = I`, by Horner's rule on matrices.
    pub fn eval_matrix(&self, a: &Matrix) -> Result<Matrix> {
        let n = a.require_square()?;
        if a.field() != self.field {
            return Err(Error::FieldMismatch(self.field.to_string(), a.field().to_string()));
        }
        let mut acc = Matrix::zeros(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a)?;
            for k in 0..n {
                let d = acc.at_mut(k, k);
                *d = &*d + c;
            }
        }
        Ok(acc)
    }

    /// Largest `s` with `x^s` dividing `self` (0 for the zero polynomial).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `self / x^s`, dropping the `s` lowest coefficients.
    pub fn shift_down(&self, s: usize) -> Poly {
        Poly::new(self.field, self.coeffs.iter().skip(s).cloned().collect())
    }

    /// Parses `[c0, c1, ..., cn]` (whitespace around commas optional).
    pub fn parse(field: Field, text: &str) -> Result<Poly> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(1, 1, "polynomial must be written as [c0, c1, ...]"))?;
        if inner.trim().is_empty() {
            return Ok(Poly::zero(field));
        }
        let coeffs = inner
            .split(',')
            .enumerate()
            .map(|(k, lit)| field.parse_element(lit).map_err(|m| Error::parse(1, k + 1, m)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }
}

impl fmt::Display for Poly {
    /// Ascending coefficient list, e.g. `[6, -5, 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
