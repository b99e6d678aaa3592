//! Dense matrices over a [`Field`].
//!
//! The public index convention is 1-based, mirroring `e(A, i, j)`: the
//! [`Matrix::entry`] accessor is total and returns zero outside the matrix.
//! Algebraic operations are strict about shapes and never pad implicitly;
//! use [`Matrix::pad`] when zero padding is wanted.

mod product;

pub use product::{chain_product, power_sequence, prefix_products, ProductMode};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

/// Non-leading coefficients `c1..ck` of a monic `x^k + c1 x^(k-1) + ... + ck`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionSpec {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl CompanionSpec {
    /// Fails with `ZeroDimension` for an empty coefficient list.
    pub fn new(field: Field, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroDimension);
        }
        check_fields(field, &coeffs)?;
        Ok(CompanionSpec { field, coeffs })
    }

    pub fn from_ints(field: Field, coeffs: &[i64]) -> Result<Self> {
        Self::new(field, coeffs.iter().map(|&c| field.from_integer(c)).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `c1..ck`, highest-degree non-leading coefficient first.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }
}

fn check_fields(field: Field, elems: &[FieldElement]) -> Result<()> {
    match elems.iter().find(|e| e.field() != field) {
        Some(e) => Err(Error::FieldMismatch(field.to_string(), e.field().to_string())),
        None => Ok(()),
    }
}

fn shape(m: &Matrix) -> String {
    format!("{}x{}", m.rows, m.cols)
}

impl Matrix {
    /// Builds an `m x n` matrix from a generator called with 1-based
    /// `(i, j)`.
    pub fn build(
        field: Field,
        m: usize,
        n: usize,
        mut gen: impl FnMut(usize, usize) -> FieldElement,
    ) -> Result<Matrix> {
        if m == 0 || n == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut entries = Vec::with_capacity(m * n);
        for i in 1..=m {
            for j in 1..=n {
                entries.push(gen(i, j));
            }
        }
        check_fields(field, &entries)?;
        Ok(Matrix { field, rows: m, cols: n, entries })
    }

    /// Like [`Matrix::build`] but allows zero dimensions, for blocks that
    /// may legitimately be empty.
    pub(crate) fn generate(
        field: Field,
        m: usize,
        n: usize,
        mut gen: impl FnMut(usize, usize) -> FieldElement,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(m * n);
        for r in 0..m {
            for c in 0..n {
                entries.push(gen(r, c));
            }
        }
        Matrix { field, rows: m, cols: n, entries }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::ZeroDimension);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                op: "from_rows",
                left: format!("row length {n}"),
                right: format!("row length {}", bad.len()),
            });
        }
        let entries: Vec<_> = rows.into_iter().flatten().collect();
        check_fields(field, &entries)?;
        Ok(Matrix { field, rows: m, cols: n, entries })
    }

    /// Integer entries mapped into `field`.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Result<Matrix> {
        Self::from_rows(field, rows.iter().map(|r| r.iter().map(|&x| field.from_integer(x)).collect()).collect())
    }

    /// Matrix whose columns are `cols`, each an `n x 1` vector.
    pub fn from_columns(field: Field, cols: &[Matrix]) -> Result<Matrix> {
        let n = cols.first().map_or(0, |c| c.rows);
        if cols.is_empty() || n == 0 {
            return Err(Error::ZeroDimension);
        }
        for c in cols {
            if c.field != field {
                return Err(Error::FieldMismatch(field.to_string(), c.field.to_string()));
            }
            if c.rows != n || c.cols != 1 {
                return Err(Error::DimensionMismatch { op: "from_columns", left: format!("{n}x1"), right: shape(c) });
            }
        }
        Ok(Matrix::generate(field, n, cols.len(), |r, c| cols[c].entries[r].clone()))
    }

    pub fn column_vector(field: Field, entries: Vec<FieldElement>) -> Result<Matrix> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        check_fields(field, &entries)?;
        Ok(Matrix { field, rows: n, cols: 1, entries })
    }

    pub fn zeros(field: Field, m: usize, n: usize) -> Matrix {
        Matrix::generate(field, m, n, |_, _| field.zero())
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        Matrix::generate(field, n, n, |r, c| if r == c { field.one() } else { field.zero() })
    }

    pub fn diagonal(field: Field, diag: &[FieldElement]) -> Matrix {
        let n = diag.len();
        Matrix::generate(field, n, n, |r, c| if r == c { diag[r].clone() } else { field.zero() })
    }

    /// The standard basis vector `e_i` of length `n` (1-based `i`).
    pub fn unit_vector(field: Field, n: usize, i: usize) -> Result<Matrix> {
        if i == 0 || i > n {
            return Err(Error::BadIndex { index: i, n });
        }
        Ok(Matrix::generate(field, n, 1, |r, _| if r + 1 == i { field.one() } else { field.zero() }))
    }

    /// 0x0 matrix; its characteristic polynomial is the constant 1.
    pub fn empty(field: Field) -> Matrix {
        Matrix { field, rows: 0, cols: 0, entries: Vec::new() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Total 1-based accessor: zero outside the matrix.
    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        if i == 0 || j == 0 || i > self.rows || j > self.cols {
            self.field.zero()
        } else {
            self.entries[(i - 1) * self.cols + (j - 1)].clone()
        }
    }

    /// 0-based borrow; panics out of range.
    pub fn at(&self, r: usize, c: usize) -> &FieldElement {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        &self.entries[r * self.cols + c]
    }

    pub(crate) fn at_mut(&mut self, r: usize, c: usize) -> &mut FieldElement {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row_major(&self) -> &[FieldElement] {
        &self.entries
    }

    /// Zero-padded (or truncated) copy with the requested shape.
    pub fn pad(&self, m: usize, n: usize) -> Matrix {
        Matrix::generate(self.field, m, n, |r, c| self.entry(r + 1, c + 1))
    }

    /// 0-based column `c` as an `n x 1` matrix.
    pub fn column(&self, c: usize) -> Matrix {
        Matrix::generate(self.field, self.rows, 1, |r, _| self.at(r, c).clone())
    }

    /// Sub-block of rows `r0..r1`, columns `c0..c1` (0-based, half-open).
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        Matrix::generate(self.field, r1 - r0, c1 - c0, |r, c| self.at(r0 + r, c0 + c).clone())
    }

    /// Concatenates columns of `self` and `other`.
    pub fn hcat(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(self.mismatch("hcat", other));
        }
        Ok(Matrix::generate(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        }))
    }

    /// Column-major flattening into an `mn x 1` vector.
    pub fn vectorize(&self) -> Matrix {
        Matrix::generate(self.field, self.rows * self.cols, 1, |k, _| self.at(k % self.rows, k / self.rows).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.at(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.at(r, c).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r.min(self.cols)).all(|c| self.at(r, c).is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<FieldElement> {
        (0..self.rows.min(self.cols)).map(|k| self.at(k, k).clone()).collect()
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()))
        }
    }

    fn mismatch(&self, op: &'static str, other: &Matrix) -> Error {
        Error::DimensionMismatch { op, left: shape(self), right: shape(other) }
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    fn zip_with(
        &self,
        other: &Matrix,
        op: &'static str,
        f: impl Fn(&FieldElement, &FieldElement) -> FieldElement,
    ) -> Result<Matrix> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.mismatch(op, other));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    pub fn scale(&self, a: &FieldElement) -> Result<Matrix> {
        if a.field() != self.field {
            return Err(Error::FieldMismatch(self.field.to_string(), a.field().to_string()));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| a * e).collect(),
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Standard product; `cols(self)` must equal `rows(other)`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(self.mismatch("mul", other));
        }
        let inner = self.cols;
        Ok(Matrix::generate(self.field, self.rows, other.cols, |r, c| {
            if inner == 0 {
                return self.field.zero();
            }
            let mut acc = self.at(r, 0) * other.at(0, c);
            for k in 1..inner {
                acc = &acc + &(self.at(r, k) * other.at(k, c));
            }
            acc
        }))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::generate(self.field, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn trace(&self) -> Result<FieldElement> {
        let n = self.require_square()?;
        let mut acc = self.field.zero();
        for k in 0..n {
            acc = &acc + self.at(k, k);
        }
        Ok(acc)
    }

    /// `A^k` by the defining recursion `A^0 = I`, `A^(k+1) = A^k * A`.
    pub fn power(&self, k: usize) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(self.field, n);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `A^k` by repeated squaring; equal to [`Matrix::power`].
    pub fn power_by_squaring(&self, mut k: usize) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut result = Matrix::identity(self.field, n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Assembles `[[w, x], [y, z]]`.
    pub fn block2x2(w: &Matrix, x: &Matrix, y: &Matrix, z: &Matrix) -> Result<Matrix> {
        for m in [x, y, z] {
            w.same_field(m)?;
        }
        if w.rows != x.rows {
            return Err(w.mismatch("block2x2 (top row heights)", x));
        }
        if y.rows != z.rows {
            return Err(y.mismatch("block2x2 (bottom row heights)", z));
        }
        if w.cols != y.cols {
            return Err(w.mismatch("block2x2 (left column widths)", y));
        }
        if x.cols != z.cols {
            return Err(x.mismatch("block2x2 (right column widths)", z));
        }
        let (top, left) = (w.rows, w.cols);
        Ok(Matrix::generate(w.field, top + y.rows, left + x.cols, |r, c| {
            match (r < top, c < left) {
                (true, true) => w.at(r, c),
                (true, false) => x.at(r, c - left),
                (false, true) => y.at(r - top, c),
                (false, false) => z.at(r - top, c - left),
            }
            .clone()
        }))
    }

    /// Splits a square matrix at `k` into `(w, x, y, z)` with `w` of size
    /// `k x k`. Requires `1 <= k < n`.
    pub fn split2x2(&self, k: usize) -> Result<(Matrix, Matrix, Matrix, Matrix)> {
        let n = self.require_square()?;
        if k == 0 || k >= n {
            return Err(Error::BadCut { n, cut: k });
        }
        Ok((self.block(0, k, 0, k), self.block(0, k, k, n), self.block(k, n, 0, k), self.block(k, n, k, n)))
    }

    /// Drops the first `k` rows and columns of a square matrix.
    pub fn trailing_principal(&self, k: usize) -> Matrix {
        self.block(k, self.rows, k, self.cols)
    }

    /// Companion matrix: ones on the first subdiagonal and last column
    /// `(-ck, ..., -c1)` read top to bottom.
    pub fn companion(spec: &CompanionSpec) -> Matrix {
        let k = spec.degree();
        let field = spec.field;
        Matrix::generate(field, k, k, |r, c| {
            if c == k - 1 {
                -&spec.coeffs[k - 1 - r]
            } else if r == c + 1 {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    /// Serializes in the plain text format: `m n` then one line per row.
    pub fn to_plain(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}
