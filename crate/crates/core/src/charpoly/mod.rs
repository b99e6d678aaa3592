//! Characteristic polynomials `det(xI - A)` and the quantities derived from
//! them.
//!
//! Three independent routes are provided:
//!
//! * [`csanky`]: power sums `tr(A^i)` turned into Newton's symmetric
//!   polynomials by solving a unit lower-triangular system with a recursive
//!   block inverse. Divides by `1..=n`, so the field characteristic must be
//!   0 or exceed `n`.
//! * [`berkowitz`]: a product of Toeplitz matrices built from the trailing
//!   principal submatrices. Division-free, valid over every field.
//! * [`charpoly_oracle`]: cofactor expansion of `det(xI - A)` over the
//!   polynomial ring. Exponential; ground truth for small `n`.
//!
//! Determinant, adjugate and inverse are read off whichever polynomial the
//! caller selects.

mod berkowitz;
mod csanky;
mod oracle;
mod triangular;

pub use berkowitz::{berkowitz, berkowitz_column, berkowitz_with};
pub use csanky::{csanky, csanky_with, newton_coeffs, to_charpoly, NewtonCoeffs};
pub use oracle::{charpoly_oracle, ORACLE_LIMIT};
pub use triangular::{
    triangular_charpoly, triangular_inverse, triangular_inverse_via_charpoly, triangular_inverse_with,
};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::matrix::{Matrix, ProductMode};
use crate::poly::Poly;

/// Which algorithm produced a [`CharPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Newton,
    Csanky,
    Berkowitz,
    Triangular,
    Oracle,
    /// Handed in by a caller through [`CharPoly::from_monic`].
    External,
}

/// Monic `det(xI - A)` in ascending coefficient order.
///
/// Equality compares only the polynomial, never the provenance.
#[derive(Clone, Debug)]
pub struct CharPoly {
    poly: Poly,
    provenance: Provenance,
}

impl CharPoly {
    pub(crate) fn new(poly: Poly, provenance: Provenance) -> CharPoly {
        debug_assert!(poly.is_monic(), "characteristic polynomial must be monic: {poly}");
        CharPoly { poly, provenance }
    }

    /// Wraps a polynomial computed elsewhere; `None` unless it is monic.
    pub fn from_monic(poly: Poly) -> Option<CharPoly> {
        poly.is_monic().then_some(CharPoly { poly, provenance: Provenance::External })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    /// Degree, which is the size of the matrix.
    pub fn n(&self) -> usize {
        self.poly.degree().expect("monic polynomial is nonzero")
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.poly.coeff(i)
    }
}

impl PartialEq for CharPoly {
    fn eq(&self, other: &CharPoly) -> bool {
        self.poly == other.poly
    }
}

impl Eq for CharPoly {}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Csanky,
    /// Field-independent, hence the default.
    #[default]
    Berkowitz,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Csanky, Algorithm::Berkowitz, Algorithm::Oracle];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Csanky => "csanky",
            Algorithm::Berkowitz => "berkowitz",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Algorithm> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::parse(1, 1, format!("unknown algorithm `{s}`")))
    }
}

pub fn charpoly(a: &Matrix, alg: Algorithm) -> Result<CharPoly> {
    charpoly_with(a, alg, ProductMode::Sequential)
}

/// Like [`charpoly`] with an explicit product schedule. The oracle has no
/// product structure and ignores `mode`.
pub fn charpoly_with(a: &Matrix, alg: Algorithm, mode: ProductMode) -> Result<CharPoly> {
    match alg {
        Algorithm::Csanky => csanky_with(a, mode),
        Algorithm::Berkowitz => berkowitz_with(a, mode),
        Algorithm::Oracle => charpoly_oracle(a),
    }
}

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `det(A) = (-1)^n p(0)`.
pub fn determinant_from(p: &CharPoly) -> FieldElement {
    let field = p.poly.field();
    &field.from_integer(sign(p.n())) * &p.coeff(0)
}

/// `(-1)^(n+1) (A^(n-1) + p_(n-1) A^(n-2) + ... + p_1 I)`, evaluated by
/// Horner's rule on `p` with its constant term dropped.
pub fn adjoint_from(a: &Matrix, p: &CharPoly) -> Result<Matrix> {
    let n = a.require_square()?;
    let q = p.poly.shift_down(1);
    let horner = q.eval_matrix(a)?;
    horner.scale(&a.field().from_integer(sign(n + 1)))
}

pub fn determinant(a: &Matrix, alg: Algorithm) -> Result<FieldElement> {
    Ok(determinant_from(&charpoly(a, alg)?))
}

/// The adjugate: `A * adj(A) = adj(A) * A = det(A) I`.
pub fn adjoint(a: &Matrix, alg: Algorithm) -> Result<Matrix> {
    adjoint_from(a, &charpoly(a, alg)?)
}

/// `adj(A) / det(A)`; fails with `Singular` when the determinant vanishes.
pub fn inverse(a: &Matrix, alg: Algorithm) -> Result<Matrix> {
    let p = charpoly(a, alg)?;
    let det = determinant_from(&p);
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let adj = adjoint_from(a, &p)?;
    if det.is_one() {
        Ok(adj)
    } else {
        adj.scale(&det.inv()?)
    }
}
