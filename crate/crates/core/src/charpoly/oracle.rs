use super::{CharPoly, Provenance};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::poly::Poly;

/// Largest size accepted by [`charpoly_oracle`]; expansion costs `n!`.
pub const ORACLE_LIMIT: usize = 8;

/// `det(xI - A)` by Laplace expansion along rows, with polynomial entries.
pub fn charpoly_oracle(a: &Matrix) -> Result<CharPoly> {
    let n = a.require_square()?;
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge { n, limit: ORACLE_LIMIT });
    }
    let field = a.field();
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let minus_a = Poly::constant(-a.at(r, c));
                    if r == c {
                        minus_a.add(&Poly::monomial(field.one(), 1)).expect("same field")
                    } else {
                        minus_a
                    }
                })
                .collect()
        })
        .collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let det = expand(field, &entries, 0, &mut cols)?;
    Ok(CharPoly::new(det, Provenance::Oracle))
}

fn expand(field: Field, entries: &[Vec<Poly>], row: usize, cols: &mut Vec<usize>) -> Result<Poly> {
    if cols.is_empty() {
        return Ok(Poly::one(field));
    }
    let mut acc = Poly::zero(field);
    for pos in 0..cols.len() {
        let c = cols.remove(pos);
        let entry = &entries[row][c];
        if !entry.is_zero() {
            let term = entry.mul(&expand(field, entries, row + 1, cols)?)?;
            acc = if pos % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
        }
        cols.insert(pos, c);
    }
    Ok(acc)
}
