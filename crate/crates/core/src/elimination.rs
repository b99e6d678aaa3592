//! Exact Gaussian elimination.
//!
//! Pivot rule: scan columns left to right and take the first row (at or
//! below the current pivot row) with a nonzero entry. Exact arithmetic needs
//! no pivoting for stability, and the fixed rule keeps every derived witness
//! reproducible.

use crate::field::FieldElement;
use crate::matrix::Matrix;

/// Reduced row echelon form plus the 0-based pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rref(a: &Matrix) -> Echelon {
    let (m, n) = (a.rows(), a.cols());
    let mut rows: Vec<Vec<FieldElement>> = (0..m).map(|r| (0..n).map(|c| a.at(r, c).clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..n {
        if top == m {
            break;
        }
        let Some(found) = (top..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, found);
        let inv = rows[top][col].inv().expect("pivot is nonzero");
        for x in rows[top].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&factor * p);
            }
        }
        pivots.push(col);
        top += 1;
    }
    let reduced = Matrix::generate(a.field(), m, n, |r, c| rows[r][c].clone());
    Echelon { reduced, pivots }
}

pub fn rank(a: &Matrix) -> usize {
    rref(a).rank()
}

/// A nonzero `x` with `a x = 0`, built from the first free column, or
/// `None` when the columns are independent.
pub fn kernel_vector(a: &Matrix) -> Option<Matrix> {
    let ech = rref(a);
    let field = a.field();
    let free = (0..a.cols()).find(|c| !ech.pivots.contains(c))?;
    let mut x = vec![field.zero(); a.cols()];
    x[free] = field.one();
    for (r, &p) in ech.pivots.iter().enumerate() {
        if p < free {
            x[p] = -ech.reduced.at(r, free);
        }
    }
    Some(Matrix::generate(field, a.cols(), 1, |r, _| x[r].clone()))
}

/// Some `x` with `a x = b` (free variables set to zero), if one exists.
pub fn solve(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    let augmented = a.hcat(b).ok()?;
    let ech = rref(&augmented);
    let n = a.cols();
    if ech.pivots.contains(&n) {
        return None;
    }
    let field = a.field();
    let mut x = vec![field.zero(); n];
    for (r, &p) in ech.pivots.iter().enumerate() {
        x[p] = ech.reduced.at(r, n).clone();
    }
    Some(Matrix::generate(field, n, 1, |r, _| x[r].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    const Q: Field = Field::Rationals;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(Q, rows).unwrap()
    }

    #[test]
    fn rref_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let e = rref(&a);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.reduced, m(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]));
        assert_eq!(rank(&Matrix::identity(Q, 4)), 4);
        assert_eq!(rank(&Matrix::zeros(Q, 2, 3)), 0);
    }

    #[test]
    fn kernel_vector_annihilates() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let x = kernel_vector(&a).unwrap();
        assert_eq!(x, m(&[&[-1], &[-1], &[1]]));
        assert!(a.mul(&x).unwrap().is_zero());
        assert!(kernel_vector(&Matrix::identity(Q, 2)).is_none());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[0, 0]]);
        assert_eq!(solve(&a, &m(&[&[3], &[0]])).unwrap(), m(&[&[3], &[0]]));
        assert!(solve(&a, &m(&[&[3], &[1]])).is_none());
    }

    #[test]
    fn gf2_rank() {
        let f = Field::Prime(2);
        let a = Matrix::from_ints(f, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
        assert_eq!(rank(&a), 2);
    }
}
