use super::Witness;
use crate::elimination::{rank, solve};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Output of [`steinitz_exchange`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exchange {
    /// 1-based indices of the columns of `T` that were swapped out, ascending.
    pub removed: Vec<usize>,
    /// Surviving columns of `T` in their original order, followed by `E`.
    pub exchanged: Matrix,
}

impl From<Exchange> for Witness {
    fn from(x: Exchange) -> Witness {
        Witness::ExchangeSet { removed: x.removed, exchanged: x.exchanged }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Origin {
    Spanning(usize),
    Independent,
}

/// Swaps the independent columns of `e` into the spanning set `t`, one at a
/// time. Each new column is written over the current set and replaces the
/// lowest-indexed original column of `t` with a nonzero coefficient.
pub fn steinitz_exchange(t: &Matrix, e: &Matrix) -> Result<Exchange> {
    let n = t.rows();
    if e.rows() != n {
        return Err(Error::DimensionMismatch {
            op: "steinitz_exchange",
            left: format!("{}x{}", t.rows(), t.cols()),
            right: format!("{}x{}", e.rows(), e.cols()),
        });
    }
    let t_rank = rank(t);
    if t_rank != n {
        return Err(Error::NotTotal { rank: t_rank, n });
    }
    if rank(e) != e.cols() {
        return Err(Error::NotIndependent);
    }
    let mut current: Vec<(Origin, Matrix)> = (0..t.cols()).map(|c| (Origin::Spanning(c), t.column(c))).collect();
    for j in 0..e.cols() {
        let incoming = e.column(j);
        let columns: Vec<Matrix> = current.iter().map(|(_, col)| col.clone()).collect();
        let coeffs = solve(&Matrix::from_columns(t.field(), &columns)?, &incoming).expect("current set spans F^n");
        let slot = (0..current.len())
            .filter(|&s| matches!(current[s].0, Origin::Spanning(_)) && !coeffs.at(s, 0).is_zero())
            .min_by_key(|&s| match current[s].0 {
                Origin::Spanning(c) => c,
                Origin::Independent => usize::MAX,
            })
            .ok_or(Error::NotIndependent)?;
        current[slot] = (Origin::Independent, incoming);
    }
    let mut removed = Vec::new();
    let mut kept = Vec::new();
    for c in 0..t.cols() {
        if current.iter().any(|(o, _)| *o == Origin::Spanning(c)) {
            kept.push(t.column(c));
        } else {
            removed.push(c + 1);
        }
    }
    kept.extend((0..e.cols()).map(|j| e.column(j)));
    let exchanged = Matrix::from_columns(t.field(), &kept)?;
    let final_rank = rank(&exchanged);
    if final_rank != n {
        return Err(Error::NotTotal { rank: final_rank, n });
    }
    Ok(Exchange { removed, exchanged })
}
