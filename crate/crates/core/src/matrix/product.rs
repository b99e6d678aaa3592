//! Iterated products in sequential or balanced-tree order.
//!
//! Exact arithmetic makes association order irrelevant to the result, so
//! every mode returns bit-identical matrices; only the work schedule
//! changes.

use rayon::prelude::*;

use super::Matrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ProductMode {
    /// Right-to-left fold; the last factor is typically a vector, so each
    /// step is a matrix-vector product.
    #[default]
    Sequential,
    /// Balanced binary tree, evaluated on the calling thread.
    BalancedTree,
    /// Balanced binary tree with independent subtrees run on the rayon pool.
    ParallelTree,
}

impl ProductMode {
    pub fn name(&self) -> &'static str {
        match self {
            ProductMode::Sequential => "sequential",
            ProductMode::BalancedTree => "tree",
            ProductMode::ParallelTree => "parallel-tree",
        }
    }

    pub fn is_parallel(&self) -> bool {
        matches!(self, ProductMode::ParallelTree)
    }

    pub(crate) fn join<A, B, FA, FB>(self, fa: FA, fb: FB) -> (A, B)
    where
        FA: FnOnce() -> A + Send,
        FB: FnOnce() -> B + Send,
        A: Send,
        B: Send,
    {
        if self.is_parallel() {
            rayon::join(fa, fb)
        } else {
            (fa(), fb())
        }
    }

    pub(crate) fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        if self.is_parallel() {
            items.into_par_iter().map(f).collect()
        } else {
            items.into_iter().map(f).collect()
        }
    }
}

/// `mats[0] * mats[1] * ... * mats[last]`.
pub fn chain_product(mats: &[Matrix], mode: ProductMode) -> Result<Matrix> {
    match mats {
        [] => Err(Error::ZeroDimension),
        [only] => Ok(only.clone()),
        _ if mode == ProductMode::Sequential => {
            let (last, rest) = mats.split_last().expect("non-empty");
            rest.iter().rev().try_fold(last.clone(), |acc, m| m.mul(&acc))
        }
        _ => {
            let mid = mats.len() / 2;
            let (left, right) = mode.join(|| chain_product(&mats[..mid], mode), || chain_product(&mats[mid..], mode));
            left?.mul(&right?)
        }
    }
}

/// All prefix products `[m0, m0 m1, m0 m1 m2, ...]`.
pub fn prefix_products(mats: &[Matrix], mode: ProductMode) -> Result<Vec<Matrix>> {
    if mode == ProductMode::Sequential || mats.len() <= 1 {
        let mut out: Vec<Matrix> = Vec::with_capacity(mats.len());
        for m in mats {
            let next = match out.last() {
                Some(prev) => prev.mul(m)?,
                None => m.clone(),
            };
            out.push(next);
        }
        return Ok(out);
    }
    let mid = mats.len() / 2;
    let (left, right) = mode.join(|| prefix_products(&mats[..mid], mode), || prefix_products(&mats[mid..], mode));
    let mut left = left?;
    let carry = left.last().expect("non-empty half").clone();
    let shifted: Vec<Result<Matrix>> = mode.map(right?, |r| carry.mul(&r));
    for r in shifted {
        left.push(r?);
    }
    Ok(left)
}

/// `[A, A^2, ..., A^k]`.
pub fn power_sequence(a: &Matrix, k: usize, mode: ProductMode) -> Result<Vec<Matrix>> {
    a.require_square()?;
    prefix_products(&vec![a.clone(); k], mode)
}
