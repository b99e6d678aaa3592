use std::fmt::Write as _;
use std::time::Instant;

use super::{Outcome, RunConfig};
use crate::charpoly::{charpoly_with, Algorithm, CharPoly, ORACLE_LIMIT};
use crate::corpus::Corpus;
use crate::error::Error;
use crate::field::count_ops;
use crate::matrix::ProductMode;

/// `4, 8, 16, ...` up to `max_dim`, or just `max_dim` when it is below 4.
pub fn default_sizes(max_dim: usize) -> Vec<usize> {
    let sizes: Vec<usize> = std::iter::successors(Some(4), |n| Some(n * 2)).take_while(|&n| n <= max_dim).collect();
    if sizes.is_empty() {
        vec![max_dim]
    } else {
        sizes
    }
}

fn modes(cfg: &RunConfig) -> Vec<ProductMode> {
    let mut modes = vec![ProductMode::Sequential, ProductMode::BalancedTree];
    if cfg.parallel {
        modes.push(ProductMode::ParallelTree);
    }
    modes
}

/// CSV timing table `algorithm,n,mode,wall_time_us,scalar_ops`.
///
/// Every mode of an algorithm must return the same polynomial, and all
/// algorithms must agree with each other; any difference exits with
/// status 1. Scalar operation counts are taken on the calling thread, so
/// the parallel row reports the count of the identical balanced-tree
/// schedule.
pub fn cmd_bench(cfg: &RunConfig, sizes: &[usize]) -> Outcome {
    if let Err(msg) = cfg.validate() {
        return Outcome::usage(msg);
    }
    if sizes.is_empty() || sizes.contains(&0) {
        return Outcome::usage("sizes must be positive");
    }
    let mut out = String::from("algorithm,n,mode,wall_time_us,scalar_ops\n");
    for &n in sizes {
        let a = Corpus::new(cfg.field, cfg.seed, n as u64).square(n);
        let mut reference: Option<(Algorithm, CharPoly)> = None;
        for alg in cfg.algorithm.algorithms() {
            let obstruction = match alg {
                Algorithm::Oracle if n > ORACLE_LIMIT => Some(Error::TooLarge { n, limit: ORACLE_LIMIT }),
                _ => cfg.csanky_obstruction(alg, n),
            };
            if let Some(e) = obstruction {
                let name = e.to_string().split(':').next().unwrap_or_default().to_string();
                let _ = writeln!(out, "{alg},{n},-,skipped: {name},");
                continue;
            }
            let alg_modes = if alg == Algorithm::Oracle { vec![ProductMode::Sequential] } else { modes(cfg) };
            let mut tree_ops = 0;
            for mode in alg_modes {
                let start = Instant::now();
                let (result, ops) = count_ops(|| charpoly_with(&a, alg, mode));
                let micros = start.elapsed().as_micros();
                let p = match result {
                    Ok(p) => p,
                    Err(e) => return Outcome::failure(out, format!("error: {alg} n={n} {}: {e}\n", mode.name())),
                };
                let ops = match mode {
                    ProductMode::BalancedTree => {
                        tree_ops = ops.total();
                        tree_ops
                    }
                    ProductMode::ParallelTree => tree_ops,
                    ProductMode::Sequential => ops.total(),
                };
                let _ = writeln!(out, "{alg},{n},{},{micros},{ops}", mode.name());
                match &reference {
                    Some((first, q)) if q != &p => {
                        let msg = format!(
                            "error: results differ at n={n}: {first} gave {q}, {alg} ({}) gave {p}\n",
                            mode.name()
                        );
                        return Outcome::failure(out, msg);
                    }
                    Some(_) => {}
                    None => reference = Some((alg, p)),
                }
            }
        }
    }
    Outcome::ok(out)
}
