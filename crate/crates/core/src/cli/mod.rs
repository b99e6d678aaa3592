//! The command surface behind the `charpoly` binary.
//!
//! Each command is a plain function returning an [`Outcome`] (captured
//! stdout, stderr and exit code), so the binary stays a thin argument parser
//! and the commands can be tested without spawning processes.
//!
//! Exit codes: [`EXIT_OK`] on success, [`EXIT_FAILURE`] when a checked
//! identity fails, [`EXIT_USAGE`] on bad input or a violated precondition.

mod bench;
mod compute;
mod format;
mod verify;
mod witness;

pub use bench::{cmd_bench, default_sizes};
pub use compute::{cmd_compute, Quantity};
pub use format::{parse_matrices, parse_matrix, serialize_matrix, Format};
pub use verify::{cmd_verify, cmd_verify_with, CharPolyProvider};
pub use witness::{cmd_witness, WitnessRequest};

use std::fmt;
use std::str::FromStr;

use crate::charpoly::Algorithm;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::ProductMode;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// One algorithm, or all three side by side.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AlgorithmChoice {
    One(Algorithm),
    #[default]
    All,
}

impl AlgorithmChoice {
    pub fn algorithms(&self) -> Vec<Algorithm> {
        match self {
            AlgorithmChoice::One(a) => vec![*a],
            AlgorithmChoice::All => Algorithm::ALL.to_vec(),
        }
    }
}

impl FromStr for AlgorithmChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<AlgorithmChoice> {
        if s.trim().eq_ignore_ascii_case("all") {
            Ok(AlgorithmChoice::All)
        } else {
            s.parse().map(AlgorithmChoice::One)
        }
    }
}

impl fmt::Display for AlgorithmChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgorithmChoice::One(a) => a.fmt(f),
            AlgorithmChoice::All => f.write_str("all"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub field: Field,
    pub algorithm: AlgorithmChoice,
    pub seed: u64,
    pub count: usize,
    pub max_dim: usize,
    pub parallel: bool,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            field: Field::Rationals,
            algorithm: AlgorithmChoice::All,
            seed: 1,
            count: 50,
            max_dim: 5,
            parallel: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.count == 0 {
            return Err("count must be at least 1".into());
        }
        if self.max_dim == 0 {
            return Err("max-dim must be at least 1".into());
        }
        Ok(())
    }

    pub fn mode(&self) -> ProductMode {
        if self.parallel {
            ProductMode::ParallelTree
        } else {
            ProductMode::Sequential
        }
    }

    /// Why `alg` cannot run on inputs up to `max_dim` over this field.
    pub(crate) fn csanky_obstruction(&self, alg: Algorithm, n: usize) -> Option<Error> {
        let characteristic = self.field.characteristic();
        (alg == Algorithm::Csanky && characteristic != 0 && characteristic as usize <= n)
            .then_some(Error::CharacteristicTooSmall { characteristic, n })
    }
}

/// Captured result of a command.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(stdout: String) -> Outcome {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    pub fn usage(err: impl fmt::Display) -> Outcome {
        Outcome { stdout: String::new(), stderr: format!("error: {err}\n"), code: EXIT_USAGE }
    }

    pub fn failure(stdout: String, stderr: String) -> Outcome {
        Outcome { stdout, stderr, code: EXIT_FAILURE }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_choice_parses() {
        assert_eq!("all".parse::<AlgorithmChoice>().unwrap(), AlgorithmChoice::All);
        assert_eq!("csanky".parse::<AlgorithmChoice>().unwrap(), AlgorithmChoice::One(Algorithm::Csanky));
        assert!("gauss".parse::<AlgorithmChoice>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(RunConfig::default().validate().is_ok());
        assert!(RunConfig { count: 0, ..RunConfig::default() }.validate().is_err());
        assert!(RunConfig { max_dim: 0, ..RunConfig::default() }.validate().is_err());
    }

    #[test]
    fn csanky_obstruction_only_for_small_characteristic() {
        let gf2 = RunConfig { field: Field::Prime(2), ..RunConfig::default() };
        assert!(gf2.csanky_obstruction(Algorithm::Csanky, 2).is_some());
        assert!(gf2.csanky_obstruction(Algorithm::Csanky, 1).is_none());
        assert!(gf2.csanky_obstruction(Algorithm::Berkowitz, 5).is_none());
        assert!(RunConfig::default().csanky_obstruction(Algorithm::Csanky, 100).is_none());
    }
}
