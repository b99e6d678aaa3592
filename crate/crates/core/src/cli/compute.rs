use std::fmt::Write as _;
use std::str::FromStr;

use super::{serialize_matrix, AlgorithmChoice, Format, Outcome, RunConfig};
use crate::charpoly::{adjoint_from, charpoly_with, determinant_from, Algorithm, CharPoly};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Charpoly,
    Det,
    Adj,
    Inv,
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Quantity> {
        match s.trim().to_ascii_lowercase().as_str() {
            "charpoly" => Ok(Quantity::Charpoly),
            "det" => Ok(Quantity::Det),
            "adj" => Ok(Quantity::Adj),
            "inv" => Ok(Quantity::Inv),
            _ => Err(Error::parse(1, 1, format!("unknown quantity `{s}`"))),
        }
    }
}

fn render(what: Quantity, a: &Matrix, p: &CharPoly, fmt: Format) -> Result<String> {
    Ok(match what {
        Quantity::Charpoly => format!("{p}\n"),
        Quantity::Det => format!("{}\n", determinant_from(p)),
        Quantity::Adj => serialize_matrix(&adjoint_from(a, p)?, fmt),
        Quantity::Inv => {
            let det = determinant_from(p);
            if det.is_zero() {
                return Err(Error::Singular);
            }
            serialize_matrix(&adjoint_from(a, p)?.scale(&det.inv()?)?, fmt)
        }
    })
}

/// Prints the requested quantity. With every algorithm selected, each one
/// that applies prints a labelled result and the results must agree.
pub fn cmd_compute(what: Quantity, a: &Matrix, cfg: &RunConfig, fmt: Format) -> Outcome {
    let mode = cfg.mode();
    match cfg.algorithm {
        AlgorithmChoice::One(alg) => match charpoly_with(a, alg, mode).and_then(|p| render(what, a, &p, fmt)) {
            Ok(text) => Outcome::ok(text),
            Err(e) => Outcome::usage(e),
        },
        AlgorithmChoice::All => {
            let mut out = String::new();
            let mut seen: Option<CharPoly> = None;
            for alg in Algorithm::ALL {
                let p = match charpoly_with(a, alg, mode) {
                    Ok(p) => p,
                    Err(e @ (Error::CharacteristicTooSmall { .. } | Error::TooLarge { .. })) => {
                        let _ = writeln!(out, "{alg}: skipped ({e})");
                        continue;
                    }
                    Err(e) => return Outcome::usage(e),
                };
                if let Some(prev) = &seen {
                    if prev != &p {
                        let msg = format!("error: algorithms disagree: {prev} vs {alg} {p}\n");
                        return Outcome::failure(out, msg);
                    }
                }
                match render(what, a, &p, fmt) {
                    Ok(text) if text.lines().count() == 1 => {
                        let _ = write!(out, "{alg}: {text}");
                    }
                    Ok(text) => {
                        let _ = write!(out, "{alg}:\n{text}");
                    }
                    Err(e) => return Outcome::usage(e),
                }
                seen = Some(p);
            }
            Outcome::ok(out)
        }
    }
}
