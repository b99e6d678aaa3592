use std::fmt::Write as _;

use super::{serialize_matrix, Format, Outcome, EXIT_FAILURE};
use crate::charpoly::{charpoly, determinant, Algorithm};
use crate::elimination::rank;
use crate::error::Result;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::principles::{
    annihilating_poly, dependence_to_inverse_or_zero, inverse_or_zero_divisor, krylov_local_poly, pow_via_inverse,
    steinitz_exchange, Witness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessRequest {
    Annihilator,
    InvZero,
    /// Takes two matrices: the spanning set, then the independent set.
    Steinitz,
    Powers {
        terms: usize,
    },
    Krylov {
        index: usize,
    },
}

impl WitnessRequest {
    pub fn name(&self) -> &'static str {
        match self {
            WitnessRequest::Annihilator => "annihilator",
            WitnessRequest::InvZero => "invzero",
            WitnessRequest::Steinitz => "steinitz",
            WitnessRequest::Powers { .. } => "powers",
            WitnessRequest::Krylov { .. } => "krylov",
        }
    }

    fn arity(&self) -> usize {
        if matches!(self, WitnessRequest::Steinitz) {
            2
        } else {
            1
        }
    }
}

/// `sum c_i A^i` with powers by repeated multiplication; deliberately not
/// Horner's rule, so it checks [`Poly::eval_matrix`] rather than reusing it.
fn eval_by_powers(p: &Poly, a: &Matrix) -> Result<Matrix> {
    let field = a.field();
    let mut acc = Matrix::zeros(field, a.rows(), a.cols());
    for (i, c) in p.coeffs().iter().enumerate() {
        acc = acc.add(&a.power(i)?.scale(c)?)?;
    }
    Ok(acc)
}

enum Checked {
    Verified(String),
    Refuted(String),
}

fn check(ok: bool, verified: &str, refuted: &str) -> Checked {
    if ok {
        Checked::Verified(verified.into())
    } else {
        Checked::Refuted(refuted.into())
    }
}

fn run(req: WitnessRequest, inputs: &[Matrix], fmt: Format, out: &mut String) -> Result<Checked> {
    let a = &inputs[0];
    match req {
        WitnessRequest::Annihilator => {
            let p = annihilating_poly(a)?;
            let _ = writeln!(out, "AnnihilatingPoly\n{p}");
            let kills = eval_by_powers(&p, a)?.is_zero();
            let divides = charpoly(a, Algorithm::Berkowitz)?.poly().divisible_by(&p)?;
            Ok(check(kills && divides, "p(A) = 0 verified", "p(A) != 0 or p does not divide the charpoly"))
        }
        WitnessRequest::InvZero => {
            let w = inverse_or_zero_divisor(a)?;
            let other = dependence_to_inverse_or_zero(a)?;
            let det_zero = determinant(a, Algorithm::Berkowitz)?.is_zero();
            let b = w.matrix().expect("matrix witness");
            let _ = write!(out, "{}\nB =\n{}", w.kind(), serialize_matrix(b, fmt));
            let agrees = other.kind() == w.kind();
            Ok(match &w {
                Witness::Inverse(b) => {
                    let two_sided = a.mul(b)?.is_identity() && b.mul(a)?.is_identity();
                    check(two_sided && agrees && !det_zero, "A*B = B*A = I verified", "inverse check failed")
                }
                _ => {
                    let kills = !b.is_zero() && a.mul(b)?.is_zero();
                    check(kills && agrees && det_zero, "A*B = 0 verified", "zero-divisor check failed")
                }
            })
        }
        WitnessRequest::Steinitz => {
            let (t, e) = (&inputs[0], &inputs[1]);
            let x = steinitz_exchange(t, e)?;
            let removed: Vec<String> = x.removed.iter().map(usize::to_string).collect();
            let _ = write!(
                out,
                "ExchangeSet\nremoved: [{}]\nT' =\n{}",
                removed.join(", "),
                serialize_matrix(&x.exchanged, fmt)
            );
            let sized = x.removed.len() == e.cols() && x.exchanged.cols() == t.cols();
            let total = rank(&x.exchanged) == t.rows();
            Ok(check(sized && total, "T' spans the space verified", "exchanged set is not total"))
        }
        WitnessRequest::Powers { terms } => {
            let Witness::PowerList(list) = pow_via_inverse(a, terms)? else {
                unreachable!("pow_via_inverse returns a power list")
            };
            let _ = writeln!(out, "PowerList");
            let mut matches = true;
            let mut expected = Matrix::identity(a.field(), a.rows());
            for (i, p) in list.iter().enumerate() {
                let _ = write!(out, "A^{i} =\n{}", serialize_matrix(p, fmt));
                matches &= p == &expected;
                expected = expected.mul(a)?;
            }
            Ok(check(matches, "powers match repeated multiplication verified", "power list mismatch"))
        }
        WitnessRequest::Krylov { index } => {
            let r = krylov_local_poly(a, index)?;
            let _ = write!(out, "k={}, g={}\nbasis =\n{}", r.k, r.g, serialize_matrix(&r.basis, fmt));
            let e = Matrix::unit_vector(a.field(), a.rows(), index)?;
            let kills = eval_by_powers(&r.g, a)?.mul(&e)?.is_zero();
            let independent = rank(&r.basis) == r.k;
            Ok(check(kills && independent, &format!("g(A) e_{index} = 0 verified"), "Krylov check failed"))
        }
    }
}

/// Prints a witness followed by an independent check of it. A witness that
/// fails its own check exits with [`EXIT_FAILURE`] and no success line.
pub fn cmd_witness(req: WitnessRequest, inputs: &[Matrix], fmt: Format) -> Outcome {
    if inputs.len() != req.arity() {
        return Outcome::usage(format!("{} expects {} matrices, got {}", req.name(), req.arity(), inputs.len()));
    }
    if req == (WitnessRequest::Powers { terms: 0 }) {
        return Outcome::usage("powers needs at least one term");
    }
    let mut out = String::new();
    match run(req, inputs, fmt, &mut out) {
        Ok(Checked::Verified(line)) => {
            out.push_str(&line);
            out.push('\n');
            Outcome::ok(out)
        }
        Ok(Checked::Refuted(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: witness failed its own check: {msg}\n"),
            code: EXIT_FAILURE,
        },
        Err(e) => Outcome::usage(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::EXIT_USAGE;
    use crate::field::Field;

    const Q: Field = Field::Rationals;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(Q, rows).unwrap()
    }

    #[test]
    fn invzero_on_zero_matrix() {
        let out = cmd_witness(WitnessRequest::InvZero, &[Matrix::zeros(Q, 2, 2)], Format::Plain);
        assert_eq!(out.stdout, "ZeroDivisor\nB =\n2 2\n1 0\n0 1\nA*B = 0 verified\n");
    }

    #[test]
    fn invzero_on_invertible() {
        let out = cmd_witness(WitnessRequest::InvZero, &[m(&[&[2, 1], &[1, 1]])], Format::Plain);
        assert_eq!(out.stdout, "Inverse\nB =\n2 2\n1 -1\n-1 2\nA*B = B*A = I verified\n");
    }

    #[test]
    fn annihilator_diag() {
        let out = cmd_witness(WitnessRequest::Annihilator, &[m(&[&[1, 0], &[0, 2]])], Format::Plain);
        assert_eq!(out.stdout, "AnnihilatingPoly\n[2, -3, 1]\np(A) = 0 verified\n");
    }

    #[test]
    fn krylov_shift() {
        let out = cmd_witness(WitnessRequest::Krylov { index: 2 }, &[m(&[&[0, 1], &[0, 0]])], Format::Plain);
        assert!(out.stdout.starts_with("k=2, g=[0, 0, 1]\n"), "{}", out.stdout);
        assert!(out.stdout.ends_with("g(A) e_2 = 0 verified\n"));
        let bad = cmd_witness(WitnessRequest::Krylov { index: 3 }, &[m(&[&[0, 1], &[0, 0]])], Format::Plain);
        assert_eq!(bad.code, EXIT_USAGE);
        assert!(bad.stderr.contains("BadIndex"));
    }

    #[test]
    fn steinitz_and_powers() {
        let out = cmd_witness(WitnessRequest::Steinitz, &[Matrix::identity(Q, 2), m(&[&[1], &[1]])], Format::Plain);
        assert_eq!(out.stdout, "ExchangeSet\nremoved: [1]\nT' =\n2 2\n0 1\n1 1\nT' spans the space verified\n");
        let out = cmd_witness(WitnessRequest::Powers { terms: 3 }, &[m(&[&[2]])], Format::Plain);
        assert_eq!(
            out.stdout,
            "PowerList\nA^0 =\n1 1\n1\nA^1 =\n1 1\n2\nA^2 =\n1 1\n4\npowers match repeated multiplication verified\n"
        );
    }

    #[test]
    fn arity_is_checked() {
        let out = cmd_witness(WitnessRequest::Steinitz, &[Matrix::identity(Q, 2)], Format::Plain);
        assert_eq!(out.code, EXIT_USAGE);
    }
}
