use std::fmt::Write as _;

use super::{Outcome, RunConfig};
use crate::charpoly::{berkowitz, charpoly_oracle, charpoly_with, determinant_from, Algorithm, CharPoly, ORACLE_LIMIT};
use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::identities::companion_tail_sum;
use crate::matrix::{Matrix, ProductMode};
use crate::poly::Poly;
use crate::principles::krylov_local_poly;

/// Source of characteristic polynomials for the checks. The default is the
/// library itself; tests substitute deliberately broken providers to
/// exercise the failure path.
pub type CharPolyProvider<'a> = dyn Fn(&Matrix, Algorithm, ProductMode) -> Result<CharPoly> + Sync + 'a;

enum Case {
    Skip(String),
    Fail { detail: String, inputs: Vec<(&'static str, Matrix)> },
}

type Check = std::result::Result<(), Case>;

struct Ctx<'a> {
    cfg: &'a RunConfig,
    provider: &'a CharPolyProvider<'a>,
}

fn error_name(e: &Error) -> String {
    e.to_string().split(':').next().unwrap_or_default().to_string()
}

fn fail(detail: impl Into<String>, inputs: &[(&'static str, &Matrix)]) -> Case {
    Case::Fail { detail: detail.into(), inputs: inputs.iter().map(|(name, m)| (*name, (*m).clone())).collect() }
}

impl Ctx<'_> {
    fn charpoly(
        &self,
        a: &Matrix,
        alg: Algorithm,
        inputs: &[(&'static str, &Matrix)],
    ) -> std::result::Result<Poly, Case> {
        match (self.provider)(a, alg, self.cfg.mode()) {
            Ok(p) => Ok(p.into_poly()),
            Err(e @ (Error::TooLarge { .. } | Error::CharacteristicTooSmall { .. })) => Err(Case::Skip(error_name(&e))),
            Err(e) => Err(fail(e.to_string(), inputs)),
        }
    }

    fn dim(&self, corpus: &mut Corpus) -> usize {
        corpus.dim(1, self.cfg.max_dim)
    }
}

fn lift<T>(r: Result<T>, inputs: &[(&'static str, &Matrix)]) -> std::result::Result<T, Case> {
    r.map_err(|e| fail(e.to_string(), inputs))
}

fn agreement(c: &mut Corpus, ctx: &Ctx<'_>, alg: Algorithm) -> Check {
    let n = ctx.dim(c);
    let a = c.square(n);
    let inputs = [("A", &a)];
    let reference = if alg != Algorithm::Oracle && n <= ORACLE_LIMIT { charpoly_oracle(&a) } else { berkowitz(&a) };
    let reference = lift(reference, &inputs)?.into_poly();
    let p = ctx.charpoly(&a, alg, &inputs)?;
    if p != reference {
        return Err(fail(format!("{alg} gave {p}, reference gave {reference}"), &inputs));
    }
    Ok(())
}

fn cayley_hamilton(c: &mut Corpus, ctx: &Ctx<'_>, alg: Algorithm) -> Check {
    let n = ctx.dim(c);
    let a = c.square(n);
    let inputs = [("A", &a)];
    let p = ctx.charpoly(&a, alg, &inputs)?;
    if !lift(p.eval_matrix(&a), &inputs)?.is_zero() {
        return Err(fail(format!("p(A) != 0 for p = {p}"), &inputs));
    }
    Ok(())
}

fn similarity(c: &mut Corpus, ctx: &Ctx<'_>, alg: Algorithm) -> Check {
    let n = ctx.dim(c);
    let a = c.square(n);
    let (p, p_inv) = c.invertible_pair(n, 2 * n);
    let b = lift(p.mul(&a).and_then(|pa| pa.mul(&p_inv)), &[("A", &a), ("P", &p)])?;
    let inputs = [("A", &a), ("P", &p)];
    let (pa, pb) = (ctx.charpoly(&a, alg, &inputs)?, ctx.charpoly(&b, alg, &inputs)?);
    if pa != pb {
        return Err(fail(format!("charpoly(A) = {pa} but charpoly(P A P^-1) = {pb}"), &inputs));
    }
    Ok(())
}

fn block_factorization(c: &mut Corpus, ctx: &Ctx<'_>, alg: Algorithm) -> Check {
    let j = c.dim(1, ctx.cfg.max_dim - 1);
    let k = c.dim(1, ctx.cfg.max_dim - j);
    let (b, d, cc) = (c.square(j), c.square(k), c.matrix(k, j));
    let zero = Matrix::zeros(c.field(), j, k);
    let inputs = [("B", &b), ("C", &cc), ("D", &d)];
    let m = lift(Matrix::block2x2(&b, &zero, &cc, &d), &inputs)?;
    let pm = ctx.charpoly(&m, alg, &inputs)?;
    let product = lift(ctx.charpoly(&b, alg, &inputs)?.mul(&ctx.charpoly(&d, alg, &inputs)?), &inputs)?;
    if pm != product {
        return Err(fail(format!("charpoly of block matrix {pm} != product {product}"), &inputs));
    }
    Ok(())
}

fn krylov_divisibility(c: &mut Corpus, ctx: &Ctx<'_>, alg: Algorithm) -> Check {
    let n = ctx.dim(c);
    let a = c.square(n);
    let inputs = [("A", &a)];
    let p = ctx.charpoly(&a, alg, &inputs)?;
    for i in 1..=n {
        let g = lift(krylov_local_poly(&a, i), &inputs)?.g;
        if !lift(p.divisible_by(&g), &inputs)? {
            return Err(fail(format!("local polynomial {g} of e_{i} does not divide {p}"), &inputs));
        }
    }
    Ok(())
}

fn det_multiplicativity(c: &mut Corpus, ctx: &Ctx<'_>, alg: Algorithm) -> Check {
    let n = ctx.dim(c);
    let (a, b) = (c.square(n), c.square(n));
    let inputs = [("A", &a), ("B", &b)];
    let ab = lift(a.mul(&b), &inputs)?;
    let det = |m: &Matrix| -> std::result::Result<_, Case> {
        let p = ctx.charpoly(m, alg, &inputs)?;
        Ok(determinant_from(&CharPoly::from_monic(p).ok_or_else(|| fail("charpoly is not monic", &inputs))?))
    };
    let (dab, da, db) = (det(&ab)?, det(&a)?, det(&b)?);
    if dab != &da * &db {
        return Err(fail(format!("det(AB) = {dab} but det(A) det(B) = {}", &da * &db), &inputs));
    }
    Ok(())
}

fn companion(c: &mut Corpus, ctx: &Ctx<'_>, alg: Algorithm) -> Check {
    let k = ctx.dim(c);
    let spec = c.companion_spec(k);
    let a = Matrix::companion(&spec);
    let inputs = [("A", &a)];
    let mut coeffs: Vec<_> = spec.coeffs().iter().rev().cloned().collect();
    coeffs.push(c.field().one());
    let g = Poly::new(c.field(), coeffs);
    let p = ctx.charpoly(&a, alg, &inputs)?;
    if p != g {
        return Err(fail(format!("companion of {g} has charpoly {p}"), &inputs));
    }
    Ok(())
}

fn companion_tail(c: &mut Corpus, ctx: &Ctx<'_>, _: Algorithm) -> Check {
    let k = c.dim(2, ctx.cfg.max_dim.max(2));
    let spec = c.companion_spec(k);
    let a = Matrix::companion(&spec);
    let inputs = [("A", &a)];
    let sum = lift(companion_tail_sum(&spec), &inputs)?;
    let expected = lift(Matrix::identity(c.field(), k - 1).scale(&-&spec.coeffs()[k - 1]), &inputs)?;
    if sum != expected {
        return Err(fail("tail sum of the companion matrix is not -c_k I", &inputs));
    }
    Ok(())
}

type PropertyFn = fn(&mut Corpus, &Ctx<'_>, Algorithm) -> Check;

struct Property {
    stream: u64,
    name: &'static str,
    per_algorithm: bool,
    min_dim: usize,
    run: PropertyFn,
}

/// Stream numbers are fixed per property, so adding one never shifts the
/// draws of the others.
const PROPERTIES: [Property; 8] = [
    Property { stream: 0, name: "agreement", per_algorithm: true, min_dim: 1, run: agreement },
    Property { stream: 1, name: "cayley-hamilton", per_algorithm: true, min_dim: 1, run: cayley_hamilton },
    Property { stream: 2, name: "similarity", per_algorithm: true, min_dim: 1, run: similarity },
    Property { stream: 3, name: "block-factorization", per_algorithm: true, min_dim: 2, run: block_factorization },
    Property { stream: 4, name: "krylov-divisibility", per_algorithm: true, min_dim: 1, run: krylov_divisibility },
    Property { stream: 5, name: "det-multiplicativity", per_algorithm: true, min_dim: 1, run: det_multiplicativity },
    Property { stream: 6, name: "companion", per_algorithm: true, min_dim: 1, run: companion },
    Property { stream: 7, name: "companion-tail-sum", per_algorithm: false, min_dim: 1, run: companion_tail },
];

struct Tally {
    passed: usize,
    failed: usize,
    skipped: usize,
}

/// Runs the property corpus against the library's own algorithms.
pub fn cmd_verify(cfg: &RunConfig) -> Outcome {
    cmd_verify_with(cfg, &charpoly_with)
}

/// Runs the property corpus with characteristic polynomials taken from
/// `provider`. The report contains no timings, so a fixed seed gives
/// byte-identical output.
pub fn cmd_verify_with(cfg: &RunConfig, provider: &CharPolyProvider<'_>) -> Outcome {
    if let Err(msg) = cfg.validate() {
        return Outcome::usage(msg);
    }
    let ctx = Ctx { cfg, provider };
    let mut out = String::new();
    let mut dumps = String::new();
    let mut tally = Tally { passed: 0, failed: 0, skipped: 0 };
    let _ = writeln!(
        out,
        "verify field={} alg={} seed={} count={} max_dim={} mode={}",
        cfg.field,
        cfg.algorithm,
        cfg.seed,
        cfg.count,
        cfg.max_dim,
        cfg.mode().name()
    );
    for prop in &PROPERTIES {
        let algorithms = if prop.per_algorithm { cfg.algorithm.algorithms() } else { vec![Algorithm::Berkowitz] };
        for alg in algorithms {
            let label = if prop.per_algorithm { format!("{}/{alg}", prop.name) } else { prop.name.to_string() };
            if cfg.max_dim < prop.min_dim {
                let _ = writeln!(out, "SKIPPED {label} (needs max-dim >= {})", prop.min_dim);
                tally.skipped += 1;
                continue;
            }
            if let Some(e) = cfg.csanky_obstruction(alg, cfg.max_dim).filter(|_| prop.per_algorithm) {
                let _ = writeln!(out, "SKIPPED {label} ({e})");
                tally.skipped += 1;
                continue;
            }
            let mut corpus = Corpus::new(cfg.field, cfg.seed, prop.stream);
            let (mut checked, mut skipped) = (0, 0);
            let mut skip_reason = String::new();
            let mut failure = None;
            for case in 1..=cfg.count {
                match (prop.run)(&mut corpus, &ctx, alg) {
                    Ok(()) => checked += 1,
                    Err(Case::Skip(reason)) => {
                        skipped += 1;
                        skip_reason = reason;
                    }
                    Err(Case::Fail { detail, inputs }) => {
                        failure = Some((case, detail, inputs));
                        break;
                    }
                }
            }
            match failure {
                Some((case, detail, inputs)) => {
                    tally.failed += 1;
                    let _ = writeln!(out, "FAIL {label} case {case}: {detail}");
                    let _ = writeln!(dumps, "counterexample {label} case {case}");
                    for (name, m) in inputs {
                        let _ = write!(dumps, "{name} =\n{}", m.to_plain());
                    }
                }
                None if checked == 0 => {
                    tally.skipped += 1;
                    let _ = writeln!(out, "SKIPPED {label} (all {skipped} cases: {skip_reason})");
                }
                None => {
                    tally.passed += 1;
                    if skipped == 0 {
                        let _ = writeln!(out, "PASS {label} ({checked} cases)");
                    } else {
                        let _ = writeln!(out, "PASS {label} ({checked} cases, {skipped} skipped: {skip_reason})");
                    }
                }
            }
        }
    }
    let _ = writeln!(out, "summary: {} passed, {} failed, {} skipped", tally.passed, tally.failed, tally.skipped);
    out.push_str(&dumps);
    if tally.failed > 0 {
        Outcome::failure(out, format!("error: {} properties failed\n", tally.failed))
    } else {
        Outcome::ok(out)
    }
}
