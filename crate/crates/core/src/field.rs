//! Exact scalar arithmetic over the rationals and prime fields GF(p).
//!
//! A [`Field`] is a small copyable descriptor; a [`FieldElement`] carries
//! enough of its field (the modulus, for residues) to do arithmetic on its
//! own. Elements are always stored in canonical form, so derived equality is
//! semantic equality:
//!
//! * rationals are reduced fractions with a positive denominator
//!   (guaranteed by [`num_rational::BigRational`]);
//! * residues lie in `0..p`.
//!
//! Mixing elements of different fields in one operation is a programming
//! error and panics; the matrix and polynomial layers check fields up front
//! and report [`Error::FieldMismatch`] instead.

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Identifies the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// GF(p). Construct through [`Field::prime`] so the modulus is checked.
    Prime(u64),
}

/// Alias kept for readers coming from the textual interface, which talks
/// about field descriptors.
pub type FieldDescriptor = Field;

impl Field {
    /// GF(p), after a deterministic primality check.
    pub fn prime(p: u64) -> Result<Field> {
        if primal_check::miller_rabin(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// 0 for the rationals, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match *self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_integer(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_integer(1)
    }

    /// Image of `k` under the canonical ring map Z -> F.
    pub fn from_integer(&self, k: i64) -> FieldElement {
        match *self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(BigInt::from(k))),
            Field::Prime(p) => FieldElement::Residue { value: (k as i128).rem_euclid(p as i128) as u64, modulus: p },
        }
    }

    pub fn from_bigint(&self, k: &BigInt) -> FieldElement {
        match *self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(k.clone())),
            Field::Prime(p) => FieldElement::Residue {
                value: k.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64"),
                modulus: p,
            },
        }
    }

    /// Multiplicative inverse; fails only on zero.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        debug_assert!(self.contains(a));
        a.inv()
    }

    /// True when `a` belongs to this field.
    pub fn contains(&self, a: &FieldElement) -> bool {
        a.field() == *self
    }

    /// Parses a field-element literal: an integer or `num/den`.
    ///
    /// Over GF(p) integers are reduced and `a/b` means `a * b^-1`.
    pub fn parse_element(&self, text: &str) -> std::result::Result<FieldElement, String> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (parse_int(n)?, Some(parse_int(d)?)),
            None => (parse_int(text)?, None),
        };
        let num = self.from_bigint(&num);
        match den {
            None => Ok(num),
            Some(d) => {
                let d = self.from_bigint(&d);
                let d_inv = d.inv().map_err(|_| format!("zero denominator in `{text}`"))?;
                Ok(&num * &d_inv)
            }
        }
    }
}

fn parse_int(s: &str) -> std::result::Result<BigInt, String> {
    let s = s.trim();
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not an integer literal"));
    }
    BigInt::from_str(s).map_err(|e| format!("`{s}`: {e}"))
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`/`q` and `GF(p)`/`gf:p`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        let lower = s.to_ascii_lowercase();
        let modulus = lower.strip_prefix("gf:").or_else(|| lower.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')));
        match modulus.map(|m| m.trim().parse::<u64>()) {
            Some(Ok(p)) => Field::prime(p),
            _ => Err(Error::parse(1, 1, format!("unknown field `{s}`"))),
        }
    }
}

/// Scalar operation tally for the current thread.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub additions: u64,
    pub multiplications: u64,
    pub inversions: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.additions + self.multiplications + self.inversions
    }
}

impl std::ops::Sub for OpCounts {
    type Output = OpCounts;
    fn sub(self, rhs: OpCounts) -> OpCounts {
        OpCounts {
            additions: self.additions - rhs.additions,
            multiplications: self.multiplications - rhs.multiplications,
            inversions: self.inversions - rhs.inversions,
        }
    }
}

thread_local! {
    static COUNTS: Cell<OpCounts> = const { Cell::new(OpCounts { additions: 0, multiplications: 0, inversions: 0 }) };
}

fn bump(f: impl FnOnce(&mut OpCounts)) {
    COUNTS.with(|c| {
        let mut v = c.get();
        f(&mut v);
        c.set(v);
    });
}

/// Current thread's running tally. Work done on other threads (e.g. rayon
/// workers) is not included.
pub fn op_counts() -> OpCounts {
    COUNTS.with(|c| c.get())
}

/// Runs `f` and returns its result with the scalar operations it performed
/// on this thread.
pub fn count_ops<T>(f: impl FnOnce() -> T) -> (T, OpCounts) {
    let before = op_counts();
    let out = f();
    (out, op_counts() - before)
}

/// An element of a [`Field`] in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit values
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i128) as u64
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        bump(|c| c.inversions += 1);
        Ok(match self {
            FieldElement::Rational(r) => FieldElement::Rational(r.recip()),
            FieldElement::Residue { value, modulus } => {
                FieldElement::Residue { value: mod_inverse(*value, *modulus), modulus: *modulus }
            }
        })
    }

    /// `self / rhs`, costing one inversion.
    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inv()?)
    }

    /// True only for negative rationals.
    pub fn is_negative(&self) -> bool {
        matches!(self, FieldElement::Rational(r) if r.is_negative())
    }

    /// The numerator/denominator pair for rationals; `None` for residues.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            FieldElement::Residue { .. } => None,
        }
    }
}

#[track_caller]
fn mismatch(a: &FieldElement, b: &FieldElement) -> ! {
    panic!("mixed-field arithmetic: {} and {}", a.field(), b.field())
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        bump(|c| c.additions += 1);
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Residue { value: a, modulus: p }, FieldElement::Residue { value: b, modulus: q })
                if p == q =>
            {
                FieldElement::Residue { value: ((*a as u128 + *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        bump(|c| c.additions += 1);
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a - b),
            (FieldElement::Residue { value: a, modulus: p }, FieldElement::Residue { value: b, modulus: q })
                if p == q =>
            {
                FieldElement::Residue { value: ((*a as u128 + (*p - *b) as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        bump(|c| c.multiplications += 1);
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Residue { value: a, modulus: p }, FieldElement::Residue { value: b, modulus: q })
                if p == q =>
            {
                FieldElement::Residue { value: ((*a as u128 * *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Residue { value, modulus } => {
                FieldElement::Residue { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    /// `num/den`, or a bare integer when the denominator is 1; residues as
    /// decimal integers in `0..p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            FieldElement::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            FieldElement::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}
