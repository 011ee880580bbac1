//! Exact field arithmetic over the rationals and over prime fields GF(p).
//!
//! Everything downstream (matrices, parameter arrays, canonical forms) is
//! generic over the [`Field`] trait defined here. Two scalar types implement
//! it: [`num_rational::BigRational`] for characteristic zero and [`Fp`] for
//! GF(p) with a runtime prime modulus. There is no floating point anywhere;
//! every identity in this crate is checked exactly.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors arising from scalar-level operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// Division by the additive identity.
    DivisionByZero,
    /// Two scalars from different fields were combined.
    FieldMismatch,
    /// The requested modulus is not prime.
    NotPrime(u64),
    /// Quadratic solving is not supported in characteristic 2.
    CharTwoUnsupported,
    /// A scalar literal did not match the text grammar for its field.
    BadScalar(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::FieldMismatch => write!(f, "scalars belong to different fields"),
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::CharTwoUnsupported => {
                write!(f, "quadratic solving over characteristic 2 is unsupported")
            }
            FieldError::BadScalar(s) => write!(f, "malformed scalar literal: {s:?}"),
        }
    }
}

impl std::error::Error for FieldError {}

/// An exact field element.
///
/// The associated [`Field::Ctx`] carries whatever runtime data is needed to
/// mint new elements: nothing for the rationals, the modulus for GF(p).
/// Arithmetic operators on mismatched GF(p) moduli panic; use [`arith`] for
/// the checked surface.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + PartialOrd
    + Ord
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Runtime description of the field an element lives in.
    type Ctx: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static;

    /// The context of this element.
    fn ctx(&self) -> Self::Ctx;
    /// Additive identity.
    fn zero(ctx: &Self::Ctx) -> Self;
    /// Multiplicative identity.
    fn one(ctx: &Self::Ctx) -> Self;
    /// Canonical image of a signed integer.
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self;
    /// Field characteristic; `None` means characteristic zero.
    fn characteristic(ctx: &Self::Ctx) -> Option<u64>;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Some square root of `self` if one exists in the field.
    fn sqrt(&self) -> Option<Self>;
    /// Parse the interchange text form (see module docs of the CLI).
    fn parse(ctx: &Self::Ctx, s: &str) -> Result<Self, FieldError>;
}

/// Integer power with negative exponents via the inverse.
///
/// Panics when `n < 0` and `x` is zero.
pub fn pow_i64<F: Field>(x: &F, n: i64) -> F {
    let ctx = x.ctx();
    if n == 0 {
        return F::one(&ctx);
    }
    let base = if n < 0 {
        x.inv().expect("zero has no negative power")
    } else {
        x.clone()
    };
    let mut acc = F::one(&ctx);
    for _ in 0..n.unsigned_abs() {
        acc = acc * base.clone();
    }
    acc
}

/// Binary operations exposed by the checked arithmetic surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic: verifies the operands share a field and guards
/// division by zero.
pub fn arith<F: Field>(a: &F, b: &F, op: BinOp) -> Result<F, FieldError> {
    if a.ctx() != b.ctx() {
        return Err(FieldError::FieldMismatch);
    }
    match op {
        BinOp::Add => Ok(a.clone() + b.clone()),
        BinOp::Sub => Ok(a.clone() - b.clone()),
        BinOp::Mul => Ok(a.clone() * b.clone()),
        BinOp::Div => {
            if b.is_zero() {
                Err(FieldError::DivisionByZero)
            } else {
                Ok(a.clone() / b.clone())
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

impl Field for BigRational {
    type Ctx = ();

    fn ctx(&self) -> Self::Ctx {}

    fn zero(_: &()) -> Self {
        Zero::zero()
    }

    fn one(_: &()) -> Self {
        One::one()
    }

    fn from_i64(_: &(), n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic(_: &()) -> Option<u64> {
        None
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        // Canonical form has positive denominator and gcd 1, so the square
        // root exists iff numerator and denominator are both perfect squares.
        let n = self.numer();
        let d = self.denom();
        let sn = n.sqrt();
        if &sn * &sn != *n {
            return None;
        }
        let sd = d.sqrt();
        if &sd * &sd != *d {
            return None;
        }
        Some(BigRational::new(sn, sd))
    }

    fn parse(_: &(), s: &str) -> Result<Self, FieldError> {
        parse_rational(s)
    }
}

/// Parse `n` or `n/m` with an optional leading `-`, digits only otherwise.
fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let bad = || FieldError::BadScalar(s.to_string());
    let (num_text, den_text) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_signed_int(num_text).ok_or_else(bad)?;
    let denom = match den_text {
        Some(d) => {
            let d = parse_unsigned_int(d).ok_or_else(bad)?;
            if d.is_zero() {
                return Err(bad());
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(BigRational::new(numer, denom))
}

fn parse_signed_int(s: &str) -> Option<BigInt> {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let n = parse_unsigned_int(digits)?;
    Some(if neg { -n } else { n })
}

fn parse_unsigned_int(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

/// A validated prime modulus; the context type for [`Fp`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpCtx {
    p: u64,
}

impl FpCtx {
    /// Checks primality by deterministic Miller-Rabin.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if is_prime_u64(p) {
            Ok(FpCtx { p })
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

/// An element of GF(p). Carries its modulus; arithmetic between different
/// moduli is a programming error and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(ctx: &FpCtx, value: u64) -> Self {
        Fp {
            value: value % ctx.p,
            p: ctx.p,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn same_field(&self, rhs: &Fp) {
        assert_eq!(self.p, rhs.p, "GF(p) arithmetic across distinct moduli");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.same_field(&rhs);
        let v = ((self.value as u128 + rhs.value as u128) % self.p as u128) as u64;
        Fp { value: v, p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.same_field(&rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.p - (rhs.value - self.value)
        };
        Fp { value: v, p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.same_field(&rhs);
        Fp {
            value: mulmod(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)] // division is inverse-multiplication
    fn div(self, rhs: Fp) -> Fp {
        self * Field::inv(&rhs).expect("division by zero in GF(p)")
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: if self.value == 0 { 0 } else { self.p - self.value },
            p: self.p,
        }
    }
}

impl Field for Fp {
    type Ctx = FpCtx;

    fn ctx(&self) -> FpCtx {
        FpCtx { p: self.p }
    }

    fn zero(ctx: &FpCtx) -> Self {
        Fp { value: 0, p: ctx.p }
    }

    fn one(ctx: &FpCtx) -> Self {
        Fp {
            value: 1 % ctx.p,
            p: ctx.p,
        }
    }

    fn from_i64(ctx: &FpCtx, n: i64) -> Self {
        let r = (n as i128).rem_euclid(ctx.p as i128) as u64;
        Fp { value: r, p: ctx.p }
    }

    fn characteristic(ctx: &FpCtx) -> Option<u64> {
        Some(ctx.p)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        Some(Fp {
            value: powmod(self.value, self.p - 2, self.p),
            p: self.p,
        })
    }

    fn sqrt(&self) -> Option<Self> {
        sqrt_mod(self.value, self.p).map(|r| Fp { value: r, p: self.p })
    }

    fn parse(ctx: &FpCtx, s: &str) -> Result<Self, FieldError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(FieldError::BadScalar(s.to_string()));
        }
        let v: u64 = s
            .parse()
            .map_err(|_| FieldError::BadScalar(s.to_string()))?;
        Ok(Fp::new(ctx, v))
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all u64 (the first twelve prime witnesses
/// are known to suffice below 2^64).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Square root modulo an odd prime: exhaustive search below 2^16, otherwise
/// Euler's criterion followed by Tonelli-Shanks. For p = 2 every element is
/// its own square root.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    if p == 2 {
        return Some(a % 2);
    }
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p < (1 << 16) {
        return (0..p).find(|&r| mulmod(r, r, p) == a);
    }
    // Euler's criterion: a is a residue iff a^((p-1)/2) = 1.
    if powmod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        // (p+1)/4 is exact here
        let exponent = (p + 1) / 4;
        return Some(powmod(a, exponent, p));
    }
    // Tonelli-Shanks. Write p-1 = q * 2^s with q odd.
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while powmod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = powmod(z, q, p);
    let mut t = powmod(a, q, p);
    let mut r = powmod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mulmod(t2, t2, p);
            i += 1;
        }
        let b = powmod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    Some(r)
}

// ---------------------------------------------------------------------------
// Field descriptors and the quadratic solver
// ---------------------------------------------------------------------------

/// Runtime field selector used by the interchange format and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// A validated GF(p) descriptor.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        FpCtx::new(p)?;
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }

    /// True iff the characteristic is zero or an odd prime greater than `d`.
    pub fn characteristic_guard(&self, d: usize) -> bool {
        characteristic_guard(self.characteristic(), d)
    }
}

/// Characteristic-based nondegeneracy pre-filter shared by the field
/// descriptor and the generic constructors.
pub fn characteristic_guard(characteristic: Option<u64>, d: usize) -> bool {
    match characteristic {
        None => true,
        Some(p) => p % 2 == 1 && p > d as u64,
    }
}

/// Roots of a quadratic with nonzero leading coefficient, multiplicity noted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadraticRoots<F> {
    /// No roots in the field.
    None,
    /// A double root.
    Double(F),
    /// Two distinct roots, in the field's canonical order.
    Distinct(F, F),
}

impl<F> QuadraticRoots<F> {
    pub fn roots(&self) -> Vec<&F> {
        match self {
            QuadraticRoots::None => vec![],
            QuadraticRoots::Double(r) => vec![r],
            QuadraticRoots::Distinct(r, s) => vec![r, s],
        }
    }
}

/// All roots of `a x^2 + b x + c` lying in the field.
///
/// Over the rationals, roots exist iff the discriminant is the square of a
/// rational; over GF(p) with p odd, iff the discriminant is a quadratic
/// residue. Characteristic 2 is rejected.
pub fn solve_quadratic<F: Field>(a: &F, b: &F, c: &F) -> Result<QuadraticRoots<F>, FieldError> {
    assert!(!a.is_zero(), "leading coefficient must be nonzero");
    let ctx = a.ctx();
    if F::characteristic(&ctx) == Some(2) {
        return Err(FieldError::CharTwoUnsupported);
    }
    let four = F::from_i64(&ctx, 4);
    let two = F::from_i64(&ctx, 2);
    let disc = b.clone() * b.clone() - four * a.clone() * c.clone();
    if disc.is_zero() {
        let r = -b.clone() / (two * a.clone());
        return Ok(QuadraticRoots::Double(r));
    }
    match disc.sqrt() {
        None => Ok(QuadraticRoots::None),
        Some(s) => {
            let den = two * a.clone();
            let r1 = (-b.clone() + s.clone()) / den.clone();
            let r2 = (-b.clone() - s) / den;
            let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
            Ok(QuadraticRoots::Distinct(lo, hi))
        }
    }
}
