//! Exact base rings.
//!
//! Every ring here is a principal ideal ring, so a single elimination
//! procedure (driven by [`Ring::gcdex`], [`Ring::annihilator`] and friends)
//! yields reduced row echelon form over fields, Hermite normal form over the
//! integers and Howell form over `Z/n`.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest modulus accepted for `F_p` and `Z/n`; keeps products inside `u128`.
pub const MAX_MODULUS: u64 = 1 << 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("modulus {0} exceeds the supported bound 2^62")]
    ModulusTooLarge(u64),
    #[error("cannot parse ring descriptor `{0}`")]
    BadDescriptor(String),
    #[error("`{literal}` is not an element of {ring}")]
    NotAnElement { literal: String, ring: RingDescriptor },
}

/// Which of the supported base rings a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Rationals,
    PrimeField(u64),
    Integers,
    IntegersMod(u64),
}

impl RingDescriptor {
    pub fn prime_field(p: u64) -> Result<Self, RingError> {
        if p > MAX_MODULUS {
            return Err(RingError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        Ok(Self::PrimeField(p))
    }

    pub fn integers_mod(n: u64) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::ModulusTooSmall(n));
        }
        if n > MAX_MODULUS {
            return Err(RingError::ModulusTooLarge(n));
        }
        Ok(Self::IntegersMod(n))
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Self::Rationals | Self::PrimeField(_))
    }

    /// Quasi-Frobenius: fields and every `Z/n`.
    pub fn is_qf(&self) -> bool {
        self.is_field() || matches!(self, Self::IntegersMod(_))
    }

    /// All four rings admit complete finite purity test families.
    pub fn purity_decidable(&self) -> bool {
        true
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rationals => write!(f, "Q"),
            Self::PrimeField(p) => write!(f, "F{p}"),
            Self::Integers => write!(f, "Z"),
            Self::IntegersMod(n) => write!(f, "Z/{n}"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || RingError::BadDescriptor(s.to_string());
        match t {
            "Q" | "QQ" => return Ok(Self::Rationals),
            "Z" | "ZZ" => return Ok(Self::Integers),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("Z/") {
            let n: u64 = rest.trim().parse().map_err(|_| bad())?;
            return Self::integers_mod(n);
        }
        let digits = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("F_"))
            .or_else(|| t.strip_prefix('F'));
        if let Some(d) = digits {
            let p: u64 = d.trim().parse().map_err(|_| bad())?;
            return Self::prime_field(p);
        }
        Err(bad())
    }
}

impl Serialize for RingDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Which canonical row form elimination produces over a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FormKind {
    Rref,
    Hermite,
    Howell,
    Smith,
}

/// Unimodular 2x2 data: `s*a + t*b = g`, `u*a + v*b = 0`, `s*v - t*u` a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gcdex<E> {
    pub g: E,
    pub s: E,
    pub t: E,
    pub u: E,
    pub v: E,
}

/// A commutative principal ideal ring with canonical element representatives.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// `None` when the rational number has no image in the ring.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_unit(&self, a: &Self::Elem) -> bool;

    fn gcdex(&self, a: &Self::Elem, b: &Self::Elem) -> Gcdex<Self::Elem>;
    /// Generator of the annihilator ideal of `a`.
    fn annihilator(&self, a: &Self::Elem) -> Self::Elem;
    /// A unit `u` such that `u*a` is the canonical associate of `a`.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;
    /// `a = q*p + r` with `r` the canonical residue modulo the ideal `(p)`.
    fn quo_rem(&self, a: &Self::Elem, p: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Some `x` with `b*x = a`, if one exists.
    fn divide(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// Integer representative, where one exists.
    fn to_integer(&self, a: &Self::Elem) -> Option<BigInt>;

    /// All elements, for finite rings.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn is_field(&self) -> bool {
        self.descriptor().is_field()
    }

    fn has_zero_divisors(&self) -> bool {
        matches!(self.descriptor(), RingDescriptor::IntegersMod(n) if !is_prime(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.divide(b, a).is_some()
    }

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.normalizing_unit(a), a)
    }

    fn parse_elem(&self, literal: &str) -> Result<Self::Elem, RingError> {
        let err = || RingError::NotAnElement {
            literal: literal.to_string(),
            ring: self.descriptor(),
        };
        let q = parse_rational(literal).ok_or_else(err)?;
        self.from_rational(&q).ok_or_else(err)
    }

    fn form_kind(&self) -> FormKind {
        match self.descriptor() {
            RingDescriptor::Rationals | RingDescriptor::PrimeField(_) => FormKind::Rref,
            RingDescriptor::Integers => FormKind::Hermite,
            RingDescriptor::IntegersMod(_) => FormKind::Howell,
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Extended gcd on nonnegative integers: `(g, x, y)` with `x*a + y*b = g`.
fn xgcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

fn field_gcdex<E: Clone>(
    a_zero: bool,
    b_zero: bool,
    a: &E,
    b: &E,
    zero: E,
    one: E,
    neg_b_over_a: impl FnOnce() -> E,
) -> Gcdex<E> {
    if !a_zero {
        Gcdex { g: a.clone(), s: one.clone(), t: zero, u: neg_b_over_a(), v: one }
    } else if !b_zero {
        Gcdex { g: b.clone(), s: zero.clone(), t: one.clone(), u: one, v: zero }
    } else {
        Gcdex { g: zero.clone(), s: one.clone(), t: zero.clone(), u: zero, v: one }
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn gcdex(&self, a: &BigRational, b: &BigRational) -> Gcdex<BigRational> {
        field_gcdex(a.is_zero(), b.is_zero(), a, b, self.zero(), self.one(), || -(b / a))
    }
    fn annihilator(&self, a: &BigRational) -> BigRational {
        if a.is_zero() {
            self.one()
        } else {
            self.zero()
        }
    }
    fn normalizing_unit(&self, a: &BigRational) -> BigRational {
        if a.is_zero() {
            self.one()
        } else {
            a.recip()
        }
    }
    fn quo_rem(&self, a: &BigRational, p: &BigRational) -> (BigRational, BigRational) {
        if p.is_zero() {
            (self.zero(), a.clone())
        } else {
            (a / p, self.zero())
        }
    }
    fn divide(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        if b.is_zero() {
            a.is_zero().then(|| self.zero())
        } else {
            Some(a / b)
        }
    }
    fn to_integer(&self, a: &BigRational) -> Option<BigInt> {
        a.is_integer().then(|| a.to_integer())
    }
}

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, RingError> {
        RingDescriptor::prime_field(p)?;
        Ok(Self { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    fn inv(&self, a: u64) -> u64 {
        let (_, x, _) = xgcd_i128(a as i128, self.p as i128);
        x.rem_euclid(self.p as i128) as u64
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let p = BigInt::from(self.p);
        let n = q.numer().mod_floor(&p).to_u64()?;
        let d = q.denom().mod_floor(&p).to_u64()?;
        if d == 0 {
            return None;
        }
        Some(self.mul(&n, &self.inv(d)))
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn gcdex(&self, a: &u64, b: &u64) -> Gcdex<u64> {
        field_gcdex(*a == 0, *b == 0, a, b, 0, 1, || self.neg(&self.mul(b, &self.inv(*a))))
    }
    fn annihilator(&self, a: &u64) -> u64 {
        u64::from(*a == 0)
    }
    fn normalizing_unit(&self, a: &u64) -> u64 {
        if *a == 0 {
            1
        } else {
            self.inv(*a)
        }
    }
    fn quo_rem(&self, a: &u64, p: &u64) -> (u64, u64) {
        if *p == 0 {
            (0, *a)
        } else {
            (self.mul(a, &self.inv(*p)), 0)
        }
    }
    fn divide(&self, a: &u64, b: &u64) -> Option<u64> {
        if *b == 0 {
            (*a == 0).then_some(0)
        } else {
            Some(self.mul(a, &self.inv(*b)))
        }
    }
    fn to_integer(&self, a: &u64) -> Option<BigInt> {
        Some((*a).into())
    }
    fn elements(&self) -> Option<Vec<u64>> {
        (self.p <= 1 << 16).then(|| (0..self.p).collect())
    }
}

/// The integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        v.into()
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigInt> {
        q.is_integer().then(|| q.to_integer())
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn gcdex(&self, a: &BigInt, b: &BigInt) -> Gcdex<BigInt> {
        if a.is_zero() && b.is_zero() {
            return Gcdex { g: self.zero(), s: self.one(), t: self.zero(), u: self.zero(), v: self.one() };
        }
        let e = a.extended_gcd(b);
        Gcdex { u: -(b / &e.gcd), v: a / &e.gcd, g: e.gcd, s: e.x, t: e.y }
    }
    fn annihilator(&self, a: &BigInt) -> BigInt {
        if a.is_zero() {
            self.one()
        } else {
            self.zero()
        }
    }
    fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -self.one()
        } else {
            self.one()
        }
    }
    fn quo_rem(&self, a: &BigInt, p: &BigInt) -> (BigInt, BigInt) {
        if p.is_zero() {
            return (self.zero(), a.clone());
        }
        let p_abs = p.abs();
        let r = a.mod_floor(&p_abs);
        let q = (a - &r) / p;
        (q, r)
    }
    fn divide(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return a.is_zero().then(|| self.zero());
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
    fn to_integer(&self, a: &BigInt) -> Option<BigInt> {
        Some(a.clone())
    }
}

/// The residue ring `Z/n`, elements stored as representatives in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntegersMod {
    n: u64,
}

impl IntegersMod {
    pub fn new(n: u64) -> Result<Self, RingError> {
        RingDescriptor::integers_mod(n)?;
        Ok(Self { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Inverse of `a` modulo `m` (`gcd(a, m) = 1` assumed).
    fn inv_mod(a: u64, m: u64) -> u64 {
        if m == 1 {
            return 0;
        }
        let (_, x, _) = xgcd_i128(a as i128, m as i128);
        x.rem_euclid(m as i128) as u64
    }

    fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.n as i128) as u64
    }
}

impl Ring for IntegersMod {
    type Elem = u64;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::IntegersMod(self.n)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i128(v as i128)
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        if !q.is_integer() {
            return None;
        }
        q.to_integer().mod_floor(&BigInt::from(self.n)).to_u64()
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.n as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.n as u128 - *b as u128) % self.n as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.n - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.n as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &u64) -> bool {
        gcd_u64(*a, self.n) == 1
    }
    fn gcdex(&self, a: &u64, b: &u64) -> Gcdex<u64> {
        if *a == 0 && *b == 0 {
            return Gcdex { g: 0, s: 1, t: 0, u: 0, v: 1 };
        }
        let (g, x, y) = xgcd_i128(*a as i128, *b as i128);
        Gcdex {
            g: self.reduce_i128(g),
            s: self.reduce_i128(x),
            t: self.reduce_i128(y),
            u: self.reduce_i128(-(*b as i128 / g)),
            v: self.reduce_i128(*a as i128 / g),
        }
    }
    fn annihilator(&self, a: &u64) -> u64 {
        let g = gcd_u64(*a, self.n);
        (self.n / g) % self.n
    }
    fn normalizing_unit(&self, a: &u64) -> u64 {
        if *a == 0 {
            return 1;
        }
        let g = gcd_u64(*a, self.n);
        let cofactor = self.n / g;
        let u0 = Self::inv_mod((a / g) % cofactor, cofactor);
        let mut u = if cofactor == 1 { 1 } else { u0 };
        while gcd_u64(u, self.n) != 1 {
            u += cofactor;
        }
        u % self.n
    }
    fn quo_rem(&self, a: &u64, p: &u64) -> (u64, u64) {
        if *p == 0 {
            (0, *a)
        } else {
            (a / p, a % p)
        }
    }
    fn divide(&self, a: &u64, b: &u64) -> Option<u64> {
        let g = gcd_u64(*b, self.n);
        if !(*a).is_multiple_of(g) {
            return None;
        }
        let cofactor = self.n / g;
        if cofactor == 1 {
            return Some(0);
        }
        let inv = Self::inv_mod((b / g) % cofactor, cofactor);
        Some((((a / g) as u128 * inv as u128) % cofactor as u128) as u64)
    }
    fn to_integer(&self, a: &u64) -> Option<BigInt> {
        Some((*a).into())
    }
    fn elements(&self) -> Option<Vec<u64>> {
        (self.n <= 1 << 16).then(|| (0..self.n).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_gcdex<R: Ring>(ring: &R, a: &R::Elem, b: &R::Elem) {
        let Gcdex { g, s, t, u, v } = ring.gcdex(a, b);
        assert_eq!(ring.add(&ring.mul(&s, a), &ring.mul(&t, b)), g);
        assert!(ring.is_zero(&ring.add(&ring.mul(&u, a), &ring.mul(&v, b))));
        let det = ring.sub(&ring.mul(&s, &v), &ring.mul(&t, &u));
        assert!(ring.is_unit(&det), "det {det} not a unit for ({a}, {b})");
    }

    #[test]
    fn gcdex_is_unimodular_on_small_rings() {
        for n in [2u64, 4, 6, 8, 9, 12] {
            let r = IntegersMod::new(n).unwrap();
            for a in 0..n {
                for b in 0..n {
                    check_gcdex(&r, &a, &b);
                }
            }
        }
        let f = PrimeField::new(7).unwrap();
        for a in 0..7 {
            for b in 0..7 {
                check_gcdex(&f, &a, &b);
            }
        }
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                check_gcdex(&Integers, &a.into(), &b.into());
                check_gcdex(&Rationals, &Rationals.from_i64(a), &Rationals.from_i64(b));
            }
        }
    }

    #[test]
    fn normalizing_unit_gives_gcd_with_modulus() {
        for n in [4u64, 6, 12, 30] {
            let r = IntegersMod::new(n).unwrap();
            for a in 1..n {
                let u = r.normalizing_unit(&a);
                assert!(r.is_unit(&u));
                assert_eq!(r.mul(&u, &a), gcd_u64(a, n));
            }
        }
    }

    #[test]
    fn divide_and_annihilator_mod_n() {
        let r = IntegersMod::new(12).unwrap();
        for a in 0..12u64 {
            for b in 0..12u64 {
                match r.divide(&a, &b) {
                    Some(x) => assert_eq!(r.mul(&b, &x), a),
                    None => assert!((0..12).all(|x| r.mul(&b, &x) != a)),
                }
            }
            let ann = r.annihilator(&a);
            assert_eq!(r.mul(&ann, &a), 0);
        }
        assert_eq!(r.annihilator(&4), 3);
    }

    #[test]
    fn descriptor_parsing_and_validation() {
        assert_eq!("Q".parse::<RingDescriptor>().unwrap(), RingDescriptor::Rationals);
        assert_eq!("F5".parse::<RingDescriptor>().unwrap(), RingDescriptor::PrimeField(5));
        assert_eq!("GF(7)".parse::<RingDescriptor>().unwrap(), RingDescriptor::PrimeField(7));
        assert_eq!("Z/4".parse::<RingDescriptor>().unwrap(), RingDescriptor::IntegersMod(4));
        assert_eq!("F4".parse::<RingDescriptor>(), Err(RingError::NotPrime(4)));
        assert_eq!("Z/1".parse::<RingDescriptor>(), Err(RingError::ModulusTooSmall(1)));
        let d = RingDescriptor::IntegersMod(4);
        assert!(d.is_qf() && !d.is_field());
        assert!(!RingDescriptor::Integers.is_qf());
    }

    #[test]
    fn literals() {
        assert_eq!(Rationals.parse_elem("-3/6").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(PrimeField::new(5).unwrap().parse_elem("1/2").unwrap(), 3);
        assert_eq!(IntegersMod::new(4).unwrap().parse_elem("-1").unwrap(), 3);
        assert!(Integers.parse_elem("1/2").is_err());
        assert!(PrimeField::new(5).unwrap().parse_elem("1/5").is_err());
    }

    #[test]
    fn integer_quo_rem_is_floor_residue() {
        let (q, r) = Integers.quo_rem(&BigInt::from(-7), &BigInt::from(3));
        assert_eq!((q, r), (BigInt::from(-3), BigInt::from(2)));
    }
}
