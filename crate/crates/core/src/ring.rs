//! Coefficient rings.
//!
//! A [`Ring`] is a context object that owns the arithmetic of its elements, in
//! the style of computer algebra systems where the same element type can live
//! in several rings (here: residues modulo different `m`). Three commutative
//! rings with identity are provided:
//!
//! * [`Integers`]: unbounded integers backed by [`BigInt`];
//! * [`IntegersMod`]: residues in `[0, m)` for a runtime modulus `m >= 2`;
//! * [`Rationals`]: fractions in lowest terms with positive denominator.
//!
//! Every element has a unique canonical representation, so element equality is
//! structural equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Names one of the supported coefficient rings.
///
/// Text form: `z`, `zmod:<m>`, `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    IntegersMod(u64),
    Rationals,
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => f.write_str("z"),
            RingDescriptor::IntegersMod(m) => write!(f, "zmod:{m}"),
            RingDescriptor::Rationals => f.write_str("q"),
        }
    }
}

impl Serialize for RingDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "z" => Ok(RingDescriptor::Integers),
            "q" => Ok(RingDescriptor::Rationals),
            other => {
                let Some(m) = other.strip_prefix("zmod:") else {
                    return Err(Error::InvalidRing(s.to_string()));
                };
                let modulus: u64 = m
                    .parse()
                    .map_err(|_| Error::InvalidModulus(m.to_string()))?;
                if modulus < 2 {
                    return Err(Error::InvalidModulus(m.to_string()));
                }
                Ok(RingDescriptor::IntegersMod(modulus))
            }
        }
    }
}

/// A commutative ring with identity, decidable equality and partial unit
/// inversion.
///
/// Implementations must keep every returned element in canonical form.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// The multiplicative inverse of `a`, or [`Error::NotAUnit`].
    fn inverse_unit(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inverse_unit(a).is_ok()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Whether `a` prints with a leading minus sign. Always false in `Z/m`.
    fn is_negative(&self, a: &Self::Elem) -> bool;

    fn parse_elem(&self, text: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Fails with [`Error::RingMismatch`] unless `self` and `other` are the
    /// same ring.
    fn ensure_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.descriptor(),
                right: other.descriptor(),
            })
        }
    }
}

fn parse_integer(text: &str) -> Result<BigInt> {
    let t = text.trim();
    let digits = t.strip_prefix('-').unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            pos: 0,
            message: format!("expected an integer, found {t:?}"),
        });
    }
    Ok(t.parse().expect("validated integer literal"))
}

/// The integers, with unbounded precision.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
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
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn inverse_unit(&self, a: &BigInt) -> Result<BigInt> {
        if a.abs().is_one() {
            Ok(a.clone())
        } else {
            Err(Error::NotAUnit(a.to_string()))
        }
    }
    fn is_negative(&self, a: &BigInt) -> bool {
        a.is_negative()
    }
    fn parse_elem(&self, text: &str) -> Result<BigInt> {
        parse_integer(text)
    }
    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

/// Residues modulo `m`, stored in `[0, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegersMod {
    modulus: u64,
}

impl IntegersMod {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus.to_string()));
        }
        Ok(IntegersMod { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.modulus);
        let r = n.mod_floor(&m);
        u64::try_from(r).expect("residue below a u64 modulus")
    }
}

impl Ring for IntegersMod {
    type Elem = u64;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::IntegersMod(self.modulus)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.modulus as i128) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.modulus as u128 - *b as u128) % self.modulus as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn inverse_unit(&self, a: &u64) -> Result<u64> {
        // extended Euclid on (a, m)
        let m = self.modulus as i128;
        let (mut r0, mut r1) = (*a as i128, m);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        if r0 == 1 {
            Ok(s0.rem_euclid(m) as u64)
        } else {
            Err(Error::NotAUnit(format!("{a} (mod {})", self.modulus)))
        }
    }
    fn is_negative(&self, _a: &u64) -> bool {
        false
    }
    fn parse_elem(&self, text: &str) -> Result<u64> {
        Ok(self.reduce(&parse_integer(text)?))
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// The rationals, kept in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
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
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inverse_unit(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::NotAUnit("0".to_string()))
        } else {
            Ok(a.recip())
        }
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn parse_elem(&self, text: &str) -> Result<BigRational> {
        let t = text.trim();
        match t.split_once('/') {
            None => Ok(BigRational::from_integer(parse_integer(t)?)),
            Some((num, den)) => {
                let num = parse_integer(num)?;
                let den = parse_integer(den)?;
                if den.is_zero() {
                    return Err(Error::Parse {
                        pos: 0,
                        message: format!("zero denominator in {t:?}"),
                    });
                }
                if den.is_negative() {
                    return Err(Error::Parse {
                        pos: 0,
                        message: format!("denominator must be unsigned in {t:?}"),
                    });
                }
                Ok(BigRational::new(num, den))
            }
        }
    }
    fn format_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Any of the three supported rings, chosen at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnyRing {
    Integers(Integers),
    IntegersMod(IntegersMod),
    Rationals(Rationals),
}

impl AnyRing {
    pub fn from_descriptor(desc: RingDescriptor) -> Result<Self> {
        Ok(match desc {
            RingDescriptor::Integers => AnyRing::Integers(Integers),
            RingDescriptor::IntegersMod(m) => AnyRing::IntegersMod(IntegersMod::new(m)?),
            RingDescriptor::Rationals => AnyRing::Rationals(Rationals),
        })
    }
}

/// Runs a generic body once with the concrete ring behind an [`AnyRing`].
///
/// ```
/// use strongmon::{with_ring, ring::{AnyRing, Ring, RingDescriptor}};
/// let any = AnyRing::from_descriptor(RingDescriptor::IntegersMod(6)).unwrap();
/// let s = with_ring!(any, |r| r.format_elem(&r.mul(&r.from_i64(4), &r.from_i64(5))));
/// assert_eq!(s, "2");
/// ```
#[macro_export]
macro_rules! with_ring {
    ($any:expr, |$r:ident| $body:expr) => {
        match $any {
            $crate::ring::AnyRing::Integers($r) => $body,
            $crate::ring::AnyRing::IntegersMod($r) => $body,
            $crate::ring::AnyRing::Rationals($r) => $body,
        }
    };
}

/// A self-describing ring element: value plus the ring it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingElement {
    Integer(BigInt),
    Residue { value: u64, modulus: u64 },
    Rational(BigRational),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

impl RingElement {
    pub fn parse(desc: RingDescriptor, text: &str) -> Result<Self> {
        Ok(match AnyRing::from_descriptor(desc)? {
            AnyRing::Integers(r) => RingElement::Integer(r.parse_elem(text)?),
            AnyRing::IntegersMod(r) => RingElement::Residue {
                value: r.parse_elem(text)?,
                modulus: r.modulus(),
            },
            AnyRing::Rationals(r) => RingElement::Rational(r.parse_elem(text)?),
        })
    }

    pub fn descriptor(&self) -> RingDescriptor {
        match self {
            RingElement::Integer(_) => RingDescriptor::Integers,
            RingElement::Residue { modulus, .. } => RingDescriptor::IntegersMod(*modulus),
            RingElement::Rational(_) => RingDescriptor::Rationals,
        }
    }

    pub fn inverse_unit(&self) -> Result<Self> {
        Ok(match self {
            RingElement::Integer(a) => RingElement::Integer(Integers.inverse_unit(a)?),
            RingElement::Residue { value, modulus } => RingElement::Residue {
                value: IntegersMod::new(*modulus)?.inverse_unit(value)?,
                modulus: *modulus,
            },
            RingElement::Rational(a) => RingElement::Rational(Rationals.inverse_unit(a)?),
        })
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(a) => write!(f, "{a}"),
            RingElement::Residue { value, .. } => write!(f, "{value}"),
            RingElement::Rational(a) => f.write_str(&Rationals.format_elem(a)),
        }
    }
}

/// Applies `op` to `a` and `b`. The second operand is ignored for
/// [`ArithOp::Neg`] but must still belong to the same ring.
pub fn ring_arith(op: ArithOp, a: &RingElement, b: &RingElement) -> Result<RingElement> {
    fn apply<R: Ring>(r: &R, op: ArithOp, a: &R::Elem, b: &R::Elem) -> R::Elem {
        match op {
            ArithOp::Add => r.add(a, b),
            ArithOp::Sub => r.sub(a, b),
            ArithOp::Mul => r.mul(a, b),
            ArithOp::Neg => r.neg(a),
        }
    }
    if a.descriptor() != b.descriptor() {
        return Err(Error::RingMismatch {
            left: a.descriptor(),
            right: b.descriptor(),
        });
    }
    Ok(match (a, b) {
        (RingElement::Integer(x), RingElement::Integer(y)) => {
            RingElement::Integer(apply(&Integers, op, x, y))
        }
        (RingElement::Residue { value: x, modulus }, RingElement::Residue { value: y, .. }) => {
            RingElement::Residue {
                value: apply(&IntegersMod::new(*modulus)?, op, x, y),
                modulus: *modulus,
            }
        }
        (RingElement::Rational(x), RingElement::Rational(y)) => {
            RingElement::Rational(apply(&Rationals, op, x, y))
        }
        _ => unreachable!("descriptors compared equal"),
    })
}
