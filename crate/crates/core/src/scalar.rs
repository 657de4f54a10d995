//! Exact scalars over the three supported base rings: ℤ, ℚ and 𝔽_p.
//!
//! A [`Scalar`] carries its own base tag, so mixing bases in one
//! arithmetic operation is a programming error and panics. Everything that
//! crosses a public boundary (files, ring tables) is checked against a
//! [`Base`] before arithmetic happens.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The base ring B.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl Base {
    /// 𝔽_p, rejecting composite or oversized moduli.
    pub fn prime_field(p: u64) -> Result<Base> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Base::PrimeField(p))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Base::Integers)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Base::PrimeField(p) => p,
            _ => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Base::Integers => Scalar::Int(BigInt::from(v)),
            Base::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            Base::PrimeField(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                Scalar::Mod(ModP { value: r, p })
            }
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Base::Integers => Scalar::Int(v.clone()),
            Base::Rationals => Scalar::Rat(BigRational::from_integer(v.clone())),
            Base::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(p)).to_u64().unwrap();
                Scalar::Mod(ModP { value: r, p })
            }
        }
    }

    /// Image of a scalar of another base under the canonical map, when one
    /// exists (ℤ → anything, ℚ → ℚ, 𝔽_p → 𝔽_p).
    pub fn coerce(self, s: &Scalar) -> Result<Scalar> {
        match (self, s) {
            (_, Scalar::Int(v)) => Ok(self.from_bigint(v)),
            (Base::Rationals, Scalar::Rat(_)) => Ok(s.clone()),
            (Base::PrimeField(p), Scalar::Mod(m)) if m.p == p => Ok(s.clone()),
            (Base::PrimeField(p), Scalar::Rat(r)) => {
                let num = self.from_bigint(r.numer());
                let den = self.from_bigint(r.denom());
                let inv = den.inverse().ok_or(Error::WrongBase {
                    expected: Base::PrimeField(p),
                    found: Base::Rationals,
                })?;
                Ok(&num * &inv)
            }
            _ => Err(Error::WrongBase {
                expected: self,
                found: s.base(),
            }),
        }
    }

    /// Parses a scalar written as an integer, or as `p/q` over ℚ.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let bad = || Error::BadScalar(text.to_string());
        match self {
            Base::Rationals => {
                if let Some((n, d)) = t.split_once('/') {
                    let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                    let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    Ok(Scalar::Rat(BigRational::new(n, d)))
                } else {
                    let n = BigInt::from_str(t).map_err(|_| bad())?;
                    Ok(self.from_bigint(&n))
                }
            }
            _ => {
                let n = BigInt::from_str(t).map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Integers => write!(f, "ZZ"),
            Base::Rationals => write!(f, "QQ"),
            Base::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class modulo a prime, canonical in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModP {
    value: u64,
    p: u64,
}

impl ModP {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    fn pow(self, mut e: u64) -> ModP {
        let mut base = self.value;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        ModP {
            value: acc,
            p: self.p,
        }
    }
}

/// An exact element of ℤ, ℚ (lowest terms) or 𝔽_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Mod(ModP),
}

impl Scalar {
    pub fn base(&self) -> Base {
        match self {
            Scalar::Int(_) => Base::Integers,
            Scalar::Rat(_) => Base::Rationals,
            Scalar::Mod(m) => Base::PrimeField(m.p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
            Scalar::Mod(m) => m.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_one(),
            Scalar::Rat(v) => v.is_one(),
            Scalar::Mod(m) => m.value == 1,
        }
    }

    /// Multiplicative inverse, if this scalar is a unit of its base.
    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Int(v) => {
                if v.abs().is_one() {
                    Some(self.clone())
                } else {
                    None
                }
            }
            Scalar::Rat(v) => (!v.is_zero()).then(|| Scalar::Rat(v.recip())),
            Scalar::Mod(m) => (m.value != 0).then(|| Scalar::Mod(m.pow(m.p - 2))),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = self.base().one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The integer value for ℤ scalars (and integral rationals).
    pub fn as_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Int(v) => Some(v.clone()),
            Scalar::Rat(v) if v.is_integer() => Some(v.to_integer()),
            Scalar::Mod(m) => Some(BigInt::from(m.value)),
            _ => None,
        }
    }

    /// Exact quotient `self / other`; `None` if it does not exist in the base.
    pub fn div_exact(&self, other: &Scalar) -> Option<Scalar> {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => {
                if b.is_zero() {
                    return None;
                }
                let (q, r) = a.div_rem(b);
                r.is_zero().then_some(Scalar::Int(q))
            }
            _ => other.inverse().map(|inv| self * &inv),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar base mismatch: {} vs {}", a.base(), b.base())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.p == b.p => {
                let s = a.value + b.value;
                Scalar::Mod(ModP {
                    value: if s >= a.p { s - a.p } else { s },
                    p: a.p,
                })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a - b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.p == b.p => Scalar::Mod(ModP {
                value: if a.value >= b.value {
                    a.value - b.value
                } else {
                    a.value + a.p - b.value
                },
                p: a.p,
            }),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.p == b.p => Scalar::Mod(ModP {
                value: a.value * b.value % a.p,
                p: a.p,
            }),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod(a) => Scalar::Mod(ModP {
                value: if a.value == 0 { 0 } else { a.p - a.value },
                p: a.p,
            }),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(v) => {
                if v.is_integer() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            Scalar::Mod(m) => write!(f, "{}", m.value),
        }
    }
}
