//! Exact coefficient arithmetic: prime fields F_p and arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// Default prime characteristic.
pub const DEFAULT_PRIME: u32 = 32003;

/// The coefficient field of a ring presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// F_p for an odd prime p.
    Prime(u32),
    /// The rationals Q.
    Rational,
}

impl Field {
    /// Builds a field from a characteristic (0 means Q).
    pub fn from_characteristic(p: u32) -> Result<Self, AlgebraError> {
        match p {
            0 => Ok(Field::Rational),
            2 => Err(AlgebraError::UnsupportedCharacteristic(p)),
            p if is_prime(p) => Ok(Field::Prime(p)),
            p => Err(AlgebraError::UnsupportedCharacteristic(p)),
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Prime(p) => p,
            Field::Rational => 0,
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
            Field::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
            Field::Rational => Scalar::Rat(Box::new(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    /// Maps an arbitrary-size integer into the field.
    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Field::Prime(p) => {
                let r = v % BigInt::from(p);
                let r = if r.is_negative() { r + BigInt::from(p) } else { r };
                Scalar::Mod {
                    value: r.to_u32().expect("reduced residue fits in u32"),
                    modulus: p,
                }
            }
            Field::Rational => Scalar::Rat(Box::new(BigRational::from_integer(v.clone()))),
        }
    }

    /// Whether `s` lives in this field.
    pub fn contains(self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Prime(p), Scalar::Mod { modulus, .. }) => p == *modulus,
            (Field::Rational, Scalar::Rat(_)) => true,
            _ => false,
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Prime-field elements carry their modulus so that
/// arithmetic needs no ambient context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u32, modulus: u32 },
    Rat(Box<BigRational>),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
            Scalar::Rat(_) => Field::Rational,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        match self {
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value as u64, (*modulus - 2) as u64, *modulus as u64) as u32,
                modulus: *modulus,
            },
            Scalar::Rat(r) => Scalar::Rat(Box::new(r.recip())),
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self * &other.inv()
    }

    /// Symmetric integer representative, used for printing.
    fn signed_repr(&self) -> Option<i64> {
        match self {
            Scalar::Mod { value, modulus } => {
                let v = *value as i64;
                let m = *modulus as i64;
                Some(if v > m / 2 { v - m } else { v })
            }
            Scalar::Rat(r) if r.is_integer() => r.to_integer().to_i64(),
            Scalar::Rat(_) => None,
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative_repr(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            _ => self.signed_repr().is_some_and(|v| v < 0),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

macro_rules! binop {
    ($trait:ident, $method:ident, $modop:expr, $ratop:expr) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, modulus: m2 }) => {
                        debug_assert_eq!(modulus, m2, "mixed characteristics");
                        let f: fn(u64, u64, u64) -> u64 = $modop;
                        Scalar::Mod {
                            value: f(*a as u64, *b as u64, *modulus as u64) as u32,
                            modulus: *modulus,
                        }
                    }
                    (Scalar::Rat(a), Scalar::Rat(b)) => {
                        let f: fn(&BigRational, &BigRational) -> BigRational = $ratop;
                        Scalar::Rat(Box::new(f(a, b)))
                    }
                    _ => panic!("scalar arithmetic across different fields"),
                }
            }
        }
    };
}

binop!(Add, add, |a, b, m| (a + b) % m, |a, b| a + b);
binop!(Sub, sub, |a, b, m| (a + m - b) % m, |a, b| a - b);
binop!(Mul, mul, |a, b, m| a * b % m, |a, b| a * b);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
            Scalar::Rat(r) => Scalar::Rat(Box::new(-(**r).clone())),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            _ => write!(f, "{}", self.signed_repr().unwrap_or_default()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
