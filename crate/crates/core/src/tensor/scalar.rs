//! Exact field elements: arbitrary-precision rationals or residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field every value of a computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    /// GF(p); `p` is prime and below 2^32 so products fit in a `u64`.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p > u64::from(u32::MAX) {
            return Err(Error::Domain(format!("modulus {p} exceeds 2^32")));
        }
        if !is_prime(p) {
            return Err(Error::Domain(format!("modulus {p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Characteristic of the field; 0 for the rationals.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den`; fails when `den` vanishes in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(division_error(self, "0"));
        }
        self.from_rational(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Image of a rational number in this field.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let modulus = BigInt::from(p);
                let num = q.numer().mod_floor(&modulus).to_u64().unwrap_or(0);
                let den = q.denom().mod_floor(&modulus).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(division_error(self, &q.denom().to_string()));
                }
                let num = Scalar::Modular { value: num, modulus: p };
                let den = Scalar::Modular { value: den, modulus: p };
                Ok(&num * &den.inv().expect("nonzero residue"))
            }
        }
    }
}

fn division_error(field: Field, den: &str) -> Error {
    Error::Domain(format!(
        "denominator {den} is not invertible in characteristic {}",
        field.characteristic()
    ))
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "rationals"),
            Field::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        if s == "rationals" {
            return Ok(Field::Rationals);
        }
        let p = s
            .strip_prefix("gf:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Domain(format!("unknown field `{s}` (expected rationals or gf:<p>)")))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
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

/// An exact element of a [`Field`].
///
/// Rationals are kept in lowest terms with a positive denominator, residues in `[0, p)`,
/// so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Canonical text form: `a/b` for rationals, the residue for prime fields.
    pub fn to_canonical(&self) -> String {
        match self {
            Scalar::Rational(q) => format!("{}/{}", q.numer(), q.denom()),
            Scalar::Modular { value, .. } => value.to_string(),
        }
    }

    /// Parses the canonical text form, rejecting anything non-reduced.
    pub fn parse_canonical(text: &str, field: Field) -> std::result::Result<Scalar, String> {
        match field {
            Field::Rationals => {
                let (num, den) = text
                    .split_once('/')
                    .ok_or_else(|| format!("rational `{text}` must be written as a/b"))?;
                let num: BigInt = parse_integer(num).ok_or_else(|| format!("bad numerator in `{text}`"))?;
                let den: BigInt = parse_integer(den).ok_or_else(|| format!("bad denominator in `{text}`"))?;
                if !den.is_positive() {
                    return Err(format!("denominator of `{text}` must be positive"));
                }
                if !num.gcd(&den).is_one() {
                    return Err(format!("rational `{text}` is not in lowest terms"));
                }
                Ok(Scalar::Rational(BigRational::new_raw(num, den)))
            }
            Field::Prime(p) => {
                let digits_ok = !text.is_empty()
                    && text.bytes().all(|b| b.is_ascii_digit())
                    && (text == "0" || !text.starts_with('0'));
                let value = text
                    .parse::<u64>()
                    .ok()
                    .filter(|_| digits_ok)
                    .ok_or_else(|| format!("residue `{text}` is not a canonical integer"))?;
                if value >= p {
                    return Err(format!("residue {value} is not reduced mod {p}"));
                }
                Ok(Scalar::Modular { value, modulus: p })
            }
        }
    }

    fn expect_same_field(&self, other: &Scalar) -> u64 {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => 0,
            (Scalar::Modular { modulus: p, .. }, Scalar::Modular { modulus: q, .. }) if p == q => *p,
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }
}

/// Canonical integer syntax: optional leading `-`, no leading zeros, no `+`.
fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if text.starts_with('-') && digits == "0" {
        return None;
    }
    text.parse().ok()
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match self.expect_same_field(rhs) {
            0 => match (self, rhs) {
                (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
                _ => unreachable!(),
            },
            p => match (self, rhs) {
                (Scalar::Modular { value: a, .. }, Scalar::Modular { value: b, .. }) => Scalar::Modular {
                    value: (a + b) % p,
                    modulus: p,
                },
                _ => unreachable!(),
            },
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match self.expect_same_field(rhs) {
            0 => match (self, rhs) {
                (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
                _ => unreachable!(),
            },
            p => match (self, rhs) {
                (Scalar::Modular { value: a, .. }, Scalar::Modular { value: b, .. }) => Scalar::Modular {
                    value: a * b % p,
                    modulus: p,
                },
                _ => unreachable!(),
            },
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}
