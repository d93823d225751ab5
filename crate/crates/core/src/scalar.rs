//! Exact field elements over Q or a prime field F_p.
//!
//! Every scalar carries enough information to know its field. Arithmetic
//! between elements of different fields is a programming error and panics;
//! all external entry points (parsing, constructors) validate the field
//! up front and report [`Error::FieldMismatch`] instead.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The field all scalars of one computation live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, p: u64 },
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

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl Field {
    /// Builds a prime field, rejecting composites and primes too large for
    /// single-word residues.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^32")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// `num/den` in this field; fails when `den` vanishes in the field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num)
            .checked_div(&self.from_i64(den))
            .ok_or_else(|| Error::Scalar(format!("{num}/{den} is undefined in {self}")))
    }

    fn from_bigrational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rat(q.clone())),
            Field::Prime(p) => {
                let reduce = |n: &BigInt| {
                    let m = n % BigInt::from(p);
                    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
                    m.to_u64().expect("residue fits in u64")
                };
                let num = reduce(q.numer());
                let den = reduce(q.denom());
                if den == 0 {
                    return Err(Error::Scalar(format!(
                        "denominator of {q} vanishes modulo {p}"
                    )));
                }
                let value = ((num as u128 * pow_mod(den, p - 2, p) as u128) % p as u128) as u64;
                Ok(Scalar::Mod { value, p })
            }
        }
    }

    /// Parses the wire format: `"p/q"`, a decimal integer, or `"k mod p"`.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        if let Some((k, p)) = text.split_once("mod") {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| Error::Scalar(format!("bad modulus in {text:?}")))?;
            if self != Field::Prime(p) {
                return Err(Error::FieldMismatch {
                    expected: self.to_string(),
                    found: format!("prime:{p}"),
                });
            }
            let k: BigInt = k
                .trim()
                .parse()
                .map_err(|_| Error::Scalar(format!("bad residue in {text:?}")))?;
            return self.from_bigrational(&BigRational::from_integer(k));
        }
        let q = if let Some((n, d)) = text.split_once('/') {
            let n: BigInt = n
                .trim()
                .parse()
                .map_err(|_| Error::Scalar(format!("bad numerator in {text:?}")))?;
            let d: BigInt = d
                .trim()
                .parse()
                .map_err(|_| Error::Scalar(format!("bad denominator in {text:?}")))?;
            if d.is_zero() {
                return Err(Error::Scalar(format!("zero denominator in {text:?}")));
            }
            BigRational::new(n, d)
        } else {
            let n: BigInt = text
                .parse()
                .map_err(|_| Error::Scalar(format!("cannot parse scalar {text:?}")))?;
            BigRational::from_integer(n)
        };
        self.from_bigrational(&q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rational" | "Q" => Ok(Field::Rational),
            other => {
                let p = other
                    .strip_prefix("prime:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidField(format!("unknown field descriptor {other:?}")))?;
                Field::prime(p)
            }
        }
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(q) => Scalar::Rat(q.recip()),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|inv| self * &inv)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rat(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Mod { value, p } => write!(f, "{value} mod {p}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: ((*a as u128 + *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: ((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: ((*a as u128 * *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, p } => Scalar::Mod { value: (p - value) % p, p: *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}
