//! Exact scalars: arbitrary-precision rationals and prime-field residues.
//!
//! Every computation runs over a single [`Field`]. Scalars from different
//! fields never mix; the matrix layer checks the descriptor before doing any
//! arithmetic, and the scalar operators panic if that contract is broken.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field descriptor shared by every scalar in one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Prime field descriptor; rejects composite moduli and moduli that do
    /// not fit the 32-bit residue arithmetic.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::Field(format!(
                "{p} is not a supported prime modulus"
            )));
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
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den` in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// Parses a scalar literal such as `"3"`, `"-3/2"` in this field.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num)
            .map_err(|_| Error::Parse(format!("invalid scalar literal {text:?}")))?;
        let den = BigInt::from_str(den)
            .map_err(|_| Error::Parse(format!("invalid scalar literal {text:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!(
                "scalar literal {text:?} has zero denominator"
            )));
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((x % &m) + &m) % &m;
                    r.to_u64().expect("residue fits in u64")
                };
                let (n, d) = (reduce(&num), reduce(&den));
                if d == 0 {
                    return Err(Error::Parse(format!(
                        "scalar literal {text:?} has denominator divisible by {p}"
                    )));
                }
                let n = Scalar::Prime {
                    value: n,
                    modulus: p,
                };
                n.div(&Scalar::Prime {
                    value: d,
                    modulus: p,
                })
            }
        }
    }

    /// Smallest positive primitive `n`-th root of unity, if the field has one.
    pub fn primitive_root_of_unity(self, n: u64) -> Option<Scalar> {
        match self {
            Field::Rational => match n {
                1 => Some(self.one()),
                2 => Some(self.from_i64(-1)),
                _ => None,
            },
            Field::Prime(p) => {
                if n == 0 || (p - 1) % n != 0 {
                    return None;
                }
                let prime_factors = factorize(n);
                (1..p)
                    .map(|c| Scalar::Prime {
                        value: c,
                        modulus: p,
                    })
                    .find(|c| {
                        c.pow(n).is_one() && prime_factors.iter().all(|q| !c.pow(n / q).is_one())
                    })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("invalid field descriptor {s:?}")))?;
            return Field::prime(p);
        }
        Err(Error::Parse(format!(
            "invalid field descriptor {s:?} (expected Q or Fp:<prime>)"
        )))
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with positive denominator (maintained
/// by `BigRational`); residues are always reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(q) => {
                if q.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(q.recip()))
                }
            }
            Scalar::Prime { value, modulus } => {
                if *value == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Prime {
                    value: pow_mod(*value, modulus - 2, *modulus),
                    modulus: *modulus,
                })
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Canonical text form: `"n"` or `"n/d"` for rationals, the residue in
    /// `[0, p)` for prime fields.
    pub fn to_literal(&self) -> String {
        self.to_string()
    }

    /// Re-expresses this scalar in `target`. Rationals reduce into any prime
    /// field whose characteristic does not divide the denominator.
    pub fn convert(&self, target: Field) -> Result<Scalar> {
        if self.field() == target {
            return Ok(self.clone());
        }
        match (self, target) {
            (Scalar::Rational(_), Field::Prime(_)) => target.parse(&self.to_literal()),
            _ => Err(Error::FieldMismatch {
                expected: target,
                found: self.field(),
            }),
        }
    }
}

fn check_same(a: &Scalar, b: &Scalar) {
    if let (Scalar::Prime { modulus: p, .. }, Scalar::Prime { modulus: q, .. }) = (a, b) {
        assert_eq!(p, q, "prime field scalars with different moduli");
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        check_same(self, rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                let s = a + b;
                Scalar::Prime {
                    value: if s >= *modulus { s - modulus } else { s },
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed-field scalar addition"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        check_same(self, rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: if a >= b { a - b } else { a + modulus - b },
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed-field scalar subtraction"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        check_same(self, rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: a * b % modulus,
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed-field scalar multiplication"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(_) => write!(f, "{self}"),
            Scalar::Prime { value, modulus } => write!(f, "{value} (mod {modulus})"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals_round_trip() {
        let q = Field::Rational;
        for lit in ["0", "1", "-3/2", "17", "5/7"] {
            assert_eq!(q.parse(lit).unwrap().to_literal(), lit);
        }
        assert_eq!(q.parse("4/6").unwrap().to_literal(), "2/3");
        assert_eq!(q.parse("3/-6").unwrap().to_literal(), "-1/2");
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(matches!(Field::Rational.parse("1/0"), Err(Error::Parse(_))));
        let f = Field::prime(7).unwrap();
        assert!(matches!(f.parse("1/14"), Err(Error::Parse(_))));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(101).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a.to_literal(), "100");
        let half = f.parse("1/2").unwrap();
        assert!((&half + &half).is_one());
        assert_eq!(f.from_i64(5).inv().unwrap().to_literal(), "81");
        assert!(f.zero().inv().is_err());
    }

    #[test]
    fn field_descriptors() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("Fp:101".parse::<Field>().unwrap(), Field::Prime(101));
        assert!("Fp:100".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
        assert_eq!(Field::Prime(101).to_string(), "Fp:101");
    }

    #[test]
    fn primitive_roots() {
        let f = Field::prime(7).unwrap();
        // 3 has order 6 mod 7; 2 has order 3.
        assert_eq!(f.primitive_root_of_unity(6).unwrap().to_literal(), "3");
        assert_eq!(f.primitive_root_of_unity(3).unwrap().to_literal(), "2");
        assert!(f.primitive_root_of_unity(4).is_none());
        assert_eq!(
            Field::Rational
                .primitive_root_of_unity(2)
                .unwrap()
                .to_literal(),
            "-1"
        );
        assert!(Field::Rational.primitive_root_of_unity(3).is_none());
    }
}
