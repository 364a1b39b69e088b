//! Exact field elements over ℚ and GF(p).
//!
//! Every value carries its field, so matrices and algebras can check that
//! their entries agree. Mixing fields inside an arithmetic operation is a
//! programming error and panics.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible characteristic (exclusive).
pub const PRIME_LIMIT: u32 = 1 << 16;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// GF(p), rejecting composite or oversized moduli.
    pub fn prime(p: u32) -> Result<Field> {
        if !(2..PRIME_LIMIT).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^16")));
        }
        Ok(Field::Prime(p))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Field::Prime(_))
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p as u64),
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
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
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_rational(self, r: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(r.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let num = r.numer().mod_floor(&pb).to_u32().expect("reduced below p");
                let den = r.denom().mod_floor(&pb).to_u32().expect("reduced below p");
                if den == 0 {
                    return Err(Error::Parse(format!(
                        "denominator of {r} vanishes modulo {p}"
                    )));
                }
                let s = Scalar::Mod { value: num, modulus: p };
                Ok(s / Scalar::Mod { value: den, modulus: p })
            }
        }
    }

    /// Parses an integer `"a"` or a fraction `"a/b"`.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let r = match t.split_once('/') {
            Some((a, b)) => {
                let a = BigInt::from_str(a.trim())
                    .map_err(|_| Error::Parse(format!("bad coefficient {text:?}")))?;
                let b = BigInt::from_str(b.trim())
                    .map_err(|_| Error::Parse(format!("bad coefficient {text:?}")))?;
                if b.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {text:?}")));
                }
                BigRational::new(a, b)
            }
            None => BigRational::from_integer(
                BigInt::from_str(t).map_err(|_| Error::Parse(format!("bad coefficient {text:?}")))?,
            ),
        };
        self.from_rational(&r)
    }

    /// A random element. Over ℚ the values are small integers in `[-3, 3]`.
    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        match self {
            Field::Rational => self.from_i64(rng.gen_range(-3..=3)),
            Field::Prime(p) => Scalar::Mod {
                value: rng.gen_range(0..p),
                modulus: p,
            },
        }
    }

    /// All elements of a finite field in increasing order.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(|v| Scalar::Mod { value: v, modulus: p }).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Fully reduced with positive denominator (guaranteed by `BigRational`).
    Rational(BigRational),
    /// `value < modulus`.
    Mod { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    /// Residue of a finite-field element.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Mod { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    fn check(&self, other: &Scalar) {
        assert_eq!(self.field(), other.field(), "field mismatch in scalar arithmetic");
    }
}

fn pow_mod(mut base: u32, mut exp: u32, m: u32) -> u32 {
    let mut acc: u64 = 1;
    let mut b = base as u64 % m as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u64;
        }
        b = b * b % m as u64;
        exp >>= 1;
    }
    base = acc as u32;
    base
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u64 + *modulus as u64 - *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
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
owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

/// Clears denominators of a rational vector, returning integer entries.
pub(crate) fn integer_multiple(values: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in values {
        lcm = lcm.lcm(v.denom());
    }
    values
        .iter()
        .map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_values_are_reduced() {
        let q = Field::Rational;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(x.to_string(), "-3/2");
        let r = x.as_rational().unwrap();
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!((&a + &b).residue(), Some(2));
        assert_eq!((&a * &b).residue(), Some(2));
        assert_eq!((&a - &b).residue(), Some(4));
        assert_eq!((&a / &b).residue(), Some(2)); // 3 * 4^{-1} = 3 * 4 = 12 = 2
        assert_eq!(f.parse("1/2").unwrap().residue(), Some(3));
        assert!(f.parse("1/5").is_err());
        assert_eq!(f.from_i64(-1).residue(), Some(4));
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(65537).is_err());
        assert!(Field::prime(65521).is_ok());
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(Field::Rational.zero().inv().is_none());
        assert!(Field::Prime(7).zero().inv().is_none());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = Field::Rational.one() + Field::Prime(3).one();
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn rat() -> impl Strategy<Value = Scalar> {
            (-50i64..50, 1i64..20).prop_map(|(a, b)| {
                Scalar::Rational(BigRational::new(BigInt::from(a), BigInt::from(b)))
            })
        }

        proptest! {
            #[test]
            fn add_then_sub_is_identity_q(a in rat(), b in rat()) {
                prop_assert_eq!(&(&a + &b) - &b, a);
            }

            #[test]
            fn add_then_sub_is_identity_fp(a in 0u32..97, b in 0u32..97) {
                let f = Field::Prime(97);
                let (x, y) = (f.from_i64(a as i64), f.from_i64(b as i64));
                prop_assert_eq!(&(&x + &y) - &y, x);
            }

            #[test]
            fn nonzero_times_inverse_is_one(v in 1u32..65521) {
                let f = Field::Prime(65521);
                let x = f.from_i64(v as i64);
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
        }
    }
}
