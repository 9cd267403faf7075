//! Exact coefficient arithmetic: the rationals and prime fields.
//!
//! Everything downstream is generic over [`Scalar`].  No floating point
//! appears anywhere in the engine; ranks and dimensions are exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field: characteristic 0 means the rationals, a prime p means
/// the field with p elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec { characteristic: p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            Ok(Self::rationals())
        } else {
            Self::prime(characteristic)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.characteristic)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field scalar.
///
/// `embed` is the ring map from the integers; it is the only way integer
/// coefficients enter matrices.  Algorithms are allowed to fabricate `zero()`,
/// `one()` and negations thereof without a [`FieldSpec`]; those literals are
/// correct in every characteristic.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn embed(n: i64, field: &FieldSpec) -> Self;

    /// Multiplicative inverse.  Panics on zero.
    fn inv(&self) -> Self;
}

impl Scalar for BigRational {
    fn embed(n: i64, _field: &FieldSpec) -> Self {
        BigRational::from_integer(n.into())
    }

    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Element of a prime field with a runtime modulus.
///
/// Each element carries its modulus so matrices over different primes cannot
/// be mixed by accident.  Elements created by `zero()`/`one()` have modulus 0
/// ("integer literal") and adopt the modulus of the first genuine field
/// element they meet; literals are confined to 0 and ±1, which reduce
/// correctly modulo any prime.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    value: i64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        debug_assert!(modulus >= 2);
        Fp {
            value: value.rem_euclid(modulus as i64),
            modulus,
        }
    }

    fn canon(value: i64, modulus: u64) -> Fp {
        if modulus == 0 {
            Fp { value, modulus: 0 }
        } else {
            Fp {
                value: value.rem_euclid(modulus as i64),
                modulus,
            }
        }
    }

    fn unify(a: Fp, b: Fp) -> (Fp, Fp, u64) {
        match (a.modulus, b.modulus) {
            (0, 0) => (a, b, 0),
            (0, p) => (Fp::canon(a.value, p), b, p),
            (p, 0) => (a, Fp::canon(b.value, p), p),
            (p, q) => {
                assert_eq!(p, q, "mixed prime-field moduli {p} and {q}");
                (a, b, p)
            }
        }
    }

    pub fn value(&self) -> i64 {
        self.value
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Fp::unify(*self, *other);
        a.value == b.value
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::unify(self, rhs);
        Fp::canon(a.value.checked_add(b.value).expect("literal overflow"), p)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::canon(-self.value, self.modulus)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::unify(self, rhs);
        if p == 0 {
            Fp::canon(a.value.checked_mul(b.value).expect("literal overflow"), 0)
        } else {
            // widen to i128 so p up to ~2^62 cannot overflow
            let v = (a.value as i128) * (b.value as i128) % (p as i128);
            Fp::canon(v as i64, p)
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Scalar for Fp {
    fn embed(n: i64, field: &FieldSpec) -> Self {
        let p = field.characteristic();
        assert!(p >= 2, "Fp scalars need a prime characteristic");
        Fp::new(n, p)
    }

    fn inv(&self) -> Self {
        match self.modulus {
            0 => match self.value {
                1 => *self,
                -1 => *self,
                0 => panic!("inverse of zero"),
                v => panic!("inverse of integer literal {v} without a modulus"),
            },
            p => {
                assert!(self.value != 0, "inverse of zero");
                // extended Euclid on (value, p)
                let (mut r0, mut r1) = (p as i64, self.value);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                debug_assert_eq!(r0, 1);
                Fp::canon(t0, p)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(32003).is_ok());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(91).is_err()); // 7 * 13
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let a = Fp::embed(10, &f); // 3
        let b = Fp::embed(-2, &f); // 5
        assert_eq!(a + b, Fp::embed(1, &f));
        assert_eq!(a * b, Fp::embed(15, &f));
        assert_eq!(a.inv() * a, Fp::embed(1, &f));
        assert_eq!(-a, Fp::embed(4, &f));
    }

    #[test]
    fn fp_literals_adopt_modulus() {
        let f = FieldSpec::prime(2).unwrap();
        let one = Fp::one();
        let x = Fp::embed(1, &f);
        // 1 + 1 = 0 in characteristic 2, even when one side is a literal
        assert!((one + x).is_zero());
        assert_eq!(-x, x);
    }

    #[test]
    fn rational_embed() {
        let f = FieldSpec::rationals();
        let a = <BigRational as Scalar>::embed(-3, &f);
        assert_eq!(a, BigRational::from_integer((-3).into()));
        assert_eq!(a.clone().inv() * a, BigRational::one());
    }
}
