//! Exact residue arithmetic in `Z/n`.
//!
//! Every [`Residue`] carries its [`Modulus`]. Mixing moduli is reported as
//! [`Error::ModulusMismatch`] by the `try_*` methods; the operator impls panic
//! instead, since within one computation the modulus never varies.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exclusive upper bound on `n`. Keeps every product of two residues, plus
/// small linear combinations of those, well inside `i64`.
pub const MAX_MODULUS: u32 = 1 << 15;

/// Smallest supported modulus (the Fermat curve needs degree at least 5).
pub const MIN_MODULUS: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(n: u32) -> Result<Self> {
        if (MIN_MODULUS..MAX_MODULUS).contains(&n) {
            Ok(Modulus(n))
        } else {
            Err(Error::InvalidModulus(n as u64))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Whether `n` is coprime to `k`.
    pub fn coprime_to(self, k: u32) -> bool {
        gcd(self.0 as u64, k as u64) == 1
    }

    /// `gcd(n, 6) = 1`: the condition for the surface construction.
    pub fn require_surface(self) -> Result<()> {
        if self.coprime_to(6) {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!(
                "n = {} must be coprime to 6",
                self.0
            )))
        }
    }

    /// `gcd(n, 30) = 1` and `n >= 7`: the hypotheses of the existence theorem.
    pub fn require_theorem(self) -> Result<()> {
        if self.0 >= 7 && self.coprime_to(30) {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!(
                "n = {} must satisfy n >= 7 and gcd(n, 30) = 1",
                self.0
            )))
        }
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn residue(self, x: i64) -> Residue {
        Residue {
            value: self.reduce(x),
            modulus: self,
        }
    }

    /// All units of `Z/n` in increasing order.
    pub fn units(self) -> impl Iterator<Item = Residue> {
        (1..self.0 as i64)
            .map(move |x| self.residue(x))
            .filter(|r| r.is_unit())
    }
}

impl TryFrom<u32> for Modulus {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        Modulus::new(n)
    }
}

impl From<Modulus> for u32 {
    fn from(n: Modulus) -> u32 {
        n.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of `Z/n` held by its canonical representative in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u32,
    modulus: Modulus,
}

/// `x mod n` as a canonical residue.
pub fn canonicalize(x: i64, n: Modulus) -> Residue {
    n.residue(x)
}

pub fn is_unit(x: Residue) -> bool {
    x.is_unit()
}

pub fn inverse(x: Residue) -> Result<Residue> {
    x.inverse()
}

/// `3^{-1} mod n`.
pub fn inv3(n: Modulus) -> Result<Residue> {
    n.residue(3).inverse()
}

impl Residue {
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn is_unit(self) -> bool {
        gcd(self.value as u64, self.modulus.0 as u64) == 1
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inverse(self) -> Result<Residue> {
        let n = self.modulus.0 as i64;
        let (g, x, _) = ext_gcd(self.value as i64, n);
        if g != 1 {
            return Err(Error::NotAUnit {
                value: self.value,
                modulus: self.modulus.0,
            });
        }
        Ok(self.modulus.residue(x))
    }

    fn check(self, other: Residue) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus.0,
                right: other.modulus.0,
            })
        }
    }

    pub fn try_add(self, other: Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self.modulus.residue(self.value as i64 + other.value as i64))
    }

    pub fn try_sub(self, other: Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self.modulus.residue(self.value as i64 - other.value as i64))
    }

    pub fn try_mul(self, other: Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self.modulus.residue(self.value as i64 * other.value as i64))
    }

    /// Multiply by a plain integer.
    pub fn scale(self, k: i64) -> Residue {
        self.modulus.residue(self.value as i64 * k)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

macro_rules! checked_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for Residue {
            type Output = Residue;

            fn $method(self, rhs: Residue) -> Residue {
                match self.$checked(rhs) {
                    Ok(r) => r,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    };
}

checked_op!(Add, add, try_add);
checked_op!(Sub, sub, try_sub);
checked_op!(Mul, mul, try_mul);

impl Neg for Residue {
    type Output = Residue;

    fn neg(self) -> Residue {
        self.modulus.residue(-(self.value as i64))
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u32) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn canonical_representatives() {
        assert_eq!(canonicalize(-1, m(7)).value(), 6);
        assert_eq!(canonicalize(0, m(11)).value(), 0);
        assert_eq!(canonicalize(15, m(7)).value(), 1);
    }

    #[test]
    fn units() {
        assert!(is_unit(m(7).residue(2)));
        assert!(!is_unit(m(35).residue(5)));
        assert!(!is_unit(m(7).residue(0)));
    }

    #[test]
    fn inverses() {
        assert_eq!(inverse(m(7).residue(2)).unwrap().value(), 4);
        assert_eq!(inverse(m(7).residue(3)).unwrap().value(), 5);
        assert_eq!(inverse(m(11).residue(1)).unwrap().value(), 1);
        assert_eq!(
            inverse(m(35).residue(14)),
            Err(Error::NotAUnit {
                value: 14,
                modulus: 35
            })
        );
    }

    #[test]
    fn inverse_of_three() {
        assert_eq!(inv3(m(7)).unwrap().value(), 5);
        assert_eq!(inv3(m(5)).unwrap().value(), 2);
        assert_eq!(inv3(m(11)).unwrap().value(), 4);
        assert!(matches!(inv3(m(9)), Err(Error::NotAUnit { .. })));
    }

    #[test]
    fn modulus_bounds() {
        assert!(Modulus::new(4).is_err());
        assert!(Modulus::new(MAX_MODULUS).is_err());
        assert!(Modulus::new(MAX_MODULUS - 1).is_ok());
    }

    #[test]
    fn mixed_moduli_are_rejected() {
        let a = m(7).residue(3);
        let b = m(11).residue(3);
        assert_eq!(
            a.try_add(b),
            Err(Error::ModulusMismatch { left: 7, right: 11 })
        );
        assert!(a.try_mul(b).is_err());
        assert!(a.try_sub(b).is_err());
    }

    #[test]
    #[should_panic(expected = "modulus mismatch")]
    fn operator_panics_on_mixed_moduli() {
        let _ = m(7).residue(1) + m(11).residue(1);
    }

    #[test]
    fn theorem_hypotheses() {
        assert!(m(7).require_theorem().is_ok());
        assert!(m(49).require_theorem().is_ok());
        assert!(m(25).require_theorem().is_err());
        assert!(m(5).require_theorem().is_err());
        assert!(m(25).require_surface().is_ok());
        assert!(m(9).require_surface().is_err());
    }
}
