//! Characters of `G = (Z/n)^2`.
//!
//! The primary coordinates are those of the basis `v1 = (-3)^{-1}(-2, 1)`,
//! `v2 = (-3)^{-1}(1, -2)`, which is a basis whenever `3` does not divide `n`.
//! In it the standard generators read `(1,0) = 2 v1 + v2`, `(0,1) = v1 + 2 v2`,
//! and a monomial `x^a y^b z^c` carries the character `(a - c) v1 + (b - c) v2`
//! under the canonical linearization of `O_C(1)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::arithmetic::{inv3, Modulus, Residue};
use crate::error::Result;

/// A character written as `s v1 + t v2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterV {
    s: u32,
    t: u32,
    modulus: Modulus,
}

/// A character in the standard coordinates of `Hom(G, C*)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterStd {
    x: u32,
    y: u32,
    modulus: Modulus,
}

/// The monomial `x^a y^b z^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Monomial {
    pub const fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial { a, b, c }
    }

    pub const fn degree(&self) -> u32 {
        self.a + self.b + self.c
    }

    /// All monomials of degree `m`, lexicographic in `(a, b)`.
    pub fn of_degree(m: u32) -> impl Iterator<Item = Monomial> {
        (0..=m).flat_map(move |a| (0..=m - a).map(move |b| Monomial::new(a, b, m - a - b)))
    }

    pub fn count_of_degree(m: u32) -> usize {
        let m = m as usize;
        (m + 1) * (m + 2) / 2
    }
}

impl From<[u32; 3]> for Monomial {
    fn from([a, b, c]: [u32; 3]) -> Self {
        Monomial { a, b, c }
    }
}

impl From<Monomial> for [u32; 3] {
    fn from(mon: Monomial) -> Self {
        [mon.a, mon.b, mon.c]
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{} y^{} z^{}", self.a, self.b, self.c)
    }
}

impl CharacterV {
    pub fn new(s: i64, t: i64, modulus: Modulus) -> Self {
        CharacterV {
            s: modulus.reduce(s),
            t: modulus.reduce(t),
            modulus,
        }
    }

    pub fn zero(modulus: Modulus) -> Self {
        CharacterV::new(0, 0, modulus)
    }

    pub fn s(self) -> Residue {
        self.modulus.residue(self.s as i64)
    }

    pub fn t(self) -> Residue {
        self.modulus.residue(self.t as i64)
    }

    /// The raw pair `(s, t)` of canonical representatives.
    #[inline]
    pub fn coords(self) -> (u32, u32) {
        (self.s, self.t)
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.s == 0 && self.t == 0
    }
}

impl fmt::Display for CharacterV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}v1 + {}v2", self.s, self.t)
    }
}

impl Add for CharacterV {
    type Output = CharacterV;

    fn add(self, rhs: CharacterV) -> CharacterV {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        CharacterV::new(
            self.s as i64 + rhs.s as i64,
            self.t as i64 + rhs.t as i64,
            self.modulus,
        )
    }
}

impl Sub for CharacterV {
    type Output = CharacterV;

    fn sub(self, rhs: CharacterV) -> CharacterV {
        self + (-rhs)
    }
}

impl Neg for CharacterV {
    type Output = CharacterV;

    fn neg(self) -> CharacterV {
        CharacterV::new(-(self.s as i64), -(self.t as i64), self.modulus)
    }
}

impl CharacterStd {
    pub fn new(x: i64, y: i64, modulus: Modulus) -> Self {
        CharacterStd {
            x: modulus.reduce(x),
            y: modulus.reduce(y),
            modulus,
        }
    }

    pub fn x(self) -> Residue {
        self.modulus.residue(self.x as i64)
    }

    pub fn y(self) -> Residue {
        self.modulus.residue(self.y as i64)
    }

    pub fn coords(self) -> (u32, u32) {
        (self.x, self.y)
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }
}

/// Character of `x^a y^b z^c` under the canonical linearization.
pub fn monomial_character(mon: Monomial, n: Modulus) -> CharacterV {
    CharacterV::new(mon.a as i64 - mon.c as i64, mon.b as i64 - mon.c as i64, n)
}

pub fn standard_to_v(chi: CharacterStd) -> CharacterV {
    let (x, y) = (chi.x as i64, chi.y as i64);
    CharacterV::new(2 * x + y, x + 2 * y, chi.modulus)
}

/// Inverse of [`standard_to_v`]: `s v1 + t v2 = 3^{-1} (2s - t, 2t - s)`.
pub fn v_to_standard(chi: CharacterV) -> Result<CharacterStd> {
    let third = inv3(chi.modulus)?.value() as i64;
    let (s, t) = (chi.s as i64, chi.t as i64);
    Ok(CharacterStd::new(
        third * (2 * s - t),
        third * (2 * t - s),
        chi.modulus,
    ))
}
