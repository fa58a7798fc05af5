//! The field with four elements.
//!
//! Elements are written `a + b·ω` with `a, b ∈ GF(2)` and `ω² = ω + 1`. The
//! two coefficient bits are stored as `b a` in a `u8`, so that `0 ↔ 0`,
//! `1 ↔ 1`, `2 ↔ ω`, `3 ↔ ω²`. With this encoding addition is XOR.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Gf4(u8);

// MUL[a][b] over the 2-bit encoding.
const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const INV: [u8; 4] = [0, 1, 3, 2];
const CONJ: [u8; 4] = [0, 1, 3, 2];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA2: Gf4 = Gf4(3);

    /// All four elements in encoding order.
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];
    /// The multiplicative group.
    pub const NONZERO: [Gf4; 3] = [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];

    /// Builds an element from its 2-bit symbol; panics on values above 3.
    pub const fn new(symbol: u8) -> Self {
        assert!(symbol < 4, "GF(4) symbol out of range");
        Gf4(symbol)
    }

    #[inline]
    pub const fn symbol(self) -> u8 {
        self.0
    }

    /// Coefficient of 1.
    #[inline]
    pub const fn lo(self) -> bool {
        self.0 & 1 != 0
    }

    /// Coefficient of ω.
    #[inline]
    pub const fn hi(self) -> bool {
        self.0 & 2 != 0
    }

    #[inline]
    pub const fn from_bits(lo: bool, hi: bool) -> Self {
        Gf4((lo as u8) | ((hi as u8) << 1))
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero in GF(4)".into()));
        }
        Ok(Gf4(INV[self.0 as usize]))
    }

    /// Frobenius conjugation `x ↦ x²`.
    #[inline]
    pub const fn conj(self) -> Self {
        Gf4(CONJ[self.0 as usize])
    }

    /// Absolute trace `x + x²`, which lands in GF(2).
    #[inline]
    pub fn trace(self) -> Gf4 {
        self + self.conj()
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Gf4::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }
}

impl TryFrom<u8> for Gf4 {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        if v < 4 {
            Ok(Gf4(v))
        } else {
            Err(Error::InvalidInput(format!("GF(4) symbol {v} is not in 0..=3")))
        }
    }
}

impl From<Gf4> for u8 {
    fn from(x: Gf4) -> u8 {
        x.0
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1",
            2 => "w",
            _ => "w^2",
        })
    }
}
