//! Polynomials over GF(4), little-endian coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{Gf4, Gf4Vector};

/// A polynomial `Σ c_i x^i` with no trailing zero coefficients.
///
/// Serialises as the little-endian array of symbols `0..=3`
/// (`0, 1, ω, ω²`); the zero polynomial is the empty array.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Gf4>", into = "Vec<Gf4>")]
pub struct Gf4Poly(Vec<Gf4>);

impl From<Vec<Gf4>> for Gf4Poly {
    fn from(c: Vec<Gf4>) -> Self {
        Gf4Poly::new(c)
    }
}

impl From<Gf4Poly> for Vec<Gf4> {
    fn from(p: Gf4Poly) -> Self {
        p.0
    }
}

impl Gf4Poly {
    pub fn new(mut coeffs: Vec<Gf4>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Gf4Poly(coeffs)
    }

    pub fn zero() -> Self {
        Gf4Poly(Vec::new())
    }

    pub fn one() -> Self {
        Gf4Poly(vec![Gf4::ONE])
    }

    /// `x^n - 1`.
    pub fn x_n_minus_1(n: usize) -> Self {
        let mut c = vec![Gf4::ZERO; n + 1];
        c[0] = Gf4::ONE;
        c[n] = Gf4::ONE;
        Gf4Poly::new(c)
    }

    pub fn coeffs(&self) -> &[Gf4] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Gf4 {
        self.0.get(i).copied().unwrap_or(Gf4::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.0.last() == Some(&Gf4::ONE)
    }

    pub fn add(&self, other: &Gf4Poly) -> Gf4Poly {
        let len = self.0.len().max(other.0.len());
        Gf4Poly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Gf4Poly) -> Gf4Poly {
        if self.is_zero() || other.is_zero() {
            return Gf4Poly::zero();
        }
        let mut c = vec![Gf4::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Gf4Poly::new(c)
    }

    /// Quotient and remainder of `self / divisor`.
    pub fn div_rem(&self, divisor: &Gf4Poly) -> Result<(Gf4Poly, Gf4Poly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Domain("polynomial division by zero".into()));
        };
        let lead_inv = divisor.0[dd].inv()?;
        let mut rem = self.0.clone();
        let Some(sd) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Gf4Poly::zero(), self.clone()));
        };
        let mut quot = vec![Gf4::ZERO; sd - dd + 1];
        for i in (dd..=sd).rev() {
            let c = rem[i] * lead_inv;
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.0.iter().enumerate() {
                rem[i - dd + j] += c * d;
            }
        }
        Ok((Gf4Poly::new(quot), Gf4Poly::new(rem)))
    }

    /// Whether `self` divides `other` exactly.
    pub fn divides(&self, other: &Gf4Poly) -> bool {
        other.div_rem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    /// Coefficient vector of length `n` (`x^i` at position `i`).
    pub fn to_vector(&self, n: usize) -> Result<Gf4Vector> {
        if self.0.len() > n {
            return Err(Error::InvalidInput(format!(
                "polynomial of degree {} does not fit length {n}",
                self.0.len() - 1
            )));
        }
        let mut v = Gf4Vector::zeros(n);
        for (i, &c) in self.0.iter().enumerate() {
            v.set(i, c);
        }
        Ok(v)
    }

    pub fn from_vector(v: &Gf4Vector) -> Gf4Poly {
        Gf4Poly::new(v.symbols())
    }

    /// Coefficients as symbols `0..=3`.
    pub fn symbols(&self) -> Vec<u8> {
        self.0.iter().map(|c| c.symbol()).collect()
    }

    /// Every coefficient lies in GF(2).
    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|c| !c.hi())
    }
}

impl fmt::Debug for Gf4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, *c == Gf4::ONE) {
                (0, _) => write!(f, "{c}")?,
                (_, true) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}
