//! Vectors over GF(4) stored as two bit planes.

use std::fmt;

use crate::error::{Error, Result};
use crate::fields::Gf4;

/// A vector in GF(4)^n.
///
/// `lo` carries the coefficient of 1 and `hi` the coefficient of ω of every
/// symbol. Bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf4Vector {
    len: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
}

#[inline]
fn words(len: usize) -> usize {
    len.div_ceil(64)
}

#[inline]
fn parity(x: u32) -> bool {
    x & 1 == 1
}

impl Gf4Vector {
    pub fn zeros(len: usize) -> Self {
        Gf4Vector { len, lo: vec![0; words(len)], hi: vec![0; words(len)] }
    }

    /// The all-ones vector `j`.
    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, Gf4::ONE);
        }
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, Gf4::ONE);
        v
    }

    pub fn from_symbols(symbols: &[Gf4]) -> Self {
        let mut v = Self::zeros(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            v.set(i, s);
        }
        v
    }

    /// Builds a vector from raw planes; bits past `len` are cleared.
    pub fn from_planes(len: usize, mut lo: Vec<u64>, mut hi: Vec<u64>) -> Self {
        lo.resize(words(len), 0);
        hi.resize(words(len), 0);
        let mut v = Gf4Vector { len, lo, hi };
        v.clear_tail();
        v
    }

    fn clear_tail(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            let mask = (1u64 << r) - 1;
            if let Some(w) = self.lo.last_mut() {
                *w &= mask;
            }
            if let Some(w) = self.hi.last_mut() {
                *w &= mask;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn lo_plane(&self) -> &[u64] {
        &self.lo
    }

    pub fn hi_plane(&self) -> &[u64] {
        &self.hi
    }

    #[inline]
    pub fn get(&self, i: usize) -> Gf4 {
        debug_assert!(i < self.len);
        let (w, b) = (i / 64, i % 64);
        Gf4::from_bits((self.lo[w] >> b) & 1 == 1, (self.hi[w] >> b) & 1 == 1)
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: Gf4) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let (w, b) = (i / 64, i % 64);
        let m = 1u64 << b;
        self.lo[w] = (self.lo[w] & !m) | if x.lo() { m } else { 0 };
        self.hi[w] = (self.hi[w] & !m) | if x.hi() { m } else { 0 };
    }

    pub fn symbols(&self) -> Vec<Gf4> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.lo.iter().chain(&self.hi).all(|&w| w == 0)
    }

    /// Number of nonzero positions.
    pub fn weight(&self) -> usize {
        self.lo.iter().zip(&self.hi).map(|(a, b)| (a | b).count_ones() as usize).sum()
    }

    /// Sum of coordinates; zero exactly for even-like vectors.
    pub fn coordinate_sum(&self) -> Gf4 {
        let lo: u32 = self.lo.iter().map(|w| w.count_ones()).sum();
        let hi: u32 = self.hi.iter().map(|w| w.count_ones()).sum();
        Gf4::from_bits(parity(lo), parity(hi))
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch { left: self.len, right: other.len });
        }
        Ok(())
    }

    /// In-place `self += other`. Panics on length mismatch.
    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (a, b) in self.lo.iter_mut().zip(&other.lo) {
            *a ^= b;
        }
        for (a, b) in self.hi.iter_mut().zip(&other.hi) {
            *a ^= b;
        }
    }

    /// In-place `self += c·other`.
    pub fn add_scaled(&mut self, c: Gf4, other: &Self) {
        match c.symbol() {
            0 => {}
            1 => self.add_assign(other),
            _ => self.add_assign(&other.scale(c)),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    /// Scalar multiple `c·self`.
    pub fn scale(&self, c: Gf4) -> Self {
        let (lo, hi) = match c.symbol() {
            0 => (vec![0; self.lo.len()], vec![0; self.hi.len()]),
            1 => (self.lo.clone(), self.hi.clone()),
            // ω(a + bω) = b + (a + b)ω
            2 => (self.hi.clone(), self.lo.iter().zip(&self.hi).map(|(a, b)| a ^ b).collect()),
            // ω²(a + bω) = (a + b) + aω
            _ => (self.lo.iter().zip(&self.hi).map(|(a, b)| a ^ b).collect(), self.lo.clone()),
        };
        Gf4Vector { len: self.len, lo, hi }
    }

    /// Coordinate-wise Frobenius `x ↦ x²`.
    pub fn conj(&self) -> Self {
        Gf4Vector {
            len: self.len,
            lo: self.lo.iter().zip(&self.hi).map(|(a, b)| a ^ b).collect(),
            hi: self.hi.clone(),
        }
    }

    /// `Σ u_i v_i`.
    pub fn euclidean_inner(&self, other: &Self) -> Result<Gf4> {
        self.check_len(other)?;
        Ok(self.inner_planes(&other.lo, &other.hi))
    }

    /// `⟨u, v⟩_h = Σ u_i · conj(v_i)`.
    pub fn hermitian_inner(&self, other: &Self) -> Result<Gf4> {
        self.check_len(other)?;
        let c: Vec<u64> = other.lo.iter().zip(&other.hi).map(|(a, b)| a ^ b).collect();
        Ok(self.inner_planes(&c, &other.hi))
    }

    /// `⟨v, v⟩_h`, which equals the weight mod 2.
    pub fn norm(&self) -> Gf4 {
        self.hermitian_inner(self).expect("same length")
    }

    fn inner_planes(&self, c: &[u64], d: &[u64]) -> Gf4 {
        // (a + bω)(c + dω) = ac + bd + (ad + bc + bd)ω
        let mut lo = 0u32;
        let mut hi = 0u32;
        for i in 0..self.lo.len() {
            let (a, b) = (self.lo[i], self.hi[i]);
            lo += ((a & c[i]) ^ (b & d[i])).count_ones();
            hi += ((a & d[i]) ^ (b & c[i]) ^ (b & d[i])).count_ones();
        }
        Gf4::from_bits(parity(lo), parity(hi))
    }

    /// Concatenation `(self | tail)`.
    pub fn concat(&self, tail: &Self) -> Self {
        let mut v = Self::zeros(self.len + tail.len);
        for i in 0..self.len {
            v.set(i, self.get(i));
        }
        for i in 0..tail.len {
            v.set(self.len + i, tail.get(i));
        }
        v
    }

    /// The vector with coordinates taken from `positions` in order.
    pub fn select(&self, positions: &[usize]) -> Self {
        let mut v = Self::zeros(positions.len());
        for (j, &p) in positions.iter().enumerate() {
            v.set(j, self.get(p));
        }
        v
    }

    /// Zero-padded (or truncated) copy of length `len`.
    pub fn resized(&self, len: usize) -> Self {
        let mut v = Self::from_planes(len, self.lo.clone(), self.hi.clone());
        v.clear_tail();
        v
    }

    /// Cyclic shift by `s` to the right: `(c_{n-1}, c_0, …)` for `s = 1`.
    pub fn cyclic_shift(&self, s: usize) -> Self {
        let n = self.len;
        let mut v = Self::zeros(n);
        if n == 0 {
            return v;
        }
        for i in 0..n {
            v.set((i + s) % n, self.get(i));
        }
        v
    }
}

impl fmt::Debug for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", self.get(i).symbol())?;
        }
        write!(f, "]")
    }
}
