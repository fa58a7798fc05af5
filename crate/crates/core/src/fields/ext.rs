//! Extension fields GF(2^m) ⊇ GF(4) holding a primitive n-th root of unity.
//!
//! Elements are binary polynomials of degree below `m` packed into
//! `[u64; 4]`, so `m ≤ 256`; every odd `n ≤ 241` needs `m ≤ 238`.
//!
//! The modulus is the first irreducible polynomial of degree `m = 2r` over
//! GF(2), in lexicographic order of the coefficient string read from the
//! constant term upward, in which the class of `x` has order divisible by
//! every prime factor of `3n`. Then `alpha = x^((2^m - 1)/n)` has order
//! exactly `n` and `ω = x^((2^m - 1)/3)` embeds GF(4).

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::fields::{Gf4, Gf4Poly};

const LIMBS: usize = 4;
pub const MAX_DEGREE: usize = 64 * LIMBS;

/// An element of GF(2^m) in polynomial basis.
pub type ExtElem = [u64; LIMBS];

const ZERO: ExtElem = [0; LIMBS];
const ONE: ExtElem = [1, 0, 0, 0];

#[inline]
fn xor_into(acc: &mut [u64], x: &[u64]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a ^= b;
    }
}

#[inline]
fn bit(x: &[u64], i: usize) -> bool {
    (x[i / 64] >> (i % 64)) & 1 == 1
}

#[inline]
fn flip(x: &mut [u64], i: usize) {
    x[i / 64] ^= 1 << (i % 64);
}

fn degree_of(x: &[u64]) -> Option<usize> {
    x.iter().enumerate().rev().find(|(_, &w)| w != 0).map(|(i, &w)| 64 * i + 63 - w.leading_zeros() as usize)
}

/// Carry-less product of two 64-bit words as (low, high).
#[inline]
fn clmul64(a: u64, b: u64) -> (u64, u64) {
    let (mut lo, mut hi) = (0u64, 0u64);
    let mut b = b;
    while b != 0 {
        let i = b.trailing_zeros();
        lo ^= a << i;
        if i > 0 {
            hi ^= a >> (64 - i);
        }
        b &= b - 1;
    }
    (lo, hi)
}

/// Arithmetic modulo a binary polynomial of degree `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Modulus {
    m: usize,
    // Coefficients of the modulus, degree m included.
    bits: [u64; LIMBS + 1],
}

impl Modulus {
    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let mut prod = [0u64; 2 * LIMBS];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let (lo, hi) = clmul64(x, y);
                prod[i + j] ^= lo;
                prod[i + j + 1] ^= hi;
            }
        }
        self.reduce(&mut prod)
    }

    fn reduce(&self, prod: &mut [u64; 2 * LIMBS]) -> ExtElem {
        let top = 2 * self.m;
        for i in (self.m..top).rev() {
            if bit(prod, i) {
                let shift = i - self.m;
                let (ws, bs) = (shift / 64, shift % 64);
                for (k, &w) in self.bits.iter().enumerate() {
                    if w == 0 {
                        continue;
                    }
                    if ws + k < prod.len() {
                        prod[ws + k] ^= w << bs;
                    }
                    if bs > 0 && ws + k + 1 < prod.len() {
                        prod[ws + k + 1] ^= w >> (64 - bs);
                    }
                }
            }
        }
        let mut out = ZERO;
        out.copy_from_slice(&prod[..LIMBS]);
        out
    }

    /// `base^e` where the exponent is given as bits, most significant first.
    fn pow_bits(&self, base: &ExtElem, bits_msb_first: &[bool]) -> ExtElem {
        let mut acc = ONE;
        for &b in bits_msb_first {
            acc = self.mul(&acc, &acc);
            if b {
                acc = self.mul(&acc, base);
            }
        }
        acc
    }

    fn pow(&self, base: &ExtElem, mut e: u64) -> ExtElem {
        let mut acc = ONE;
        let mut b = *base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    fn x(&self) -> ExtElem {
        let mut x = ZERO;
        x[0] = 2;
        x
    }

    /// Rabin's irreducibility test.
    fn is_irreducible(&self) -> bool {
        let m = self.m;
        if !bit(&self.bits, 0) {
            return false;
        }
        let x = self.x();
        // powers[i] = x^(2^i) mod f
        let mut cur = x;
        let mut powers = vec![cur];
        for _ in 0..m {
            cur = self.mul(&cur, &cur);
            powers.push(cur);
        }
        if powers[m] != x {
            return false;
        }
        for p in prime_factors(m as u64) {
            let mut h = powers[m / p as usize];
            xor_into(&mut h, &x);
            let mut f = [0u64; LIMBS + 1];
            f.copy_from_slice(&self.bits);
            let mut g = [0u64; LIMBS + 1];
            g[..LIMBS].copy_from_slice(&h);
            if degree_of(&poly_gcd(f, g)) != Some(0) {
                return false;
            }
        }
        true
    }
}

fn poly_gcd(mut a: [u64; LIMBS + 1], mut b: [u64; LIMBS + 1]) -> [u64; LIMBS + 1] {
    loop {
        let Some(db) = degree_of(&b) else { return a };
        // a <- a mod b
        while let Some(da) = degree_of(&a) {
            if da < db {
                break;
            }
            let shift = da - db;
            for i in (0..=db).rev() {
                if bit(&b, i) {
                    flip(&mut a, i + shift);
                }
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of `a` modulo `n`; `None` if `gcd(a, n) ≠ 1`.
pub fn multiplicative_order(a: i64, n: usize) -> Option<usize> {
    if n == 1 {
        return Some(1);
    }
    let a = a.rem_euclid(n as i64) as u64;
    if gcd(a, n as u64) != 1 {
        return None;
    }
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = x * a % n as u64;
        k += 1;
    }
    Some(k)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Bits of `(2^m - 1) / d`, most significant first; `d` must divide `2^m - 1`.
fn quotient_bits(m: usize, d: u64) -> Vec<bool> {
    let mut r: u64 = 0;
    let mut q = Vec::with_capacity(m);
    for _ in 0..m {
        r = 2 * r + 1;
        if r >= d {
            q.push(true);
            r -= d;
        } else {
            q.push(false);
        }
    }
    debug_assert_eq!(r, 0);
    q
}

/// GF(4^r) with a designated primitive n-th root of unity.
#[derive(Clone, Debug)]
pub struct ExtField {
    n: usize,
    r: usize,
    modulus: Modulus,
    alpha: ExtElem,
    omega: ExtElem,
    // alpha^t for t in 0..n
    alpha_powers: Vec<ExtElem>,
}

impl ExtField {
    /// Builds the field for an odd length `n ≥ 3`.
    pub fn build(n: usize) -> Result<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!("length must be odd and at least 3, got {n}")));
        }
        let r = multiplicative_order(4, n).expect("odd n is coprime to 4");
        let m = 2 * r;
        if m > MAX_DEGREE {
            return Err(Error::InvalidInput(format!(
                "n = {n} needs GF(2^{m}); at most GF(2^{MAX_DEGREE}) is supported"
            )));
        }
        let mut primes = prime_factors(3 * n as u64);
        primes.dedup();
        let exps: Vec<(u64, Vec<bool>)> = primes.iter().map(|&p| (p, quotient_bits(m, p))).collect();

        // Candidate k encodes c_1..c_{m-1} with c_1 as the most significant bit,
        // so increasing k walks the coefficient strings in lexicographic order.
        for k in 0u64.. {
            if m - 1 < 64 && k >> (m - 1) != 0 {
                break;
            }
            let mut bits = [0u64; LIMBS + 1];
            flip(&mut bits, 0);
            flip(&mut bits, m);
            for i in 1..m {
                if m - 1 - i < 64 && (k >> (m - 1 - i)) & 1 == 1 {
                    flip(&mut bits, i);
                }
            }
            let modulus = Modulus { m, bits };
            if !modulus.is_irreducible() {
                continue;
            }
            let x = modulus.x();
            if exps.iter().any(|(_, e)| modulus.pow_bits(&x, e) == ONE) {
                continue;
            }
            let alpha = modulus.pow_bits(&x, &quotient_bits(m, n as u64));
            let omega = modulus.pow_bits(&x, &quotient_bits(m, 3));
            let mut alpha_powers = Vec::with_capacity(n);
            let mut cur = ONE;
            for _ in 0..n {
                alpha_powers.push(cur);
                cur = modulus.mul(&cur, &alpha);
            }
            if cur != ONE {
                return Err(Error::Invariant(format!("alpha^{n} != 1")));
            }
            return Ok(ExtField { n, r, modulus, alpha, omega, alpha_powers });
        }
        Err(Error::Invariant(format!("no admissible modulus of degree {m}")))
    }

    /// Process-wide memoised [`build`](Self::build).
    pub fn shared(n: usize) -> Result<Arc<ExtField>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ExtField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().expect("cache lock").get(&n) {
            return Ok(Arc::clone(f));
        }
        let f = Arc::new(ExtField::build(n)?);
        cache.lock().expect("cache lock").entry(n).or_insert_with(|| Arc::clone(&f));
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Extension degree over GF(4).
    pub fn r(&self) -> usize {
        self.r
    }

    /// Exponents with nonzero coefficient in the modulus, ascending.
    pub fn modulus_exponents(&self) -> Vec<usize> {
        (0..=self.modulus.m).filter(|&i| bit(&self.modulus.bits, i)).collect()
    }

    pub fn alpha(&self) -> ExtElem {
        self.alpha
    }

    /// `alpha^t`, exponent taken mod n.
    pub fn alpha_pow(&self, t: i64) -> ExtElem {
        self.alpha_powers[t.rem_euclid(self.n as i64) as usize]
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        self.modulus.mul(a, b)
    }

    pub fn pow(&self, a: &ExtElem, e: u64) -> ExtElem {
        self.modulus.pow(a, e)
    }

    pub fn one(&self) -> ExtElem {
        ONE
    }

    pub fn zero(&self) -> ExtElem {
        ZERO
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let mut c = *a;
        xor_into(&mut c, b);
        c
    }

    /// Image of a GF(4) scalar in the extension.
    pub fn embed(&self, x: Gf4) -> ExtElem {
        match x.symbol() {
            0 => ZERO,
            1 => ONE,
            2 => self.omega,
            _ => self.mul(&self.omega, &self.omega),
        }
    }

    /// Inverse of [`embed`](Self::embed); `None` outside the subfield.
    pub fn project(&self, e: &ExtElem) -> Option<Gf4> {
        Gf4::ALL.into_iter().find(|&x| self.embed(x) == *e)
    }

    /// Evaluates a GF(4) polynomial at `alpha^t`.
    pub fn eval_at_alpha_pow(&self, p: &Gf4Poly, t: i64) -> ExtElem {
        let z = self.alpha_pow(t);
        p.coeffs().iter().rev().fold(ZERO, |acc, &c| self.add(&self.mul(&acc, &z), &self.embed(c)))
    }

    /// `Π_{j ∈ set} (x - alpha^j)`, which has coefficients in GF(4) when
    /// `set` is closed under multiplication by 4 mod n.
    pub fn minimal_poly(&self, set: &BTreeSet<usize>) -> Result<Gf4Poly> {
        let n = self.n;
        for &j in set {
            if j >= n {
                return Err(Error::InvalidInput(format!("exponent {j} not in Z_{n}")));
            }
            let image = 4 * j % n;
            if !set.contains(&image) {
                return Err(Error::NotCosetClosed { n, element: j, image });
            }
        }
        let mut coeffs: Vec<ExtElem> = vec![ONE];
        for &j in set {
            let root = self.alpha_powers[j];
            // multiply by (x + root)
            let mut next = vec![ZERO; coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                xor_into(&mut next[i + 1], c);
                let t = self.mul(c, &root);
                xor_into(&mut next[i], &t);
            }
            coeffs = next;
        }
        let projected = coeffs
            .iter()
            .map(|c| {
                self.project(c)
                    .ok_or_else(|| Error::Invariant("minimal polynomial coefficient outside GF(4)".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Gf4Poly::new(projected))
    }
}
