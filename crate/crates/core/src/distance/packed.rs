//! Fixed-width bit-plane words for the search loops.

use crate::fields::Gf4Vector;

pub(crate) const MAX_WORDS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Packed<const W: usize> {
    lo: [u64; W],
    hi: [u64; W],
}

impl<const W: usize> Packed<W> {
    pub const ZERO: Self = Packed { lo: [0; W], hi: [0; W] };

    pub fn from_vector(v: &Gf4Vector) -> Self {
        let mut p = Self::ZERO;
        p.lo[..v.lo_plane().len()].copy_from_slice(v.lo_plane());
        p.hi[..v.hi_plane().len()].copy_from_slice(v.hi_plane());
        p
    }

    #[inline(always)]
    pub fn add(&mut self, o: &Self) {
        for i in 0..W {
            self.lo[i] ^= o.lo[i];
            self.hi[i] ^= o.hi[i];
        }
    }

    #[inline(always)]
    pub fn sum(&self, o: &Self) -> Self {
        let mut s = *self;
        s.add(o);
        s
    }

    /// Nonzero symbols inside `mask`.
    #[inline(always)]
    pub fn weight(&self, mask: &[u64; W]) -> u32 {
        let mut w = 0;
        for i in 0..W {
            w += ((self.lo[i] | self.hi[i]) & mask[i]).count_ones();
        }
        w
    }

    /// Some symbol inside `mask` is nonzero.
    #[inline(always)]
    pub fn any(&self, mask: &[u64; W]) -> bool {
        (0..W).any(|i| (self.lo[i] | self.hi[i]) & mask[i] != 0)
    }

    /// `ω·(a + bω) = b + (a + b)ω`.
    pub fn times_omega(&self) -> Self {
        let mut p = Self::ZERO;
        for i in 0..W {
            p.lo[i] = self.hi[i];
            p.hi[i] = self.lo[i] ^ self.hi[i];
        }
        p
    }
}

/// Mask with bits `from..to` set.
pub(crate) fn range_mask<const W: usize>(from: usize, to: usize) -> [u64; W] {
    let mut m = [0u64; W];
    for b in from..to {
        m[b / 64] |= 1 << (b % 64);
    }
    m
}

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64).max(1)
}

/// Runs `$body` with the const `$w` bound to the word count needed for `$bits`.
macro_rules! with_width {
    ($bits:expr, $w:ident => $body:expr) => {
        match $crate::distance::packed::words_for($bits) {
            1 => { const $w: usize = 1; $body }
            2 => { const $w: usize = 2; $body }
            3 => { const $w: usize = 3; $body }
            4 => { const $w: usize = 4; $body }
            5 => { const $w: usize = 5; $body }
            6 => { const $w: usize = 6; $body }
            7 => { const $w: usize = 7; $body }
            8 => { const $w: usize = 8; $body }
            _ => unreachable!("width checked by caller"),
        }
    };
}

pub(crate) use with_width;
