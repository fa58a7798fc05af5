//! Fixtures shared by the benchmarks.

use qcyclic::cyclic::{CyclicCode, DefiningSet};
use qcyclic::duadic::qr_splitting;

/// Odd-like and even-like quadratic-residue codes of prime length `p`.
pub fn qr_pair(p: usize) -> (CyclicCode, CyclicCode) {
    let s = qr_splitting(p).expect("prime length");
    let odd = CyclicCode::new(s.s1().clone()).expect("coset-closed");
    let even = CyclicCode::new(s.s1().with_zero()).expect("coset-closed");
    (odd, even)
}

/// Cyclic code from coset leaders.
pub fn from_leaders(n: usize, leaders: &[i64]) -> CyclicCode {
    CyclicCode::new(DefiningSet::from_leaders(n, leaders).expect("valid leaders")).expect("coset-closed")
}
