//! Distances of binary cyclic codes standing in for quaternary ones.

use crate::cyclic::{CyclicCode, DefiningSet};
use crate::distance::bound::DistanceBound;
use crate::distance::engine::{self, Space};
use crate::error::{Error, Result};
use crate::fields::{multiplicative_order, LinearCode};

/// Minimum distance of the binary code spanned by the (binary) generators
/// of `c`, searched over GF(2) combinations only.
pub fn binary_distance(c: &LinearCode, budget: u64) -> Result<DistanceBound> {
    engine::search(&Space::code(c)?.into_binary()?, budget)
}

/// Distance of the binary cyclic code with defining set `A`, which equals
/// that of the quaternary code when `ord_n(2) = ord_n(4)`.
pub fn binary_shadow_distance(a: &DefiningSet, budget: u64) -> Result<DistanceBound> {
    let n = a.n();
    let o2 = multiplicative_order(2, n);
    let o4 = multiplicative_order(4, n);
    if o2 != o4 {
        return Err(Error::Precondition(format!(
            "binary and quaternary cosets differ at n = {n}: ord(2) = {}, ord(4) = {}",
            o2.unwrap_or(0),
            o4.unwrap_or(0)
        )));
    }
    let c = CyclicCode::new(a.clone())?;
    if !c.generator_polynomial().is_binary() {
        return Err(Error::Invariant("generator polynomial is not binary".into()));
    }
    binary_distance(&c.to_linear(), budget)
}
