//! Minimum distances: exact search, budgeted intervals, fixed subcodes,
//! binary shadows and square-root bounds.

mod bound;
mod engine;
mod fixed;
mod packed;
mod shadow;
mod sqrt;

pub use bound::{compose_bounds, odd_order_lower_bound, order_two_lower_bound, DistanceBound, Provenance};
pub use fixed::{
    bound_from_fixed_subcode, fixed_subcode, fixed_subcode_coincidence, fixed_subcode_lower_bound, CoincidenceReport,
    FixedSubcode, FixedSubcodeBound,
};
pub use shadow::{binary_distance, binary_shadow_distance};
pub use sqrt::{square_root_bounds, square_root_lower_bound, SquareRootReport};

use crate::error::Result;
use crate::fields::LinearCode;
use engine::Space;

/// Default work limit, in codewords visited.
pub const DEFAULT_BUDGET: u64 = 1 << 30;

/// Minimum distance of `c`: exact by enumeration when `4^dim ≤ budget`,
/// otherwise an information-set search that stops at `budget` words.
pub fn min_distance_exact(c: &LinearCode, budget: u64) -> Result<DistanceBound> {
    engine::search(&Space::code(c)?, budget)
}

/// Minimum weight of the words of `c` that are not in `sub`.
pub fn min_weight_difference(c: &LinearCode, sub: &LinearCode, budget: u64) -> Result<DistanceBound> {
    engine::search(&Space::difference(c, sub)?, budget)
}

/// `A_0, …, A_n` for `c`; fails when `4^dim` exceeds the budget.
pub fn weight_distribution(c: &LinearCode, budget: u64) -> Result<Vec<u64>> {
    if c.is_zero() {
        let mut h = vec![0; c.len() + 1];
        h[0] = 1;
        return Ok(h);
    }
    let mut h = engine::histogram(&Space::code(c)?, budget)?;
    h[0] = 1;
    Ok(h)
}

/// Weight counts of the words of `c` outside `sub`.
pub fn weight_distribution_difference(c: &LinearCode, sub: &LinearCode, budget: u64) -> Result<Vec<u64>> {
    engine::histogram(&Space::difference(c, sub)?, budget)
}
