//! Square-root bounds on the odd-like weights of duadic codes.

use serde::Serialize;

use crate::distance::bound::DistanceBound;
use crate::distance::{min_distance_exact, min_weight_difference};
use crate::duadic::{Check, DuadicPair};
use crate::error::Result;

/// Smallest `d` with `d² ≥ n`, or with `d² − d + 1 ≥ n` when `μ_{-1}`
/// gives the splitting.
pub fn square_root_lower_bound(n: usize, mu_minus_1: bool) -> usize {
    (1..).find(|&d| if mu_minus_1 { d * d - d + 1 >= n } else { d * d >= n }).expect("unbounded search")
}

#[derive(Clone, Debug, Serialize)]
pub struct SquareRootReport {
    pub n: usize,
    /// Minimum weight of `D ∖ C` for the first odd-like/even-like pair.
    pub d_o: DistanceBound,
    /// `d(D)`, computed for quadratic-residue splittings.
    pub d_odd_code: Option<DistanceBound>,
    pub mu_minus_1: bool,
    pub checks: Vec<Check>,
    /// Some assertion was skipped because a distance was not settled.
    pub partial: bool,
}

impl SquareRootReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn square_root_bounds(pair: &DuadicPair, budget: u64) -> Result<SquareRootReport> {
    let n = pair.n();
    let odd = pair.odd1.to_linear();
    let d_o = min_weight_difference(&odd, &pair.even1.to_linear(), budget)?;
    let mu_minus_1 = pair.splitting.has_multiplier(-1);
    let mut checks = Vec::new();
    let mut partial = false;
    match d_o.value() {
        Some(d) => {
            checks.push(Check::new("d_o^2 >= n", d * d >= n, format!("{d}^2 = {} vs n = {n}", d * d)));
            if mu_minus_1 {
                checks.push(Check::new(
                    "d_o^2 - d_o + 1 >= n",
                    d * d - d + 1 >= n,
                    format!("{} vs n = {n}", d * d - d + 1),
                ));
            }
        }
        None => partial = true,
    }
    let mut d_odd_code = None;
    if pair.splitting.is_quadratic_residue() {
        let dd = min_distance_exact(&odd, budget)?;
        match (dd.value(), d_o.value()) {
            (Some(x), Some(y)) => {
                checks.push(Check::new("d(D) = d_o", x == y, format!("d(D) = {x}, d_o = {y}")));
                if n % 8 == 7 {
                    checks.push(Check::new("d(D) = 3 mod 4", x % 4 == 3, format!("d(D) = {x}")));
                }
            }
            _ => partial = true,
        }
        d_odd_code = Some(dd);
    }
    Ok(SquareRootReport { n, d_o, d_odd_code, mu_minus_1, checks, partial })
}
