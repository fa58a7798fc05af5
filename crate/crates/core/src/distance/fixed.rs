//! Fixed subcodes `C_a = { c ∈ C : μ_a(c) = c }` and the bounds they give.

use serde::Serialize;

use crate::cyclic::{mod_inverse, residue, CyclicCode};
use crate::distance::bound::{odd_order_lower_bound, order_two_lower_bound, DistanceBound, Provenance};
use crate::distance::{min_distance_exact, weight_distribution};
use crate::duadic::{is_prime, Check};
use crate::error::{Error, Result};
use crate::fields::{multiplicative_order, Gf4Matrix, Gf4Vector, LinearCode};

#[derive(Clone, Debug)]
pub struct FixedSubcode {
    pub parent: CyclicCode,
    pub a: usize,
    pub basis: Gf4Matrix,
}

impl FixedSubcode {
    pub fn code(&self) -> LinearCode {
        LinearCode::new(&self.basis)
    }

    pub fn dim(&self) -> usize {
        self.basis.num_rows()
    }
}

/// Indicator vectors of the orbits of `j ↦ a·j` on `Z_n`; they span the
/// vectors fixed by `μ_a`.
fn orbit_indicators(n: usize, a: usize) -> Vec<Gf4Vector> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut v = Gf4Vector::zeros(n);
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            v.set(j, crate::fields::Gf4::ONE);
            j = j * a % n;
        }
        out.push(v);
    }
    out
}

/// `C ∩ ker(T_a − I)`.
pub fn fixed_subcode(c: &CyclicCode, a: i64) -> Result<FixedSubcode> {
    let n = c.len();
    mod_inverse(a, n)?;
    let a = residue(a, n);
    let fixed = LinearCode::from_rows(n, orbit_indicators(n, a))?;
    let sub = c.to_linear().intersection(&fixed)?;
    Ok(FixedSubcode { parent: c.clone(), a, basis: sub.generator().clone() })
}

/// A bound on `d(C)` obtained from `d(C_a)`.
#[derive(Clone, Debug, Serialize)]
pub struct FixedSubcodeBound {
    pub a: usize,
    pub order: usize,
    pub fixed_dim: usize,
    pub d_fixed: DistanceBound,
    pub bound: DistanceBound,
}

fn check_multiplier(c: &CyclicCode, a: i64) -> Result<usize> {
    let n = c.len();
    let order = multiplicative_order(a, n).ok_or(Error::NotInvertible { a, n })?;
    if c.defining_set().scaled(a)? != *c.defining_set() {
        return Err(Error::Precondition(format!("the defining set is not invariant under multiplication by {a}")));
    }
    Ok(order)
}

/// Turns an interval for `d(C_a)` into one for `d(C)`, where `ord_n(a)` is
/// 2 or odd: `d(C) ≥ ⌈d(C_a)/2 + 1⌉` or `⌈(d(C_a) − 1)/i⌉ + 1`, and
/// `d(C) ≤ d(C_a)`.
pub fn bound_from_fixed_subcode(d_fixed: &DistanceBound, order: usize) -> Result<DistanceBound> {
    let lo = match order {
        2 => order_two_lower_bound(d_fixed.lo),
        i if i > 1 && i % 2 == 1 => odd_order_lower_bound(d_fixed.lo, i),
        _ => {
            return Err(Error::Precondition(format!("multiplier order must be 2 or odd and greater than 1, got {order}")))
        }
    };
    let lo_src =
        if d_fixed.lo_budget_limited() { Provenance::BudgetExhausted } else { Provenance::FixedSubcode };
    let hi_src = if d_fixed.hi.is_some() { Provenance::FixedSubcode } else { d_fixed.hi_src };
    let mut b = DistanceBound::interval(lo, d_fixed.hi, lo_src, hi_src);
    if b.hi.is_none() {
        b.hi_src = lo_src;
    }
    Ok(b)
}

/// Computes `d(C_a)` within the budget and derives the bound on `d(C)`.
/// Requires `aA = A`.
pub fn fixed_subcode_lower_bound(c: &CyclicCode, a: i64, budget: u64) -> Result<FixedSubcodeBound> {
    let order = check_multiplier(c, a)?;
    let fixed = fixed_subcode(c, a)?;
    if fixed.dim() == 0 {
        return Err(Error::Domain("the fixed subcode is zero".into()));
    }
    let d_fixed = min_distance_exact(&fixed.code(), budget)?;
    let bound = bound_from_fixed_subcode(&d_fixed, order)?.with_work(d_fixed.work);
    Ok(FixedSubcodeBound { a: fixed.a, order, fixed_dim: fixed.dim(), d_fixed, bound })
}

#[derive(Clone, Debug, Serialize)]
pub struct CoincidenceReport {
    pub a: usize,
    pub p: usize,
    pub checks: Vec<Check>,
    /// Some check could not run within the budget.
    pub partial: bool,
}

impl CoincidenceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// For `ord_n(a) = p` prime: `C_a = C_{a^j}` for `1 ≤ j < p`, and when
/// `C_a` has no word of weight `t`, `p` divides `A_t(C)`.
pub fn fixed_subcode_coincidence(c: &CyclicCode, a: i64, t: Option<usize>, budget: u64) -> Result<CoincidenceReport> {
    let p = check_multiplier(c, a)?;
    if !is_prime(p) {
        return Err(Error::Precondition(format!("multiplier order {p} is not prime")));
    }
    let n = c.len();
    let base = fixed_subcode(c, a)?;
    let mut checks = Vec::new();
    let mut power = base.a;
    for j in 1..p {
        let other = fixed_subcode(c, power as i64)?;
        checks.push(Check::new(
            &format!("fixed subcode under a^{j}"),
            other.basis.same_row_space(&base.basis),
            format!("a^{j} = {power}, dimensions {} and {}", other.dim(), base.dim()),
        ));
        power = power * base.a % n;
    }
    let mut partial = false;
    if let Some(t) = t {
        let in_fixed = weight_distribution(&base.code(), budget).map(|h| h.get(t).copied().unwrap_or(0));
        let full = weight_distribution(&c.to_linear(), budget).map(|h| h.get(t).copied().unwrap_or(0));
        match (in_fixed, full) {
            (Ok(0), Ok(count)) => checks.push(Check::new(
                &format!("{p} divides A_{t}"),
                count % p as u64 == 0,
                format!("A_{t} = {count}"),
            )),
            (Ok(_), Ok(_)) => checks.push(Check::new(
                &format!("{p} divides A_{t}"),
                true,
                format!("not applicable: the fixed subcode has words of weight {t}"),
            )),
            _ => partial = true,
        }
    }
    Ok(CoincidenceReport { a: base.a, p, checks, partial })
}
