//! Parameter derivations for the individual constructions.

use crate::cyclic::{near_orthogonality, CyclicCode, DefiningSet};
use crate::distance::{
    binary_shadow_distance, compose_bounds, min_distance_exact, min_weight_difference, DistanceBound, Provenance,
};
use crate::duadic::{DuadicPair, Splitting};
use crate::error::{Error, Result};
use crate::fields::{multiplicative_order, LinearCode};
use crate::quantum::extend::{extend_nearly_self_orthogonal, extension_bound, Extension};
use crate::quantum::{Purity, QuantumParams};

/// Parameters together with the classical code of the same length they
/// come from (Hermitian self-dual when `k = 0`).
#[derive(Clone, Debug)]
pub struct Built {
    pub params: QuantumParams,
    pub code: LinearCode,
}

fn dim_line(name: &str, c: &LinearCode) -> String {
    format!("{name}: [{}, {}]", c.len(), c.dim())
}

fn bound_line(name: &str, b: &DistanceBound) -> String {
    if b.is_exact() {
        format!("{name} = {} ({}, {} words)", b.lo, b.lo_src, b.work)
    } else {
        format!("{name} in {b} (lower: {}, upper: {}, {} words)", b.lo_src, b.hi_src, b.work)
    }
}

/// `[[n, 2k − n, d']]` from a code containing its Hermitian dual, where `d'`
/// is the minimum weight of `C ∖ C^⊥h` (or `d(C)` when `k' = 0`).
pub fn quantum_from_dual_containing(c: &LinearCode, budget: u64) -> Result<Built> {
    if !c.is_dual_containing() {
        return Err(Error::Precondition("the code does not contain its Hermitian dual".into()));
    }
    let n = c.len();
    let k = 2 * c.dim() - n;
    let dual = c.hermitian_dual();
    let d_c = min_distance_exact(c, budget)?;
    let mut trace = vec![dim_line("dual-containing code C", c), bound_line("d(C)", &d_c)];
    let (d, pure) = if k == 0 || dual.is_zero() {
        (d_c.clone(), Purity::Yes)
    } else {
        let d_q = min_weight_difference(c, &dual, budget)?;
        trace.push(bound_line("minimum weight of C outside its dual", &d_q));
        let pure = match (d_q.value(), d_c.value()) {
            (Some(a), Some(b)) if a == b => Purity::Yes,
            (Some(_), Some(_)) => Purity::No,
            _ if d_c.hi.is_some_and(|h| h < d_q.lo) => Purity::No,
            _ => Purity::Unknown,
        };
        (d_q, pure)
    };
    let mut params = QuantumParams::new(n, k, d, pure)?;
    params.trace = trace;
    if k == 0 {
        params.lift_even();
    }
    Ok(Built { params, code: c.clone() })
}

fn extension_params(x: &Extension, d: DistanceBound, mut trace: Vec<String>) -> Result<QuantumParams> {
    let k = x.quantum_dim();
    trace.push(format!(
        "appended {} coordinate(s): [{}, {}] code containing its dual, Gram test passed",
        x.e,
        x.len(),
        x.code.dim()
    ));
    let (d, pure) = if k == 0 {
        (d, Purity::Yes)
    } else {
        // only the lower end carries over to the weights outside Q^⊥h
        (DistanceBound::interval(d.lo, None, d.lo_src, d.lo_src).with_work(d.work), Purity::Unknown)
    };
    let mut p = QuantumParams::new(x.len(), k, d, pure)?;
    p.trace = trace;
    Ok(p)
}

/// `[[2(n − k), 0, d]]` from a Hermitian self-orthogonal `C` with
/// `d ≥ min{d(C), d(C^⊥h) + 1}`.
pub fn general_zero_dim(c: &LinearCode, budget: u64) -> Result<Built> {
    if c.is_zero() {
        return Err(Error::Domain("the zero code gives no quantum code".into()));
    }
    if !c.is_hermitian_self_orthogonal() {
        return Err(Error::Precondition("the code is not Hermitian self-orthogonal".into()));
    }
    let x = extend_nearly_self_orthogonal(c)?;
    let d_c = min_distance_exact(c, budget)?;
    let d_dual = min_distance_exact(&x.outer, budget)?;
    let mut trace = vec![
        dim_line("self-orthogonal code C", c),
        bound_line("d(C)", &d_c),
        bound_line("d(C^⊥h)", &d_dual),
    ];
    let d = extension_bound(x.e, &d_c, &d_dual);
    trace.push(format!("d >= min{{d(C), d(C^⊥h) + 1}}: {d}"));
    let mut params = extension_params(&x, d, trace)?;
    if params.k == 0 {
        params.lift_even();
    }
    Ok(Built { params, code: x.code })
}

/// `[[2(n − |A|), 0, d]]` from the cyclic code with defining set `A`,
/// provided `A ∩ −2A = ∅`.
pub fn cyclic_zero_dim(a: &DefiningSet, budget: u64) -> Result<Built> {
    let n = a.n();
    let minus_2a = a.scaled(-2)?;
    if let Some(&x) = a.intersection(&minus_2a)?.members().first() {
        let y = (0..n).find(|&y| a.contains(y as i64) && (n - 2 * y % n) % n == x).expect("x ∈ −2A");
        return Err(Error::Precondition(format!("A ∩ −2A is not empty: {x} = −2·{y} mod {n}")));
    }
    let c = CyclicCode::new(a.clone())?;
    let s = c.hermitian_dual()?;
    let mut b = general_zero_dim(&s.to_linear(), budget)?;
    b.params.trace.insert(0, format!("A = {} mod {n}, |A| = {}, A ∩ −2A = ∅; C = C_A^⊥h", a.describe(), a.len()));
    Ok(b)
}

/// `[[2k, 0, d]]` from a dual-containing `[n, k]` code via its dual.
pub fn dual_containing_to_zero_dim(c: &LinearCode, budget: u64) -> Result<Built> {
    if !c.is_dual_containing() {
        return Err(Error::Precondition("the code does not contain its Hermitian dual".into()));
    }
    let dual = c.hermitian_dual();
    if dual.is_zero() {
        return Err(Error::Domain("the dual is the zero code".into()));
    }
    general_zero_dim(&dual, budget)
}

/// The same derivation from parameters alone: a dual-containing `[n, k]`
/// code with `d(C)` in `d_c` gives `[[2k, 0, d]]` with
/// `d ≥ min{d(C^⊥h), d(C) + 1} ≥ d(C)`, since `C^⊥h ⊆ C`.
pub fn dual_containing_params_to_zero_dim(n: usize, k: usize, d_c: &DistanceBound) -> Result<QuantumParams> {
    if 2 * k < n || k > n {
        return Err(Error::Precondition(format!("an [{n}, {k}] code cannot contain its Hermitian dual")));
    }
    if k == n {
        return Err(Error::Domain("the dual is the zero code".into()));
    }
    let d = DistanceBound::lower(d_c.lo, d_c.lo_src);
    let mut p = QuantumParams::new(2 * k, 0, d, Purity::Yes)?
        .step(format!("dual-containing [{n}, {k}] code with d(C) {d_c}"))
        .step(format!("d >= min{{d(C^⊥h), d(C) + 1}} >= d(C) = {}", d_c.lo));
    p.lift_even();
    Ok(p)
}

/// Applies the quadratic-residue refinements to params from the extended
/// odd-like QR code at prime `p`: `d = d(C_o) + 1`, and `4 | d` when
/// `p ≡ −1 mod 8`.
pub fn qr_quantum_refinements(mut params: QuantumParams, p: usize, d_odd: &DistanceBound) -> Result<QuantumParams> {
    if p % 8 != 5 && p % 8 != 7 {
        return Err(Error::Precondition(format!("p = {p} is {} mod 8; need 5 or 7", p % 8)));
    }
    params.d.raise_lo(d_odd.lo + 1, d_odd.lo_src);
    if let Some(h) = d_odd.hi {
        params.d.lower_hi(h + 1, d_odd.hi_src);
    }
    params.trace.push(format!("quadratic residue code: d = d(C_o) + 1, so {}", params.d));
    if p % 8 == 7 {
        let before = params.d.clone();
        params.d.round_to_multiple(4, Provenance::Parity);
        if params.d != before {
            params.trace.push(format!("p = 7 mod 8: d = 0 mod 4, so {}", params.d));
        }
    }
    params.d.check()?;
    Ok(params)
}

/// Smallest `d` with `d ≥ √n + 1`.
fn sqrt_plus_one(n: usize) -> usize {
    (1..).find(|&d: &usize| (d - 1) * (d - 1) >= n).expect("unbounded search")
}

/// Smallest even `d` with `d² − 3(d − 1) ≥ n`.
fn mu_minus_1_bound(n: usize) -> usize {
    (1..).map(|h: usize| 2 * h).find(|&d| d * d + 3 >= n + 3 * d).expect("unbounded search")
}

/// `[[n + 1, 0, d]]` from a duadic pair whose splitting is given by `μ_{-2}`:
/// the even-like code `C_e` is self-orthogonal, one extra coordinate
/// completes it to a self-dual code, and `d = min{d(C_e), d(C_o) + 1}`.
/// `odd_evidence` holds further intervals for `d(C_o)`.
pub fn extended_duadic_quantum(pair: &DuadicPair, budget: u64, odd_evidence: &[DistanceBound]) -> Result<Built> {
    let s = &pair.splitting;
    let n = pair.n();
    if !s.has_multiplier(-2) {
        return Err(Error::Precondition(format!("−2 does not give the splitting S1 = {}", s.s1().describe())));
    }
    let ce = pair.even1.to_linear();
    let co = pair.odd1.to_linear();
    let x = extend_nearly_self_orthogonal(&ce)?;
    if x.e != 1 || x.outer != co {
        return Err(Error::Invariant(format!("even-like duadic code extended by {} coordinates", x.e)));
    }
    let mut parts = vec![min_distance_exact(&co, budget)?];
    parts.extend(odd_evidence.iter().cloned());
    let d_co = compose_bounds(&parts)?;
    let qr = s.is_quadratic_residue();
    let mut trace = vec![
        format!("duadic splitting of Z_{n} by −2: S1 = {}, S2 = {}", s.s1().describe(), s.s2().describe()),
        dim_line("odd-like code C_o", &co),
        bound_line("d(C_o)", &d_co),
    ];
    for ev in odd_evidence {
        trace.push(format!("evidence for d(C_o): {ev} ({}/{})", ev.lo_src, ev.hi_src));
    }
    let mut odd_min = qr;
    let mut params = if qr {
        trace.push("quadratic residue code: d(C_e) > d(C_o), so only d(C_o) is needed".into());
        let d = DistanceBound::lower(1, Provenance::Construction).with_work(d_co.work);
        let p = extension_params(&x, d, trace)?;
        qr_quantum_refinements(p, n, &d_co)?
    } else {
        let d_ce = min_distance_exact(&ce, budget)?;
        trace.push(bound_line("d(C_e)", &d_ce));
        let d = extension_bound(1, &d_ce, &d_co);
        trace.push(format!("d = min{{d(C_e), d(C_o) + 1}}: {d}"));
        odd_min = d_co.hi.is_some_and(|h| h < d_ce.lo);
        extension_params(&x, d, trace)?
    };
    // the minimum weight of C_o is odd when it is below d(C_e)
    if odd_min {
        let b = sqrt_plus_one(n);
        if b > params.d.lo {
            params.d.raise_lo(b, Provenance::SquareRoot);
            params.trace.push(format!("d >= sqrt(n) + 1: {}", params.d));
        }
    }
    if s.has_multiplier(-1) {
        let b = mu_minus_1_bound(n);
        if b > params.d.lo {
            params.d.raise_lo(b, Provenance::SquareRoot);
            params.trace.push(format!("−1 also gives the splitting, d^2 − 3(d − 1) >= n: {}", params.d));
        }
    }
    params.lift_even();
    params.d.check()?;
    Ok(Built { params, code: x.code })
}

/// From a binary cyclic code with defining set `A` when `ord_n(2) = ord_n(4)`:
/// `[[n + e, 2k − n + e, d]]`, `e = n − k − dim(C ∩ C^⊥)`, with the
/// distances taken from the binary codes.
pub fn binary_cyclic_quantum(a: &DefiningSet, budget: u64) -> Result<Built> {
    let n = a.n();
    let (o2, o4) = (multiplicative_order(2, n), multiplicative_order(4, n));
    if o2 != o4 {
        return Err(Error::Precondition(format!(
            "ord_{n}(2) = {} differs from ord_{n}(4) = {}",
            o2.unwrap_or(0),
            o4.unwrap_or(0)
        )));
    }
    let c = CyclicCode::new(a.clone())?;
    if c.is_zero() {
        return Err(Error::Domain("the zero code gives no quantum code".into()));
    }
    let e = near_orthogonality(a);
    let x = extend_nearly_self_orthogonal(&c.to_linear())?;
    if x.e != e {
        return Err(Error::Invariant(format!("binary e = {e} but the extension used {}", x.e)));
    }
    let outer_set = a.difference(&a.scaled(-1)?)?;
    let d_c = binary_shadow_distance(a, budget)?;
    let d_outer = if outer_set.is_empty() {
        DistanceBound::exact(1, Provenance::ExactEnumeration)
    } else {
        binary_shadow_distance(&outer_set, budget)?
    };
    let mut trace = vec![
        format!("binary cyclic code, A = {} mod {n}, e = {e}", a.describe()),
        bound_line("d(C) over GF(2)", &d_c),
        bound_line("d(C + C^⊥) over GF(2)", &d_outer),
    ];
    let d = extension_bound(e, &d_c, &d_outer);
    trace.push(format!("d >= min{{d(C), d(C + C^⊥) + 1}}: {d}"));
    let mut params = extension_params(&x, d, trace)?;
    if params.k == 0 {
        params.lift_even();
    }
    Ok(Built { params, code: x.code })
}

/// Splitting `(A, −2A)` when `A` is one half of a `μ_{-2}` splitting.
pub fn minus_two_splitting(a: &DefiningSet) -> Option<Splitting> {
    let b = a.scaled(-2).ok()?;
    if a.contains(0) || !a.is_disjoint(&b) || a.len() + b.len() + 1 != a.n() {
        return None;
    }
    Splitting::new(a.clone(), b).ok()
}

/// Picks the construction for a defining set: the extended duadic code when
/// `A` is one half of a `μ_{-2}` splitting, otherwise the cyclic
/// zero-dimensional code when `A ∩ −2A = ∅`.
pub fn construct_from_defining_set(a: &DefiningSet, budget: u64, odd_evidence: &[DistanceBound]) -> Result<Built> {
    if let Some(s) = minus_two_splitting(a) {
        return extended_duadic_quantum(&DuadicPair::new(s)?, budget, odd_evidence);
    }
    let mut failed = vec![format!("{} is not half of a splitting given by −2", a.describe())];
    match cyclic_zero_dim(a, budget) {
        Err(Error::Precondition(m)) => {
            failed.push(m);
            Err(Error::NoConstruction(failed))
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::DEFAULT_BUDGET;
    use crate::duadic::{find_splittings, qr_splitting};
    use crate::fields::{Gf4, Gf4Matrix};

    fn qr_pair(p: usize) -> DuadicPair {
        DuadicPair::new(qr_splitting(p).unwrap()).unwrap()
    }

    fn hexacode() -> LinearCode {
        let (o, i, w, w2) = (Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2);
        LinearCode::new(
            &Gf4Matrix::from_symbols(6, &[vec![i, o, o, i, w2, w], vec![o, i, o, i, w, w2], vec![o, o, i, i, i, i]])
                .unwrap(),
        )
    }

    #[test]
    fn from_dual_containing() {
        let b = quantum_from_dual_containing(&hexacode(), DEFAULT_BUDGET).unwrap();
        assert_eq!(b.params.to_string(), "[[6,0,4]]");
        assert_eq!(b.params.pure, Purity::Yes);
        let b = quantum_from_dual_containing(&LinearCode::full(5), DEFAULT_BUDGET).unwrap();
        assert_eq!(b.params.to_string(), "[[5,5,1]]");
        let odd = CyclicCode::new(qr_splitting(13).unwrap().s1().clone()).unwrap().to_linear();
        let b = quantum_from_dual_containing(&odd, DEFAULT_BUDGET).unwrap();
        assert_eq!((b.params.n, b.params.k), (13, 1));
        assert_eq!(b.params.d.value(), Some(5));
        assert!(quantum_from_dual_containing(&LinearCode::zero(4), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn table_rows() {
        for (p, d) in [(5usize, 4usize), (7, 4), (13, 6), (23, 8)] {
            let b = extended_duadic_quantum(&qr_pair(p), DEFAULT_BUDGET, &[]).unwrap();
            assert_eq!((b.params.n, b.params.k, b.params.d.value()), (p + 1, 0, Some(d)), "{:?}", b.params);
            assert!(b.params.d.lo_src.is_search(), "{:?}", b.params.d);
            assert!(b.code.is_hermitian_self_dual());
        }
        let best = find_splittings(17, Some(-2))
            .unwrap()
            .into_iter()
            .map(|s| extended_duadic_quantum(&DuadicPair::new(s).unwrap(), DEFAULT_BUDGET, &[]).unwrap().params.d.lo)
            .max();
        assert_eq!(best, Some(8));
    }

    #[test]
    fn refinements() {
        let start = QuantumParams::new(24, 0, DistanceBound::lower(1, Provenance::Construction), Purity::Yes).unwrap();
        let r = qr_quantum_refinements(start.clone(), 23, &DistanceBound::exact(7, Provenance::ExactEnumeration)).unwrap();
        assert_eq!(r.d.value(), Some(8));
        let r = qr_quantum_refinements(start.clone(), 23, &DistanceBound::lower(6, Provenance::BudgetExhausted)).unwrap();
        assert_eq!((r.d.lo, r.d.lo_src), (8, Provenance::BudgetExhausted));
        let r = qr_quantum_refinements(start.clone(), 13, &DistanceBound::exact(5, Provenance::ExactEnumeration)).unwrap();
        assert_eq!(r.d.lo, 6);
        assert!(qr_quantum_refinements(start, 11, &DistanceBound::exact(5, Provenance::ExactEnumeration)).is_err());
    }

    #[test]
    fn fixed_subcode_evidence_at_157() {
        // parameter-level check with d((C_o)_{-1}) = 36 as evidence
        let ev = crate::distance::bound_from_fixed_subcode(
            &DistanceBound::exact(36, Provenance::LiteratureAnnotation),
            2,
        )
        .unwrap();
        let start = QuantumParams::new(158, 0, DistanceBound::lower(1, Provenance::Construction), Purity::Yes).unwrap();
        let mut r = qr_quantum_refinements(start, 157, &ev).unwrap();
        r.lift_even();
        assert_eq!((r.d.lo, r.d.hi), (20, Some(36)));
        assert_eq!(r.d.lo_src, Provenance::FixedSubcode);
    }

    #[test]
    fn cyclic_route_matches_duadic_route() {
        for n in (3..=31).step_by(2) {
            for s in find_splittings(n, Some(-2)).unwrap() {
                let a = s.s1().clone();
                let duadic = extended_duadic_quantum(&DuadicPair::new(s).unwrap(), DEFAULT_BUDGET, &[]).unwrap();
                let cyclic = cyclic_zero_dim(&a, DEFAULT_BUDGET).unwrap();
                assert_eq!((duadic.params.n, duadic.params.k), (cyclic.params.n, cyclic.params.k));
                assert_eq!(duadic.params.d.value(), cyclic.params.d.value(), "n = {n}, {}", a.describe());
            }
        }
    }

    #[test]
    fn cyclic_zero_dim_examples() {
        let a = DefiningSet::from_leaders(5, &[1]).unwrap();
        assert_eq!(a.len(), 2);
        let b = cyclic_zero_dim(&a, DEFAULT_BUDGET).unwrap();
        assert_eq!(b.params.to_string(), "[[6,0,4]]");
        let err = cyclic_zero_dim(&DefiningSet::from_leaders(5, &[0, 1]).unwrap(), DEFAULT_BUDGET).unwrap_err();
        assert!(err.to_string().contains("0 = −2·0"), "{err}");
    }

    #[test]
    fn dual_containing_routes() {
        let b = dual_containing_to_zero_dim(&hexacode(), DEFAULT_BUDGET).unwrap();
        assert_eq!(b.params.to_string(), "[[6,0,4]]");
        assert!(dual_containing_to_zero_dim(&LinearCode::full(4), DEFAULT_BUDGET).is_err());
        let p = dual_containing_params_to_zero_dim(93, 48, &DistanceBound::exact(21, Provenance::LiteratureAnnotation))
            .unwrap();
        assert_eq!((p.n, p.k, p.d.lo, p.d.hi), (96, 0, 22, None));
        assert!(dual_containing_params_to_zero_dim(93, 40, &DistanceBound::exact(21, Provenance::LiteratureAnnotation)).is_err());
    }

    #[test]
    fn binary_route() {
        for (p, d) in [(23usize, 8usize), (7, 4)] {
            let a = qr_splitting(p).unwrap().s1().with_zero();
            let b = binary_cyclic_quantum(&a, DEFAULT_BUDGET).unwrap();
            assert_eq!((b.params.n, b.params.k, b.params.d.value()), (p + 1, 0, Some(d)));
        }
        assert!(binary_cyclic_quantum(&qr_splitting(5).unwrap().s1().with_zero(), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn dispatch() {
        let q = qr_splitting(11).unwrap().s1().clone();
        assert!(matches!(construct_from_defining_set(&q, DEFAULT_BUDGET, &[]), Err(Error::NoConstruction(_))));
        let q = qr_splitting(13).unwrap().s1().clone();
        let b = construct_from_defining_set(&q, DEFAULT_BUDGET, &[]).unwrap();
        assert_eq!(b.params.to_string(), "[[14,0,6]]");
    }
}
