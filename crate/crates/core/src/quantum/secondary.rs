//! Shortening-type derivations at the parameter level.

use crate::distance::Provenance;
use crate::error::{Error, Result};
use crate::quantum::{Purity, QuantumParams};

/// `[[n − i, k, d − i]]` for `1 ≤ i ≤ steps`; when `Q` is pure, also
/// `[[n − i, k + 1, d − i]]` (the first step raises `k`, later steps keep it).
pub fn secondary_constructions(q: &QuantumParams, steps: usize) -> Result<Vec<QuantumParams>> {
    if q.n < 2 {
        return Err(Error::Domain(format!("length {} is too short", q.n)));
    }
    if steps >= q.d.lo || steps >= q.n {
        return Err(Error::Domain(format!("{steps} steps from {q} leave no valid code")));
    }
    let derive = |i: usize, k: usize| -> Result<QuantumParams> {
        let mut d = q.d.shifted(-(i as i64));
        if d.lo_src != Provenance::BudgetExhausted {
            d.lo_src = Provenance::Construction;
        }
        if d.hi.is_some() {
            d.hi_src = Provenance::Construction;
        }
        let mut p = QuantumParams::new(q.n - i, k, d, Purity::Unknown)?;
        p.trace = q.trace.clone();
        p.trace.push(format!("from {q}: length and distance reduced by {i}, k = {k}"));
        Ok(p)
    };
    let mut out = Vec::new();
    for i in 1..=steps {
        out.push(derive(i, q.k)?);
    }
    if q.pure == Purity::Yes && q.k < q.n - 1 {
        for i in 1..=steps {
            out.push(derive(i, q.k + 1)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::DistanceBound;

    fn params(n: usize, k: usize, d: usize, pure: Purity) -> QuantumParams {
        QuantumParams::new(n, k, DistanceBound::exact(d, Provenance::LiteratureAnnotation), pure).unwrap()
    }

    #[test]
    fn chain_from_240() {
        let out = secondary_constructions(&params(240, 0, 32, Purity::Unknown), 9).unwrap();
        assert_eq!(out.len(), 9);
        for (i, p) in out.iter().enumerate() {
            assert_eq!(p.to_string(), format!("[[{},0,{}]]", 239 - i, 31 - i));
        }
        let out = secondary_constructions(&params(234, 0, 30, Purity::Unknown), 7).unwrap();
        assert_eq!(out.last().unwrap().to_string(), "[[227,0,23]]");
    }

    #[test]
    fn pure_code_gains_a_qubit() {
        let out = secondary_constructions(&params(6, 0, 4, Purity::Yes), 1).unwrap();
        let shown: Vec<String> = out.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["[[5,0,3]]", "[[5,1,3]]"]);
    }

    #[test]
    fn guards() {
        assert!(secondary_constructions(&params(1, 0, 1, Purity::Unknown), 1).is_err());
        assert!(secondary_constructions(&params(6, 0, 4, Purity::Unknown), 4).is_err());
    }
}
