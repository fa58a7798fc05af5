//! Splittings of `Z_n`, duadic and quadratic-residue codes.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::cyclic::{all_cosets, mod_inverse, residue, CyclicCode, DefiningSet};
use crate::error::{Error, Result};
use crate::fields::{gcd, Gf4Vector, LinearCode};

/// Refuse enumerations with more candidate splittings than this per multiplier.
const MAX_ORBIT_CHOICES: u32 = 24;

/// A partition `Z_n ∖ {0} = S1 ∪ S2` into coset-closed halves swapped by a multiplier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    s1: DefiningSet,
    s2: DefiningSet,
    multipliers: Vec<usize>,
}

#[derive(Serialize)]
struct SplittingJson {
    n: usize,
    s1_leaders: Vec<usize>,
    s2_leaders: Vec<usize>,
    multipliers: Vec<usize>,
}

impl Serialize for Splitting {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SplittingJson {
            n: self.n(),
            s1_leaders: self.s1.leaders(),
            s2_leaders: self.s2.leaders(),
            multipliers: self.multipliers.clone(),
        }
        .serialize(s)
    }
}

fn units(n: usize) -> impl Iterator<Item = usize> {
    (1..n).filter(move |&b| gcd(b as u64, n as u64) == 1)
}

impl Splitting {
    /// Checks the partition conditions and computes every witness multiplier.
    pub fn new(s1: DefiningSet, s2: DefiningSet) -> Result<Self> {
        let n = s1.n();
        if s2.n() != n {
            return Err(Error::LengthMismatch { left: n, right: s2.n() });
        }
        if s1.contains(0) || s2.contains(0) || !s1.is_disjoint(&s2) || s1.len() + s2.len() + 1 != n {
            return Err(Error::InvalidInput("S1, S2 do not partition the nonzero residues".into()));
        }
        let multipliers: Vec<usize> =
            units(n).filter(|&b| s1.scaled(b as i64).is_ok_and(|img| img == s2)).collect();
        if multipliers.is_empty() {
            return Err(Error::InvalidInput("no multiplier swaps S1 and S2".into()));
        }
        Ok(Splitting { s1, s2, multipliers })
    }

    pub fn n(&self) -> usize {
        self.s1.n()
    }

    pub fn s1(&self) -> &DefiningSet {
        &self.s1
    }

    pub fn s2(&self) -> &DefiningSet {
        &self.s2
    }

    /// Residues `b` with `b·S1 = S2` (and hence `b·S2 = S1`), ascending.
    pub fn multipliers(&self) -> &[usize] {
        &self.multipliers
    }

    /// Whether `μ_b` gives the splitting; `b` may be negative.
    pub fn has_multiplier(&self, b: i64) -> bool {
        self.multipliers.contains(&residue(b, self.n()))
    }

    /// The same splitting with the halves exchanged.
    pub fn swapped(&self) -> Splitting {
        Splitting { s1: self.s2.clone(), s2: self.s1.clone(), multipliers: self.multipliers.clone() }
    }

    /// Whether `S1` and `S2` are the nonzero squares and non-squares mod a prime.
    pub fn is_quadratic_residue(&self) -> bool {
        let n = self.n();
        is_prime(n) && (self.s1 == quadratic_residues(n) || self.s2 == quadratic_residues(n))
    }
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn quadratic_residues(p: usize) -> DefiningSet {
    let mut bits = vec![false; p];
    for x in 1..p {
        bits[x * x % p] = true;
    }
    DefiningSet::from_bits(p, bits)
}

/// All splittings of `Z_n` given by `μ_b`, or by any multiplier when `b` is `None`.
///
/// Each unordered pair is reported once, with `1 ∈ S1`; the list is sorted
/// by the leaders of `S1`.
pub fn find_splittings(n: usize, b: Option<i64>) -> Result<Vec<Splitting>> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("length must be odd and at least 3, got {n}")));
    }
    let part = all_cosets(n, 4)?;
    let nonzero: Vec<usize> = (1..part.cosets().len()).collect();
    let candidates: Vec<usize> = match b {
        Some(b) => {
            mod_inverse(b, n)?;
            vec![residue(b, n)]
        }
        None => units(n).collect(),
    };
    let mut found: BTreeSet<Vec<bool>> = BTreeSet::new();
    for b in candidates {
        // Orbits of μ_b on the nonzero cosets; every orbit must alternate between S1 and S2.
        let image: Vec<usize> = (0..part.cosets().len()).map(|c| part.index_of((b * part.cosets()[c][0]) as i64)).collect();
        let mut seen = vec![false; image.len()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut ok = true;
        for &c in &nonzero {
            if seen[c] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = c;
            while !seen[x] {
                seen[x] = true;
                orbit.push(x);
                x = image[x];
            }
            if orbit.len() % 2 == 1 {
                ok = false;
                break;
            }
            orbits.push(orbit);
        }
        if !ok || orbits.is_empty() {
            continue;
        }
        if orbits.len() as u32 > MAX_ORBIT_CHOICES {
            return Err(Error::InvalidInput(format!(
                "n = {n} has 2^{} candidate splittings for multiplier {b}; too many to enumerate",
                orbits.len()
            )));
        }
        for choice in 0u64..(1 << (orbits.len() - 1)) {
            let mut bits = vec![false; n];
            for (o, orbit) in orbits.iter().enumerate() {
                // The first orbit is pinned so that the coset of 1 lands in S1.
                let parity = if o == 0 { 0 } else { (choice >> (o - 1)) & 1 } as usize;
                for (pos, &c) in orbit.iter().enumerate() {
                    if pos % 2 == parity {
                        for &x in &part.cosets()[c] {
                            bits[x] = true;
                        }
                    }
                }
            }
            if !bits[1] {
                bits = (0..n).map(|x| x != 0 && !bits[x]).collect();
            }
            found.insert(bits);
        }
    }
    let mut out: Vec<Splitting> = found
        .into_iter()
        .map(|bits| {
            let s1 = DefiningSet::from_bits(n, bits);
            let s2 = DefiningSet::from_bits(n, (0..n).map(|x| x != 0 && !s1.contains(x as i64)).collect());
            Splitting::new(s1, s2)
        })
        .collect::<Result<_>>()?;
    out.sort_by_key(|s| s.s1.leaders());
    Ok(out)
}

/// `S1 = Q_p`, `S2 = N_p`.
pub fn qr_splitting(p: usize) -> Result<Splitting> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
    }
    let q = quadratic_residues(p);
    let n = DefiningSet::from_bits(p, (0..p).map(|x| x != 0 && !q.contains(x as i64)).collect());
    Splitting::new(q, n)
}

/// The four duadic codes of a splitting.
#[derive(Clone, Debug)]
pub struct DuadicPair {
    pub splitting: Splitting,
    pub even1: CyclicCode,
    pub even2: CyclicCode,
    pub odd1: CyclicCode,
    pub odd2: CyclicCode,
}

impl DuadicPair {
    pub fn new(splitting: Splitting) -> Result<Self> {
        Ok(DuadicPair {
            even1: CyclicCode::new(splitting.s1.with_zero())?,
            even2: CyclicCode::new(splitting.s2.with_zero())?,
            odd1: CyclicCode::new(splitting.s1.clone())?,
            odd2: CyclicCode::new(splitting.s2.clone())?,
            splitting,
        })
    }

    pub fn n(&self) -> usize {
        self.splitting.n()
    }
}

pub fn duadic_from_splitting(s: Splitting) -> Result<DuadicPair> {
    DuadicPair::new(s)
}

/// One named pass/fail item of a property report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// Results of [`verify_duadic_properties`].
#[derive(Clone, Debug, Serialize)]
pub struct DuadicReport {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl DuadicReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Matrix-level verification of the standard duadic code identities.
pub fn verify_duadic_properties(p: &DuadicPair) -> Result<DuadicReport> {
    let n = p.n();
    let c1 = p.even1.to_linear();
    let c2 = p.even2.to_linear();
    let d1 = p.odd1.to_linear();
    let d2 = p.odd2.to_linear();
    let j = LinearCode::from_rows(n, vec![Gf4Vector::ones(n)])?;
    let even_like = j.hermitian_dual();
    let x_minus_1 = CyclicCode::new(DefiningSet::new(n, [0])?)?.to_linear();
    let mut checks = Vec::new();

    let dims = [c1.dim(), c2.dim(), d1.dim(), d2.dim()];
    checks.push(Check::new(
        "dimensions",
        dims == [(n - 1) / 2, (n - 1) / 2, n.div_ceil(2), n.div_ceil(2)],
        format!("dims C1, C2, D1, D2 = {dims:?}"),
    ));
    checks.push(Check::new("even-like inside odd-like", c1.is_subcode_of(&d1) && c2.is_subcode_of(&d2), ""));
    let meet = c1.intersection(&c2)?;
    checks.push(Check::new("C1 ∩ C2 = 0", meet.is_zero(), format!("dim {}", meet.dim())));
    let join = c1.sum(&c2)?;
    checks.push(Check::new("C1 + C2 = <x - 1>", join == x_minus_1, format!("dim {}", join.dim())));
    let meet = d1.intersection(&d2)?;
    checks.push(Check::new("D1 ∩ D2 = <j>", meet == j, format!("dim {}", meet.dim())));
    let join = d1.sum(&d2)?;
    checks.push(Check::new("D1 + D2 = full space", join.dim() == n, format!("dim {}", join.dim())));
    for (name, c, d) in [("C1 even-like part of D1", &c1, &d1), ("C2 even-like part of D2", &c2, &d2)] {
        checks.push(Check::new(name, d.intersection(&even_like)? == *c, ""));
    }
    for (name, c, d) in [("D1 = C1 ⊕ <j>", &c1, &d1), ("D2 = C2 ⊕ <j>", &c2, &d2)] {
        let ok = !c.contains(&Gf4Vector::ones(n)) && c.sum(&j)? == *d;
        checks.push(Check::new(name, ok, ""));
    }
    for (name, c, d) in [("C1 self-orthogonal ⇒ C1^⊥h = D1", &c1, &d1), ("C2 self-orthogonal ⇒ C2^⊥h = D2", &c2, &d2)] {
        if c.is_hermitian_self_orthogonal() {
            checks.push(Check::new(name, c.hermitian_dual() == *d, ""));
        }
    }
    Ok(DuadicReport { n, checks })
}

/// Whether `C` is an even-like duadic code whose splitting is given by `μ₋₂`.
///
/// Exactly these codes of dimension `(n−1)/2` are Hermitian self-orthogonal.
pub fn is_self_orthogonal_even_duadic(c: &CyclicCode) -> Result<bool> {
    let n = c.len();
    if 2 * c.dim() + 1 != n {
        return Err(Error::Precondition(format!("dimension {} is not (n − 1)/2 for n = {n}", c.dim())));
    }
    let a = c.defining_set();
    if !a.contains(0) {
        return Ok(false);
    }
    let s1 = a.difference(&DefiningSet::new(n, [0])?)?;
    Ok(s1.is_disjoint(&s1.scaled(-2)?))
}

/// Predictions for splittings of a prime length, checked against enumeration.
#[derive(Clone, Debug, Serialize)]
pub struct PredictionReport {
    pub p: usize,
    pub class_mod_8: usize,
    pub splittings: usize,
    pub mu_minus_2_splittings: usize,
    pub checks: Vec<Check>,
}

impl PredictionReport {
    pub fn consistent(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Mod-8 rules for `μ₋₂` and `μ₋₁` splittings of a prime length.
pub fn splitting_predictions(p: usize) -> Result<PredictionReport> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
    }
    let all = find_splittings(p, None)?;
    let by_m2 = find_splittings(p, Some(-2))?;
    let class = p % 8;
    let mut checks = Vec::new();
    match class {
        5 | 7 => {
            let every = all.iter().all(|s| s.has_multiplier(-2));
            checks.push(Check::new(
                "every splitting given by μ₋₂",
                every && !all.is_empty(),
                format!("{} of {} splittings", by_m2.len(), all.len()),
            ));
            if class == 7 {
                let same = all.iter().all(|s| s.has_multiplier(-1) == s.has_multiplier(-2));
                checks.push(Check::new("μ₋₁ and μ₋₂ give the same splittings", same, ""));
            }
        }
        3 => checks.push(Check::new("no splitting given by μ₋₂", by_m2.is_empty(), format!("{} found", by_m2.len()))),
        _ => checks.push(Check::new(
            "μ₋₂ splittings (no prediction)",
            true,
            format!("{} of {} splittings", by_m2.len(), all.len()),
        )),
    }
    Ok(PredictionReport { p, class_mod_8: class, splittings: all.len(), mu_minus_2_splittings: by_m2.len(), checks })
}
