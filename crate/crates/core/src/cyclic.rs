//! Cyclotomic cosets, defining sets and cyclic codes over GF(4).

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{gcd, ExtField, Gf4Matrix, Gf4Poly, Gf4Vector, LinearCode};

fn check_modulus(n: usize, q: usize) -> Result<()> {
    if q != 2 && q != 4 {
        return Err(Error::InvalidInput(format!("base q must be 2 or 4, got {q}")));
    }
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("length must be odd, got {n}")));
    }
    Ok(())
}

/// `a` reduced into `0..n`.
pub fn residue(a: i64, n: usize) -> usize {
    a.rem_euclid(n as i64) as usize
}

/// Inverse of `a` modulo `n`.
pub fn mod_inverse(a: i64, n: usize) -> Result<usize> {
    let r = residue(a, n);
    if n == 1 {
        return Ok(0);
    }
    if gcd(r as u64, n as u64) != 1 {
        return Err(Error::NotInvertible { a, n });
    }
    Ok((1..n).find(|&x| r * x % n == 1).expect("unit has an inverse"))
}

/// The q-cyclotomic coset of `a` mod `n`, sorted.
pub fn cyclotomic_coset(n: usize, a: i64, q: usize) -> Result<Vec<usize>> {
    check_modulus(n, q)?;
    let mut out = BTreeSet::new();
    let mut x = residue(a, n);
    while out.insert(x) {
        x = x * q % n;
    }
    Ok(out.into_iter().collect())
}

/// The q-cyclotomic cosets partitioning `Z_n`, ordered by leader.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetPartition {
    n: usize,
    q: usize,
    cosets: Vec<Vec<usize>>,
    #[serde(skip)]
    owner: Vec<usize>,
}

impl CosetPartition {
    pub fn new(n: usize, q: usize) -> Result<Self> {
        check_modulus(n, q)?;
        let mut owner = vec![usize::MAX; n];
        let mut cosets = Vec::new();
        for a in 0..n {
            if owner[a] != usize::MAX {
                continue;
            }
            let c = cyclotomic_coset(n, a as i64, q)?;
            for &x in &c {
                owner[x] = cosets.len();
            }
            cosets.push(c);
        }
        Ok(CosetPartition { n, q, cosets, owner })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn leaders(&self) -> Vec<usize> {
        self.cosets.iter().map(|c| c[0]).collect()
    }

    /// Index of the coset containing `x mod n`.
    pub fn index_of(&self, x: i64) -> usize {
        self.owner[residue(x, self.n)]
    }
}

/// All cosets of `Z_n` under multiplication by `q`.
pub fn all_cosets(n: usize, q: usize) -> Result<CosetPartition> {
    CosetPartition::new(n, q)
}

/// A subset of `Z_n` closed under multiplication by 4.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DefiningSet {
    n: usize,
    members: Vec<bool>,
}

impl DefiningSet {
    /// Validates closure under `x ↦ 4x mod n`; never closes silently.
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_modulus(n, 4)?;
        let mut bits = vec![false; n];
        for x in members {
            if x >= n {
                return Err(Error::InvalidInput(format!("{x} is not a residue mod {n}")));
            }
            bits[x] = true;
        }
        for x in 0..n {
            if bits[x] && !bits[4 * x % n] {
                return Err(Error::NotCosetClosed { n, element: x, image: 4 * x % n });
            }
        }
        Ok(DefiningSet { n, members: bits })
    }

    /// Union of the cosets of the given elements (any residues, negatives allowed).
    pub fn from_leaders(n: usize, leaders: &[i64]) -> Result<Self> {
        check_modulus(n, 4)?;
        let mut bits = vec![false; n];
        for &a in leaders {
            for x in cyclotomic_coset(n, a, 4)? {
                bits[x] = true;
            }
        }
        Ok(DefiningSet { n, members: bits })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, 0..n)
    }

    pub(crate) fn from_bits(n: usize, members: Vec<bool>) -> Self {
        debug_assert!((0..n).all(|x| !members[x] || members[4 * x % n]));
        DefiningSet { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, x: i64) -> bool {
        self.members[residue(x, self.n)]
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.members[x]).collect()
    }

    pub fn member_set(&self) -> BTreeSet<usize> {
        self.members().into_iter().collect()
    }

    /// Smallest element of every coset in the set, ascending.
    pub fn leaders(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for x in 0..self.n {
            if self.members[x] && !seen[x] {
                out.push(x);
                let mut y = x;
                while !seen[y] {
                    seen[y] = true;
                    y = 4 * y % self.n;
                }
            }
        }
        out
    }

    pub fn complement(&self) -> DefiningSet {
        DefiningSet::from_bits(self.n, self.members.iter().map(|b| !b).collect())
    }

    /// `{ b·x mod n : x ∈ A }` for a unit `b`.
    pub fn scaled(&self, b: i64) -> Result<DefiningSet> {
        mod_inverse(b, self.n)?;
        let b = residue(b, self.n);
        let mut bits = vec![false; self.n];
        for x in 0..self.n {
            if self.members[x] {
                bits[b * x % self.n] = true;
            }
        }
        Ok(DefiningSet::from_bits(self.n, bits))
    }

    fn zip(&self, other: &DefiningSet, f: impl Fn(bool, bool) -> bool) -> Result<DefiningSet> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        Ok(DefiningSet::from_bits(self.n, self.members.iter().zip(&other.members).map(|(&a, &b)| f(a, b)).collect()))
    }

    pub fn union(&self, other: &DefiningSet) -> Result<DefiningSet> {
        self.zip(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &DefiningSet) -> Result<DefiningSet> {
        self.zip(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &DefiningSet) -> Result<DefiningSet> {
        self.zip(other, |a, b| a && !b)
    }

    pub fn is_disjoint(&self, other: &DefiningSet) -> bool {
        self.n == other.n && self.members.iter().zip(&other.members).all(|(&a, &b)| !(a && b))
    }

    /// `A ∪ {0}`.
    pub fn with_zero(&self) -> DefiningSet {
        let mut bits = self.members.clone();
        bits[0] = true;
        DefiningSet::from_bits(self.n, bits)
    }

    /// Human-readable `Z(a) ∪ Z(b) ∪ …` by leaders.
    pub fn describe(&self) -> String {
        let l = self.leaders();
        if l.is_empty() {
            return "∅".into();
        }
        l.iter().map(|a| format!("Z({a})")).collect::<Vec<_>>().join(" ∪ ")
    }
}

impl fmt::Debug for DefiningSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DefiningSet(n={}, leaders={:?})", self.n, self.leaders())
    }
}

/// Defining set of `C^⊥h`: `Z_n ∖ (−2A)`.
pub fn dual_defining_set(a: &DefiningSet) -> DefiningSet {
    a.scaled(-2).expect("-2 is a unit mod odd n").complement()
}

/// `A ∩ −2A = ∅`, i.e. the code with defining set `A` contains its Hermitian dual.
pub fn is_dual_containing(a: &DefiningSet) -> bool {
    a.is_disjoint(&a.scaled(-2).expect("-2 is a unit mod odd n"))
}

/// `n - k - dim(C ∩ C^⊥h)` for the cyclic code with defining set `A`;
/// equals `|A ∩ −2A|`.
pub fn near_orthogonality(a: &DefiningSet) -> usize {
    a.intersection(&a.scaled(-2).expect("-2 is a unit mod odd n")).expect("same n").len()
}

/// `dim C - dim(C ∩ C^⊥h)` for the cyclic code with defining set `A`;
/// equals `n - |A ∪ −2A|`.
pub fn near_self_orthogonality(a: &DefiningSet) -> usize {
    a.n - a.union(&a.scaled(-2).expect("-2 is a unit mod odd n")).expect("same n").len()
}

/// `μ_a`: `y_i = x_{a⁻¹ i}`.
pub fn apply_multiplier(a: i64, v: &Gf4Vector) -> Result<Gf4Vector> {
    let n = v.len();
    mod_inverse(a, n)?;
    let a = residue(a, n);
    let mut out = Gf4Vector::zeros(n);
    for j in 0..n {
        out.set(a * j % n, v.get(j));
    }
    Ok(out)
}

/// Defining set of `μ_a(C)` when `C` has defining set `A`: `a⁻¹A`.
pub fn apply_multiplier_set(a: i64, set: &DefiningSet) -> Result<DefiningSet> {
    let inv = mod_inverse(a, set.n)?;
    set.scaled(inv as i64)
}

/// JSON descriptor of a cyclic code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub n: usize,
    pub q: usize,
    pub defining_set_leaders: Vec<usize>,
    pub generator_polynomial: Gf4Poly,
}

/// A cyclic code of odd length over GF(4).
#[derive(Clone)]
pub struct CyclicCode {
    defining_set: DefiningSet,
    gen_poly: Gf4Poly,
    gen_matrix: OnceLock<Gf4Matrix>,
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.defining_set == other.defining_set
    }
}

impl Eq for CyclicCode {}

impl fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicCode[{}, {}] {}", self.len(), self.dim(), self.defining_set.describe())
    }
}

impl CyclicCode {
    /// Generator polynomial is the product of the minimal polynomials of the cosets in `A`.
    pub fn new(defining_set: DefiningSet) -> Result<Self> {
        let n = defining_set.n;
        let gen_poly = if n == 1 {
            if defining_set.is_empty() {
                Gf4Poly::one()
            } else {
                Gf4Poly::x_n_minus_1(1)
            }
        } else {
            let ext = ExtField::shared(n)?;
            ext.minimal_poly(&defining_set.member_set())?
        };
        if gen_poly.degree() != Some(defining_set.len()) {
            return Err(Error::Invariant("generator degree differs from defining set size".into()));
        }
        Ok(CyclicCode { defining_set, gen_poly, gen_matrix: OnceLock::new() })
    }

    pub fn from_leaders(n: usize, leaders: &[i64]) -> Result<Self> {
        Self::new(DefiningSet::from_leaders(n, leaders)?)
    }

    pub fn len(&self) -> usize {
        self.defining_set.n
    }

    pub fn dim(&self) -> usize {
        self.len() - self.defining_set.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn generator_polynomial(&self) -> &Gf4Poly {
        &self.gen_poly
    }

    /// Rows are the `k` shifts `x^i g(x)`, `0 ≤ i < k`.
    pub fn generator_matrix(&self) -> &Gf4Matrix {
        self.gen_matrix.get_or_init(|| {
            let n = self.len();
            if self.dim() == 0 {
                return Gf4Matrix::empty(n);
            }
            let g = self.gen_poly.to_vector(n).expect("deg g < n for a nonzero code");
            Gf4Matrix::new(n, (0..self.dim()).map(|i| g.cyclic_shift(i)).collect()).expect("rows of length n")
        })
    }

    pub fn to_linear(&self) -> LinearCode {
        if self.is_zero() {
            return LinearCode::zero(self.len());
        }
        LinearCode::new(self.generator_matrix()).with_shift_invariance(true)
    }

    /// Membership: `g(x)` divides `v(x)`.
    pub fn contains(&self, v: &Gf4Vector) -> bool {
        v.len() == self.len() && self.gen_poly.divides(&Gf4Poly::from_vector(v))
    }

    pub fn hermitian_dual(&self) -> Result<CyclicCode> {
        CyclicCode::new(dual_defining_set(&self.defining_set))
    }

    /// `μ_a(C)`.
    pub fn multiplied(&self, a: i64) -> Result<CyclicCode> {
        CyclicCode::new(apply_multiplier_set(a, &self.defining_set)?)
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor {
            n: self.len(),
            q: 4,
            defining_set_leaders: self.defining_set.leaders(),
            generator_polynomial: self.gen_poly.clone(),
        }
    }
}

/// Exponents `t` with `v(α^t) = 0` for every row `v`: the defining set of
/// the smallest cyclic code containing the row space.
pub fn common_zeros(ext: &ExtField, rows: &Gf4Matrix) -> BTreeSet<usize> {
    let polys: Vec<Gf4Poly> = rows.rows().iter().map(Gf4Poly::from_vector).collect();
    (0..ext.n()).filter(|&t| polys.iter().all(|p| ext.eval_at_alpha_pow(p, t as i64) == ext.zero())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Gf4;
    use proptest::prelude::*;

    fn ds(n: usize, xs: &[usize]) -> DefiningSet {
        DefiningSet::new(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_coset(15, 1, 4).unwrap(), vec![1, 4]);
        assert_eq!(cyclotomic_coset(9, 0, 4).unwrap(), vec![0]);
        assert_eq!(cyclotomic_coset(13, 1, 4).unwrap(), vec![1, 3, 4, 9, 10, 12]);
        assert!(cyclotomic_coset(4, 1, 2).is_err());
    }

    #[test]
    fn partition_examples() {
        let p = all_cosets(5, 4).unwrap();
        assert_eq!(p.cosets(), &[vec![0], vec![1, 4], vec![2, 3]]);
        let p = all_cosets(3, 4).unwrap();
        assert_eq!(p.cosets(), &[vec![0], vec![1], vec![2]]);
        let p = all_cosets(21, 4).unwrap();
        assert_eq!(p.cosets().len(), 9);
        assert!(p.cosets().contains(&vec![1, 4, 16]));
        assert!(p.cosets().contains(&vec![3, 6, 12]));
    }

    #[test]
    fn partition_invariants() {
        for n in (1..=99).step_by(2) {
            for q in [2, 4] {
                let p = all_cosets(n, q).unwrap();
                let mut seen = vec![0; n];
                for c in p.cosets() {
                    for &x in c {
                        seen[x] += 1;
                        assert!(c.contains(&(x * q % n)));
                    }
                }
                assert!(seen.iter().all(|&s| s == 1));
                let l = p.leaders();
                assert!(l.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn code_examples() {
        let c = CyclicCode::new(ds(5, &[1, 4])).unwrap();
        assert_eq!((c.len(), c.dim()), (5, 3));
        let full = CyclicCode::new(DefiningSet::empty(7).unwrap()).unwrap();
        assert_eq!(full.dim(), 7);
        assert_eq!(full.generator_polynomial(), &Gf4Poly::one());
        let zero = CyclicCode::new(DefiningSet::full(7).unwrap()).unwrap();
        assert_eq!(zero.dim(), 0);
        assert_eq!(zero.generator_polynomial(), &Gf4Poly::x_n_minus_1(7));
        assert_eq!(zero.to_linear().dim(), 0);
    }

    #[test]
    fn open_sets_rejected() {
        assert_eq!(DefiningSet::new(5, [1]), Err(Error::NotCosetClosed { n: 5, element: 1, image: 4 }));
        assert!(DefiningSet::new(5, [7]).is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_defining_set(&ds(5, &[1, 4])), ds(5, &[0, 1, 4]));
        assert_eq!(dual_defining_set(&DefiningSet::empty(9).unwrap()), DefiningSet::full(9).unwrap());
        assert_eq!(dual_defining_set(&ds(7, &[1, 2, 4])), ds(7, &[0, 1, 2, 4]));
    }

    #[test]
    fn dual_containment_examples() {
        assert!(is_dual_containing(&ds(5, &[1, 4])));
        assert!(!is_dual_containing(&ds(5, &[0])));
        let a = DefiningSet::from_leaders(141, &[2, 3, 10]).unwrap();
        assert_eq!(a.len(), 69);
        assert!(is_dual_containing(&a));
    }

    #[test]
    fn near_orthogonality_examples() {
        let a = DefiningSet::from_leaders(123, &[1, 2, 6, 7, 9, 11]).unwrap();
        assert_eq!(a.len(), 60);
        assert_eq!(near_orthogonality(&a), 0);
        assert_eq!(near_orthogonality(&dual_defining_set(&a)), 3);
        // odd-like QR at n = 13 (−2 is a non-residue)
        let q = DefiningSet::from_leaders(13, &[1]).unwrap();
        assert_eq!(near_self_orthogonality(&q), 1);
        assert_eq!(near_orthogonality(&q.with_zero()), 1);
    }

    #[test]
    fn multiplier_examples() {
        let v = Gf4Vector::from_symbols(&[Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2]);
        let w = apply_multiplier(2, &v).unwrap();
        assert_eq!(w.symbols(), vec![Gf4::ONE, Gf4::OMEGA2, Gf4::OMEGA]);
        assert_eq!(apply_multiplier(1, &v).unwrap(), v);
        assert_eq!(apply_multiplier_set(3, &ds(7, &[1, 2, 4])).unwrap(), ds(7, &[3, 5, 6]));
        assert!(apply_multiplier(3, &Gf4Vector::zeros(9)).is_err());
    }

    #[test]
    fn multiplier_maps_code_to_code() {
        let c = CyclicCode::new(ds(7, &[1, 2, 4])).unwrap();
        let img = c.multiplied(3).unwrap();
        for row in c.generator_matrix().rows() {
            assert!(img.contains(&apply_multiplier(3, row).unwrap()));
        }
    }

    #[test]
    fn generator_rows_and_shift_invariance() {
        let c = CyclicCode::from_leaders(21, &[1, 3]).unwrap();
        let g = c.generator_matrix();
        assert_eq!(g.rank(), c.dim());
        for row in g.rows() {
            assert!(c.contains(&row.cyclic_shift(1)));
        }
        assert!(c.generator_polynomial().divides(&Gf4Poly::x_n_minus_1(21)));
    }

    #[test]
    fn descriptor_is_canonical() {
        let c = CyclicCode::from_leaders(5, &[4]).unwrap();
        let json = serde_json::to_string(&c.descriptor()).unwrap();
        assert!(json.starts_with(r#"{"n":5,"q":4,"defining_set_leaders":[1],"generator_polynomial":["#));
        let back: CodeDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c.descriptor());
    }

    #[test]
    fn defining_set_recovered_from_roots() {
        let ext = ExtField::shared(15).unwrap();
        let c = CyclicCode::from_leaders(15, &[1, 5]).unwrap();
        assert_eq!(common_zeros(&ext, c.generator_matrix()), c.defining_set().member_set());
    }

    proptest! {
        #[test]
        fn multipliers_compose(n in (1usize..20).prop_map(|k| 2 * k + 1), a in 1i64..60, b in 1i64..60,
                               seed in prop::collection::vec(0u8..4, 41)) {
            prop_assume!(gcd(a as u64, n as u64) == 1 && gcd(b as u64, n as u64) == 1);
            let v = Gf4Vector::from_symbols(&seed[..n].iter().map(|&s| Gf4::new(s)).collect::<Vec<_>>());
            let lhs = apply_multiplier(a, &apply_multiplier(b, &v).unwrap()).unwrap();
            let rhs = apply_multiplier(a * b % n as i64, &v).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn dual_dimensions_add_up(n in (1usize..18).prop_map(|k| 2 * k + 1), mask in any::<u64>()) {
            let p = all_cosets(n, 4).unwrap();
            let leaders: Vec<i64> = p.leaders().iter().enumerate()
                .filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, &l)| l as i64).collect();
            let c = CyclicCode::from_leaders(n, &leaders).unwrap();
            let d = c.hermitian_dual().unwrap();
            prop_assert_eq!(c.dim() + d.dim(), n);
        }
    }
}
