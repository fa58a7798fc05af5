//! Linear codes over GF(4) given by a reduced basis.

use crate::error::{Error, Result};
use crate::fields::{Gf4Matrix, Gf4Vector};

/// A linear code; the basis is kept in reduced row-echelon form so two
/// codes are equal exactly when their row spaces are.
///
/// `shift_invariant` records that the code is known to be cyclic, which
/// lets the distance engine use cyclic information sets.
#[derive(Clone, Debug)]
pub struct LinearCode {
    basis: Gf4Matrix,
    shift_invariant: bool,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    pub fn new(generators: &Gf4Matrix) -> Self {
        LinearCode { basis: generators.basis(), shift_invariant: false }
    }

    pub fn from_rows(n: usize, rows: Vec<Gf4Vector>) -> Result<Self> {
        Ok(Self::new(&Gf4Matrix::new(n, rows)?))
    }

    pub fn zero(n: usize) -> Self {
        LinearCode { basis: Gf4Matrix::empty(n), shift_invariant: true }
    }

    pub fn full(n: usize) -> Self {
        LinearCode { basis: Gf4Matrix::identity(n), shift_invariant: true }
    }

    /// Marks the code as closed under cyclic shifts. The caller vouches for it.
    pub fn with_shift_invariance(mut self, yes: bool) -> Self {
        self.shift_invariant = yes;
        self
    }

    pub fn is_shift_invariant(&self) -> bool {
        self.shift_invariant
    }

    pub fn len(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.num_rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn generator(&self) -> &Gf4Matrix {
        &self.basis
    }

    pub fn hermitian_dual(&self) -> LinearCode {
        LinearCode { basis: self.basis.hermitian_dual().basis(), shift_invariant: self.shift_invariant }
    }

    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        Ok(LinearCode {
            basis: self.basis.intersection(&other.basis)?,
            shift_invariant: self.shift_invariant && other.shift_invariant,
        })
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        Ok(LinearCode {
            basis: self.basis.sum(&other.basis)?,
            shift_invariant: self.shift_invariant && other.shift_invariant,
        })
    }

    pub fn contains(&self, v: &Gf4Vector) -> bool {
        self.basis.contains(v)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.basis.is_subspace_of(&other.basis)
    }

    /// `C ⊆ C^⊥h`, by the Gram test on the basis.
    pub fn is_hermitian_self_orthogonal(&self) -> bool {
        self.basis.is_hermitian_self_orthogonal()
    }

    /// `C^⊥h ⊆ C`.
    pub fn is_dual_containing(&self) -> bool {
        self.hermitian_dual().is_hermitian_self_orthogonal()
    }

    pub fn is_hermitian_self_dual(&self) -> bool {
        2 * self.dim() == self.len() && self.is_hermitian_self_orthogonal()
    }

    /// `dim(C ∩ C^⊥h)`.
    pub fn hull_dim(&self) -> usize {
        self.intersection(&self.hermitian_dual()).expect("same length").dim()
    }

    /// `n - k - dim(C ∩ C^⊥h)`: how far `C^⊥h` is from being self-orthogonal.
    /// Zero exactly when `C` contains its Hermitian dual.
    pub fn near_orthogonality(&self) -> usize {
        self.len() - self.dim() - self.hull_dim()
    }

    /// `dim C - dim(C ∩ C^⊥h)`: zero exactly when `C` is self-orthogonal.
    pub fn near_self_orthogonality(&self) -> usize {
        self.dim() - self.hull_dim()
    }

    /// Extends a basis of `self` to a basis of `sup`; returns the added rows.
    pub fn complement_in(&self, sup: &LinearCode) -> Result<Vec<Gf4Vector>> {
        if !self.is_subcode_of(sup) {
            return Err(Error::Precondition("subcode is not contained in the code".into()));
        }
        let mut rows: Vec<Gf4Vector> = self.basis.rows().to_vec();
        let mut rank = rows.len();
        let mut added = Vec::new();
        for v in sup.basis.rows() {
            rows.push(v.clone());
            let r = Gf4Matrix::new(self.len(), rows.clone())?.rank();
            if r > rank {
                rank = r;
                added.push(v.clone());
            } else {
                rows.pop();
            }
        }
        Ok(added)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Gf4;

    fn hexacode() -> LinearCode {
        let (o, i, w, w2) = (Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2);
        let g = Gf4Matrix::from_symbols(6, &[vec![i, o, o, i, w2, w], vec![o, i, o, i, w, w2], vec![o, o, i, i, i, i]])
            .unwrap();
        LinearCode::new(&g)
    }

    #[test]
    fn self_dual_code_has_no_excess() {
        let h = hexacode();
        assert!(h.is_hermitian_self_dual());
        assert!(h.is_dual_containing());
        assert_eq!(h.near_orthogonality(), 0);
        assert_eq!(h.near_self_orthogonality(), 0);
    }

    #[test]
    fn extreme_codes() {
        let f = LinearCode::full(4);
        assert!(f.is_dual_containing());
        assert_eq!(f.hermitian_dual(), LinearCode::zero(4));
        assert_eq!(f.near_self_orthogonality(), 4);
        assert_eq!(LinearCode::zero(4).near_orthogonality(), 4);
    }

    #[test]
    fn complement_extends_basis() {
        let h = hexacode();
        let sub = LinearCode::from_rows(6, vec![h.generator().rows()[0].clone()]).unwrap();
        let extra = sub.complement_in(&h).unwrap();
        assert_eq!(extra.len(), 2);
        let mut rows = sub.generator().rows().to_vec();
        rows.extend(extra);
        assert_eq!(LinearCode::from_rows(6, rows).unwrap(), h);
        assert!(h.complement_in(&sub).is_err());
    }
}
