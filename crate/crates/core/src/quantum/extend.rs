//! Turning a code whose dual is nearly self-orthogonal into a
//! dual-containing one by appending `e` coordinates.

use crate::distance::{DistanceBound, Provenance};
use crate::error::{Error, Result};
use crate::fields::{Gf4, Gf4Vector, LinearCode};

/// The code `Q` of length `n + e` built from `C`, with the pieces used to
/// bound its distance.
#[derive(Clone, Debug)]
pub struct Extension {
    /// `C`.
    pub base: LinearCode,
    /// `C + C^⊥h`.
    pub outer: LinearCode,
    pub e: usize,
    /// `Q`, which contains its Hermitian dual.
    pub code: LinearCode,
    /// `Q^⊥h`.
    pub dual: LinearCode,
}

impl Extension {
    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.len() == 0
    }

    /// `2 dim Q − (n + e)`.
    pub fn quantum_dim(&self) -> usize {
        2 * self.code.dim() - self.code.len()
    }
}

/// Orthonormal basis (for the Hermitian form) of the span of `ws`, on which
/// the form must be nondegenerate.
fn orthonormalize(mut ws: Vec<Gf4Vector>) -> Result<Vec<Gf4Vector>> {
    let inner = |u: &Gf4Vector, v: &Gf4Vector| u.hermitian_inner(v).expect("same length");
    let mut out = Vec::new();
    while !ws.is_empty() {
        let pick = match ws.iter().position(|w| w.norm() == Gf4::ONE) {
            Some(i) => i,
            None => {
                // all norms vanish: combine two vectors with nonzero product
                let (i, j) = (0..ws.len())
                    .flat_map(|i| (0..ws.len()).map(move |j| (i, j)))
                    .find(|&(i, j)| i != j && !inner(&ws[i], &ws[j]).is_zero())
                    .ok_or_else(|| Error::Invariant("Hermitian form is degenerate on the complement".into()))?;
                let v = ws[j].clone();
                let u = Gf4::ALL[1..]
                    .iter()
                    .map(|&l| {
                        let mut u = ws[i].clone();
                        u.add_scaled(l, &v);
                        u
                    })
                    .find(|u| u.norm() == Gf4::ONE)
                    .ok_or_else(|| Error::Invariant("no unit-norm combination".into()))?;
                ws[i] = u;
                i
            }
        };
        let b = ws.swap_remove(pick);
        for w in &mut ws {
            let c = inner(w, &b);
            w.add_scaled(c, &b);
        }
        out.push(b);
    }
    Ok(out)
}

/// Builds `Q = ⟨C ⊕ 0, b_i ⊕ u_i⟩` where the `b_i` are an orthonormal
/// basis of a complement of `C ∩ C^⊥h` in `C^⊥h` and `u_i` are unit
/// vectors of length `e`. Then `Q^⊥h = ⟨(C ∩ C^⊥h) ⊕ 0, b_i ⊕ u_i⟩ ⊆ Q`,
/// which is checked directly.
pub fn extend_nearly_self_orthogonal(c: &LinearCode) -> Result<Extension> {
    let n = c.len();
    let dual = c.hermitian_dual();
    let hull = dual.intersection(c)?;
    let bs = orthonormalize(hull.complement_in(&dual)?)?;
    let e = bs.len();
    let tails: Vec<Gf4Vector> = bs.iter().enumerate().map(|(i, b)| b.concat(&Gf4Vector::unit(e, i))).collect();

    let mut rows: Vec<Gf4Vector> = c.generator().rows().iter().map(|r| r.resized(n + e)).collect();
    rows.extend(tails.iter().cloned());
    let code = LinearCode::from_rows(n + e, rows)?;
    let mut rows: Vec<Gf4Vector> = hull.generator().rows().iter().map(|r| r.resized(n + e)).collect();
    rows.extend(tails);
    let q_dual = LinearCode::from_rows(n + e, rows)?;

    if code.dim() != c.dim() + e || code.hermitian_dual() != q_dual || !q_dual.is_hermitian_self_orthogonal() {
        return Err(Error::Invariant("extended code fails the Gram test".into()));
    }
    Ok(Extension { base: c.clone(), outer: c.sum(&dual)?, e, code, dual: q_dual })
}

/// Interval for `d(Q)` from `d(C)` and `d(C + C^⊥h)`:
/// `min{d(C), d(C + C^⊥h) + 1} ≤ d(Q) ≤ d(C)`, and `d(Q) ≤ d(C + C^⊥h) + e`
/// when the lighter word of `C + C^⊥h` cannot lie in `C`.
pub fn extension_bound(e: usize, d_base: &DistanceBound, d_outer: &DistanceBound) -> DistanceBound {
    if e == 0 {
        return d_base.clone();
    }
    let mut b = d_base.clone();
    if d_outer.lo + 1 < b.lo {
        b.lo = d_outer.lo + 1;
        b.lo_src = d_outer.lo_src;
    }
    if let Some(h) = d_outer.hi.filter(|&h| h < d_base.lo) {
        let src = if e == 1 { d_outer.hi_src } else { Provenance::Construction };
        b.lower_hi(h + e, src);
    }
    if b.hi.is_none() {
        b.hi_src = b.lo_src;
    }
    b.work = d_base.work + d_outer.work;
    b
}
