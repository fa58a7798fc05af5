//! Quantum codes from Hermitian dual-containing and self-dual GF(4) codes.

mod annotation;
mod constructions;
mod extend;
mod secondary;

pub use annotation::{Annotation, AnnotationKind, Annotations};
pub use constructions::{
    binary_cyclic_quantum, cyclic_zero_dim, dual_containing_params_to_zero_dim, dual_containing_to_zero_dim,
    construct_from_defining_set, extended_duadic_quantum, general_zero_dim, minus_two_splitting,
    quantum_from_dual_containing, qr_quantum_refinements, Built,
};
pub use extend::{extend_nearly_self_orthogonal, extension_bound, Extension};
pub use secondary::secondary_constructions;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::distance::{weight_distribution, DistanceBound, Provenance};
use crate::error::{Error, Result};
use crate::fields::{Gf4Matrix, LinearCode};

/// Whether the minimum distance equals that of the containing classical code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Purity {
    Yes,
    No,
    Unknown,
}

/// `[[n, k, d]]` with a distance interval and the steps that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d: DistanceBound,
    pub pure: Purity,
    pub trace: Vec<String>,
}

impl QuantumParams {
    pub fn new(n: usize, k: usize, d: DistanceBound, pure: Purity) -> Result<Self> {
        if k > n {
            return Err(Error::Invariant(format!("k = {k} exceeds n = {n}")));
        }
        d.check()?;
        Ok(QuantumParams { n, k, d, pure, trace: Vec::new() })
    }

    pub fn step(mut self, s: impl Into<String>) -> Self {
        self.trace.push(s.into());
        self
    }

    /// Rounds the distance interval to even values, as for every
    /// zero-dimensional code from a Hermitian self-dual code.
    pub fn lift_even(&mut self) {
        let before = self.d.clone();
        self.d.round_to_multiple(2, Provenance::Parity);
        if self.d != before {
            self.trace.push(format!("distance is even: {before} becomes {}", self.d));
        }
    }
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)
    }
}

#[derive(Serialize, Deserialize)]
struct ParamsJson {
    n: usize,
    k: usize,
    d_lo: usize,
    d_hi: Option<usize>,
    d_lo_src: Provenance,
    d_hi_src: Provenance,
    work: u64,
    pure: Purity,
    trace: Vec<String>,
}

impl Serialize for QuantumParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ParamsJson {
            n: self.n,
            k: self.k,
            d_lo: self.d.lo,
            d_hi: self.d.hi,
            d_lo_src: self.d.lo_src,
            d_hi_src: self.d.hi_src,
            work: self.d.work,
            pure: self.pure,
            trace: self.trace.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuantumParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ParamsJson::deserialize(d)?;
        Ok(QuantumParams {
            n: j.n,
            k: j.k,
            d: DistanceBound { lo: j.d_lo, hi: j.d_hi, lo_src: j.d_lo_src, hi_src: j.d_hi_src, work: j.work },
            pure: j.pure,
            trace: j.trace,
        })
    }
}

/// A Hermitian self-dual code of length `2m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualCode {
    gen: Gf4Matrix,
}

impl SelfDualCode {
    pub fn new(gen: &Gf4Matrix) -> Result<Self> {
        let gen = gen.basis();
        if 2 * gen.num_rows() != gen.cols() {
            return Err(Error::Precondition(format!(
                "rank {} is not half the length {}",
                gen.num_rows(),
                gen.cols()
            )));
        }
        if !gen.is_hermitian_self_orthogonal() {
            return Err(Error::Precondition("rows are not pairwise Hermitian-orthogonal".into()));
        }
        Ok(SelfDualCode { gen })
    }

    pub fn gen(&self) -> &Gf4Matrix {
        &self.gen
    }

    pub fn len(&self) -> usize {
        self.gen.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.gen.cols() == 0
    }

    pub fn code(&self) -> LinearCode {
        LinearCode::new(&self.gen)
    }

    /// Every codeword has even weight; checked on all words when the
    /// budget allows, otherwise `None`.
    pub fn all_weights_even(&self, budget: u64) -> Option<bool> {
        let h = weight_distribution(&self.code(), budget).ok()?;
        Some(h.iter().enumerate().all(|(w, &a)| w % 2 == 0 || a == 0))
    }
}
