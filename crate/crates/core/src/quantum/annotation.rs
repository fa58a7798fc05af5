//! Distances imported from outside, each with its stated source.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::distance::{DistanceBound, Provenance};
use crate::error::{Error, Result};
use crate::quantum::{Purity, QuantumParams};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AnnotationKind {
    /// `[n, k, d]` of a classical code.
    Classical,
    /// `[[n, k, d]]` of a quantum code.
    #[default]
    Quantum,
}

/// One record `{ "n", "k", "d", "source", "kind"? }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotation {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub source: String,
    #[serde(default)]
    pub kind: AnnotationKind,
}

impl Annotation {
    pub fn bound(&self) -> DistanceBound {
        DistanceBound::exact(self.d, Provenance::LiteratureAnnotation)
    }

    pub fn describe(&self) -> String {
        match self.kind {
            AnnotationKind::Classical => format!("[{}, {}, {}] from {}", self.n, self.k, self.d, self.source),
            AnnotationKind::Quantum => format!("[[{}, {}, {}]] from {}", self.n, self.k, self.d, self.source),
        }
    }

    /// Quantum parameters of a quantum record (purity unknown).
    pub fn to_params(&self) -> Result<QuantumParams> {
        if self.kind != AnnotationKind::Quantum {
            return Err(Error::InvalidInput(format!("{} is not a quantum code", self.describe())));
        }
        Ok(QuantumParams::new(self.n, self.k, self.bound(), Purity::Unknown)?
            .step(format!("annotation: {}", self.describe())))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Annotations {
    pub entries: Vec<Annotation>,
}

impl Annotations {
    pub fn from_json(text: &str) -> Result<Self> {
        let a: Annotations =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("annotation file: {e}")))?;
        for e in &a.entries {
            if e.k > e.n || e.d == 0 || e.d > e.n.max(1) || e.source.trim().is_empty() {
                return Err(Error::InvalidInput(format!("annotation out of range or without source: {e:?}")));
            }
        }
        Ok(a)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn find(&self, kind: AnnotationKind, n: usize, k: usize) -> Option<&Annotation> {
        self.entries.iter().find(|a| a.kind == kind && a.n == n && a.k == k)
    }

    pub fn classical(&self, n: usize, k: usize) -> Option<&Annotation> {
        self.find(AnnotationKind::Classical, n, k)
    }

    pub fn quantum(&self, n: usize, k: usize) -> Option<&Annotation> {
        self.find(AnnotationKind::Quantum, n, k)
    }
}
