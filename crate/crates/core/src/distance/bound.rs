use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where an endpoint of a [`DistanceBound`] comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Every codeword was enumerated.
    ExactEnumeration,
    /// Information-set search closed the gap.
    InformationSet,
    /// Derived from the distance of a fixed subcode.
    FixedSubcode,
    /// Square-root bound on duadic codes.
    SquareRoot,
    /// Evenness or divisibility of the distance.
    Parity,
    /// Search stopped at the work budget; the endpoint is sound but not tight.
    BudgetExhausted,
    /// Imported from an annotation file.
    LiteratureAnnotation,
    /// Structural bound of a construction, from the distances of its inputs.
    Construction,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ExactEnumeration => "exact-enumeration",
            Provenance::InformationSet => "information-set",
            Provenance::FixedSubcode => "fixed-subcode",
            Provenance::SquareRoot => "square-root",
            Provenance::Parity => "parity",
            Provenance::BudgetExhausted => "budget-exhausted",
            Provenance::LiteratureAnnotation => "literature-annotation",
            Provenance::Construction => "construction",
        }
    }

    /// Produced by a search that saw every relevant codeword.
    pub fn is_search(self) -> bool {
        matches!(self, Provenance::ExactEnumeration | Provenance::InformationSet)
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An interval `[lo, hi]` known to contain a minimum distance.
///
/// `hi = None` means no upper bound is known. `work` counts codewords
/// visited while producing the bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBound {
    pub lo: usize,
    pub hi: Option<usize>,
    pub lo_src: Provenance,
    pub hi_src: Provenance,
    pub work: u64,
}

impl DistanceBound {
    pub fn exact(d: usize, src: Provenance) -> Self {
        DistanceBound { lo: d, hi: Some(d), lo_src: src, hi_src: src, work: 0 }
    }

    pub fn interval(lo: usize, hi: Option<usize>, lo_src: Provenance, hi_src: Provenance) -> Self {
        DistanceBound { lo: lo.max(1), hi, lo_src, hi_src, work: 0 }
    }

    pub fn lower(lo: usize, src: Provenance) -> Self {
        Self::interval(lo, None, src, src)
    }

    pub fn upper(hi: usize, src: Provenance) -> Self {
        DistanceBound { lo: 1, hi: Some(hi), lo_src: src, hi_src: src, work: 0 }
    }

    pub fn with_work(mut self, work: u64) -> Self {
        self.work = work;
        self
    }

    pub fn is_exact(&self) -> bool {
        self.hi == Some(self.lo)
    }

    /// The exact value, if known.
    pub fn value(&self) -> Option<usize> {
        self.is_exact().then_some(self.lo)
    }

    /// Lower end was limited by the search budget.
    pub fn lo_budget_limited(&self) -> bool {
        self.lo_src == Provenance::BudgetExhausted
    }

    /// Adds `delta` to both ends (lower end clamped at 1).
    pub fn shifted(&self, delta: i64) -> DistanceBound {
        let f = |x: usize| (x as i64 + delta).max(1) as usize;
        DistanceBound { lo: f(self.lo), hi: self.hi.map(f), ..self.clone() }
    }

    /// Raises `lo` to `lo'` when that is larger; the new lower end carries
    /// `src` unless it was budget-limited, in which case that tag is kept.
    pub fn raise_lo(&mut self, lo: usize, src: Provenance) {
        if lo > self.lo {
            self.lo = lo;
            if self.lo_src != Provenance::BudgetExhausted {
                self.lo_src = src;
            }
        }
    }

    /// Lowers `hi` when `hi'` is smaller.
    pub fn lower_hi(&mut self, hi: usize, src: Provenance) {
        if self.hi.is_none_or(|h| hi < h) {
            self.hi = Some(hi);
            self.hi_src = src;
        }
    }

    /// Rounds `lo` up and `hi` down to multiples of `m`.
    pub fn round_to_multiple(&mut self, m: usize, src: Provenance) {
        self.raise_lo(self.lo.div_ceil(m) * m, src);
        if let Some(h) = self.hi {
            let down = h / m * m;
            if down < h && down >= self.lo {
                self.hi = Some(down);
                self.hi_src = src;
            }
        }
    }

    pub fn check(&self) -> Result<()> {
        match self.hi {
            Some(h) if h < self.lo => Err(Error::InconsistentBounds { lo: self.lo, hi: h }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for DistanceBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(h) if h == self.lo => write!(f, "{}", self.lo),
            Some(h) => write!(f, "{}-{}", self.lo, h),
            None => write!(f, "≥{}", self.lo),
        }
    }
}

/// Intersection of intervals: largest lower end, smallest upper end, each
/// keeping the provenance of the part that supplied it (first on ties).
pub fn compose_bounds(parts: &[DistanceBound]) -> Result<DistanceBound> {
    let first = parts.first().ok_or_else(|| Error::InvalidInput("no bounds to compose".into()))?;
    let mut out = first.clone();
    out.work = 0;
    for p in parts {
        if p.lo > out.lo {
            out.lo = p.lo;
            out.lo_src = p.lo_src;
        }
        if let Some(h) = p.hi {
            if out.hi.is_none_or(|o| h < o) {
                out.hi = Some(h);
                out.hi_src = p.hi_src;
            }
        }
        out.work += p.work;
    }
    if out.hi.is_none() {
        out.hi_src = out.lo_src;
    }
    out.check()?;
    Ok(out)
}

/// `⌈d_a/2 + 1⌉`, capped at `d_a` (only matters for `d_a = 1`).
pub fn order_two_lower_bound(d_a: usize) -> usize {
    d_a.min((d_a + 3) / 2)
}

/// `⌈(d_a − 1)/i + 1⌉` for odd order `i`.
pub fn odd_order_lower_bound(d_a: usize, i: usize) -> usize {
    d_a.saturating_sub(1).div_ceil(i) + 1
}
