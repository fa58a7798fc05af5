//! Minimum-weight search over a code or a difference of codes.
//!
//! Small spaces are enumerated completely along a reflected Gray sequence.
//! Larger ones use Brouwer–Zimmermann style information sets: codewords
//! whose message has weight `t` are enumerated level by level, and the
//! levels finished so far give a lower bound on every word not yet seen.

use rayon::prelude::*;

use crate::distance::bound::{DistanceBound, Provenance};
use crate::distance::packed::{range_mask, with_width, Packed, MAX_WORDS};
use crate::error::{Error, Result};
use crate::fields::{eliminate, Gf4Vector, LinearCode};

/// Search space: nonzero words of `span(rows)` outside `span(rows[..sub_dim])`.
///
/// Rows have `n + tags` coordinates. The tag coordinates are zero on the
/// first `sub_dim` rows and form an identity on the others, so a word lies
/// outside the excluded subcode exactly when its tag part is nonzero.
#[derive(Clone, Debug)]
pub(crate) struct Space {
    n: usize,
    tags: usize,
    rows: Vec<Gf4Vector>,
    sub_dim: usize,
    cyclic: bool,
    binary: bool,
}

impl Space {
    pub fn code(c: &LinearCode) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Domain("the zero code has no minimum distance".into()));
        }
        Ok(Space {
            n: c.len(),
            tags: 0,
            rows: c.generator().rows().to_vec(),
            sub_dim: 0,
            cyclic: c.is_shift_invariant(),
            binary: false,
        })
    }

    pub fn difference(c: &LinearCode, sub: &LinearCode) -> Result<Self> {
        if c.len() != sub.len() {
            return Err(Error::LengthMismatch { left: c.len(), right: sub.len() });
        }
        let extra = sub.complement_in(c)?;
        if extra.is_empty() {
            return Err(Error::Domain("the subcode equals the code; the difference is empty".into()));
        }
        let tags = extra.len();
        let mut rows: Vec<Gf4Vector> = sub.generator().rows().iter().map(|r| r.resized(c.len() + tags)).collect();
        for (i, r) in extra.iter().enumerate() {
            rows.push(r.concat(&Gf4Vector::unit(tags, i)));
        }
        Ok(Space {
            n: c.len(),
            tags,
            rows,
            sub_dim: sub.dim(),
            cyclic: c.is_shift_invariant() && sub.is_shift_invariant(),
            binary: false,
        })
    }

    /// Restricts coefficients to GF(2); the rows must be binary.
    pub fn into_binary(mut self) -> Result<Self> {
        if self.rows.iter().any(|r| r.hi_plane().iter().any(|&w| w != 0)) {
            return Err(Error::Precondition("generators are not binary".into()));
        }
        self.binary = true;
        Ok(self)
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn width_ok(&self) -> Result<()> {
        if self.n + self.tags > 64 * MAX_WORDS {
            return Err(Error::InvalidInput(format!(
                "search needs {} coordinates; at most {} are supported",
                self.n + self.tags,
                64 * MAX_WORDS
            )));
        }
        Ok(())
    }

    /// Words enumerated by a complete walk, or `None` on overflow.
    fn full_count(&self) -> Option<u64> {
        let q: u64 = if self.binary { 2 } else { 4 };
        (self.sub_dim..self.dim()).try_fold(0u64, |acc, j| acc.checked_add(q.checked_pow(j as u32)?))
    }

    /// The complete walk is used when `q^dim` fits in the budget and is
    /// small; larger spaces go to information sets, which stop early.
    fn walk_fits(&self, budget: u64) -> bool {
        let q: u64 = if self.binary { 2 } else { 4 };
        q.checked_pow(self.dim() as u32).is_some_and(|c| c <= budget.min(WALK_LIMIT))
    }
}

/// Largest space searched by a complete walk.
const WALK_LIMIT: u64 = 1 << 24;

/// Minimum weight over the space, exact when the budget allows.
pub(crate) fn search(space: &Space, budget: u64) -> Result<DistanceBound> {
    space.width_ok()?;
    if space.walk_fits(budget) {
        let (d, work) = with_width!(space.n + space.tags, W => gray_min::<W>(space));
        return Ok(DistanceBound::exact(d, Provenance::ExactEnumeration).with_work(work));
    }
    Ok(with_width!(space.n + space.tags, W => info_set::<W>(space, budget)))
}

/// Number of words of each weight in the space (all nonzero multiples counted).
pub(crate) fn histogram(space: &Space, budget: u64) -> Result<Vec<u64>> {
    space.width_ok()?;
    let count = space.full_count().filter(|&c| c <= budget);
    if count.is_none() {
        return Err(Error::Precondition(format!(
            "weight enumeration of a dimension-{} space exceeds the budget of {budget} words",
            space.dim()
        )));
    }
    let mut h = with_width!(space.n + space.tags, W => gray_histogram::<W>(space));
    if !space.binary {
        h.iter_mut().for_each(|x| *x *= 3);
    }
    Ok(h)
}

struct Walk<const W: usize> {
    start: Packed<W>,
    steps: usize,
}

/// Generators for the walk: `g_0, ωg_0, g_1, ωg_1, …` (or just `g_i` over GF(2)).
fn walk_basis<const W: usize>(space: &Space) -> Vec<Packed<W>> {
    let mut out = Vec::new();
    for r in &space.rows {
        let p = Packed::<W>::from_vector(r);
        out.push(p);
        if !space.binary {
            out.push(p.times_omega());
        }
    }
    out
}

/// One walk per leading index `j`: words `g_j + Σ_{i<j} c_i g_i`, which
/// covers every projective point once. Long walks are cut into 16 shards
/// by fixing the four highest step bits.
fn walks<const W: usize>(space: &Space, basis: &[Packed<W>]) -> Vec<Walk<W>> {
    let per = if space.binary { 1 } else { 2 };
    let mut out = Vec::new();
    for j in space.sub_dim..space.dim() {
        let lead = basis[per * j];
        let bits = per * j;
        let shard = if bits >= 12 { 4 } else { 0 };
        for p in 0u32..(1 << shard) {
            let mut start = lead;
            for t in 0..shard {
                if p >> t & 1 == 1 {
                    start.add(&basis[bits - shard + t]);
                }
            }
            out.push(Walk { start, steps: bits - shard });
        }
    }
    out
}

#[inline(always)]
fn walk<const W: usize>(w: &Walk<W>, basis: &[Packed<W>], mut visit: impl FnMut(&Packed<W>)) {
    let mut cur = w.start;
    visit(&cur);
    for i in 1u64..(1u64 << w.steps) {
        cur.add(&basis[i.trailing_zeros() as usize]);
        visit(&cur);
    }
}

fn gray_min<const W: usize>(space: &Space) -> (usize, u64) {
    let basis = walk_basis::<W>(space);
    let mask = range_mask::<W>(0, space.n);
    let tasks = walks(space, &basis);
    let (best, work) = tasks
        .par_iter()
        .map(|t| {
            let mut best = u32::MAX;
            walk(t, &basis, |w| best = best.min(w.weight(&mask)));
            (best, 1u64 << t.steps)
        })
        .reduce(|| (u32::MAX, 0), |a, b| (a.0.min(b.0), a.1 + b.1));
    (best as usize, work)
}

fn gray_histogram<const W: usize>(space: &Space) -> Vec<u64> {
    let basis = walk_basis::<W>(space);
    let mask = range_mask::<W>(0, space.n);
    let tasks = walks(space, &basis);
    let n = space.n;
    tasks
        .par_iter()
        .map(|t| {
            let mut h = vec![0u64; n + 1];
            walk(t, &basis, |w| h[w.weight(&mask) as usize] += 1);
            h
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Words of message weight `t` per systematic generator, first coefficient 1.
fn level_cost(k: usize, t: usize, binary: bool) -> u64 {
    let scalars: u128 = if binary { 1 } else { 3u128.saturating_pow(t as u32 - 1) };
    u64::try_from(binomial(k, t).saturating_mul(scalars)).unwrap_or(u64::MAX)
}

/// A systematic generator: rows with an identity on `rank` columns that are
/// disjoint from those of every other generator in the search.
struct Gamma<const W: usize> {
    // multiples of each row by 1, ω, ω²
    rows: Vec<[Packed<W>; 3]>,
    rank: usize,
}

fn gamma<const W: usize>(rows: &[Gf4Vector], rank: usize) -> Gamma<W> {
    let rows = rows
        .iter()
        .map(|r| {
            let p = Packed::<W>::from_vector(r);
            let w = p.times_omega();
            [p, w, w.times_omega()]
        })
        .collect();
    Gamma { rows, rank }
}

fn info_set<const W: usize>(space: &Space, budget: u64) -> DistanceBound {
    let n = space.n;
    let k = space.dim();
    let mask = range_mask::<W>(0, n);
    let tag_mask = range_mask::<W>(n, n + space.tags);
    let has_tags = space.tags > 0;

    // Cyclic spaces: any k consecutive coordinates are an information set.
    let mut gammas: Vec<Gamma<W>> = Vec::new();
    let mut cyclic = false;
    if space.cyclic {
        let mut rows = space.rows.clone();
        if eliminate(&mut rows, 0..k).len() == k {
            gammas.push(gamma(&rows, k));
            cyclic = true;
        }
    }
    if !cyclic {
        let mut remaining: Vec<usize> = (0..n).collect();
        loop {
            let mut rows = space.rows.clone();
            let rest: Vec<usize> = (0..n).filter(|c| !remaining.contains(c)).collect();
            let pivots = eliminate(&mut rows, remaining.iter().copied().chain(rest));
            let r = pivots.iter().take_while(|p| remaining.contains(p)).count();
            if r == 0 {
                break;
            }
            // Partial information sets only pay off once t reaches k − r.
            if gammas.is_empty() || 4 * (k - r) <= k {
                gammas.push(gamma(&rows, r));
            }
            remaining.retain(|c| !pivots[..r].contains(c));
        }
    }

    let (m, s) = (n / k, n % k);
    let lower = |t: usize| -> usize {
        if cyclic {
            m * (t + 1) + (t + 1).saturating_sub(k - s)
        } else {
            gammas.iter().map(|g| (t + 1).saturating_sub(k - g.rank)).sum()
        }
    };

    let mut lb = lower(0).max(1);
    let mut ub: Option<usize> = None;
    let mut work: u64 = 0;
    for t in 1..=k {
        let cost = level_cost(k, t, space.binary).saturating_mul(gammas.len() as u64);
        if work.saturating_add(cost) > budget {
            let hi_src = if ub.is_some() { Provenance::InformationSet } else { Provenance::BudgetExhausted };
            return DistanceBound::interval(lb, ub, Provenance::BudgetExhausted, hi_src).with_work(work);
        }
        for g in &gammas {
            let found = level_min(g, t, space.binary, &mask, &tag_mask, has_tags);
            if found < usize::MAX {
                ub = Some(ub.map_or(found, |u| u.min(found)));
            }
        }
        work += cost;
        lb = lb.max(lower(t));
        if t == k {
            // every message of the first, full-rank generator has been seen
            lb = ub.unwrap_or(lb);
        }
        if let Some(u) = ub.filter(|&u| lb >= u) {
            return DistanceBound::exact(u, Provenance::InformationSet).with_work(work);
        }
    }
    unreachable!("the last level enumerates every codeword")
}

fn level_min<const W: usize>(
    g: &Gamma<W>,
    t: usize,
    binary: bool,
    mask: &[u64; W],
    tag_mask: &[u64; W],
    has_tags: bool,
) -> usize {
    let k = g.rows.len();
    (0..=k - t)
        .into_par_iter()
        .map(|first| {
            let mut best = u32::MAX;
            let mut visit = |w: &Packed<W>| {
                if !has_tags || w.any(tag_mask) {
                    best = best.min(w.weight(mask));
                }
            };
            combos(&g.rows, first + 1, t - 1, g.rows[first][0], binary, &mut visit);
            best as usize
        })
        .min()
        .map_or(usize::MAX, |b| if b == u32::MAX as usize { usize::MAX } else { b })
}

fn combos<const W: usize, F: FnMut(&Packed<W>)>(
    rows: &[[Packed<W>; 3]],
    start: usize,
    left: usize,
    acc: Packed<W>,
    binary: bool,
    visit: &mut F,
) {
    if left == 0 {
        visit(&acc);
        return;
    }
    let scalars = if binary { 1 } else { 3 };
    for i in start..=rows.len() - left {
        for c in &rows[i][..scalars] {
            combos(rows, i + 1, left - 1, acc.sum(c), binary, visit);
        }
    }
}
