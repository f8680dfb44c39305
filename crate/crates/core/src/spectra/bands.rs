use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::PeriodicJacobi;
use crate::error::{invalid, Result};

/// A finite union of disjoint closed intervals, sorted left to right.
#[derive(Debug, Clone, PartialEq)]
pub struct BandSet {
    intervals: Vec<(f64, f64)>,
}

impl BandSet {
    /// Sorts the intervals and merges the ones that overlap or touch.
    pub fn new(mut intervals: Vec<(f64, f64)>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(invalid("band sets must be nonempty"));
        }
        if intervals.iter().any(|&(l, r)| !(l <= r) || !l.is_finite() || !r.is_finite()) {
            return Err(invalid("intervals need finite endpoints with left <= right"));
        }
        intervals.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut out: Vec<(f64, f64)> = Vec::with_capacity(intervals.len());
        for (l, r) in intervals {
            match out.last_mut() {
                Some(last) if l <= last.1 => last.1 = last.1.max(r),
                _ => out.push((l, r)),
            }
        }
        Ok(Self { intervals: out })
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.intervals[0].0
    }

    pub fn max(&self) -> f64 {
        self.intervals[self.intervals.len() - 1].1
    }

    /// Bounded components of the complement, as open intervals.
    pub fn gaps(&self) -> Vec<(f64, f64)> {
        self.intervals.windows(2).map(|w| (w[0].1, w[1].0)).collect()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.distance_to(x) == 0.0
    }

    /// Distance from `x` to the set.
    pub fn distance_to(&self, x: f64) -> f64 {
        // first interval whose right end is >= x
        let i = self.intervals.partition_point(|&(_, r)| r < x);
        let mut best = f64::INFINITY;
        if let Some(&(l, _)) = self.intervals.get(i) {
            best = if x >= l { 0.0 } else { l - x };
        }
        if i > 0 {
            best = best.min(x - self.intervals[i - 1].1);
        }
        best
    }

    fn directed(&self, other: &BandSet) -> f64 {
        let mut worst: f64 = 0.0;
        for &(l, r) in &self.intervals {
            worst = worst.max(other.distance_to(l)).max(other.distance_to(r));
        }
        for (g0, g1) in other.gaps() {
            let mid = 0.5 * (g0 + g1);
            if self.contains(mid) {
                worst = worst.max(other.distance_to(mid));
            }
        }
        worst
    }

    /// Exact Hausdorff distance between two band sets.
    pub fn hausdorff(&self, other: &BandSet) -> f64 {
        self.directed(other).max(other.directed(self))
    }
}

/// Two raw bands that meet (up to the tolerance) and were merged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Touching {
    /// Index of the lower of the two raw bands.
    pub band: usize,
    /// Energy where they meet.
    pub energy: f64,
}

/// Output of [`band_set`]: the merged spectrum plus the `P` raw bands.
#[derive(Debug, Clone, PartialEq)]
pub struct BandComputation {
    pub bands: BandSet,
    pub raw_bands: Vec<(f64, f64)>,
    pub touchings: Vec<Touching>,
    pub warnings: Vec<String>,
}

const BISECTION_STEPS: usize = 200;

/// Boundary of a predicate that is false then true on `[a, b]`.
fn bisect_predicate<F: Fn(f64) -> bool>(f: F, mut a: f64, mut b: f64) -> f64 {
    for _ in 0..BISECTION_STEPS {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if f(m) {
            b = m;
        } else {
            a = m;
        }
    }
    0.5 * (a + b)
}

/// Number of eigenvalues below `e` of the operator restricted to sites
/// `1 … P-1` with Dirichlet conditions at `0` and `P`, by Sturm counting of
/// the LDLᵀ pivots.
fn dirichlet_count(p: &[f64], q: &[f64], e: f64) -> usize {
    let mut count = 0;
    let mut d = 1.0;
    for m in 1..q.len() {
        let coupling = if m == 1 { 0.0 } else { p[m] * p[m] / d };
        d = q[m] - e - coupling;
        if d == 0.0 {
            d = -f64::EPSILON * (libm::fabs(q[m]) + libm::fabs(e) + 1.0);
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Spectrum `{E : |Δ(E)| <= 2}` of a periodic Jacobi operator with real
/// nonzero hopping.
///
/// Raw band `k` (counting from 0 on the left) is the part of `{|Δ| <= 2}`
/// between the Dirichlet eigenvalues `μ_k` and `μ_{k+1}`, one of which sits
/// in the closure of every gap. On that stretch `σΔ` with
/// `σ = (-1)^(P-1-k) sgn(∏p)` runs from below `-2` to above `2` through
/// the band, so both edges come out of bisection on monotone predicates.
///
/// Values of `Δ` that round to exactly `±2` count as outside, which keeps
/// the predicates monotone but moves edges at a double root inward by about
/// the square root of the rounding error. Each gap is therefore checked at
/// its critical point: if `|Δ|` does not exceed 2 there the gap is closed
/// and both edges move onto it. Raw bands closer than `tol` are merged and
/// the touching is recorded.
pub fn band_set(j: &PeriodicJacobi, tol: f64) -> Result<BandComputation> {
    if !(tol > 0.0) {
        return Err(invalid("edge tolerance must be positive"));
    }
    let p = j.real_hopping()?;
    let q = j.potential();
    let n = j.period();
    let w = j.gershgorin_bound() * 1.01 + 1e-3;
    let pair = |e: f64| j.discriminant_pair(&p, e);
    // Δ grows like E^P / ∏p, which fixes its orientation on every band
    let flux = if p.iter().filter(|x| **x < 0.0).count() % 2 == 0 { 1.0 } else { -1.0 };
    let sign = |k: usize| if (n - 1 - k) % 2 == 0 { flux } else { -flux };
    let mut warnings = Vec::new();

    let mut raw = Vec::with_capacity(n);
    for k in 0..n {
        let sigma = sign(k);
        let stretch = |e: f64| dirichlet_count(&p, q, e).cmp(&k);
        let left = bisect_predicate(|e| match stretch(e) {
            Ordering::Equal => sigma * pair(e).0 > -2.0,
            o => o.is_gt(),
        }, -w, w);
        let right = bisect_predicate(|e| match stretch(e) {
            Ordering::Equal => sigma * pair(e).0 >= 2.0,
            o => o.is_gt(),
        }, -w, w);
        raw.push((left, right.max(left)));
    }
    for k in 1..n {
        let (a, b) = (raw[k - 1].1, raw[k].0);
        if !(a < b) {
            continue;
        }
        let sigma = sign(k);
        let c = bisect_predicate(|e| sigma * pair(e).1 > 0.0, a, b);
        if sigma * pair(c).0 >= -2.0 {
            raw[k - 1].1 = c;
            raw[k].0 = c;
        }
    }
    if raw.first().is_some_and(|r| r.0 <= -w) || raw.last().is_some_and(|r| r.1 >= w) {
        warnings.push("spectrum reaches the Gershgorin window".into());
    }
    for (i, pair) in raw.windows(2).enumerate() {
        if pair[1].0 < pair[0].1 - tol {
            warnings.push(format!("raw bands {i} and {} overlap", i + 1));
        }
    }

    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(raw.len());
    let mut touchings = Vec::new();
    for (i, &(l, r)) in raw.iter().enumerate() {
        match merged.last_mut() {
            Some(last) if l - last.1 <= tol => {
                touchings.push(Touching { band: i - 1, energy: 0.5 * (l + last.1) });
                last.1 = last.1.max(r);
            }
            _ => merged.push((l, r)),
        }
    }
    Ok(BandComputation { bands: BandSet::new(merged)?, raw_bands: raw, touchings, warnings })
}
