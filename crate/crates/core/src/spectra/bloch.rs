use alloc::format;
use alloc::vec::Vec;

use nalgebra::DMatrix;

use super::{BandSet, PeriodicJacobi};
use crate::error::{invalid, Error, Result};
use crate::Complex64;

/// Eigenvalues of the Bloch matrices `H(θ)` on a uniform phase grid.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochSpectrum {
    pub phases: Vec<f64>,
    /// Sorted eigenvalues, one row per phase.
    pub eigenvalues: Vec<Vec<f64>>,
}

impl BlochSpectrum {
    /// All sampled eigenvalues, sorted.
    pub fn points(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.eigenvalues.iter().flatten().copied().collect();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Range `[min, max]` of each sorted eigenvalue branch over the grid,
    /// merged where branches overlap.
    pub fn band_ranges(&self) -> Result<BandSet> {
        let n = self.eigenvalues.first().map_or(0, Vec::len);
        let ranges = (0..n)
            .map(|b| {
                self.eigenvalues
                    .iter()
                    .map(|row| row[b])
                    .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)))
            })
            .collect();
        BandSet::new(ranges)
    }
}

/// The `P × P` Hermitian matrix of the operator restricted to Bloch waves
/// `ψ(m + P) = e^{iθ} ψ(m)`.
pub fn bloch_matrix(j: &PeriodicJacobi, theta: f64) -> DMatrix<Complex64> {
    let n = j.period();
    let p = j.hopping();
    let phase = Complex64::new(libm::cos(theta), libm::sin(theta));
    let mut h = DMatrix::<Complex64>::zeros(n, n);
    for m in 0..n {
        h[(m, m)] += Complex64::new(j.potential()[m], 0.0);
        // coupling to m - 1
        let (below, wrap_below) = if m == 0 { (n - 1, true) } else { (m - 1, false) };
        h[(m, below)] += if wrap_below { p[m] * phase.conj() } else { p[m] };
        // coupling to m + 1
        let (above, wrap_above) = if m + 1 == n { (0, true) } else { (m + 1, false) };
        let c = p[(m + 1) % n].conj();
        h[(m, above)] += if wrap_above { c * phase } else { c };
    }
    h
}

pub(crate) fn hermitian_eigenvalues(h: DMatrix<Complex64>) -> Result<Vec<f64>> {
    // eigenvalues only; the QR sweep has no iteration limit here, so a
    // non-finite input is rejected up front
    if h.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Numeric("Hermitian matrix has non-finite entries".into()));
    }
    let mut v: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    Ok(v)
}

/// Eigenvalues of `H(θ_j)` for `θ_j = 2πj / phases`, `j = 0 … phases - 1`.
///
/// With real hopping `H(2π - θ)` is the complex conjugate of `H(θ)`, so only
/// the phases in `[0, π]` are solved and the rest are mirrored.
pub fn bloch_spectrum(j: &PeriodicJacobi, phases: usize) -> Result<BlochSpectrum> {
    if phases == 0 {
        return Err(invalid("phase grid must be nonempty"));
    }
    let real = j.hopping().iter().all(|z| z.im == 0.0);
    let thetas: Vec<f64> =
        (0..phases).map(|k| 2.0 * core::f64::consts::PI * k as f64 / phases as f64).collect();
    let mut eigenvalues: Vec<Vec<f64>> = Vec::with_capacity(phases);
    for (k, &theta) in thetas.iter().enumerate() {
        let mirror = phases - k;
        if real && k > 0 && mirror < k {
            let ev = eigenvalues[mirror].clone();
            eigenvalues.push(ev);
            continue;
        }
        let ev = hermitian_eigenvalues(bloch_matrix(j, theta))
            .map_err(|e| Error::Numeric(format!("{e} at phase {theta}")))?;
        eigenvalues.push(ev);
    }
    Ok(BlochSpectrum { phases: thetas, eigenvalues })
}
