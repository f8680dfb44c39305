use alloc::vec::Vec;

use super::{band_set, BandSet, JacobiSpec};
use crate::error::{invalid, Result};
use crate::subst::Substitution;
use crate::symbolic::{DictionarySlice, Pattern, PeriodicConfiguration, Proximity};

/// One approximant of a spectral convergence experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralRow {
    pub n: usize,
    pub period: usize,
    pub bands: BandSet,
    /// Hausdorff distance to the spectrum of the last approximant.
    pub hausdorff_to_ref: f64,
    /// Agreement of the approximant's dictionary with the reference slice.
    pub proximity: Proximity,
}

/// Band sets of a sequence of periodic approximants, compared with the last
/// one in spectrum and with `reference` in the local pattern topology.
pub fn convergence_experiment(
    approximants: &[(usize, PeriodicConfiguration)],
    jacobi: &JacobiSpec,
    reference: &DictionarySlice,
    tol: f64,
) -> Result<Vec<SpectralRow>> {
    if approximants.is_empty() {
        return Err(invalid("convergence experiments need at least one approximant"));
    }
    let mut rows = Vec::with_capacity(approximants.len());
    for (n, cfg) in approximants {
        let j = jacobi.sample(cfg)?;
        let bands = band_set(&j, tol)?.bands;
        let slice = cfg.dictionary(reference.cap())?;
        rows.push(SpectralRow {
            n: *n,
            period: j.period(),
            bands,
            hausdorff_to_ref: 0.0,
            proximity: slice.proximity_index(reference)?,
        });
    }
    let last = rows[rows.len() - 1].bands.clone();
    for r in &mut rows {
        r.hausdorff_to_ref = r.bands.hausdorff(&last);
    }
    Ok(rows)
}

/// [`convergence_experiment`] for the approximants `S^n(v^∞)`, compared
/// against the substitution dictionary up to `cap`.
pub fn substitution_convergence(
    s: &Substitution,
    seed: &Pattern,
    ns: impl IntoIterator<Item = usize>,
    jacobi: &JacobiSpec,
    cap: usize,
    tol: f64,
) -> Result<Vec<SpectralRow>> {
    let reference = s.dictionary(cap)?;
    let approximants =
        ns.into_iter().map(|n| Ok((n, s.periodic_approximant(seed, n)?))).collect::<Result<Vec<_>>>()?;
    convergence_experiment(&approximants, jacobi, &reference, tol)
}
