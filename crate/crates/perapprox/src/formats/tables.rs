//! CSV tables of band edges and convergence data.

use perapprox_core::spectra::{BandSet, SpectralRow};
use perapprox_core::subst::ConvergenceRow;

use crate::error::{Failure, Result};

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn record(w: &mut csv::Writer<Vec<u8>>, fields: &[String]) -> Result<()> {
    w.write_record(fields).map_err(|e| Failure::Io(e.to_string()))
}

/// Edges with 17 significant digits.
fn edge(x: f64) -> String {
    format!("{x:.16e}")
}

/// `n,period,band_index,left_edge,right_edge`, one line per band.
pub fn bands(rows: &[(usize, usize, &BandSet)]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    record(&mut w, &["n", "period", "band_index", "left_edge", "right_edge"].map(String::from))?;
    for &(n, period, set) in rows {
        for (i, &(l, r)) in set.intervals().iter().enumerate() {
            record(&mut w, &[n.to_string(), period.to_string(), i.to_string(), edge(l), edge(r)])?;
        }
    }
    finish(w)
}

/// `n,period,proximity_index,hausdorff_to_ref`.
pub fn convergence(rows: &[SpectralRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    record(&mut w, &["n", "period", "proximity_index", "hausdorff_to_ref"].map(String::from))?;
    for r in rows {
        record(&mut w, &[r.n.to_string(), r.period.to_string(), r.proximity.to_string(), edge(r.hausdorff_to_ref)])?;
    }
    finish(w)
}

/// `n,width,height,containment,agreement` for planar approximants.
pub fn pattern_convergence(rows: &[ConvergenceRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    record(&mut w, &["n", "width", "height", "containment", "agreement"].map(String::from))?;
    for r in rows {
        let dims = &r.tile_dims;
        let height = dims.get(1).copied().unwrap_or(1);
        record(
            &mut w,
            &[r.n.to_string(), dims[0].to_string(), height.to_string(), r.containment.to_string(), r.agreement.to_string()],
        )?;
    }
    finish(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn band_lines() {
        let set = BandSet::new(vec![(-2.0, 0.5)]).unwrap();
        let text = bands(&[(3, 5, &set)]).unwrap();
        assert_eq!(
            text,
            "n,period,band_index,left_edge,right_edge\n3,5,0,-2.0000000000000000e0,5.0000000000000000e-1\n"
        );
    }
}
