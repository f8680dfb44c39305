//! Norm probes that detect spectrum of finite self-adjoint and unitary
//! matrices through norms of polynomial images.
//!
//! Every norm here is computed from the eigenvalues of a Hermitian matrix,
//! which is exact up to eigensolver round-off for these matrix classes.

use alloc::format;

use nalgebra::DMatrix;

use crate::error::{invalid, Error, Result};
use crate::spectra::bloch::hermitian_eigenvalues;
use crate::Complex64;

const STRUCTURE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteSelfAdjoint {
    m: DMatrix<Complex64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteUnitary {
    m: DMatrix<Complex64>,
}

fn max_abs_entry(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| libm::hypot(z.re, z.im)).fold(0.0, f64::max)
}

/// Operator norm of a Hermitian matrix.
fn hermitian_norm(h: DMatrix<Complex64>) -> Result<f64> {
    let ev = hermitian_eigenvalues(h)?;
    Ok(ev.iter().map(|x| libm::fabs(*x)).fold(0.0, f64::max))
}

impl FiniteSelfAdjoint {
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if !m.is_square() || m.nrows() == 0 {
            return Err(invalid("self-adjoint matrices must be square and nonempty"));
        }
        if max_abs_entry(&(m.adjoint() - &m)) > STRUCTURE_TOL {
            return Err(invalid("matrix is not self-adjoint"));
        }
        Ok(Self { m })
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        let d = DMatrix::from_fn(values.len(), values.len(), |i, j| {
            Complex64::new(if i == j { values[i] } else { 0.0 }, 0.0)
        });
        Self::new(d)
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn norm(&self) -> Result<f64> {
        hermitian_norm(self.m.clone())
    }

    pub fn eigenvalues(&self) -> Result<alloc::vec::Vec<f64>> {
        hermitian_eigenvalues(self.m.clone())
    }

    fn identity(&self) -> DMatrix<Complex64> {
        DMatrix::identity(self.dim(), self.dim())
    }
}

impl FiniteUnitary {
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if !m.is_square() || m.nrows() == 0 {
            return Err(invalid("unitary matrices must be square and nonempty"));
        }
        let n = m.nrows();
        if max_abs_entry(&(m.adjoint() * &m - DMatrix::identity(n, n))) > STRUCTURE_TOL {
            return Err(invalid("matrix is not unitary"));
        }
        Ok(Self { m })
    }

    pub fn diagonal(values: &[Complex64]) -> Result<Self> {
        let d = DMatrix::from_fn(values.len(), values.len(), |i, j| {
            if i == j {
                values[i]
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Self::new(d)
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }
}

/// Detects spectrum of `a` in the open interval `(x - r, x + r)`.
///
/// Returns `‖m² - (a - x)²‖ > m² - r²`, which holds exactly when the
/// spectrum meets the interval, provided `m >= ‖a - x‖`.
pub fn presence_probe(a: &FiniteSelfAdjoint, x: f64, m: f64, r: f64) -> Result<bool> {
    if !(r < m) {
        return Err(invalid("probe radius must be smaller than m"));
    }
    let id = a.identity();
    let shifted = a.matrix() - &id * Complex64::new(x, 0.0);
    let shifted_norm = hermitian_norm(shifted.clone())?;
    if m < shifted_norm - STRUCTURE_TOL {
        return Err(Error::Precondition(format!("m = {m} is below ||A - x|| = {shifted_norm}")));
    }
    let image = &id * Complex64::new(m * m, 0.0) - &shifted * &shifted;
    Ok(hermitian_norm(image)? > m * m - r * r)
}

/// Detects spectrum of `u` in the open disk of radius `r` around the unit
/// complex number `e`: returns `‖1 + conj(e)·u‖ > √(4 - r²)`.
pub fn unitary_probe(u: &FiniteUnitary, e: Complex64, r: f64) -> Result<bool> {
    if libm::fabs(libm::hypot(e.re, e.im) - 1.0) > STRUCTURE_TOL {
        return Err(invalid("probe centre must lie on the unit circle"));
    }
    if !(0.0..2.0).contains(&r) {
        return Err(invalid("probe radius must lie in [0, 2)"));
    }
    let n = u.m.nrows();
    let b = DMatrix::<Complex64>::identity(n, n) + u.matrix() * e.conj();
    // ‖b‖² is the largest eigenvalue of b* b
    let norm = libm::sqrt(hermitian_norm(b.adjoint() * &b)?);
    Ok(norm > libm::sqrt(4.0 - r * r))
}

/// `‖p0 + p1·a + p2·a²‖`.
pub fn p2_norm(a: &FiniteSelfAdjoint, p0: f64, p1: f64, p2: f64) -> Result<f64> {
    let id = a.identity();
    let m = a.matrix();
    let image = &id * Complex64::new(p0, 0.0) + m * Complex64::new(p1, 0.0) + (m * m) * Complex64::new(p2, 0.0);
    hermitian_norm(image)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presence_examples() {
        let a = FiniteSelfAdjoint::diagonal(&[-1.0, 0.0, 1.0]).unwrap();
        assert!(presence_probe(&a, 0.0, 2.0, 0.5).unwrap());
        let b = FiniteSelfAdjoint::diagonal(&[-1.0, 1.0]).unwrap();
        assert!(!presence_probe(&b, 0.0, 2.0, 0.5).unwrap());
    }

    #[test]
    fn small_m_is_rejected() {
        let a = FiniteSelfAdjoint::diagonal(&[-3.0, 1.0]).unwrap();
        assert!(matches!(presence_probe(&a, 0.0, 2.0, 0.5), Err(Error::Precondition(_))));
    }

    #[test]
    fn unitary_examples() {
        let one = Complex64::new(1.0, 0.0);
        let u = FiniteUnitary::diagonal(&[one]).unwrap();
        assert!(unitary_probe(&u, one, 0.3).unwrap());
        let v = FiniteUnitary::diagonal(&[Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)]).unwrap();
        assert!(!unitary_probe(&v, one, 1.0).unwrap());
        assert!(unitary_probe(&v, one, 1.5).unwrap());
        assert!(unitary_probe(&u, Complex64::new(2.0, 0.0), 0.5).is_err());
    }

    #[test]
    fn quadratic_norms_separate() {
        let a = FiniteSelfAdjoint::diagonal(&[-1.0, 0.0, 1.0]).unwrap();
        let b = FiniteSelfAdjoint::diagonal(&[-1.0, 0.5, 1.0]).unwrap();
        assert!((p2_norm(&a, 1.0, 0.0, -1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((p2_norm(&b, 1.0, 0.0, -1.0).unwrap() - 0.75).abs() < 1e-15);
        assert_eq!(p2_norm(&a, 0.0, 0.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = DMatrix::from_row_slice(2, 2, &[
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        ]);
        assert!(FiniteSelfAdjoint::new(m).is_err());
    }
}
