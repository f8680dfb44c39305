use alloc::format;
use alloc::vec::Vec;

use super::LocalFunction;
use crate::error::{invalid, Error, Result};
use crate::symbolic::PeriodicConfiguration;
use crate::Complex64;

/// Hopping and potential as local functions of the configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiSpec {
    pub hopping: LocalFunction<Complex64>,
    pub potential: LocalFunction<f64>,
}

impl JacobiSpec {
    /// The free operator `p ≡ 1`, `q ≡ 0`.
    pub fn free() -> Self {
        Self { hopping: LocalFunction::constant(Complex64::new(1.0, 0.0)), potential: LocalFunction::constant(0.0) }
    }

    /// Schrödinger operator with `q = λ` on sites carrying `letter`.
    pub fn letter_potential(letter: crate::symbolic::Letter, lambda: f64) -> Self {
        Self {
            hopping: LocalFunction::constant(Complex64::new(1.0, 0.0)),
            potential: LocalFunction::indicator(letter, lambda, 0.0),
        }
    }

    /// One period of coefficients along a one-dimensional configuration.
    pub fn sample(&self, cfg: &PeriodicConfiguration) -> Result<PeriodicJacobi> {
        if cfg.dim() != 1 {
            return Err(Error::UnsupportedDimension { found: cfg.dim(), context: "Jacobi operators live on Z" });
        }
        let period = cfg.periods()[0];
        let mut p = Vec::with_capacity(period);
        let mut q = Vec::with_capacity(period);
        for m in 0..period as i64 {
            let rp = self.hopping.radius();
            let wp = cfg.window(&[m - rp as i64], &[2 * rp + 1]);
            p.push(self.hopping.value(wp.cells()));
            let rq = self.potential.radius();
            let wq = cfg.window(&[m - rq as i64], &[2 * rq + 1]);
            q.push(self.potential.value(wq.cells()));
        }
        PeriodicJacobi::new(p, q)
    }
}

/// Coefficients `p_0 … p_{P-1}` and `q_0 … q_{P-1}` of a `P`-periodic
/// Jacobi operator, with `p_m` coupling sites `m - 1` and `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicJacobi {
    p: Vec<Complex64>,
    q: Vec<f64>,
}

pub(crate) fn modulus(z: Complex64) -> f64 {
    libm::hypot(z.re, z.im)
}

type Mat2 = [[f64; 2]; 2];

fn mul(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ]
}

fn add(a: &Mat2, b: &Mat2) -> Mat2 {
    [[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]]
}

impl PeriodicJacobi {
    pub fn new(p: Vec<Complex64>, q: Vec<f64>) -> Result<Self> {
        if p.is_empty() || p.len() != q.len() {
            return Err(invalid("hopping and potential need one common nonzero period"));
        }
        if q.iter().chain(p.iter().flat_map(|z| [&z.re, &z.im])).any(|x| !x.is_finite()) {
            return Err(invalid("coefficients must be finite"));
        }
        Ok(Self { p, q })
    }

    /// Real hopping convenience constructor.
    pub fn real(p: Vec<f64>, q: Vec<f64>) -> Result<Self> {
        Self::new(p.into_iter().map(|x| Complex64::new(x, 0.0)).collect(), q)
    }

    pub fn period(&self) -> usize {
        self.q.len()
    }

    pub fn hopping(&self) -> &[Complex64] {
        &self.p
    }

    pub fn potential(&self) -> &[f64] {
        &self.q
    }

    /// The coefficients read from site `shift` on.
    pub fn rotated(&self, shift: usize) -> Self {
        let mut p = self.p.clone();
        let mut q = self.q.clone();
        let s = shift % self.period();
        p.rotate_left(s);
        q.rotate_left(s);
        Self { p, q }
    }

    /// Upper bound on the operator norm: `max_m |q_m| + |p_m| + |p_{m+1}|`.
    pub fn gershgorin_bound(&self) -> f64 {
        let n = self.period();
        (0..n)
            .map(|m| libm::fabs(self.q[m]) + modulus(self.p[m]) + modulus(self.p[(m + 1) % n]))
            .fold(0.0, f64::max)
    }

    /// Real parts of the hopping, or an error at the first site where the
    /// hopping is zero or not real.
    pub fn real_hopping(&self) -> Result<Vec<f64>> {
        self.p
            .iter()
            .enumerate()
            .map(|(site, z)| {
                if z.im != 0.0 || z.re == 0.0 {
                    Err(Error::DegenerateHopping { site })
                } else {
                    Ok(z.re)
                }
            })
            .collect()
    }

    /// Ordered transfer-matrix product `A_{P-1}(E) ⋯ A_0(E)` and its
    /// derivative in `E`.
    pub fn transfer(&self, e: f64) -> Result<(Mat2, Mat2)> {
        let p = self.real_hopping()?;
        Ok(self.transfer_real(&p, e))
    }

    fn transfer_real(&self, p: &[f64], e: f64) -> (Mat2, Mat2) {
        let n = self.period();
        let mut m: Mat2 = [[1.0, 0.0], [0.0, 1.0]];
        let mut dm: Mat2 = [[0.0, 0.0], [0.0, 0.0]];
        for k in 0..n {
            let next = p[(k + 1) % n];
            let a = [[(e - self.q[k]) / next, -p[k] / next], [1.0, 0.0]];
            let da = [[1.0 / next, 0.0], [0.0, 0.0]];
            dm = add(&mul(&da, &m), &mul(&a, &dm));
            m = mul(&a, &m);
        }
        (m, dm)
    }

    /// Floquet discriminant `Δ(E)`, the trace of the transfer product.
    pub fn discriminant(&self, e: f64) -> Result<f64> {
        let (m, _) = self.transfer(e)?;
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let scale = m.iter().flatten().map(|x| x * x).sum::<f64>().max(1.0);
        if libm::fabs(det - 1.0) > 1e-10 * scale {
            return Err(Error::Numeric(format!("transfer product has determinant {det}")));
        }
        Ok(m[0][0] + m[1][1])
    }

    /// `Δ(E)` and `Δ'(E)` without the determinant check.
    pub(crate) fn discriminant_pair(&self, p: &[f64], e: f64) -> (f64, f64) {
        let (m, dm) = self.transfer_real(p, e);
        (m[0][0] + m[1][1], dm[0][0] + dm[1][1])
    }
}
