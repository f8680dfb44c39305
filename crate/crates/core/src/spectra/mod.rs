//! Pattern-equivariant Jacobi operators on periodic configurations and
//! their band spectra.
//!
//! For hopping `p` and potential `q` the operator acts as
//!
//! ```text
//! (Jψ)(m) = p_m ψ(m-1) + conj(p_{m+1}) ψ(m+1) + q_m ψ(m)
//! ```
//!
//! where `p_m` and `q_m` are read off the configuration around site `m`.
//! Two independent routes compute the spectrum of a periodic operator: the
//! Floquet discriminant (real nonzero hopping) and Bloch matrices sampled on
//! a grid of phases (any hopping).

mod bands;
pub(crate) mod bloch;
mod convergence;
mod jacobi;
mod local;

pub use bands::{band_set, BandComputation, BandSet, Touching};
pub use bloch::{bloch_spectrum, BlochSpectrum};
pub use convergence::{convergence_experiment, substitution_convergence, SpectralRow};
pub use jacobi::{JacobiSpec, PeriodicJacobi};
pub use local::LocalFunction;
