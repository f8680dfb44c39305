//! Strongly periodic approximations of aperiodic subshifts and the spectra
//! of their pattern-equivariant Jacobi operators.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised bottom-up:
//!
//! * [`symbolic`]: alphabets, words, block patterns, periodic configurations
//!   and finite dictionary slices (heredity/extensibility checks, subword
//!   complexity, proximity in the local pattern topology).
//! * [`debruijn`]: de Bruijn graphs of one-dimensional slices, strong
//!   connectivity, branching vertices and global closed paths together with
//!   their associated periodic words.
//! * [`subst`]: one-dimensional substitutions and d-dimensional block
//!   substitutions: primitivity, substitution dictionaries, fixed seeds,
//!   the 2×2 symmetry search and periodic approximants.
//! * [`spectra`]: Jacobi operators sampled along periodic configurations,
//!   Floquet–Bloch band sets (discriminant and Bloch-matrix routes),
//!   Hausdorff distances and gaps.
//! * [`probes`]: norm probes detecting spectrum of finite self-adjoint and
//!   unitary matrices.
//! * [`corpus`]: the built-in example subshifts.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod corpus;
pub mod debruijn;
mod error;
pub mod probes;
pub mod spectra;
pub mod subst;
pub mod symbolic;

pub use error::{Error, Result};
pub use nalgebra::Complex;

/// Complex number type used for hopping amplitudes and matrix entries.
pub type Complex64 = Complex<f64>;
