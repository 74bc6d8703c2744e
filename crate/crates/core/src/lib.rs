//! Circular convolution and image restoration primitives.
//!
//! The crate implements circular convolution of 1-D signals and 2-D images in
//! two forms. The *classic* form is the textbook wraparound convolution that
//! matches the elementwise product of DFTs. The *centered* form keeps the
//! kernel in its original element order and aligns the kernel's symmetric
//! center with the processed sample, which is the physically meaningful
//! operation for point-spread-function blur. Both forms come in spatial and
//! frequency versions, and the frequency version of the centered form carries
//! the phase factors that make the two agree.
//!
//! Supporting layers:
//!
//! * [`spectral`] — sample types and naive DFTs with fixed sign conventions.
//! * [`circulant`] — dense circulant / block-circulant / permutation matrices,
//!   the explicit-matrix oracles used to cross-check every convolution path.
//! * [`convolution`] — the eight convolution operations.
//! * [`psf`] — defocus, Gaussian, motion and uniform blur masks.
//! * [`restore`] — constrained least squares deconvolution, classic and
//!   center-corrected.
//! * [`verify`] — the randomized identity checks behind `circonv verify`.
//!
//! The crate is `no_std` (with `alloc`); everything is pure computation on
//! immutable values and safe to call concurrently.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod circulant;
pub mod convolution;
mod error;
pub mod psf;
pub mod restore;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};

/// Shared absolute tolerance for max-norm equality of unit-scale data.
///
/// Spectral and spatial paths of the same convolution agree to this bound;
/// dense-matrix oracles agree to the tighter [`verify::MATRIX_TOL`].
pub const TOL: f64 = 1e-9;
