//! Numerical laboratory for Schrödinger operators `-Δ + V` with complex
//! potentials on the round sphere S² and on flat tori.
//!
//! The crate discretizes the operators in the Laplacian eigenbasis
//! (spherical harmonics, Fourier modes), solves the resulting dense
//! non-Hermitian eigenproblems with a self-contained QR solver, and
//! provides the machinery to classify eigenvalues against cluster-disk
//! inclusion regions, to drive cluster-saturating potentials, and to run
//! large-torus scaling experiments.

pub mod assembly;
pub mod basis;
pub mod densela;
pub mod error;
pub mod inclusion;
pub mod saturation;
pub mod scaling;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
