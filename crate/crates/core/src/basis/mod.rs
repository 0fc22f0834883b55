//! Eigenbasis machinery: spherical harmonics on S², Fourier modes on flat
//! tori, quadrature grids and pointwise evaluation tables.

mod quad;
mod sphere;
mod torus;

pub use quad::{gauss_legendre, GaussLegendre, SphereGrid, TorusGrid};
pub use sphere::{
    highest_weight_modulus, normalized_assoc_legendre_table, sphere_harmonic_eval, SphereBasis,
    SphereIndex, SphereTruncation,
};
pub use torus::{torus_mode_eval, TorusBasis, TorusIndex, TorusTruncation};

/// Declared frequency content of a potential, used by the grid sizing rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bandwidth {
    /// Band-limited up to the given polynomial degree (sphere) or
    /// frequency radius (torus); the quadrature rule is sized to be exact.
    Limited(usize),
    /// Not band-limited (fractional powers and the like); the grid is
    /// oversampled by a fixed factor and a two-grid agreement check is run.
    Fractional,
}

impl Bandwidth {
    pub fn is_fractional(&self) -> bool {
        matches!(self, Bandwidth::Fractional)
    }
}

/// Oversampling factor applied when the potential is not band-limited.
pub const FRACTIONAL_OVERSAMPLING: usize = 4;
