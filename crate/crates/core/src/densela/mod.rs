//! Dense complex linear algebra: a self-contained general (non-Hermitian)
//! eigensolver, a Hermitian eigensolver, operator 2-norm, determinant
//! phase tracking along contours, and nonlinear power iteration for
//! mixed-norm operator norms. Matrix sizes of interest stay below ~10^4
//! rows, so everything is O(N^3) dense.

mod boyd;
mod eig;
mod hermitian;
mod lu;
mod matching;
mod matrix;
mod norms;
mod winding;

pub use boyd::{mixed_norm_lower_bound, GridOperator, MixedNormOutcome, WeightedGrid};
pub use eig::{eig_general, SpectrumResult};
pub use hermitian::{eig_hermitian, HermitianEig, HERMITIAN_TOL};
pub use lu::LuFactors;
pub use matching::{match_multisets, multiset_distance};
pub use matrix::ComplexMatrix;
pub use norms::op_norm_2;
pub use winding::{logdet_phase_along, circle_contour, WindingCertificate};
