//! Quadrature rules: Gauss-Legendre nodes/weights on [-1, 1] and the
//! tensor grids built from them on the sphere and the torus.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::basis::{Bandwidth, FRACTIONAL_OVERSAMPLING};

/// Gauss-Legendre rule on [-1, 1]: exact for polynomials of degree
/// `2 * nodes - 1`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Computes the `count`-point Gauss-Legendre rule by Newton iteration on
/// the Legendre polynomial, seeded with the Chebyshev-like estimate for
/// the roots. Nodes come out ascending and symmetric about 0.
pub fn gauss_legendre(count: usize) -> Result<GaussLegendre> {
    if count == 0 {
        return Err(Error::InvalidConfig("gauss_legendre needs count >= 1".into()));
    }
    let n = count;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    // Compute roots in the upper half; mirror afterwards.
    let half = (n + 1) / 2;
    for i in 0..half {
        // Initial guess (Abramowitz & Stegun 25.4.30 flavor).
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        // One polishing step.
        let (p, d) = legendre_and_derivative(n, x);
        x -= p / d;
        dp = legendre_and_derivative(n, x).1;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        weights[i] = w;
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let dp = legendre_and_derivative(n, 0.0).1;
        weights[n / 2] = 2.0 / (dp * dp);
    }
    Ok(GaussLegendre { nodes, weights })
}

/// Legendre polynomial P_n and its derivative at x, by the three-term
/// recurrence (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.
fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    // P'_n(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let d = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Tensor quadrature grid on S²: Gauss-Legendre in cos(theta), uniform in
/// phi. Point ordering is theta-major, left to right in phi; all sums over
/// the grid run in that order so results are reproducible bit for bit.
#[derive(Debug, Clone)]
pub struct SphereGrid {
    pub thetas: Vec<f64>,
    /// cos(theta) at each colatitude node (the raw Gauss-Legendre node).
    pub cos_thetas: Vec<f64>,
    /// Gauss-Legendre weight per colatitude node (sums to 2).
    pub colat_weights: Vec<f64>,
    pub phis: Vec<f64>,
    /// Uniform azimuthal weight 2*pi / n_phi.
    pub phi_weight: f64,
    /// Declared bandwidth this grid was sized for.
    pub bandwidth: Bandwidth,
    /// Basis degree budget this grid was sized for.
    pub degree_budget: usize,
}

impl SphereGrid {
    /// Sizes a grid for products of two basis harmonics of degree at most
    /// `l_max` against a potential of the declared bandwidth. Band-limited
    /// potentials get an exact rule: `l_max + 1 + ceil(w/2)` colatitude
    /// nodes and `2 l_max + 1 + w` azimuth nodes. Fractional-power
    /// potentials are oversampled by a fixed factor instead.
    pub fn for_truncation(l_max: usize, bandwidth: Bandwidth) -> Result<Self> {
        let (n_theta, n_phi) = match bandwidth {
            Bandwidth::Limited(w) => (l_max + 1 + w.div_ceil(2), 2 * l_max + 1 + w),
            Bandwidth::Fractional => (
                FRACTIONAL_OVERSAMPLING * (l_max + 1),
                FRACTIONAL_OVERSAMPLING * (2 * l_max + 1) + 1,
            ),
        };
        Self::with_counts(n_theta, n_phi, bandwidth, l_max)
    }

    /// A grid with one extra oversampling notch, for the two-grid
    /// agreement check on fractional-power potentials.
    pub fn refined(&self) -> Result<Self> {
        let n_theta = self.thetas.len() + self.degree_budget + 1;
        let n_phi = self.phis.len() + 2 * self.degree_budget + 1;
        Self::with_counts(n_theta, n_phi, self.bandwidth, self.degree_budget)
    }

    pub fn with_counts(
        n_theta: usize,
        n_phi: usize,
        bandwidth: Bandwidth,
        degree_budget: usize,
    ) -> Result<Self> {
        let gl = gauss_legendre(n_theta)?;
        let thetas: Vec<f64> = gl.nodes.iter().map(|&x| x.acos()).collect();
        let phis: Vec<f64> = (0..n_phi)
            .map(|j| 2.0 * PI * j as f64 / n_phi as f64)
            .collect();
        Ok(SphereGrid {
            thetas,
            cos_thetas: gl.nodes,
            colat_weights: gl.weights,
            phis,
            phi_weight: 2.0 * PI / n_phi as f64,
            bandwidth,
            degree_budget,
        })
    }

    pub fn n_theta(&self) -> usize {
        self.thetas.len()
    }

    pub fn n_phi(&self) -> usize {
        self.phis.len()
    }

    pub fn n_points(&self) -> usize {
        self.n_theta() * self.n_phi()
    }

    /// Weight of grid point (i, j); the full weights sum to 4*pi.
    pub fn weight(&self, i_theta: usize) -> f64 {
        self.colat_weights[i_theta] * self.phi_weight
    }

    /// Integrates a function sampled on the grid (theta-major order).
    pub fn integrate(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.n_points());
        let mut acc = 0.0;
        for i in 0..self.n_theta() {
            let mut row = 0.0;
            for j in 0..self.n_phi() {
                row += values[i * self.n_phi() + j];
            }
            acc += row * self.weight(i);
        }
        acc
    }

    /// Surface measure captured by the rule; equals 4*pi up to rounding.
    pub fn total_weight(&self) -> f64 {
        self.colat_weights.iter().sum::<f64>() * self.phi_weight * self.n_phi() as f64
    }
}

/// Uniform tensor grid on the torus of side `length`, with `n` points per
/// direction and trapezoid weights `(length / n)^2`. The trapezoid rule is
/// exact on band-limited products. `n` is rounded up to a power of two so
/// that rescaled grids share coordinates exactly.
#[derive(Debug, Clone)]
pub struct TorusGrid {
    pub length: f64,
    pub n_side: usize,
    /// 1-d coordinates, `length * (i / n - 1/2)`, shared by both axes.
    pub coords: Vec<f64>,
    pub bandwidth: Bandwidth,
}

impl TorusGrid {
    /// Sizes the grid for products of two modes with `|m| <= m_max` against
    /// a potential of declared bandwidth, so every surviving difference
    /// frequency is resolved exactly.
    pub fn for_truncation(length: f64, m_max: usize, bandwidth: Bandwidth) -> Result<Self> {
        let w = match bandwidth {
            Bandwidth::Limited(w) => w,
            Bandwidth::Fractional => FRACTIONAL_OVERSAMPLING * (2 * m_max + 1),
        };
        let needed = 2 * m_max + w + 1;
        Self::with_side(length, needed.next_power_of_two(), bandwidth)
    }

    pub fn with_side(length: f64, n_side: usize, bandwidth: Bandwidth) -> Result<Self> {
        if length <= 0.0 || n_side == 0 {
            return Err(Error::InvalidConfig("torus grid needs length > 0, n >= 1".into()));
        }
        let coords = (0..n_side)
            .map(|i| length * (i as f64 / n_side as f64 - 0.5))
            .collect();
        Ok(TorusGrid {
            length,
            n_side,
            coords,
            bandwidth,
        })
    }

    pub fn n_points(&self) -> usize {
        self.n_side * self.n_side
    }

    /// Constant weight per point.
    pub fn weight(&self) -> f64 {
        (self.length / self.n_side as f64).powi(2)
    }

    pub fn total_weight(&self) -> f64 {
        self.weight() * self.n_points() as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_rule_is_classical() {
        let gl = gauss_legendre(2).unwrap();
        let r = 1.0 / 3.0_f64.sqrt();
        assert!((gl.nodes[0] + r).abs() < 1e-15);
        assert!((gl.nodes[1] - r).abs() < 1e-15);
        assert!((gl.weights[0] - 1.0).abs() < 1e-15);
        assert!((gl.weights[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn one_point_rule_is_midpoint() {
        let gl = gauss_legendre(1).unwrap();
        assert_eq!(gl.nodes, vec![0.0]);
        assert!((gl.weights[0] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn three_point_rule_integrates_x4_exactly() {
        let gl = gauss_legendre(3).unwrap();
        let integral: f64 = gl
            .nodes
            .iter()
            .zip(&gl.weights)
            .map(|(&x, &w)| w * x.powi(4))
            .sum();
        assert!((integral - 0.4).abs() < 1e-14);
    }

    #[test]
    fn nodes_symmetric_and_exact_to_degree_budget() {
        for n in [5usize, 16, 33, 64] {
            let gl = gauss_legendre(n).unwrap();
            for i in 0..n {
                assert!((gl.nodes[i] + gl.nodes[n - 1 - i]).abs() < 1e-14);
                assert!((gl.weights[i] - gl.weights[n - 1 - i]).abs() < 1e-14);
            }
            // Exactness on the highest monomial the rule must capture.
            let d = 2 * n - 2; // even, so the integral is 2/(d+1)
            let integral: f64 = gl
                .nodes
                .iter()
                .zip(&gl.weights)
                .map(|(&x, &w)| w * x.powi(d as i32))
                .sum();
            let exact = 2.0 / (d as f64 + 1.0);
            assert!(
                (integral - exact).abs() < 1e-12 * exact.abs().max(1.0),
                "degree {d} failed at n = {n}: {integral} vs {exact}"
            );
        }
    }

    #[test]
    fn sphere_grid_weights_sum_to_surface_measure() {
        let grid = SphereGrid::for_truncation(12, Bandwidth::Limited(4)).unwrap();
        let rel = (grid.total_weight() - 4.0 * PI).abs() / (4.0 * PI);
        assert!(rel < 1e-12, "relative defect {rel}");
    }

    #[test]
    fn torus_grid_weights_sum_to_area() {
        let grid = TorusGrid::for_truncation(2.0, 5, Bandwidth::Limited(3)).unwrap();
        let rel = (grid.total_weight() - 4.0).abs() / 4.0;
        assert!(rel < 1e-12);
    }
}
