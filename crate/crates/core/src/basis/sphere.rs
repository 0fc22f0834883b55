//! Complex spherical harmonics on S², fully normalized, Condon-Shortley
//! phase included, so that Y_k^{-m} = (-1)^m conj(Y_k^m) and the family is
//! orthonormal in L²(S²).
//!
//! The associated Legendre part is evaluated by the normalized three-term
//! recurrence in (k, m); normalization is carried inside the recurrence so
//! the table stays well scaled up to degrees around 100.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::basis::quad::SphereGrid;
use crate::error::{Error, Result};

/// Index (degree k, order m) of a spherical harmonic, |m| <= k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SphereIndex {
    pub k: usize,
    pub m: i64,
}

impl SphereIndex {
    pub fn new(k: usize, m: i64) -> Result<Self> {
        if m.unsigned_abs() as usize > k {
            return Err(Error::IndexOutOfRange(format!("|m| = {} > k = {}", m, k)));
        }
        Ok(SphereIndex { k, m })
    }

    /// Laplace-Beltrami eigenvalue k(k+1), exact in integer arithmetic.
    pub fn eigenvalue(&self) -> f64 {
        (self.k * (self.k + 1)) as f64
    }
}

/// Truncation of the spherical-harmonic basis at max degree `l_max`.
/// Indices are enumerated degree-major, order ascending from -k to k, so
/// the flat position of (k, m) is k^2 + (m + k).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereTruncation {
    pub l_max: usize,
}

impl SphereTruncation {
    pub fn new(l_max: usize) -> Self {
        SphereTruncation { l_max }
    }

    pub fn n_basis(&self) -> usize {
        (self.l_max + 1) * (self.l_max + 1)
    }

    pub fn flat(&self, idx: SphereIndex) -> usize {
        idx.k * idx.k + (idx.m + idx.k as i64) as usize
    }

    pub fn index(&self, flat: usize) -> SphereIndex {
        let k = (flat as f64).sqrt() as usize;
        let k = if (k + 1) * (k + 1) <= flat { k + 1 } else { k };
        SphereIndex {
            k,
            m: flat as i64 - (k * k + k) as i64,
        }
    }

    pub fn indices(&self) -> impl Iterator<Item = SphereIndex> + '_ {
        (0..=self.l_max).flat_map(|k| (-(k as i64)..=k as i64).map(move |m| SphereIndex { k, m }))
    }

    /// Diagonal of the truncated Laplacian, in enumeration order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.indices().map(|idx| idx.eigenvalue()).collect()
    }

    /// Distinct eigenvalues k(k+1) for k = 0..=l_max.
    pub fn distinct_eigenvalues(&self) -> Vec<f64> {
        (0..=self.l_max).map(|k| (k * (k + 1)) as f64).collect()
    }
}

fn tri_offset(k: usize) -> usize {
    k * (k + 1) / 2
}

/// Normalized associated Legendre values bar{P}_k^m(cos theta) for all
/// 0 <= m <= k <= l_max at a single colatitude, packed triangularly:
/// entry for (k, m) sits at `k(k+1)/2 + m`. The normalization is the one
/// that makes Y_k^m = bar{P}_k^m e^{i m phi} orthonormal on S², with the
/// Condon-Shortley sign folded in.
pub fn normalized_assoc_legendre_table(l_max: usize, cos_theta: f64, sin_theta: f64) -> Vec<f64> {
    let mut p = vec![0.0; tri_offset(l_max + 1)];
    p[0] = (1.0 / (4.0 * PI)).sqrt();
    // Diagonal bar{P}_m^m.
    for m in 1..=l_max {
        let mf = m as f64;
        p[tri_offset(m) + m] =
            -((2.0 * mf + 1.0) / (2.0 * mf)).sqrt() * sin_theta * p[tri_offset(m - 1) + m - 1];
    }
    // First superdiagonal bar{P}_{m+1}^m.
    for m in 0..l_max {
        let mf = m as f64;
        p[tri_offset(m + 1) + m] = (2.0 * mf + 3.0).sqrt() * cos_theta * p[tri_offset(m) + m];
    }
    // Upward recurrence in degree.
    for m in 0..=l_max {
        for k in (m + 2)..=l_max {
            let kf = k as f64;
            let mf = m as f64;
            let a = ((4.0 * kf * kf - 1.0) / (kf * kf - mf * mf)).sqrt();
            let b = (((kf - 1.0) * (kf - 1.0) - mf * mf) / (4.0 * (kf - 1.0) * (kf - 1.0) - 1.0))
                .sqrt();
            p[tri_offset(k) + m] =
                a * (cos_theta * p[tri_offset(k - 1) + m] - b * p[tri_offset(k - 2) + m]);
        }
    }
    p
}

/// Evaluates Y_k^m at arbitrary points given as (theta, phi) pairs.
pub fn sphere_harmonic_eval(idx: SphereIndex, points: &[(f64, f64)]) -> Result<Vec<Complex64>> {
    SphereIndex::new(idx.k, idx.m)?;
    let m_abs = idx.m.unsigned_abs() as usize;
    let sign = if idx.m < 0 && m_abs % 2 == 1 { -1.0 } else { 1.0 };
    Ok(points
        .iter()
        .map(|&(theta, phi)| {
            let table = normalized_assoc_legendre_table(idx.k, theta.cos(), theta.sin());
            let p = sign * table[tri_offset(idx.k) + m_abs];
            let phase = Complex64::from_polar(1.0, idx.m as f64 * phi);
            p * phase
        })
        .collect())
}

/// |Q_k| up to normalization: the highest weight harmonic of degree k is
/// proportional to (x1 + i x2)^k, whose modulus on the sphere is sin^k theta.
pub fn highest_weight_modulus(k: usize, points: &[(f64, f64)]) -> Vec<f64> {
    points
        .iter()
        .map(|&(theta, _)| theta.sin().powi(k as i32))
        .collect()
}

/// Precomputed evaluation tables for all harmonics up to `l_max` on a
/// tensor grid: the signed Legendre part per colatitude and the azimuthal
/// phases per order. Immutable after construction.
#[derive(Debug, Clone)]
pub struct SphereBasis {
    pub trunc: SphereTruncation,
    n_phi: usize,
    n_theta: usize,
    /// Signed Legendre part, theta-major: ptab[i * n_basis + flat(k, m)].
    ptab: Vec<f64>,
    /// Azimuthal phases e^{i m phi_j} for m in 0..=l_max: phases[j * (l_max+1) + m].
    phases: Vec<Complex64>,
}

impl SphereBasis {
    /// Builds the tables, verifying that the grid budget covers the
    /// requested degree (products of two degree-l_max harmonics).
    pub fn new(trunc: SphereTruncation, grid: &SphereGrid) -> Result<Self> {
        if grid.degree_budget < trunc.l_max {
            return Err(Error::UnderResolved(format!(
                "grid sized for degree {} cannot host basis degree {}",
                grid.degree_budget, trunc.l_max
            )));
        }
        let l_max = trunc.l_max;
        let n_basis = trunc.n_basis();
        let mut ptab = vec![0.0; grid.n_theta() * n_basis];
        for (i, (&ct, &st_src)) in grid
            .cos_thetas
            .iter()
            .zip(grid.thetas.iter())
            .enumerate()
        {
            let st = st_src.sin();
            let tri = normalized_assoc_legendre_table(l_max, ct, st);
            let row = &mut ptab[i * n_basis..(i + 1) * n_basis];
            for k in 0..=l_max {
                for m in -(k as i64)..=(k as i64) {
                    let m_abs = m.unsigned_abs() as usize;
                    let sign = if m < 0 && m_abs % 2 == 1 { -1.0 } else { 1.0 };
                    row[k * k + (m + k as i64) as usize] = sign * tri[tri_offset(k) + m_abs];
                }
            }
        }
        let mut phases = vec![Complex64::new(0.0, 0.0); grid.n_phi() * (l_max + 1)];
        for (j, &phi) in grid.phis.iter().enumerate() {
            for m in 0..=l_max {
                phases[j * (l_max + 1) + m] = Complex64::from_polar(1.0, m as f64 * phi);
            }
        }
        Ok(SphereBasis {
            trunc,
            n_phi: grid.n_phi(),
            n_theta: grid.n_theta(),
            ptab,
            phases,
        })
    }

    pub fn n_basis(&self) -> usize {
        self.trunc.n_basis()
    }

    /// Signed Legendre factor of basis element `flat` at colatitude row `i`.
    pub fn legendre_part(&self, i_theta: usize, flat: usize) -> f64 {
        self.ptab[i_theta * self.n_basis() + flat]
    }

    pub fn legendre_row(&self, i_theta: usize) -> &[f64] {
        &self.ptab[i_theta * self.n_basis()..(i_theta + 1) * self.n_basis()]
    }

    /// e^{i m phi_j}, valid for |m| <= l_max (negative m conjugates).
    pub fn phase(&self, j_phi: usize, m: i64) -> Complex64 {
        let v = self.phases[j_phi * (self.trunc.l_max + 1) + m.unsigned_abs() as usize];
        if m < 0 {
            v.conj()
        } else {
            v
        }
    }

    /// Evaluates basis element `idx` at every grid point, theta-major.
    pub fn eval_on_grid(&self, idx: SphereIndex) -> Vec<Complex64> {
        let flat = self.trunc.flat(idx);
        let mut out = Vec::with_capacity(self.n_theta * self.n_phi);
        for i in 0..self.n_theta {
            let p = self.legendre_part(i, flat);
            for j in 0..self.n_phi {
                out.push(p * self.phase(j, idx.m));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Bandwidth;

    fn inner_product(
        grid: &SphereGrid,
        a: &[Complex64],
        b: &[Complex64],
    ) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..grid.n_theta() {
            let w = grid.weight(i);
            for j in 0..grid.n_phi() {
                let p = i * grid.n_phi() + j;
                acc += w * a[p].conj() * b[p];
            }
        }
        acc
    }

    #[test]
    fn y00_is_inverse_sqrt_4pi() {
        let vals =
            sphere_harmonic_eval(SphereIndex { k: 0, m: 0 }, &[(0.3, 1.1), (2.0, 4.5)]).unwrap();
        for v in vals {
            assert!((v.re - 0.28209479177387814).abs() < 1e-14);
            assert!(v.im.abs() < 1e-16);
        }
    }

    #[test]
    fn quadrature_orthonormality_low_degrees() {
        let trunc = SphereTruncation::new(3);
        let grid = SphereGrid::for_truncation(3, Bandwidth::Limited(0)).unwrap();
        let basis = SphereBasis::new(trunc, &grid).unwrap();
        let y31 = basis.eval_on_grid(SphereIndex { k: 3, m: 1 });
        let y20 = basis.eval_on_grid(SphereIndex { k: 2, m: 0 });
        let y30 = basis.eval_on_grid(SphereIndex { k: 3, m: 0 });
        assert!((inner_product(&grid, &y31, &y31).re - 1.0).abs() < 1e-10);
        assert!(inner_product(&grid, &y31, &y31).im.abs() < 1e-12);
        assert!(inner_product(&grid, &y20, &y30).norm() < 1e-10);
    }

    #[test]
    fn full_gram_is_identity_within_budget() {
        let l_max = 8;
        let trunc = SphereTruncation::new(l_max);
        let grid = SphereGrid::for_truncation(l_max, Bandwidth::Limited(0)).unwrap();
        let basis = SphereBasis::new(trunc, &grid).unwrap();
        let all: Vec<Vec<Complex64>> = trunc.indices().map(|i| basis.eval_on_grid(i)).collect();
        for a in 0..all.len() {
            for b in a..all.len() {
                let g = inner_product(&grid, &all[a], &all[b]);
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!(
                    (g.re - expected).abs() < 1e-10 && g.im.abs() < 1e-10,
                    "gram defect at ({a},{b}): {g}"
                );
            }
        }
    }

    #[test]
    fn conjugation_symmetry() {
        let pts = [(0.7, 0.9), (1.9, 5.0), (2.8, 0.1)];
        for k in 1..=6usize {
            for m in 1..=k as i64 {
                let plus = sphere_harmonic_eval(SphereIndex { k, m }, &pts).unwrap();
                let minus = sphere_harmonic_eval(SphereIndex { k, m: -m }, &pts).unwrap();
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                for (p, q) in plus.iter().zip(minus.iter()) {
                    assert!((sign * p.conj() - q).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn rejects_order_above_degree() {
        assert!(SphereIndex::new(2, 3).is_err());
        assert!(sphere_harmonic_eval(SphereIndex { k: 2, m: 3 }, &[(0.1, 0.2)]).is_err());
    }

    #[test]
    fn under_resolved_grid_is_an_error() {
        let grid = SphereGrid::for_truncation(4, Bandwidth::Limited(0)).unwrap();
        assert!(SphereBasis::new(SphereTruncation::new(9), &grid).is_err());
    }

    #[test]
    fn highest_weight_modulus_extremes() {
        let vals = highest_weight_modulus(2, &[(PI / 2.0, 0.3), (0.0, 1.0)]);
        assert!((vals[0] - 1.0).abs() < 1e-15);
        assert!(vals[1].abs() < 1e-15);
    }

    #[test]
    fn highest_weight_square_integral_matches_wallis() {
        // integral of sin^2(theta) over S2 = 2*pi * int_0^pi sin^3 = 2*pi * 4/3.
        let grid = SphereGrid::for_truncation(8, Bandwidth::Limited(4)).unwrap();
        let mut vals = Vec::with_capacity(grid.n_points());
        for i in 0..grid.n_theta() {
            let s = grid.thetas[i].sin().powi(2);
            for _ in 0..grid.n_phi() {
                vals.push(s);
            }
        }
        let integral = grid.integrate(&vals);
        let exact = 2.0 * PI * (4.0 / 3.0);
        assert!((integral - exact).abs() < 1e-12 * exact);
    }

    #[test]
    fn flat_index_round_trip() {
        let trunc = SphereTruncation::new(7);
        for (pos, idx) in trunc.indices().enumerate() {
            assert_eq!(trunc.flat(idx), pos);
            assert_eq!(trunc.index(pos), idx);
        }
        assert_eq!(trunc.n_basis(), 64);
    }

    #[test]
    fn multiplicity_of_degree_is_2k_plus_1() {
        let trunc = SphereTruncation::new(5);
        for k in 0..=5usize {
            let count = trunc
                .indices()
                .filter(|i| i.eigenvalue() == (k * (k + 1)) as f64)
                .count();
            assert_eq!(count, 2 * k + 1);
        }
    }
}
