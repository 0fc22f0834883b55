//! Fourier modes on the flat torus of side L, viewed as Q_L = (-L/2, L/2]²
//! with periodic boundary conditions.

use num_complex::Complex64;

use crate::basis::quad::TorusGrid;
use crate::error::{Error, Result};

/// Frequency index of the mode L^{-1} exp(2 pi i m.x / L).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusIndex {
    pub m: (i64, i64),
    pub length: f64,
}

impl TorusIndex {
    pub fn new(m: (i64, i64), length: f64) -> Result<Self> {
        if length <= 0.0 {
            return Err(Error::InvalidConfig("torus side length must be positive".into()));
        }
        Ok(TorusIndex { m, length })
    }

    /// Laplacian eigenvalue (2 pi / L)^2 |m|^2.
    pub fn eigenvalue(&self) -> f64 {
        let two_pi = 2.0 * std::f64::consts::PI;
        let m2 = (self.m.0 * self.m.0 + self.m.1 * self.m.1) as f64;
        (two_pi / self.length).powi(2) * m2
    }
}

/// Truncation |m| <= m_max (Euclidean radius). Indices are enumerated in a
/// fixed total order: by |m|^2 ascending, ties broken lexicographically on
/// (m_x, m_y).
#[derive(Debug, Clone, PartialEq)]
pub struct TorusTruncation {
    pub m_max: usize,
    pub length: f64,
    indices: Vec<(i64, i64)>,
}

impl TorusTruncation {
    pub fn new(m_max: usize, length: f64) -> Result<Self> {
        if length <= 0.0 {
            return Err(Error::InvalidConfig("torus side length must be positive".into()));
        }
        let r = m_max as i64;
        let r2 = r * r;
        let mut indices: Vec<(i64, i64)> = Vec::new();
        for mx in -r..=r {
            for my in -r..=r {
                if mx * mx + my * my <= r2 {
                    indices.push((mx, my));
                }
            }
        }
        indices.sort_by_key(|&(x, y)| (x * x + y * y, x, y));
        Ok(TorusTruncation {
            m_max,
            length,
            indices,
        })
    }

    pub fn n_basis(&self) -> usize {
        self.indices.len()
    }

    pub fn index(&self, flat: usize) -> TorusIndex {
        TorusIndex {
            m: self.indices[flat],
            length: self.length,
        }
    }

    pub fn indices(&self) -> impl Iterator<Item = TorusIndex> + '_ {
        self.indices.iter().map(|&m| TorusIndex {
            m,
            length: self.length,
        })
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.indices().map(|i| i.eigenvalue()).collect()
    }

    pub fn distinct_eigenvalues(&self) -> Vec<f64> {
        let mut v = self.eigenvalues();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        v
    }

    /// Same frequency set transplanted to a torus of a different side.
    pub fn rescaled(&self, length: f64) -> Result<Self> {
        Self::new(self.m_max, length)
    }
}

/// Evaluates the mode at points of Q_L; orthonormal in L²(L T²).
pub fn torus_mode_eval(idx: TorusIndex, points: &[(f64, f64)]) -> Vec<Complex64> {
    let two_pi = 2.0 * std::f64::consts::PI;
    let norm = 1.0 / idx.length;
    points
        .iter()
        .map(|&(x, y)| {
            let phase = two_pi * (idx.m.0 as f64 * x + idx.m.1 as f64 * y) / idx.length;
            norm * Complex64::from_polar(1.0, phase)
        })
        .collect()
}

/// Evaluation table of all truncated modes on a tensor grid.
#[derive(Debug, Clone)]
pub struct TorusBasis {
    pub trunc: TorusTruncation,
    n_side: usize,
    /// 1-d phases e^{2 pi i m c / L} for m in -m_max..=m_max:
    /// phases[c * (2 m_max + 1) + (m + m_max)].
    phases: Vec<Complex64>,
}

impl TorusBasis {
    pub fn new(trunc: TorusTruncation, grid: &TorusGrid) -> Result<Self> {
        if (grid.length - trunc.length).abs() > 1e-12 * trunc.length {
            return Err(Error::MismatchedTruncations(format!(
                "grid side {} vs truncation side {}",
                grid.length, trunc.length
            )));
        }
        let span = 2 * trunc.m_max + 1;
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut phases = Vec::with_capacity(grid.n_side * span);
        for &c in &grid.coords {
            for m in -(trunc.m_max as i64)..=(trunc.m_max as i64) {
                phases.push(Complex64::from_polar(1.0, two_pi * m as f64 * c / grid.length));
            }
        }
        Ok(TorusBasis {
            trunc,
            n_side: grid.n_side,
            phases,
        })
    }

    fn phase_1d(&self, coord: usize, m: i64) -> Complex64 {
        let span = 2 * self.trunc.m_max + 1;
        self.phases[coord * span + (m + self.trunc.m_max as i64) as usize]
    }

    /// Mode value at grid point (ix, iy), including the L^{-1} normalization.
    pub fn eval_at(&self, flat: usize, ix: usize, iy: usize) -> Complex64 {
        let idx = self.trunc.index(flat);
        self.phase_1d(ix, idx.m.0) * self.phase_1d(iy, idx.m.1) / idx.length
    }

    pub fn n_side(&self) -> usize {
        self.n_side
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Bandwidth;

    #[test]
    fn zero_mode_on_unit_torus_is_constant_one() {
        let idx = TorusIndex::new((0, 0), 1.0).unwrap();
        let vals = torus_mode_eval(idx, &[(0.1, -0.3), (0.0, 0.0)]);
        for v in vals {
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn eigenvalue_scaling() {
        let idx = TorusIndex::new((1, 0), 2.0).unwrap();
        assert!((idx.eigenvalue() - std::f64::consts::PI.powi(2)).abs() < 1e-13);
    }

    #[test]
    fn modes_orthonormal_under_trapezoid_rule() {
        let trunc = TorusTruncation::new(2, 1.5).unwrap();
        let grid = TorusGrid::for_truncation(1.5, 2, Bandwidth::Limited(0)).unwrap();
        let basis = TorusBasis::new(trunc.clone(), &grid).unwrap();
        let w = grid.weight();
        for a in 0..trunc.n_basis() {
            for b in a..trunc.n_basis() {
                let mut acc = Complex64::new(0.0, 0.0);
                for ix in 0..grid.n_side {
                    for iy in 0..grid.n_side {
                        acc += w * basis.eval_at(a, ix, iy).conj() * basis.eval_at(b, ix, iy);
                    }
                }
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!(
                    (acc.re - expected).abs() < 1e-12 && acc.im.abs() < 1e-12,
                    "gram defect at ({a},{b}): {acc}"
                );
            }
        }
    }

    #[test]
    fn enumeration_order_fixed() {
        let trunc = TorusTruncation::new(1, 1.0).unwrap();
        let got: Vec<(i64, i64)> = trunc.indices().map(|i| i.m).collect();
        assert_eq!(got, vec![(0, 0), (-1, 0), (0, -1), (0, 1), (1, 0)]);
        assert_eq!(trunc.n_basis(), 5);
    }
}
