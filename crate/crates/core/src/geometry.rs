//! Geometry of the hexagon band.
//!
//! The band row is built from regular hexagons of circumradius L centered
//! at the even multiples 2nK of the quarter-period, each rotated so that a
//! pair of vertical edges at Re = (2n +- 1)K is shared with its neighbours.
//! Hexagon n has vertices {2nK + delta L gamma^k, k = 0..5}; across the
//! whole row the vertex set is
//!
//!   ((2n+1)K, +-L/2)  (shared-edge endpoints, on the band boundary)
//!   (2nK,     +-L)    (hexagon tops and bottoms)
//!
//! and these are the only singular points of the solution pair, so every
//! distance-to-singularity question reduces to a distance to this set.

use num_complex::Complex64;

use crate::constants::Constants;
use crate::error::{Error, Result};

/// Exclusion radius around hexagon vertices; evaluation is refused for
/// points (or paths) closer than this.
pub const EPS_VERTEX: f64 = 1e-3;

#[derive(Debug, Clone, Copy)]
pub struct HexGeometry {
    k: f64,
    l: f64,
    gamma_rot: Complex64,
}

impl HexGeometry {
    pub fn new(constants: &Constants) -> Self {
        HexGeometry {
            k: constants.k,
            l: constants.l,
            gamma_rot: constants.gamma_rot,
        }
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    /// The open horizontal band 2 |Im z| < L.
    pub fn in_band(&self, z: Complex64) -> bool {
        2.0 * z.im.abs() < self.l
    }

    /// Nearest vertex of the hexagon tiling.
    pub fn nearest_vertex(&self, z: Complex64) -> Complex64 {
        let mut best = Complex64::new(self.k, 0.5 * self.l);
        let mut best_d = f64::INFINITY;
        let half_l = 0.5 * self.l;
        let two_k = 2.0 * self.k;

        // Shared-edge endpoints ((2n+1)K, +-L/2).
        let n0 = ((z.re - self.k) / two_k).round() as i64;
        for n in (n0 - 1)..=(n0 + 1) {
            let x = (2 * n + 1) as f64 * self.k;
            for y in [half_l, -half_l] {
                let v = Complex64::new(x, y);
                let d = (z - v).norm();
                if d < best_d {
                    best_d = d;
                    best = v;
                }
            }
        }
        // Hexagon tops and bottoms (2nK, +-L).
        let m0 = (z.re / two_k).round() as i64;
        for n in (m0 - 1)..=(m0 + 1) {
            let x = 2.0 * n as f64 * self.k;
            for y in [self.l, -self.l] {
                let v = Complex64::new(x, y);
                let d = (z - v).norm();
                if d < best_d {
                    best_d = d;
                    best = v;
                }
            }
        }
        best
    }

    pub fn vertex_distance(&self, z: Complex64) -> f64 {
        (z - self.nearest_vertex(z)).norm()
    }

    /// Minimum distance from the segment [a, b] to the vertex set, with
    /// the achieving vertex.
    pub fn segment_vertex_clearance(&self, a: Complex64, b: Complex64) -> (f64, Complex64) {
        let lo = a.re.min(b.re);
        let hi = a.re.max(b.re);
        let two_k = 2.0 * self.k;
        let half_l = 0.5 * self.l;

        let mut best = (f64::INFINITY, Complex64::new(0.0, 0.0));
        let mut consider = |v: Complex64| {
            let d = segment_point_distance(a, b, v);
            if d < best.0 {
                best = (d, v);
            }
        };

        let n_lo = ((lo - self.k) / two_k).floor() as i64 - 1;
        let n_hi = ((hi - self.k) / two_k).ceil() as i64 + 1;
        for n in n_lo..=n_hi {
            let x = (2 * n + 1) as f64 * self.k;
            consider(Complex64::new(x, half_l));
            consider(Complex64::new(x, -half_l));
        }
        let m_lo = (lo / two_k).floor() as i64 - 1;
        let m_hi = (hi / two_k).ceil() as i64 + 1;
        for n in m_lo..=m_hi {
            let x = 2.0 * n as f64 * self.k;
            consider(Complex64::new(x, self.l));
            consider(Complex64::new(x, -self.l));
        }
        best
    }

    /// Reduces a band point modulo the real period 4K:
    /// z = z0 + 4Kk with Re z0 in [-2K, 2K), ties broken toward -2K.
    pub fn reduce_mod_period(&self, z: Complex64) -> Result<(Complex64, i64)> {
        if !self.in_band(z) {
            return Err(Error::OutOfBand { z });
        }
        let four_k = 4.0 * self.k;
        let two_k = 2.0 * self.k;
        let mut shift = ((z.re + two_k) / four_k).floor() as i64;
        let mut z0 = Complex64::new(z.re - four_k * shift as f64, z.im);
        // Guard against rounding landing exactly on the excluded edge.
        if z0.re >= two_k {
            z0.re -= four_k;
            shift += 1;
        } else if z0.re < -two_k {
            z0.re += four_k;
            shift -= 1;
        }
        Ok((z0, shift))
    }

    /// Membership in (the interior of) hexagon n, with a margin. The
    /// hexagon has flat edges whose outward normals are the sixth roots of
    /// unity and support distance K.
    pub fn in_hexagon(&self, n: i64, z: Complex64, margin: f64) -> bool {
        let w = z - Complex64::new(2.0 * n as f64 * self.k, 0.0);
        let mut dir = Complex64::new(1.0, 0.0);
        for _ in 0..6 {
            if (w * dir.conj()).re >= self.k - margin {
                return false;
            }
            dir *= self.gamma_rot;
        }
        true
    }
}

fn segment_point_distance(a: Complex64, b: Complex64, p: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}
