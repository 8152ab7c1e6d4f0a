//! The elliptic function with invariants g2 = 0, g3 = 16.
//!
//! Evaluation reduces the argument into the Voronoi cell of the hexagonal
//! period lattice generated by 2 omega and 2 omega e^{i pi/3}, then sums
//! the Laurent expansion about the origin
//!
//!   wp(z) = z^{-2} + sum_{k >= 2} c_k z^{2k-2},
//!   c_2 = g2/20, c_3 = g3/28,
//!   c_k = 3 / ((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m}   (k >= 4).
//!
//! After reduction |z| is at most the covering radius 2 omega / sqrt(3), so
//! successive terms shrink by at least a factor 3 and 36 retained
//! coefficients leave the truncation far below every tolerance in use.
//!
//! Only the real period 2 omega is forced analytically; the second
//! generator is asserted as 2 omega e^{i pi/3} and *verified at
//! construction* by comparing direct Laurent sums across one period. A
//! failure aborts construction rather than silently producing values for
//! the wrong lattice.

use num_complex::Complex64;

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::value::ExtComplex;

/// Retained Laurent coefficients c_2 .. c_{2 + COEFF_COUNT - 1}.
const COEFF_COUNT: usize = 36;
/// Arguments reduced closer to a lattice point than this are treated as
/// the lattice point itself.
const NEAR_POLE: f64 = 1e-8;
/// Construction self-check tolerance.
const CHECK_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct Lattice {
    omega: f64,
    gen1: Complex64,
    gen2: Complex64,
    /// c_2, c_3, ... in order.
    coeffs: Vec<f64>,
}

impl Lattice {
    pub const G2: f64 = 0.0;
    pub const G3: f64 = 16.0;

    pub fn new(constants: &Constants) -> Result<Self> {
        let omega = constants.omega;
        let gen1 = Complex64::new(2.0 * omega, 0.0);
        let gen2 = gen1 * constants.gamma_rot;

        let mut coeffs = vec![0.0; COEFF_COUNT];
        coeffs[0] = Self::G2 / 20.0;
        coeffs[1] = Self::G3 / 28.0;
        for k in 4..COEFF_COUNT + 2 {
            let mut acc = 0.0;
            for m in 2..=(k - 2) {
                acc += coeffs[m - 2] * coeffs[k - m - 2];
            }
            coeffs[k - 2] = 3.0 * acc / ((2 * k + 1) as f64 * (k - 3) as f64);
        }

        let lattice = Lattice {
            omega,
            gen1,
            gen2,
            coeffs,
        };
        lattice.construction_checks()?;
        Ok(lattice)
    }

    /// Falsifiable checks of the asserted period lattice: compare direct
    /// Laurent sums (no reduction) across both generators, and pin the
    /// half-period value wp(omega) = 4^{1/3} demanded by the differential
    /// equation (wp')^2 = 4 wp^3 - 16.
    fn construction_checks(&self) -> Result<()> {
        for (name, generator) in [("2*omega", self.gen1), ("2*omega*e^{i pi/3}", self.gen2)] {
            // Probe so that both z0 and z0 + generator stay well inside the
            // Laurent disc |z| < 2 omega.
            let transverse = generator * Complex64::new(0.0, 1.0) / generator.norm();
            let z0 = -generator * 0.45 + transverse * 0.12;
            let direct = self.laurent_wp(z0 + generator);
            let base = self.laurent_wp(z0);
            let diff = (direct - base).norm();
            let ok = diff < CHECK_TOL * base.norm().max(1.0);
            if !ok {
                return Err(Error::LatticeCheck {
                    detail: format!(
                        "generator {name} is not a period: |wp(z0 + p) - wp(z0)| = {diff:.3e}"
                    ),
                });
            }
        }
        let at_half = self.laurent_wp(Complex64::new(self.omega, 0.0));
        let expected = 4.0f64.cbrt();
        let diff = (at_half - expected).norm();
        let ok = diff < CHECK_TOL;
        if !ok {
            return Err(Error::LatticeCheck {
                detail: format!("wp(omega) = {at_half}, expected 4^(1/3): off by {diff:.3e}"),
            });
        }
        Ok(())
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn generators(&self) -> (Complex64, Complex64) {
        (self.gen1, self.gen2)
    }

    /// Representative of z in the Voronoi cell of the origin: round
    /// against the generator basis, then polish against the six nearest
    /// lattice vectors.
    pub fn reduce(&self, z: Complex64) -> Complex64 {
        let two_omega = 2.0 * self.omega;
        let n = z.im / (3.0f64.sqrt() * self.omega);
        let m = (z.re - n * self.omega) / two_omega;
        let mut w = z - self.gen1 * m.round() - self.gen2 * n.round();

        let neighbours = [
            self.gen1,
            -self.gen1,
            self.gen2,
            -self.gen2,
            self.gen1 - self.gen2,
            self.gen2 - self.gen1,
        ];
        loop {
            let mut improved = false;
            for &v in &neighbours {
                if (w - v).norm_sqr() + 1e-15 < w.norm_sqr() {
                    w -= v;
                    improved = true;
                }
            }
            if !improved {
                return w;
            }
        }
    }

    /// Laurent sum about the origin; callers must have |z| inside the
    /// convergence disc.
    fn laurent_wp(&self, z: Complex64) -> Complex64 {
        let u = z * z;
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        u.finv() + acc * u
    }

    fn laurent_wp_prime(&self, z: Complex64) -> Complex64 {
        let u = z * z;
        let mut acc = Complex64::new(0.0, 0.0);
        // Sum of (2k-2) c_k z^{2k-3} for k >= 2 = z * sum (2k-2) c_k u^{k-2}.
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            let degree = 2.0 * (k as f64 + 2.0) - 2.0;
            acc = acc * u + degree * c;
        }
        -2.0 * (z * u).finv() + acc * z
    }

    /// wp(z; 0, 16). Lattice points give the point at infinity.
    pub fn wp(&self, z: Complex64) -> ExtComplex {
        let w = self.reduce(z);
        if w.norm() < NEAR_POLE {
            ExtComplex::Infinity
        } else {
            ExtComplex::Finite(self.laurent_wp(w))
        }
    }

    /// Derivative of wp; order-3 pole at lattice points.
    pub fn wp_prime(&self, z: Complex64) -> ExtComplex {
        let w = self.reduce(z);
        if w.norm() < NEAR_POLE {
            ExtComplex::Infinity
        } else {
            ExtComplex::Finite(self.laurent_wp_prime(w))
        }
    }

    /// The global extension q = 1/wp of s^2 c^2: zero at lattice points,
    /// the point at infinity at zeros of wp.
    pub fn q_global(&self, z: Complex64) -> ExtComplex {
        self.wp(z).recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngExt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn lattice() -> Lattice {
        Lattice::new(&Constants::compute()).unwrap()
    }

    /// Independent Laurent oracle with its own coefficient recurrence.
    fn wp_oracle(z: Complex64, terms: usize) -> Complex64 {
        let mut c = vec![0.0f64; terms + 2];
        c[2] = 0.0;
        if terms >= 2 {
            c[3] = 16.0 / 28.0;
        }
        for k in 4..c.len() {
            let mut acc = 0.0;
            for m in 2..=(k - 2) {
                acc += c[m] * c[k - m];
            }
            c[k] = 3.0 * acc / ((2 * k + 1) as f64 * (k - 3) as f64);
        }
        let mut out = z.finv() * z.finv();
        for (k, &ck) in c.iter().enumerate().skip(2) {
            out += ck * z.powu(2 * k as u32 - 2);
        }
        out
    }

    #[test]
    fn laurent_coefficients() {
        let lat = lattice();
        // c_3 = g3/28 = 4/7, c_6 = (4/7)^2 / 13 = 16/637; only indices
        // divisible by 3 survive when g2 = 0.
        assert_eq!(lat.coeffs[0], 0.0);
        assert!((lat.coeffs[1] - 4.0 / 7.0).abs() < 1e-16);
        assert!((lat.coeffs[4] - 16.0 / 637.0).abs() < 1e-16);
        for (i, &c) in lat.coeffs.iter().enumerate() {
            let k = i + 2;
            if k % 3 != 0 {
                assert_eq!(c, 0.0, "c_{k} should vanish");
            }
        }
    }

    #[test]
    fn value_near_origin_matches_oracle() {
        let lat = lattice();
        let z = Complex64::new(0.1, 0.0);
        let v = lat.wp(z).unwrap_finite();
        let oracle = wp_oracle(z, 12);
        // Leading behaviour 1/z^2 + (4/7) z^4.
        assert!(
            (v - (100.0 + 4.0 / 7.0 * 1e-4)).norm() < 1e-10,
            "wp(0.1) = {v}"
        );
        assert!((v - oracle).norm() < 1e-12);

        let vp = lat.wp_prime(z).unwrap_finite();
        assert!(
            (vp - (-2000.0 + 16.0 / 7.0 * 1e-3)).norm() < 1e-9,
            "wp'(0.1) = {vp}"
        );
    }

    #[test]
    fn half_period_value_and_derivative_zero() {
        let lat = lattice();
        let omega = Complex64::new(lat.omega(), 0.0);
        let v = lat.wp(omega).unwrap_finite();
        assert!((v - 4.0f64.cbrt()).norm() < 1e-9, "wp(omega) = {v}");
        let vp = lat.wp_prime(omega).unwrap_finite();
        assert!(vp.norm() < 1e-8, "wp'(omega) = {vp}");
    }

    #[test]
    fn differential_equation() {
        let lat = lattice();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let mut tested = 0;
        while tested < 100 {
            let z = Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
            if lat.reduce(z).norm() < 0.15 {
                continue;
            }
            tested += 1;
            let p = lat.wp(z).unwrap_finite();
            let dp = lat.wp_prime(z).unwrap_finite();
            let residual = (dp * dp - 4.0 * p.powu(3) + 16.0).norm();
            assert!(residual < 1e-8, "z = {z}: residual {residual:.3e}");
        }
    }

    #[test]
    fn periodicity_under_both_generators() {
        let lat = lattice();
        let (g1, g2) = lat.generators();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..50 {
            let z = Complex64::new(rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5));
            if lat.reduce(z).norm() < 0.1 {
                continue;
            }
            let base = lat.wp(z).unwrap_finite();
            for p in [g1, g2] {
                let shifted = lat.wp(z + p).unwrap_finite();
                assert!((shifted - base).norm() < 1e-9 * base.norm().max(1.0));
            }
        }
    }

    #[test]
    fn rotation_homogeneity() {
        // wp(gamma z) = gamma^{-2} wp(z) for gamma = e^{i pi/3}.
        let lat = lattice();
        let gamma = Complex64::from_polar(1.0, std::f64::consts::PI / 3.0);
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..30 {
            let z = Complex64::new(rng.random_range(-1.2..1.2), rng.random_range(-1.2..1.2));
            if lat.reduce(z).norm() < 0.25 {
                continue;
            }
            let lhs = lat.wp(gamma * z).unwrap_finite();
            let rhs = lat.wp(z).unwrap_finite() / (gamma * gamma);
            assert!((lhs - rhs).norm() < 1e-9 * rhs.norm().max(1.0), "z = {z}");
        }
    }

    #[test]
    fn zeros_are_simple() {
        let lat = lattice();
        let (g1, g2) = lat.generators();
        // Newton from the deep hole (centroid of the fundamental triangle),
        // where the two simple zeros of the cell sit.
        let mut z = (g1 + g2) / 3.0;
        for _ in 0..40 {
            let p = lat.wp(z).unwrap_finite();
            let dp = lat.wp_prime(z).unwrap_finite();
            z -= p / dp;
        }
        assert!(
            lat.wp(z).unwrap_finite().norm() < 1e-10,
            "not a zero: wp = {}",
            lat.wp(z).unwrap_finite()
        );
        let slope = lat.wp_prime(z).unwrap_finite().norm();
        assert!(slope > 0.1, "|wp'| at the zero = {slope}");
        // (wp')^2 = -16 at a zero of wp, so the slope is exactly 4.
        assert!((slope - 4.0).abs() < 1e-7);
    }

    #[test]
    fn poles_and_reciprocal() {
        let lat = lattice();
        assert!(lat.wp(Complex64::new(0.0, 0.0)).is_infinity());
        let (g1, g2) = lat.generators();
        assert!(lat.wp(g1 * 3.0 + g2).is_infinity());
        assert_eq!(
            lat.q_global(Complex64::new(0.0, 0.0)),
            ExtComplex::Finite(Complex64::new(0.0, 0.0))
        );
        let z = Complex64::new(0.1, 0.0);
        let q = lat.q_global(z).unwrap_finite();
        assert!((q - lat.wp(z).unwrap_finite().finv()).norm() < 1e-15);
        // Periodicity of q under the real period.
        let q2 = lat.q_global(z + g1).unwrap_finite();
        assert!((q - q2).norm() < 1e-12);
    }
}
