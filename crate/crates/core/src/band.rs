//! The band extension of t = s/c and the disc-to-hexagon conformal map.
//!
//! t extends meromorphically to the row of hexagons glued along shared
//! vertical edges, with real period 4K and simple poles at the odd
//! multiples of 2K. Band evaluation reduces modulo 4K and continues from
//! the origin. The conformal map w -> integral over [0, w] of
//! (1 - zeta^6)^{-1/3} sends the open unit disc to the regular hexagon
//! with circumradius L; delta times its inverse is t on the central
//! hexagon, which the round-trip residual measures directly.

use num_complex::Complex64;

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::geometry::HexGeometry;
use crate::quad;
use crate::solution::Solution;
use crate::value::ExtComplex;
use crate::weierstrass::Lattice;

/// t on the band via reduction modulo the real period 4K; poles at odd
/// multiples of 2K come back as the point at infinity.
pub fn t_band(solution: &Solution, geom: &HexGeometry, z: Complex64) -> Result<ExtComplex> {
    let (z0, _) = geom.reduce_mod_period(z)?;
    solution.eval_t(z0)
}

/// Integral over the straight segment [0, w] of (1 - zeta^6)^{-1/3} with
/// the principal cube root; maps the closed unit disc onto the closed
/// regular hexagon with vertices L e^{i k pi / 3}.
///
/// At a sixth root of unity the integrand has an integrable singularity at
/// the endpoint; there the value is the rotated circumradius L, taken in
/// closed form instead of by quadrature through the singularity.
pub fn schwarz_christoffel(constants: &Constants, w: Complex64) -> Result<Complex64> {
    let modulus = w.norm();
    if modulus > 1.0 + 1e-12 {
        return Err(Error::OutsideDisc { modulus });
    }
    if modulus >= 1.0 - 1e-12 {
        if let Some(root) = nearest_unit_root(w, 1e-12) {
            return Ok(root * constants.l);
        }
    }
    // zeta = w u for u in [0, 1]; the integrand is analytic on the segment.
    let value = quad::adaptive_gl_complex(
        &|u: f64| {
            let zeta = w * u;
            recip_cbrt(Complex64::new(1.0, 0.0) - zeta.powu(6))
        },
        0.0,
        1.0,
        1e-12,
    );
    Ok(w * value)
}

fn nearest_unit_root(w: Complex64, tol: f64) -> Option<Complex64> {
    for k in 0..6 {
        let root = Complex64::from_polar(1.0, k as f64 * std::f64::consts::PI / 3.0);
        if (w - root).norm() <= tol {
            return Some(root);
        }
    }
    None
}

/// Principal branch of z^{-1/3}.
fn recip_cbrt(z: Complex64) -> Complex64 {
    (-z.ln() / 3.0).exp()
}

/// Round-trip residual of the conformal correspondence on the central
/// hexagon: for interior z, delta * sc(conj(delta) * t(z)) should
/// reproduce z exactly.
pub fn sc_inverse_residual(
    solution: &Solution,
    constants: &Constants,
    z: Complex64,
) -> Result<f64> {
    let t = match solution.eval_t(z)? {
        ExtComplex::Finite(t) => t,
        ExtComplex::Infinity => {
            return Err(Error::OutOfDomain {
                what: "sc_inverse_residual: t has a pole here",
                value: z.norm(),
            })
        }
    };
    let delta = constants.delta_rot;
    let image = delta * schwarz_christoffel(constants, delta.conj() * t)?;
    Ok((image - z).norm())
}

/// Which monomials s^m c^n extend meromorphically to the whole plane:
/// exactly the balanced even powers (as powers of the inverse elliptic
/// function), including negative ones.
pub fn sc_monomial_extends(m: i64, n: i64) -> bool {
    m == n && m.rem_euclid(2) == 0
}

/// Period assigned to s^m c^n on the band when m + n is a multiple
/// of 4: 2K when m - n is a multiple of 4, else 4K.
pub fn band_period(constants: &Constants, m: i64, n: i64) -> Result<f64> {
    if (m + n).rem_euclid(4) != 0 || (m, n) == (0, 0) {
        return Err(Error::BandPeriodDomain { m, n });
    }
    if (m - n).rem_euclid(4) == 0 {
        Ok(constants.two_k())
    } else {
        Ok(constants.four_k())
    }
}

fn wp_inverse_powers(lattice: &Lattice, z: Complex64) -> (Complex64, Complex64) {
    // (wp^{-1}, wp'^{-1}); at a lattice point both come back as 0, which is
    // the correct limit for every residual below.
    let p_inv = match lattice.wp(z) {
        ExtComplex::Finite(p) => p.finv(),
        ExtComplex::Infinity => Complex64::new(0.0, 0.0),
    };
    let dp_inv = match lattice.wp_prime(z) {
        ExtComplex::Finite(dp) => dp.finv(),
        ExtComplex::Infinity => Complex64::new(0.0, 0.0),
    };
    (p_inv, dp_inv)
}

/// Residuals of the two quadratic identities tying S = s^12 to the
/// elliptic function:
///
///   (S + wp^{-3})^2 = S
///   16 (wp')^{-2} (S + wp^{-3} - 1/2)^2 = wp^{-3}
///
/// Returns the larger of the two magnitudes.
pub fn identity_residual_s12(solution: &Solution, lattice: &Lattice, z: Complex64) -> Result<f64> {
    let (s, _) = solution.eval_sc(z)?;
    let big_s = s.powu(12);
    let (p_inv, dp_inv) = wp_inverse_powers(lattice, z);
    let p3_inv = p_inv.powu(3);

    let first = ((big_s + p3_inv).powu(2) - big_s).norm();
    let second = (16.0 * dp_inv * dp_inv * (big_s + p3_inv - 0.5).powu(2) - p3_inv).norm();
    Ok(first.max(second))
}

/// Residuals of the degree-24 identity
///
///   4 (wp')^{-2} (E - wp^{-6} - (1/8) wp^{-3} (wp')^2)^2
///     = (1 + (1/16) wp^3 (wp')^2) wp^{-9}
///
/// for E = s^24 and E = c^24 respectively.
pub fn identity_residual_s24(
    solution: &Solution,
    lattice: &Lattice,
    z: Complex64,
) -> Result<(f64, f64)> {
    let (s, c) = solution.eval_sc(z)?;
    let p = match lattice.wp(z) {
        ExtComplex::Finite(p) => p,
        // Both sides carry a factor (wp')^{-2} wp^{0..} and vanish in the
        // limit at a pole of wp.
        ExtComplex::Infinity => return Ok((0.0, 0.0)),
    };
    let dp = lattice.wp_prime(z).unwrap_finite();
    let p_inv = p.finv();
    let dp2 = dp * dp;
    let rhs = (1.0 + p.powu(3) * dp2 / 16.0) * p_inv.powu(9);
    let residual = |e: Complex64| -> f64 {
        let inner = e - p_inv.powu(6) - p_inv.powu(3) * dp2 / 8.0;
        (4.0 * dp2.finv() * inner * inner - rhs).norm()
    };
    Ok((residual(s.powu(24)), residual(c.powu(24))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::HexGeometry;
    use rand::RngExt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    struct Fixture {
        constants: Constants,
        geom: HexGeometry,
        solution: Solution,
        lattice: Lattice,
    }

    fn fixture() -> Fixture {
        let constants = Constants::compute();
        let geom = HexGeometry::new(&constants);
        Fixture {
            constants,
            geom,
            solution: Solution::new(geom, constants.delta_rot),
            lattice: Lattice::new(&constants).unwrap(),
        }
    }

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn t_band_basics() {
        let f = fixture();
        assert_eq!(
            t_band(&f.solution, &f.geom, c64(0.0, 0.0)).unwrap(),
            ExtComplex::Finite(c64(0.0, 0.0))
        );
        let four_k = f.constants.four_k();
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..10 {
            let z = c64(rng.random_range(-1.5..1.5), rng.random_range(-0.4..0.4));
            let a = t_band(&f.solution, &f.geom, z).unwrap().unwrap_finite();
            let b = t_band(&f.solution, &f.geom, z + four_k)
                .unwrap()
                .unwrap_finite();
            assert!((a - b).norm() < 1e-12);
        }
        // Pole at the odd multiple -2K of 2K.
        assert!(t_band(&f.solution, &f.geom, c64(-2.0 * f.constants.k, 0.0))
            .unwrap()
            .is_infinity());
    }

    #[test]
    fn two_k_translation_inverts_and_negates_t() {
        // The reflection structure of the band forces t(z + 2K) = -1/t(z);
        // this is what makes 4K (and not 2K) the period of t.
        let f = fixture();
        let two_k = f.constants.two_k();
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        for _ in 0..10 {
            let z = c64(rng.random_range(0.2..1.2), rng.random_range(-0.3..0.3));
            let t0 = f.solution.eval_t(z).unwrap().unwrap_finite();
            let t1 = f.solution.eval_t(z + two_k).unwrap().unwrap_finite();
            assert!(
                (t1 + t0.finv()).norm() < 1e-9 * t1.norm().max(1.0),
                "z = {z}: t(z+2K) = {t1}, -1/t(z) = {}",
                -t0.finv()
            );
        }
    }

    #[test]
    fn translated_fourth_powers_swap() {
        // Consequence of the same reflection law: s^4(z + 2K) = c^4(z), so
        // the even unbalanced monomials are 4K-periodic, not 2K-periodic.
        let f = fixture();
        let two_k = f.constants.two_k();
        for z in [c64(0.3, 0.1), c64(0.8, -0.2), c64(1.4, 0.05)] {
            let (s0, c0) = f.solution.eval_sc(z).unwrap();
            let (s1, _) = f.solution.eval_sc(z + two_k).unwrap();
            assert!(
                (s1.powu(4) - c0.powu(4)).norm() < 1e-9,
                "s^4(z+2K) vs c^4(z) at z = {z}"
            );
            assert!(
                (s1.powu(4) - s0.powu(4)).norm() > 1e-2,
                "2K must not be a period of s^4 at z = {z}"
            );
        }
    }

    #[test]
    fn vertex_limit_by_radial_approach() {
        let f = fixture();
        let delta = f.constants.delta_rot;
        let l = f.constants.l;
        let err = |offset: f64| -> f64 {
            let z = delta * c64(l * (1.0 - offset), 0.0);
            let t = t_band(&f.solution, &f.geom, z).unwrap().unwrap_finite();
            (t - delta).norm()
        };
        let coarse = err(1e-2);
        let fine = err(1e-3);
        assert!(
            fine < 1e-4,
            "boundary value at the vertex: err = {fine:.3e}"
        );
        assert!(
            fine < coarse,
            "radial approach must improve: {fine:.3e} vs {coarse:.3e}"
        );
    }

    #[test]
    fn modulus_below_one_inside_central_hexagon() {
        let f = fixture();
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let mut inside = 0;
        while inside < 25 {
            let z = c64(rng.random_range(-1.0..1.0), rng.random_range(-0.5..0.5));
            if !f.geom.in_hexagon(0, z, 0.05) || 2.0 * z.im.abs() > 0.9 * f.constants.l {
                continue;
            }
            inside += 1;
            let t = f.solution.eval_t(z).unwrap().unwrap_finite();
            assert!(t.norm() < 1.0, "|t({z})| = {}", t.norm());
        }
        // And above one inside the neighbour hexagon.
        let two_k = f.constants.two_k();
        let mut inside = 0;
        while inside < 25 {
            let z = c64(
                two_k + rng.random_range(-1.0..1.0),
                rng.random_range(-0.5..0.5),
            );
            if !f.geom.in_hexagon(1, z, 0.05)
                || 2.0 * z.im.abs() > 0.9 * f.constants.l
                || (z - c64(two_k, 0.0)).norm() < 0.3
            {
                continue;
            }
            inside += 1;
            let t = f.solution.eval_t(z).unwrap().unwrap_finite();
            assert!(t.norm() > 1.0, "|t({z})| = {}", t.norm());
        }
    }

    #[test]
    fn sc_map_examples() {
        let f = fixture();
        assert_eq!(
            schwarz_christoffel(&f.constants, c64(0.0, 0.0)).unwrap(),
            c64(0.0, 0.0)
        );
        // The real boundary point 1 maps to the vertex L.
        let at_one = schwarz_christoffel(&f.constants, c64(1.0, 0.0)).unwrap();
        assert!((at_one - c64(f.constants.l, 0.0)).norm() < 1e-12);
        // Rotation equivariance and conjugation symmetry.
        let gamma = f.constants.gamma_rot;
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for _ in 0..10 {
            let w = Complex64::from_polar(
                rng.random_range(0.0..0.95),
                rng.random_range(0.0..std::f64::consts::TAU),
            );
            let base = schwarz_christoffel(&f.constants, w).unwrap();
            let rotated = schwarz_christoffel(&f.constants, gamma * w).unwrap();
            assert!((rotated - gamma * base).norm() < 1e-11);
            let conjugated = schwarz_christoffel(&f.constants, w.conj()).unwrap();
            assert!((conjugated - base.conj()).norm() < 1e-11);
        }
        assert!(matches!(
            schwarz_christoffel(&f.constants, c64(1.2, 0.0)),
            Err(Error::OutsideDisc { .. })
        ));
        // Quadrature is consistent with the closed-form vertex value.
        let near_one = schwarz_christoffel(&f.constants, c64(1.0 - 1e-6, 0.0)).unwrap();
        assert!(near_one.re < f.constants.l);
        assert!((near_one - c64(f.constants.l, 0.0)).norm() < 2e-4);
    }

    #[test]
    fn sc_round_trip_and_newton_oracle() {
        let f = fixture();
        for z in [
            c64(0.3, 0.0),
            f.constants.delta_rot * c64(0.5 * f.constants.l, 0.0),
            c64(0.2, 0.15),
        ] {
            let residual = sc_inverse_residual(&f.solution, &f.constants, z).unwrap();
            assert!(residual < 1e-8, "round trip at {z}: {residual:.3e}");

            // Newton inversion of the forward map as an independent check
            // that t is its inverse (up to the delta rotation).
            let u = f.constants.delta_rot.conj() * z;
            let mut w = u;
            for _ in 0..30 {
                let fw = schwarz_christoffel(&f.constants, w).unwrap();
                let derivative = recip_cbrt(Complex64::new(1.0, 0.0) - w.powu(6));
                w -= (fw - u) / derivative;
            }
            let t = f.solution.eval_t(z).unwrap().unwrap_finite();
            assert!(
                (f.constants.delta_rot.conj() * t - w).norm() < 1e-9,
                "Newton inverse disagrees with t at {z}"
            );
        }
        assert_eq!(
            sc_inverse_residual(&f.solution, &f.constants, c64(0.0, 0.0)).unwrap(),
            0.0
        );
    }

    #[test]
    fn classifier_and_period_rule() {
        let f = fixture();
        for m in -10..=10i64 {
            for n in -10..=10i64 {
                assert_eq!(
                    sc_monomial_extends(m, n),
                    m == n && m % 2 == 0,
                    "({m}, {n})"
                );
            }
        }
        assert!(sc_monomial_extends(2, 2));
        assert!(sc_monomial_extends(0, 0));
        assert!(sc_monomial_extends(-2, -2));
        assert!(!sc_monomial_extends(4, 0));
        assert!(!sc_monomial_extends(3, 1));

        let two_k = f.constants.two_k();
        let four_k = f.constants.four_k();
        assert_eq!(band_period(&f.constants, 2, 2).unwrap(), two_k);
        assert_eq!(band_period(&f.constants, 1, 3).unwrap(), four_k);
        assert_eq!(band_period(&f.constants, 4, 0).unwrap(), two_k);
        assert_eq!(band_period(&f.constants, 2, 6).unwrap(), two_k);
        assert_eq!(band_period(&f.constants, -1, 1).unwrap(), four_k);
        assert!(matches!(
            band_period(&f.constants, 1, 2),
            Err(Error::BandPeriodDomain { .. })
        ));
        assert!(matches!(
            band_period(&f.constants, 0, 0),
            Err(Error::BandPeriodDomain { .. })
        ));
    }

    #[test]
    fn twelfth_power_identities() {
        let f = fixture();
        for z in [c64(0.1, 0.0), c64(0.3, 0.2), c64(0.7, -0.15)] {
            let r = identity_residual_s12(&f.solution, &f.lattice, z).unwrap();
            assert!(r < 1e-8, "s^12 identity at {z}: {r:.3e}");
        }
        // Near the origin both S and wp^{-3} vanish to high order.
        let r = identity_residual_s12(&f.solution, &f.lattice, c64(1e-2, 0.0)).unwrap();
        assert!(r < 1e-10);
    }

    #[test]
    fn twenty_fourth_power_identities() {
        let f = fixture();
        for z in [c64(0.1, 0.0), c64(0.25, 0.1), c64(0.6, -0.2)] {
            let (rs, rc) = identity_residual_s24(&f.solution, &f.lattice, z).unwrap();
            assert!(rs < 1e-7, "s^24 identity at {z}: {rs:.3e}");
            assert!(rc < 1e-7, "c^24 identity at {z}: {rc:.3e}");
        }
        // Near a pole of wp the inverse powers are tiny but the
        // (1/8) wp^-3 (wp')^2 term stays order one.
        let near_pole = c64(f.constants.two_k() - 0.05, 0.0);
        let (rs, rc) = identity_residual_s24(&f.solution, &f.lattice, near_pole).unwrap();
        assert!(rs < 1e-7 && rc < 1e-7, "near-pole s^24: {rs:.3e}, {rc:.3e}");
    }
}
