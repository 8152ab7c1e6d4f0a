//! Truncated complex power series.
//!
//! A `TruncatedSeries` holds the coefficients c_0..c_N of a polynomial
//! truncation about some center. Multiplication is the Cauchy product cut
//! back to the common order, i.e. arithmetic in C\[z\]/(z^{N+1}). Orders stay
//! small here (the continuation engine uses 32, oracles up to 128), so the
//! naive O(N^2) product is the right tool.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest retained order. Continuation never needs more than 128; the cap
/// keeps accidental blowups from allocating silly amounts.
pub const MAX_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Builds a series from coefficients c_0..c_N. All coefficients must be
    /// finite and at least one must be present.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        if coeffs.len() - 1 > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: coeffs.len() - 1,
                max: MAX_ORDER,
            });
        }
        if let Some(index) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFiniteCoefficient { index });
        }
        Ok(Self { coeffs })
    }

    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0); order + 1],
        }
    }

    /// The constant series 1 of the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Complex64::new(1.0, 0.0);
        s
    }

    /// Number of retained powers beyond the constant term.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of z^k; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs
            .get(k)
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Cauchy product truncated to the common order. Both operands must
    /// have the same order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let n = self.order();
        let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Termwise sum; orders must match.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// k-th power, truncated; a^0 = 1. Binary exponentiation keeps the
    /// number of roundoff-accumulating products at O(log k).
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("orders match by construction");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("orders match by construction");
            }
        }
        result
    }

    /// Horner evaluation of the truncation at z.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Termwise derivative, order N-1. The derivative of a constant series
    /// is the zero series of order 0.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngExt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real_series(values: &[f64]) -> TruncatedSeries {
        TruncatedSeries::new(values.iter().map(|&v| c(v, 0.0)).collect()).unwrap()
    }

    fn random_series(rng: &mut ChaCha8Rng, order: usize) -> TruncatedSeries {
        let coeffs = (0..=order)
            .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        TruncatedSeries::new(coeffs).unwrap()
    }

    /// Brute-force convolution, independent of `TruncatedSeries::mul`.
    fn convolve(a: &[Complex64], b: &[Complex64], order: usize) -> Vec<Complex64> {
        let mut out = vec![c(0.0, 0.0); order + 1];
        for (k, slot) in out.iter_mut().enumerate() {
            for i in 0..=k {
                *slot += a.get(i).copied().unwrap_or(c(0.0, 0.0))
                    * b.get(k - i).copied().unwrap_or(c(0.0, 0.0));
            }
        }
        out
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * 1f64.max(a.norm()).max(b.norm())
    }

    #[test]
    fn mul_polynomials() {
        // (1 + z)(1 - z) = 1 - z^2
        let a = real_series(&[1.0, 1.0, 0.0]);
        let b = real_series(&[1.0, -1.0, 0.0]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.coeffs(), real_series(&[1.0, 0.0, -1.0]).coeffs());
    }

    #[test]
    fn mul_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_series(&mut rng, 17);
        let one = TruncatedSeries::one(17);
        let p = a.mul(&one).unwrap();
        for k in 0..=17 {
            assert!((p.coeff(k) - a.coeff(k)).norm() < 1e-15);
        }
    }

    #[test]
    fn geometric_series_squared() {
        // (sum_{n<=N} z^n)^2 has coefficients n + 1 for n <= N.
        for order in [4usize, 16, 64] {
            let ones = TruncatedSeries::new(vec![c(1.0, 0.0); order + 1]).unwrap();
            let sq = ones.mul(&ones).unwrap();
            let oracle = convolve(ones.coeffs(), ones.coeffs(), order);
            for (n, &expected) in oracle.iter().enumerate() {
                assert!((sq.coeff(n) - c((n + 1) as f64, 0.0)).norm() < 1e-12);
                assert!((sq.coeff(n) - expected).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn mul_order_mismatch() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::one(4);
        assert!(matches!(
            a.mul(&b),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn rejects_bad_coefficients() {
        assert!(matches!(
            TruncatedSeries::new(vec![]),
            Err(Error::EmptySeries)
        ));
        assert!(matches!(
            TruncatedSeries::new(vec![c(1.0, 0.0), c(f64::NAN, 0.0)]),
            Err(Error::NonFiniteCoefficient { index: 1 })
        ));
        assert!(matches!(
            TruncatedSeries::new(vec![c(0.0, 0.0); MAX_ORDER + 2]),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn pow_binomial() {
        // (1 + z)^2 = 1 + 2z + z^2
        let a = real_series(&[1.0, 1.0, 0.0]);
        let sq = a.pow(2);
        assert_eq!(sq.coeffs(), real_series(&[1.0, 2.0, 1.0]).coeffs());
    }

    #[test]
    fn pow_one_and_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let a = random_series(&mut rng, 9);
        let p1 = a.pow(1);
        for k in 0..=9 {
            assert!((p1.coeff(k) - a.coeff(k)).norm() < 1e-15);
        }
        let p0 = a.pow(0);
        assert_eq!(p0.coeffs(), TruncatedSeries::one(9).coeffs());
    }

    #[test]
    fn pow_fifth_of_near_one() {
        // (1 - z^6/6)^5 to order 7 is 1 - (5/6) z^6.
        let mut base = TruncatedSeries::zero(7);
        base = base.add(&TruncatedSeries::one(7)).unwrap();
        let mut coeffs = base.coeffs().to_vec();
        coeffs[6] = c(-1.0 / 6.0, 0.0);
        let base = TruncatedSeries::new(coeffs).unwrap();
        let p = base.pow(5);
        for k in 0..=7 {
            let expected = match k {
                0 => c(1.0, 0.0),
                6 => c(-5.0 / 6.0, 0.0),
                _ => c(0.0, 0.0),
            };
            assert!(
                (p.coeff(k) - expected).norm() < 1e-15,
                "coefficient {k}: {} vs {expected}",
                p.coeff(k)
            );
        }
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for &order in &[8usize, 32, 64] {
            let a = random_series(&mut rng, order);
            let mut product = TruncatedSeries::one(order);
            for k in 1..=6u32 {
                product = product.mul(&a).unwrap();
                let p = a.pow(k);
                for i in 0..=order {
                    assert!(
                        close(p.coeff(i), product.coeff(i), 1e-13),
                        "order {order}, power {k}, coeff {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn mul_commutes_and_associates() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..20 {
            let a = random_series(&mut rng, 24);
            let b = random_series(&mut rng, 24);
            let d = random_series(&mut rng, 24);
            let ab = a.mul(&b).unwrap();
            let ba = b.mul(&a).unwrap();
            let ab_d = ab.mul(&d).unwrap();
            let a_bd = a.mul(&b.mul(&d).unwrap()).unwrap();
            for k in 0..=24 {
                assert!(close(ab.coeff(k), ba.coeff(k), 1e-14));
                assert!(close(ab_d.coeff(k), a_bd.coeff(k), 1e-13));
            }
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            real_series(&[1.0, 0.0, -1.0]).eval(c(0.0, 0.0)),
            c(1.0, 0.0)
        );
        assert_eq!(real_series(&[0.0, 1.0]).eval(c(0.3, 0.0)), c(0.3, 0.0));
        let v = real_series(&[1.0, 1.0, 1.0]).eval(c(0.1, 0.0));
        assert!((v - c(1.11, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn eval_is_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..20 {
            let a = random_series(&mut rng, 20);
            let b = random_series(&mut rng, 20);
            let z = c(rng.random_range(-0.9..0.9), rng.random_range(-0.9..0.9));
            let lhs = a.add(&b).unwrap().eval(z);
            let rhs = a.eval(z) + b.eval(z);
            assert!(close(lhs, rhs, 1e-13));
        }
    }

    #[test]
    fn derivative_rules() {
        // d/dz z = 1, d/dz 1 = 0, d/dz (1 + 2z + 3z^2) = 2 + 6z
        assert_eq!(
            real_series(&[0.0, 1.0]).derivative().coeffs(),
            &[c(1.0, 0.0)]
        );
        assert_eq!(real_series(&[1.0]).derivative().coeffs(), &[c(0.0, 0.0)]);
        let d = real_series(&[1.0, 2.0, 3.0]).derivative();
        assert_eq!(d.coeffs(), real_series(&[2.0, 6.0]).coeffs());
        assert_eq!(d.order(), 1);
    }
}
