use num_complex::Complex64;

/// A point of the Riemann sphere: either a finite complex value or the
/// point at infinity. Poles are values, not errors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtComplex {
    pub fn is_infinity(self) -> bool {
        matches!(self, ExtComplex::Infinity)
    }

    /// The finite value, if there is one.
    pub fn finite(self) -> Option<Complex64> {
        match self {
            ExtComplex::Finite(v) => Some(v),
            ExtComplex::Infinity => None,
        }
    }

    /// Unwraps a finite value; panics on the point at infinity.
    pub fn unwrap_finite(self) -> Complex64 {
        match self {
            ExtComplex::Finite(v) => v,
            ExtComplex::Infinity => panic!("unexpected point at infinity"),
        }
    }

    /// Reciprocal on the sphere: 1/0 = infinity, 1/infinity = 0.
    pub fn recip(self) -> ExtComplex {
        match self {
            ExtComplex::Infinity => ExtComplex::Finite(Complex64::new(0.0, 0.0)),
            ExtComplex::Finite(v) => {
                let r = v.finv();
                if r.is_finite() {
                    ExtComplex::Finite(r)
                } else {
                    ExtComplex::Infinity
                }
            }
        }
    }
}

impl From<Complex64> for ExtComplex {
    fn from(v: Complex64) -> Self {
        ExtComplex::Finite(v)
    }
}
