use crate::error::{Error, Result};

/// Numerical tolerance shared by every approximate comparison in the crate.
///
/// All predicates compare Frobenius norms against `eps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self> {
        if eps.is_finite() && eps > 0.0 && eps < 1e-3 {
            Ok(Self { eps })
        } else {
            Err(Error::InvalidTolerance(eps))
        }
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Same context with `eps` scaled by `factor`, clamped to the valid range.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            eps: (self.eps * factor).min(0.999e-3),
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps: Self::DEFAULT_EPS,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert!(Tolerance::new(0.0).is_err());
        assert!(Tolerance::new(-1e-9).is_err());
        assert!(Tolerance::new(1e-3).is_err());
        assert!(Tolerance::new(f64::NAN).is_err());
        assert_eq!(Tolerance::new(1e-6).unwrap().eps(), 1e-6);
        assert_eq!(Tolerance::default().eps(), 1e-9);
    }
}
