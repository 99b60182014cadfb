//! Working-precision context and small helpers around `rug` scalars.
//!
//! Everything downstream of the exact combinatorics runs on MPFR floats
//! (`rug::Float`) at a caller-chosen mantissa width. A [`PrecisionContext`]
//! bundles that width with the absolute error target used by the root
//! finders, so "recompute at doubled precision" is a one-liner.

use rug::{Complex, Float};

use crate::error::{Error, Result};

/// Default mantissa width in bits.
pub const DEFAULT_BITS: u32 = 256;
/// Default absolute error target for root values.
pub const DEFAULT_TOL: f64 = 1e-50;

/// Mantissa precision plus the absolute tolerance root finders aim for.
///
/// Invariants: `bits >= 64` and `tol >= 2^(16 - bits)` (sixteen guard digits
/// are reserved so the tolerance is actually representable at this width).
#[derive(Debug, Clone)]
pub struct PrecisionContext {
    bits: u32,
    tol: f64,
}

impl PrecisionContext {
    /// Context with the given mantissa width and the default tolerance,
    /// relaxed if the width cannot support `1e-50`.
    pub fn new(bits: u32) -> Result<Self> {
        let floor = Self::tol_floor(bits)?;
        Self::with_tol(bits, if floor > DEFAULT_TOL { floor } else { DEFAULT_TOL })
    }

    /// Context with an explicit tolerance.
    pub fn with_tol(bits: u32, tol: f64) -> Result<Self> {
        let floor = Self::tol_floor(bits)?;
        if !(tol > 0.0) {
            return Err(Error::Precision("tol must be positive".into()));
        }
        if tol < floor {
            return Err(Error::Precision(format!(
                "tol {tol:e} below floor 2^(16-{bits}) = {floor:e}"
            )));
        }
        Ok(Self { bits, tol })
    }

    fn tol_floor(bits: u32) -> Result<f64> {
        if bits < 64 {
            return Err(Error::Precision(format!("bits = {bits}, need >= 64")));
        }
        // 2^(16 - bits), clamped to the smallest positive f64 for huge widths.
        let e = 16i64 - i64::from(bits);
        Ok(if e < -1060 { f64::MIN_POSITIVE } else { (e as f64).exp2() })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Same tolerance at twice the mantissa width (for stability checks).
    pub fn doubled(&self) -> Self {
        Self { bits: self.bits * 2, tol: self.tol }
    }

    /// A float carrying this context's precision.
    pub fn float<T>(&self, val: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.bits, val)
    }

    /// Parse a decimal literal at this precision.
    pub fn parse(&self, s: &str) -> Float {
        Float::with_val(self.bits, Float::parse(s).expect("valid decimal literal"))
    }

    pub fn zero(&self) -> Float {
        self.float(0)
    }

    pub fn one(&self) -> Float {
        self.float(1)
    }

    pub fn pi(&self) -> Float {
        self.float(rug::float::Constant::Pi)
    }

    pub fn euler_gamma(&self) -> Float {
        self.float(rug::float::Constant::Euler)
    }

    pub fn complex<T>(&self, val: T) -> Complex
    where
        Complex: rug::Assign<T>,
    {
        Complex::with_val(self.bits, val)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self { bits: DEFAULT_BITS, tol: DEFAULT_TOL }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_narrow_mantissa() {
        assert!(PrecisionContext::new(32).is_err());
        assert!(PrecisionContext::new(64).is_ok());
    }

    #[test]
    fn tolerance_floor_guards_digits() {
        // 64-bit mantissa cannot honor 1e-50.
        assert!(PrecisionContext::with_tol(64, 1e-50).is_err());
        let ctx = PrecisionContext::new(64).unwrap();
        assert!(ctx.tol() >= (16f64 - 64.0).exp2());
        // Default width honors the default tolerance exactly.
        let ctx = PrecisionContext::default();
        assert_eq!(ctx.tol(), 1e-50);
        assert_eq!(ctx.bits(), 256);
    }

    #[test]
    fn doubled_keeps_tolerance() {
        let ctx = PrecisionContext::default().doubled();
        assert_eq!(ctx.bits(), 512);
        assert_eq!(ctx.tol(), 1e-50);
    }
}
