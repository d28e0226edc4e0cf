//! Scalar types for the rational-valued quantities (measures, Ruzsa ratios,
//! growth bounds).
//!
//! Everything the library asserts is computed with an exact [`Rational`];
//! floating point instantiations exist for display and plotting only.

use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, ToPrimitive};
use std::fmt::Debug;

/// A field-like number type that can hold ratios of counts.
pub trait Scalar: Num + Clone + PartialOrd + Debug + FromPrimitive {
    /// `num / den` in this scalar type. `den` must be nonzero.
    fn ratio(num: u64, den: u64) -> Self {
        Self::from_u64(num).expect("numerator fits") / Self::from_u64(den).expect("denominator fits")
    }

    /// Lossy conversion for display.
    fn to_f64(&self) -> f64;
}

impl Scalar for f32 {
    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Ratio<i64> {
    fn ratio(num: u64, den: u64) -> Self {
        Ratio::new(num as i64, den as i64)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for Ratio<i128> {
    fn ratio(num: u64, den: u64) -> Self {
        Ratio::new(i128::from(num), i128::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for BigRational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Formats an exact ratio as `p/q` (or `p` when the denominator is 1).
pub fn fmt_ratio(r: &Ratio<i64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_reduces() {
        let r = <Ratio<i64> as Scalar>::ratio(4, 6);
        assert_eq!(r, Ratio::new(2, 3));
        assert_eq!(fmt_ratio(&r), "2/3");
        assert_eq!(fmt_ratio(&Ratio::new(6, 3)), "2");
    }

    #[test]
    fn float_and_exact_agree() {
        let x = <f64 as Scalar>::ratio(3, 8);
        let y = <Ratio<i64> as Scalar>::ratio(3, 8);
        assert_eq!(x, Scalar::to_f64(&y));
        let big = <BigRational as Scalar>::ratio(3, 8);
        assert_eq!(Scalar::to_f64(&big), 0.375);
    }
}
