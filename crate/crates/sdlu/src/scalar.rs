//! Arithmetic backends shared by every module.
//!
//! Two implementations are provided: `f64` with banded comparisons for
//! general use, and [`BigRational`] with exact comparisons for verification
//! work, where strict inequalities must be decided without rounding error.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Float comparison tolerance, applied absolute-plus-relative as
/// `|a - b| <= EPS_NUM * (1 + max(|a|, |b|))`.
pub const EPS_NUM: f64 = 1e-9;

/// Tolerance for probability normalization: `|sum - 1| <= EPS_SUM`
/// on both backends.
pub const EPS_SUM: f64 = 1e-9;

/// A real-number backend.
///
/// All comparisons that carry decision weight go through [`Scalar::band_cmp`]:
/// banded for floats, exact for rationals. Plain `PartialOrd` is reserved for
/// tie-free bookkeeping such as tracking a running minimum.
pub trait Scalar:
    Sized
    + Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when comparisons are exact rather than banded.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;

    /// The exact ratio `num / den`. Panics if `den` is zero.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Embeds a floating-point literal. The rational backend takes the exact
    /// binary value of the double, so round trips are lossless.
    fn from_f64_lit(v: f64) -> Self;

    fn from_big_rational(r: &BigRational) -> Self;

    /// Nearest double, used for reporting only.
    fn to_f64(&self) -> f64;

    /// Exact fraction rendering when the backend carries one.
    fn rational_repr(&self) -> Option<String>;

    /// Three-way comparison with the backend's equality band.
    fn band_cmp(&self, other: &Self) -> Ordering;

    fn abs(&self) -> Self;

    fn approx_eq(&self, other: &Self) -> bool {
        self.band_cmp(other) == Ordering::Equal
    }

    fn band_gt(&self, other: &Self) -> bool {
        self.band_cmp(other) == Ordering::Greater
    }

    fn band_lt(&self, other: &Self) -> bool {
        self.band_cmp(other) == Ordering::Less
    }

    fn is_strictly_positive(&self) -> bool {
        self.band_gt(&Self::zero())
    }

    fn is_strictly_negative(&self) -> bool {
        self.band_lt(&Self::zero())
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn from_f64_lit(v: f64) -> Self {
        v
    }

    fn from_big_rational(r: &BigRational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn rational_repr(&self) -> Option<String> {
        None
    }

    fn band_cmp(&self, other: &Self) -> Ordering {
        let tol = EPS_NUM * (1.0 + f64::abs(*self).max(f64::abs(*other)));
        if f64::abs(self - other) <= tol {
            Ordering::Equal
        } else if self < other {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }

    fn one() -> Self {
        <BigRational as One>::one()
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_f64_lit(v: f64) -> Self {
        BigRational::from_float(v).expect("finite float literal")
    }

    fn from_big_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn rational_repr(&self) -> Option<String> {
        Some(self.to_string())
    }

    fn band_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

/// `|sum - 1| <= EPS_SUM` with the tolerance expressed in `T`, so the exact
/// backend accepts nearly-normalized decimal inputs too.
pub fn sums_to_one<T: Scalar>(sum: &T) -> bool {
    let eps = T::from_ratio(1, 1_000_000_000);
    (sum.clone() - T::one()).abs() <= eps
}
