use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact ordered field element.
///
/// Every operation is checked: a fixed-width implementation reports overflow
/// instead of wrapping, an arbitrary-precision one never fails.
pub trait ExactScalar:
    Clone
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + fmt::Display
    + fmt::Debug
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;

    /// `num / den`, reduced. `None` when `den == 0`.
    fn from_fraction(num: i64, den: i64) -> Option<Self>;

    fn is_integral(&self) -> bool;

    /// The value as an `i64`, when it is an integer that fits.
    fn to_i64_exact(&self) -> Option<i64>;

    fn add_exact(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow("addition"))
    }

    fn sub_exact(&self, rhs: &Self) -> Result<Self> {
        self.checked_sub(rhs).ok_or(Error::Overflow("subtraction"))
    }

    fn mul_exact(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs)
            .ok_or(Error::Overflow("multiplication"))
    }

    fn div_exact(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Singular);
        }
        self.checked_div(rhs).ok_or(Error::Overflow("division"))
    }
}

impl ExactScalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn from_fraction(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let wide = Ratio::new(num as i128, den as i128);
        Some(Ratio::new_raw(
            i64::try_from(*wide.numer()).ok()?,
            i64::try_from(*wide.denom()).ok()?,
        ))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_i64_exact(&self) -> Option<i64> {
        self.is_integer().then(|| *self.numer())
    }
}

impl ExactScalar for Ratio<i128> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }

    fn from_fraction(num: i64, den: i64) -> Option<Self> {
        (den != 0).then(|| Ratio::new(num as i128, den as i128))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            i64::try_from(*self.numer()).ok()
        } else {
            None
        }
    }
}

impl ExactScalar for Ratio<BigInt> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }

    fn from_fraction(num: i64, den: i64) -> Option<Self> {
        (den != 0).then(|| Ratio::new(BigInt::from(num), BigInt::from(den)))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

/// Exact conversion of an integer slice into scalars.
pub fn lift<T: ExactScalar>(values: &[i64]) -> Vec<T> {
    values.iter().map(|&v| T::from_i64(v)).collect()
}

/// Sum of a scalar slice.
pub fn sum<T: ExactScalar>(values: &[T]) -> Result<T> {
    values.iter().try_fold(T::zero(), |acc, v| acc.add_exact(v))
}
