use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rat;

/// Coefficient ring for sparse polynomials.
///
/// Implemented by [`Rat`] (arbitrary-precision rationals) and by
/// [`ParamCoeff`](super::param::ParamCoeff) (Laurent polynomials in the
/// stabilizer parameters). Only exact rings are used; there is no
/// floating-point instantiation.
pub trait Scalar:
    Clone
    + Eq
    + Ord
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + fmt::Display
    + fmt::Debug
{
    fn from_i64(n: i64) -> Self;

    /// True if the scalar should be rendered with a leading minus sign.
    fn display_negative(&self) -> bool;

    /// Render for use as a coefficient in front of a monomial: `None` means
    /// "suppress" (absolute value is one), otherwise the absolute value.
    fn coeff_string(&self) -> Option<String>;
}

impl Scalar for Rat {
    fn from_i64(n: i64) -> Self {
        Rat::from_integer(n.into())
    }

    fn display_negative(&self) -> bool {
        use num_traits::Signed;
        self.is_negative()
    }

    fn coeff_string(&self) -> Option<String> {
        use num_traits::Signed;
        let a = self.abs();
        if a.is_one() {
            None
        } else {
            Some(a.to_string())
        }
    }
}
