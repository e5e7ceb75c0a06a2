//! Coefficient rings for [`crate::series::Series`].

use std::fmt;

use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::rational::Rational;

/// A commutative ring with exact, canonical equality that also admits division
/// by nonzero rational scalars. Implemented for [`Rational`] and for
/// [`Polynomial`] (polynomials in `z` over the rationals).
pub trait CoefficientRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, c: &Rational) -> Self;
    /// Multiplicative inverse, if the element is a unit.
    fn try_inverse(&self) -> Option<Self>;
}

impl CoefficientRing for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn try_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl CoefficientRing for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        Polynomial::scale(self, c)
    }
    // Only nonzero constants are units in Q[z].
    fn try_inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(Polynomial::constant(self.coeff(0).recip())),
            _ => None,
        }
    }
}
