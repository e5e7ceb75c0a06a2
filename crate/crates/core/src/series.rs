//! Truncated formal power series over an exact coefficient ring.
//!
//! A [`Series`] of truncation order `T` stores exactly the coefficients of
//! `x^0..=x^T`. Binary operations return the smaller of the two orders, and
//! nothing ever extends precision on its own.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::numbers::factorial;
use crate::rational::{int, Rational};
use crate::ring::CoefficientRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is not invertible")]
    Singular,
    #[error("{op} requires constant term {required}")]
    Domain {
        op: &'static str,
        required: &'static str,
    },
    #[error("coefficient {index} requested from a series truncated at order {order}")]
    Truncation { index: usize, order: usize },
}

#[derive(Clone, PartialEq, Debug)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: CoefficientRing> Series<R> {
    /// Builds a series of truncation order `order`, padding `coeffs` with zeros
    /// or dropping terms past `x^order`.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    /// The series `x` (just `0` at order 0).
    pub fn x(order: usize) -> Self {
        Self::new(vec![R::zero(), R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&R, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::Truncation {
            index: n,
            order: self.order(),
        })
    }

    /// `n!·c_n`, the exponential-generating-function coefficient.
    pub fn egf_coefficient(&self, n: usize) -> Result<R, SeriesError> {
        Ok(self.coeff(n)?.scale(&int(factorial(n))))
    }

    /// Drops coefficients past `x^order`; no-op if already at or below it.
    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.minus(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(R::negate)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    pub fn map(&self, f: impl FnMut(&R) -> R) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = R::zero();
                for i in 0..=n {
                    let (a, b) = (&self.coeffs[i], &other.coeffs[n - i]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.plus(&a.times(b));
                    }
                }
                acc
            })
            .collect();
        Self { coeffs }
    }

    /// Multiplicative inverse: `b_0 = 1/a_0`, `b_n = −(1/a_0) Σ_{i=1..n} a_i b_{n−i}`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(SeriesError::Singular)?;
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = R::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc = acc.plus(&a.times(&out[n - i]));
                }
            }
            out.push(acc.times(&inv0).negate());
        }
        Ok(Self { coeffs: out })
    }

    /// Formal derivative; the result has order `T − 1` (order 0 stays order 0).
    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        Self::from_fn(order, |k| match self.coeffs.get(k + 1) {
            Some(c) => c.scale(&int((k + 1) as i64)),
            None => R::zero(),
        })
    }

    /// Termwise integral with zero constant term; the result has order `T + 1`.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(R::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(BigInt::one(), BigInt::from(k + 1))));
        }
        Self { coeffs }
    }

    /// Logarithm of a series with constant term 1, via `log(a) = ∫ a'/a`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::Domain {
                op: "log",
                required: "1",
            });
        }
        let order = self.order();
        if order == 0 {
            return Ok(Self::zero(0));
        }
        let quotient = self.derivative().mul(&self.inverse()?.truncate(order - 1));
        Ok(quotient.integral())
    }

    /// Exponential of a series with constant term 0, via
    /// `e_k = (1/k) Σ_{j=1..k} j·a_j·e_{k−j}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::Domain {
                op: "exp",
                required: "0",
            });
        }
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(R::one());
        for k in 1..self.coeffs.len() {
            let mut acc = R::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc = acc.plus(&a.times(&out[k - j]).scale(&int(j as i64)));
                }
            }
            out.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(k))));
        }
        Ok(Self { coeffs: out })
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn pow(&self, exponent: i64) -> Result<Self, SeriesError> {
        let base = if exponent < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = exponent.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut square = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square);
            }
        }
        Ok(result)
    }
}

impl Series<Rational> {
    /// `e^x = Σ x^k/k!`.
    pub fn exp_x(order: usize) -> Self {
        Self::from_fn(order, |k| Rational::new(BigInt::one(), factorial(k)))
    }

    /// `(e^x − 1)/x = Σ x^k/(k+1)!`.
    pub fn expm1_over_x(order: usize) -> Self {
        Self::from_fn(order, |k| Rational::new(BigInt::one(), factorial(k + 1)))
    }

    /// `x/(e^x − 1)`, the Bernoulli generating function.
    pub fn bernoulli_egf(order: usize) -> Self {
        Self::expm1_over_x(order)
            .inverse()
            .expect("(e^x - 1)/x has constant term 1")
    }

    /// `log((e^x − 1)/x)`.
    pub fn log_expm1_over_x(order: usize) -> Self {
        Self::expm1_over_x(order)
            .log()
            .expect("(e^x - 1)/x has constant term 1")
    }
}
