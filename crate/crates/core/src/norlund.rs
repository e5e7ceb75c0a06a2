//! Nörlund polynomials `B_n^(z)`, the EGF coefficients of `(x/(e^x − 1))^z`.
//!
//! Three constructions that share no intermediate results:
//!
//! - [`norlund_via_egf`] expands `exp(−z·log((e^x − 1)/x))` with polynomial
//!   coefficients.
//! - [`norlund_via_eulerian`] expands the closed form
//!   `n!/(2n)! Σ_k (−1)^k C(n,k) ⟨z⟩_k ⟨n+1−z⟩_{n−k}` over the second-order
//!   Eulerian row.
//! - [`norlund_via_interpolation`] interpolates the values at
//!   `z = 0, −1, …, −n`, which are `S(m+n, m)/binomial(m+n, n)`.
//!
//! All three agree; the identity suite uses that agreement as evidence.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cache::PrefixCache;
use crate::eulerian::eulerian_row;
use crate::numbers::{binomial, factorial, rising_factorial_poly, stirling2};
use crate::poly::Polynomial;
use crate::rational::{int, sign, Rational};
use crate::series::Series;

static EGF_PATH: PrefixCache<Polynomial> = PrefixCache::new();

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NorlundError {
    #[error("the Eulerian closed form is an empty sum at n = 0")]
    EmptyClosedForm,
    #[error("derivative order {0} is not supported (use 1 or 2)")]
    UnsupportedOrder(u32),
}

/// `B_n^(z)` together with its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NorlundPolynomial {
    n: usize,
    poly: Polynomial,
}

impl NorlundPolynomial {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.poly.eval(z)
    }
}

/// Builds every `B_k^(z)`, `k ≤ order`, from one exponential over `Q[z]`.
fn egf_prefix(order: usize) -> Vec<Polynomial> {
    let log = Series::log_expm1_over_x(order);
    let minus_z = Polynomial::linear(Rational::zero(), -Rational::one());
    let exponent = Series::from_fn(order, |k| minus_z.scale(&log.coeffs()[k]));
    let power = exponent.exp().expect("constant term is 0");
    (0..=order)
        .map(|k| power.egf_coefficient(k).expect("within order"))
        .collect()
}

/// `B_n^(z)` from the generating function `exp(−z·L(x))`, `L = log((e^x − 1)/x)`.
pub fn norlund_via_egf(n: usize) -> NorlundPolynomial {
    let poly = EGF_PATH.get(n, |t, n| {
        *t = egf_prefix(n.max(t.len() + t.len() / 2).max(8));
    });
    NorlundPolynomial { n, poly }
}

/// `B_n^(z)` from the second-order Eulerian row, for `n ≥ 1`.
///
/// `⟨n+1−z⟩_{n−k}` is expanded factor by factor as `Π (n+1+i − z)`.
pub fn norlund_via_eulerian(n: usize) -> Result<NorlundPolynomial, NorlundError> {
    if n == 0 {
        return Err(NorlundError::EmptyClosedForm);
    }
    let row = eulerian_row(n).expect("n >= 1");
    let mut sum = Polynomial::zero();
    for k in 1..=n {
        let mut affine = Polynomial::one();
        for i in 0..n - k {
            affine = affine.mul_linear(&int((n + 1 + i) as i64), &-Rational::one());
        }
        let term = &rising_factorial_poly(k) * &affine;
        sum = &sum + &term.scale(&(sign(k as i64) * int(row.get(k as i64))));
    }
    let scale = Rational::new(factorial(n), factorial(2 * n));
    Ok(NorlundPolynomial {
        n,
        poly: sum.scale(&scale),
    })
}

/// `B_n^(−m) = S(m+n, m) / binomial(m+n, n)`.
pub fn norlund_at_negative_int(n: usize, m: usize) -> Rational {
    Rational::new(stirling2(m + n, m), binomial((m + n) as i64, n as i64))
}

/// `B_n^(z)` as the interpolant through `(−m, B_n^(−m))` for `m = 0..=n`.
pub fn norlund_via_interpolation(n: usize) -> NorlundPolynomial {
    let points: Vec<_> = (0..=n)
        .map(|m| (int(-(m as i64)), norlund_at_negative_int(n, m)))
        .collect();
    NorlundPolynomial {
        n,
        poly: Polynomial::interpolate(&points),
    }
}

/// `B_n^(N)` for a nonnegative integer `N`, as the EGF coefficient of the
/// `N`-th power of the Bernoulli generating function; this is the
/// multinomial convolution `Σ n!/(k_1!⋯k_N!) B_{k_1}⋯B_{k_N}`.
pub fn norlund_int_power(n: usize, power: u32) -> Rational {
    Series::bernoulli_egf(n)
        .pow(i64::from(power))
        .expect("nonnegative power")
        .egf_coefficient(n)
        .expect("within order")
}

/// `d^order/dz^order B_n^(z)` at `z = 0`, for order 1 or 2.
pub fn derivative_at_zero(p: &NorlundPolynomial, order: u32) -> Result<Rational, NorlundError> {
    match order {
        1 | 2 => Ok(p.poly.coeff(order as usize) * int(factorial(order as usize))),
        _ => Err(NorlundError::UnsupportedOrder(order)),
    }
}

/// `(−1/2)^n`, the leading coefficient of `B_n^(z)`: the top-degree term of
/// `exp(−z·L)` is `(−z·x/2)^n / n!`.
pub fn leading_coefficient(n: usize) -> Rational {
    sign(n as i64) * Rational::new(BigInt::one(), BigInt::from(2).pow(n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn poly(cs: &[Rational]) -> Polynomial {
        Polynomial::from_coeffs(cs.to_vec())
    }

    #[test]
    fn egf_small() {
        assert_eq!(norlund_via_egf(0).into_poly(), Polynomial::one());
        assert_eq!(
            norlund_via_egf(1).into_poly(),
            poly(&[int(0), ratio(-1, 2)])
        );
        assert_eq!(
            norlund_via_egf(2).into_poly(),
            poly(&[int(0), ratio(-1, 12), ratio(1, 4)])
        );
    }

    #[test]
    fn eulerian_closed_form_small() {
        assert_eq!(norlund_via_eulerian(0), Err(NorlundError::EmptyClosedForm));
        assert_eq!(
            norlund_via_eulerian(1).unwrap().into_poly(),
            poly(&[int(0), ratio(-1, 2)])
        );
        assert_eq!(norlund_via_eulerian(2).unwrap().eval(&int(1)), ratio(1, 6));
        // B_3^(3) = −c_3 = −9/4
        assert_eq!(norlund_via_eulerian(3).unwrap().eval(&int(3)), ratio(-9, 4));
    }

    #[test]
    fn negative_integer_order() {
        for n in 1..6 {
            assert_eq!(norlund_at_negative_int(n, 0), int(0));
        }
        for m in 0..6 {
            assert_eq!(norlund_at_negative_int(0, m), int(1));
        }
        assert_eq!(norlund_at_negative_int(2, 2), ratio(7, 6));
        assert_eq!(norlund_via_egf(2).eval(&int(-2)), ratio(7, 6));
    }

    #[test]
    fn interpolation_small() {
        assert_eq!(norlund_via_interpolation(0).into_poly(), Polynomial::one());
        assert_eq!(
            norlund_via_interpolation(1).into_poly(),
            poly(&[int(0), ratio(-1, 2)])
        );
        assert_eq!(norlund_via_interpolation(4), norlund_via_egf(4));
    }

    #[test]
    fn integer_powers() {
        for n in 0..8 {
            assert_eq!(norlund_int_power(n, 1), crate::numbers::bernoulli(n));
            assert_eq!(norlund_int_power(n, 0), int(i64::from(n == 0)));
        }
        assert_eq!(norlund_int_power(3, 3), ratio(-9, 4));
    }

    #[test]
    fn derivatives() {
        let b2 = norlund_via_egf(2);
        assert_eq!(derivative_at_zero(&b2, 1).unwrap(), ratio(-1, 12));
        assert_eq!(derivative_at_zero(&b2, 2).unwrap(), ratio(1, 2));
        assert_eq!(
            derivative_at_zero(&norlund_via_egf(1), 1).unwrap(),
            ratio(-1, 2)
        );
        assert_eq!(
            derivative_at_zero(&b2, 3),
            Err(NorlundError::UnsupportedOrder(3))
        );
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(leading_coefficient(1), ratio(-1, 2));
        assert_eq!(leading_coefficient(2), ratio(1, 4));
        for n in 1..=12 {
            assert_eq!(
                norlund_via_egf(n).poly().leading_coefficient(),
                leading_coefficient(n)
            );
        }
    }
}
