//! Exact arithmetic for second-order Eulerian numbers, Nörlund polynomials and
//! the Bernoulli-number identities that tie them together.
//!
//! Everything here is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the library. The crate is organised bottom-up:
//!
//! - [`rational`], [`poly`] and [`ring`]: scalars, polynomials in `z`, and the
//!   coefficient-ring abstraction shared by both.
//! - [`series`]: truncated formal power series over any [`ring::CoefficientRing`].
//! - [`numbers`]: Bernoulli, Stirling, Cauchy and harmonic numbers, binomials
//!   and rising factorials.
//! - [`eulerian`]: the second-order Eulerian triangle and the Stirling
//!   permutation enumerator used as its combinatorial oracle.
//! - [`norlund`]: Nörlund polynomials built three independent ways.
//! - [`identities`]: exact checks of the identities connecting all of the above.

mod cache;
pub mod eulerian;
pub mod identities;
pub mod norlund;
pub mod numbers;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod series;

pub use eulerian::{EulerianRow, StirlingPermutation};
pub use identities::{IdentityId, IdentityReport, SignMode, SuiteConfig, Value};
pub use norlund::NorlundPolynomial;
pub use poly::Polynomial;
pub use rational::Rational;
pub use series::Series;
