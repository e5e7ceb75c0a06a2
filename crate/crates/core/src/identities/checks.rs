use num_bigint::BigInt;
use num_traits::One;

use super::{IdentityError, IdentityId, IdentityReport, SignMode, Value};
use crate::eulerian::{descent_histogram, eulerian_row, EulerianRow};
use crate::norlund::{
    derivative_at_zero, norlund_at_negative_int, norlund_int_power, norlund_via_egf,
    norlund_via_eulerian, norlund_via_interpolation,
};
use crate::numbers::{
    bernoulli, binomial, cauchy2, factorial, harmonic, rising_factorial_eval, stirling1_signed,
    stirling2,
};
use crate::rational::{int, recip, sign, Rational};
use crate::series::Series;

fn out_of_range(
    identity: IdentityId,
    params: &[(&'static str, i64)],
    reason: &'static str,
) -> IdentityError {
    let params = params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    IdentityError::OutOfRange {
        identity,
        params,
        reason,
    }
}

fn row(n: usize) -> EulerianRow {
    eulerian_row(n).expect("callers guarantee n >= 1")
}

fn c(row: &EulerianRow, k: usize) -> Rational {
    int(row.get(k as i64))
}

fn inv_binomial(n: i64, k: i64) -> Rational {
    recip(&binomial(n, k))
}

/// `B_k / k` for `k ≥ 1`.
fn bernoulli_over_index(k: usize) -> Rational {
    bernoulli(k) / int(k as i64)
}

/// `Σ_{k=2}^{n−2} (B_k/k)(B_{n−k}/(n−k))`, zero when empty.
fn bernoulli_convolution(n: usize) -> Rational {
    (2..n.saturating_sub(1))
        .map(|k| bernoulli_over_index(k) * bernoulli_over_index(n - k))
        .sum()
}

/// `Σ_{k=2}^{n−2} binomial(n,k)(B_k/k)(B_{n−k}/(n−k))`, zero when empty.
fn binomial_bernoulli_convolution(n: usize) -> Rational {
    (2..n.saturating_sub(1))
        .map(|k| {
            int(binomial(n as i64, k as i64))
                * bernoulli_over_index(k)
                * bernoulli_over_index(n - k)
        })
        .sum()
}

fn list(items: impl IntoIterator<Item = Rational>) -> Value {
    Value::List(items.into_iter().collect())
}

fn ints(items: &[BigInt]) -> Value {
    list(items.iter().cloned().map(int))
}

/// Descent statistics of enumerated Stirling permutations against the recurrence row.
pub fn check_descent_oracle(n: usize, cap: usize) -> Result<IdentityReport, IdentityError> {
    let histogram = descent_histogram(n, cap)?;
    Ok(IdentityReport::new(
        IdentityId::DescentOracle,
        vec![("n", n as i64)],
        ints(histogram.entries()),
        ints(row(n).entries()),
    ))
}

/// EGF-path Nörlund polynomial against the Eulerian closed form, as polynomials.
pub fn check_norlund_closed_form(n: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::NorlundClosedForm;
    let params = vec![("n", n as i64)];
    let closed = norlund_via_eulerian(n)
        .map_err(|_| out_of_range(id, &params, "the Eulerian sum is empty at n = 0"))?;
    Ok(IdentityReport::new(
        id,
        params,
        Value::Polynomial(norlund_via_egf(n).into_poly()),
        Value::Polynomial(closed.into_poly()),
    ))
}

/// EGF-path Nörlund polynomial against interpolation through `z = 0, −1, …, −n`.
pub fn check_norlund_interpolation(n: usize) -> IdentityReport {
    IdentityReport::new(
        IdentityId::NorlundInterpolation,
        vec![("n", n as i64)],
        Value::Polynomial(norlund_via_egf(n).into_poly()),
        Value::Polynomial(norlund_via_interpolation(n).into_poly()),
    )
}

/// Both links at `z = −m`:
/// `S(m+n, m) = Σ_k binomial(2n+m−k, 2n)·C(n,k)`, and
/// `S(m+n, m)/binomial(m+n, n) = n!/(2n)! Σ_k (−1)^k C(n,k) ⟨−m⟩_k ⟨m+n+1⟩_{n−k}`.
pub fn check_negative_order(n: usize, m: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::NegativeOrder;
    let params = vec![("n", n as i64), ("m", m as i64)];
    if n == 0 {
        return Err(out_of_range(id, &params, "requires n >= 1"));
    }
    let r = row(n);
    let (ni, mi) = (n as i64, m as i64);
    let stirling = int(stirling2(m + n, m));
    let eulerian_sum: Rational = (1..=n)
        .map(|k| int(binomial(2 * ni + mi - k as i64, 2 * ni)) * c(&r, k))
        .sum();
    let rising_sum: Rational = (1..=n)
        .map(|k| {
            sign(k as i64)
                * c(&r, k)
                * rising_factorial_eval(&int(-mi), k)
                * rising_factorial_eval(&int(mi + ni + 1), n - k)
        })
        .sum();
    let closed = rising_sum * Rational::new(factorial(n), factorial(2 * n));
    Ok(IdentityReport::new(
        id,
        params,
        list([stirling, norlund_at_negative_int(n, m)]),
        list([eulerian_sum, closed]),
    ))
}

/// `S(m+n, m) = binomial(m+n, n)·B_n^(−m)` for `m = 0..=m_max`, with `B_n^(z)`
/// from the EGF path and `S` from its own recurrence.
pub fn check_carlitz(n: usize, m_max: usize) -> IdentityReport {
    let b = norlund_via_egf(n);
    IdentityReport::new(
        IdentityId::Carlitz,
        vec![("n", n as i64), ("m_max", m_max as i64)],
        list((0..=m_max).map(|m| int(stirling2(m + n, m)))),
        list(
            (0..=m_max)
                .map(|m| int(binomial((m + n) as i64, n as i64)) * b.eval(&int(-(m as i64)))),
        ),
    )
}

/// Coefficientwise form of the Gessel–Stanley generating function, for
/// `m = 0..=m_max`.
pub fn check_gessel_stanley(n: usize, m_max: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::GesselStanley;
    let params = vec![("n", n as i64), ("m_max", m_max as i64)];
    if n == 0 {
        return Err(out_of_range(id, &params, "requires n >= 1"));
    }
    let r = row(n);
    let ni = n as i64;
    Ok(IdentityReport::new(
        id,
        params,
        list((0..=m_max).map(|m| int(stirling2(m + n, m)))),
        list((0..=m_max).map(|m| {
            (1..=n)
                .map(|k| int(binomial(2 * ni + m as i64 - k as i64, 2 * ni)) * c(&r, k))
                .sum()
        })),
    ))
}

/// `Σ_{k=1}^n (−1)^(k−1) C(n,k)/binomial(2n+1, k) = 2B_{n+1}`.
pub fn check_reciprocal_binomial_sum(n: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::ReciprocalBinomial;
    let params = vec![("n", n as i64)];
    if n == 0 {
        return Err(out_of_range(id, &params, "requires n >= 1"));
    }
    let r = row(n);
    let ni = n as i64;
    let lhs: Rational = (1..=n)
        .map(|k| sign(k as i64 - 1) * inv_binomial(2 * ni + 1, k as i64) * c(&r, k))
        .sum();
    Ok(IdentityReport::new(
        id,
        params,
        Value::Rational(lhs),
        Value::Rational(int(2) * bernoulli(n + 1)),
    ))
}

/// `∫₀¹ u^a (u−1)^b du` by binomial expansion and termwise integration.
pub fn beta_integral(a: usize, b: usize) -> Rational {
    (0..=b)
        .map(|j| {
            sign((b - j) as i64)
                * int(binomial(b as i64, j as i64))
                * Rational::new(BigInt::one(), BigInt::from(a + j + 1))
        })
        .sum()
}

/// The integral identity `∫₀¹ Σ_{k=0}^{n−1} C(n,k+1) u^(k+1) (u−1)^(2n−k) du
/// = B_{n+1}/(n+1)`, plus each integral against the closed form
/// `(−1)^k / (2(n+1)·binomial(2n+1, k+1))`.
///
/// The report lists the full sum first, then the `n` integrals. The closed
/// form is often quoted with `binomial(2n+1, k)`; that indexing is also
/// evaluated and the number of integrals it matches goes into the note.
pub fn check_beta_integrals(n: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::BetaIntegral;
    let params = vec![("n", n as i64)];
    if n == 0 {
        return Err(out_of_range(id, &params, "requires n >= 1"));
    }
    let r = row(n);
    let ni = n as i64;
    let integrals: Vec<Rational> = (0..n).map(|k| beta_integral(k + 1, 2 * n - k)).collect();
    let total: Rational = integrals
        .iter()
        .enumerate()
        .map(|(k, i)| c(&r, k + 1) * i)
        .sum();
    let closed = |k: usize, index: i64| {
        sign(k as i64) / (int(2 * (ni + 1)) * int(binomial(2 * ni + 1, index)))
    };
    let shifted: Vec<Rational> = (0..n).map(|k| closed(k, k as i64 + 1)).collect();
    let unshifted_matches = (0..n)
        .filter(|&k| closed(k, k as i64) == integrals[k])
        .count();
    let note = format!(
        "closed form with binomial(2n+1, k+1) is compared; binomial(2n+1, k) matches {unshifted_matches} of {n} integrals"
    );
    let lhs = std::iter::once(total).chain(integrals);
    let rhs = std::iter::once(bernoulli(n + 1) / int(ni + 1)).chain(shifted);
    Ok(IdentityReport::new(id, params, list(lhs), list(rhs)).with_note(note))
}

/// Miki: `Σ_{k=2}^{n−2} (B_k/k)(B_{n−k}/(n−k)) = 2H_n B_n/n + Σ_{k=2}^{n−2} binomial(n,k)(B_k/k)(B_{n−k}/(n−k))`.
/// Valid for `n ≥ 3`; `n = 1, 2` are reported as documented failures.
pub fn check_miki(n: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::Miki;
    let params = vec![("n", n as i64)];
    if n == 0 {
        return Err(out_of_range(id, &params, "B_n/n is undefined at n = 0"));
    }
    let rhs = int(2) * harmonic(n) * bernoulli_over_index(n) + binomial_bernoulli_convolution(n);
    let report = IdentityReport::new(
        id,
        params,
        Value::Rational(bernoulli_convolution(n)),
        Value::Rational(rhs),
    );
    Ok(if n < 3 {
        report.expect_failure("outside the validity range n >= 3")
    } else {
        report
    })
}

/// `Σ_k (−1)^k C(n,k) (H_{k−1} − H_{2n−k}) / binomial(2n−1, k−1)
///  = n²/(n−1)·B_{n−1} + n·Σ_{k=2}^{n−2} (B_k/k)(B_{n−k}/(n−k))`.
///
/// [`SignMode::AsPrinted`] flips the harmonic difference, which makes the left
/// side the exact negative of the right.
pub fn check_harmonic_eulerian(n: usize, mode: SignMode) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::HarmonicEulerian;
    let params = vec![("n", n as i64)];
    if n < 2 {
        return Err(out_of_range(
            id,
            &params,
            "n^2/(n-1) is undefined below n = 2",
        ));
    }
    let r = row(n);
    let ni = n as i64;
    let lhs: Rational = (1..=n)
        .map(|k| {
            let diff = harmonic(k - 1) - harmonic(2 * n - k);
            let diff = match mode {
                SignMode::Corrected => diff,
                SignMode::AsPrinted => -diff,
            };
            sign(k as i64) * inv_binomial(2 * ni - 1, k as i64 - 1) * diff * c(&r, k)
        })
        .sum();
    let rhs = Rational::new(BigInt::from(ni * ni), BigInt::from(ni - 1)) * bernoulli(n - 1)
        + int(ni) * bernoulli_convolution(n);
    let note = match mode {
        SignMode::Corrected => "harmonic difference H_{k-1} - H_{2n-k} (sign corrected from the printed H_{2n-k} - H_{k-1})",
        SignMode::AsPrinted => "harmonic difference H_{2n-k} - H_{k-1} as printed; its derivation gives the opposite sign",
    };
    let report =
        IdentityReport::new(id, params, Value::Rational(lhs), Value::Rational(rhs)).with_note(note);
    Ok(if n < 3 {
        report.expect_failure("outside the validity range n >= 3")
    } else {
        report
    })
}

/// `−B_n/n = (1/2n) Σ_k (−1)^k C(n,k)/binomial(2n−1, k−1)`; fails at `n = 1`.
pub fn check_first_derivative_sum(n: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::FirstDerivativeSum;
    let params = vec![("n", n as i64)];
    if n == 0 {
        return Err(out_of_range(id, &params, "B_n/n is undefined at n = 0"));
    }
    let r = row(n);
    let ni = n as i64;
    let sum: Rational = (1..=n)
        .map(|k| sign(k as i64) * inv_binomial(2 * ni - 1, k as i64 - 1) * c(&r, k))
        .sum();
    let report = IdentityReport::new(
        id,
        params,
        Value::Rational(-bernoulli_over_index(n)),
        Value::Rational(sum / int(2 * ni)),
    );
    Ok(if n == 1 {
        report.expect_failure("fails at n = 1 (the sum gives B_1 = -1/2, not -B_1)")
    } else {
        report
    })
}

/// `d/dz B_n^(z) |_{z=0} = −B_n/n`, valid for `n ≥ 2`.
pub fn check_first_derivative(n: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::FirstDerivative;
    let params = vec![("n", n as i64), ("order", 1)];
    if n == 0 {
        return Err(out_of_range(id, &params, "B_n/n is undefined at n = 0"));
    }
    let d = derivative_at_zero(&norlund_via_egf(n), 1).expect("order 1 is supported");
    let report = IdentityReport::new(
        id,
        params,
        Value::Rational(d),
        Value::Rational(-bernoulli_over_index(n)),
    );
    Ok(if n == 1 {
        report.expect_failure("fails at n = 1: the derivative is B_1 = -1/2")
    } else {
        report
    })
}

fn second_derivative_report(
    id: IdentityId,
    n: usize,
    rhs: impl FnOnce() -> Rational,
) -> Result<IdentityReport, IdentityError> {
    let params = vec![("n", n as i64), ("order", 2)];
    if n < 2 {
        return Err(out_of_range(
            id,
            &params,
            "n/(n-1) is undefined below n = 2",
        ));
    }
    let d = derivative_at_zero(&norlund_via_egf(n), 2).expect("order 2 is supported");
    let report = IdentityReport::new(id, params, Value::Rational(d), Value::Rational(rhs()));
    Ok(if n == 2 {
        report.expect_failure("fails at n = 2: the second derivative is 1/2")
    } else {
        report
    })
}

fn bernoulli_ratio_term(n: usize) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(n - 1)) * bernoulli(n - 1)
}

/// `d²/dz² B_n^(z) |_{z=0} = n/(n−1)·B_{n−1} + Σ_{k=2}^{n−2} binomial(n,k)(B_k/k)(B_{n−k}/(n−k))`, valid for `n ≥ 3`.
pub fn check_second_derivative(n: usize) -> Result<IdentityReport, IdentityError> {
    second_derivative_report(IdentityId::SecondDerivative, n, || {
        bernoulli_ratio_term(n) + binomial_bernoulli_convolution(n)
    })
}

/// `d²/dz² B_n^(z) |_{z=0} = n/(n−1)·B_{n−1} + Σ_{k=2}^{n−2} (B_k/k)(B_{n−k}/(n−k)) − 2H_n B_n/n`, valid for `n ≥ 3`.
pub fn check_second_derivative_harmonic(n: usize) -> Result<IdentityReport, IdentityError> {
    second_derivative_report(IdentityId::SecondDerivativeHarmonic, n, || {
        bernoulli_ratio_term(n) + bernoulli_convolution(n)
            - int(2) * harmonic(n) * bernoulli_over_index(n)
    })
}

/// `Σ_{k=0}^{N−1} (−1)^(N−1−k) s(N, N−k) B_{n−k}/(n−k)`, needs `1 ≤ N ≤ n`.
fn stirling_bernoulli_sum(n: usize, big_n: usize) -> Rational {
    (0..big_n)
        .map(|k| {
            sign((big_n - 1 - k) as i64)
                * int(stirling1_signed(big_n, big_n - k))
                * bernoulli_over_index(n - k)
        })
        .sum()
}

fn check_power_range(
    id: IdentityId,
    n: usize,
    big_n: usize,
) -> Result<Vec<(&'static str, i64)>, IdentityError> {
    let params = vec![("n", n as i64), ("N", big_n as i64)];
    if big_n == 0 || big_n > n {
        return Err(out_of_range(id, &params, "requires 1 <= N <= n"));
    }
    Ok(params)
}

/// Dilcher: `B_n^(N)` (an `N`-fold Bernoulli convolution, computed as a series
/// power) equals `N·binomial(n,N)·Σ_{k=0}^{N−1} (−1)^(N−1−k) s(N,N−k) B_{n−k}/(n−k)`.
pub fn check_dilcher(n: usize, big_n: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::Dilcher;
    let params = check_power_range(id, n, big_n)?;
    let rhs = int(big_n as i64)
        * int(binomial(n as i64, big_n as i64))
        * stirling_bernoulli_sum(n, big_n);
    Ok(IdentityReport::new(
        id,
        params,
        Value::Rational(norlund_int_power(n, big_n as u32)),
        Value::Rational(rhs),
    ))
}

/// `Σ_k (−1)^k C(n,k)/binomial(2n−1, N+k−1) = 2n·Σ_{k=0}^{N−1} (−1)^(N−1−k) s(N,N−k) B_{n−k}/(n−k)`.
pub fn check_stirling_bernoulli(n: usize, big_n: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::StirlingBernoulli;
    let params = check_power_range(id, n, big_n)?;
    let r = row(n);
    let (ni, nn) = (n as i64, big_n as i64);
    let lhs: Rational = (1..=n)
        .map(|k| sign(k as i64) * inv_binomial(2 * ni - 1, nn + k as i64 - 1) * c(&r, k))
        .sum();
    let report = IdentityReport::new(
        id,
        params,
        Value::Rational(lhs),
        Value::Rational(int(2 * ni) * stirling_bernoulli_sum(n, big_n)),
    );
    Ok(if n == big_n {
        report.with_note("N = n: both sides equal (-1)^n * 2 * c_n")
    } else {
        report
    })
}

/// `2c_n = Σ_k (−1)^(n−k) C(n,k)/binomial(2n−1, n+k−1)`, `c_n` from its EGF.
pub fn check_cauchy_eulerian(n: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::CauchyEulerian;
    let params = vec![("n", n as i64)];
    if n == 0 {
        return Err(out_of_range(id, &params, "requires n >= 1"));
    }
    let r = row(n);
    let ni = n as i64;
    let rhs: Rational = (1..=n)
        .map(|k| sign(ni - k as i64) * inv_binomial(2 * ni - 1, ni + k as i64 - 1) * c(&r, k))
        .sum();
    Ok(IdentityReport::new(
        id,
        params,
        Value::Rational(int(2) * cauchy2(n)),
        Value::Rational(rhs),
    ))
}

/// Coefficients `1..=order` of `log((e^x − 1)/x)` against `(−1)^n B_n/(n·n!)`.
pub fn check_log_series(order: usize) -> Result<IdentityReport, IdentityError> {
    let id = IdentityId::LogSeries;
    let params = vec![("T", order as i64)];
    if order == 0 {
        return Err(out_of_range(id, &params, "requires T >= 1"));
    }
    let log = Series::log_expm1_over_x(order);
    Ok(IdentityReport::new(
        id,
        params,
        list(log.coeffs()[1..].iter().cloned()),
        list((1..=order).map(|n| sign(n as i64) * bernoulli_over_index(n) / int(factorial(n)))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::Expectation;
    use crate::rational::ratio;

    fn sides(r: &IdentityReport) -> (Rational, Rational) {
        match (&r.lhs, &r.rhs) {
            (Value::Rational(a), Value::Rational(b)) => (a.clone(), b.clone()),
            _ => panic!("scalar report expected"),
        }
    }

    #[test]
    fn closed_form_small() {
        for n in [1, 2, 25] {
            assert!(check_norlund_closed_form(n).unwrap().holds, "n={n}");
        }
        assert!(check_norlund_closed_form(0).is_err());
    }

    #[test]
    fn negative_order_examples() {
        let r = check_negative_order(2, 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, list([int(7), ratio(7, 6)]));
        let r = check_negative_order(1, 5).unwrap();
        assert_eq!(r.lhs, list([int(15), ratio(15, 6)]));
        assert!(r.holds);
        for n in 1..5 {
            let r = check_negative_order(n, 0).unwrap();
            assert_eq!(r.rhs, list([int(0), int(0)]));
        }
    }

    #[test]
    fn reciprocal_binomial_examples() {
        let r = check_reciprocal_binomial_sum(1).unwrap();
        assert_eq!(sides(&r), (ratio(1, 3), ratio(1, 3)));
        let r = check_reciprocal_binomial_sum(2).unwrap();
        assert_eq!(sides(&r), (int(0), int(0)));
        assert!(check_reciprocal_binomial_sum(40).unwrap().holds);
    }

    #[test]
    fn beta_integral_examples() {
        // ∫ u (u−1)^2 = 1/4 − 2/3 + 1/2
        assert_eq!(beta_integral(1, 2), ratio(1, 12));
        let r = check_beta_integrals(1).unwrap();
        assert!(r.holds);
        assert_eq!(r.rhs, list([ratio(1, 12), ratio(1, 12)]));
        assert!(r.note.as_deref().unwrap().contains("matches 0 of 1"));
        let r = check_beta_integrals(3).unwrap();
        assert!(r.holds);
        let Value::List(l) = &r.lhs else { panic!() };
        assert_eq!(l[0], ratio(-1, 120));
    }

    #[test]
    fn miki_examples() {
        let r = check_miki(4).unwrap();
        assert_eq!(sides(&r), (ratio(1, 144), ratio(1, 144)));
        assert!(check_miki(3).unwrap().holds);
        let r = check_miki(2).unwrap();
        assert!(!r.holds);
        assert_eq!(r.expected, Expectation::Fails);
        assert!(!r.is_unexpected());
        assert!(check_miki(60).unwrap().holds);
    }

    #[test]
    fn harmonic_eulerian_examples() {
        let r = check_harmonic_eulerian(3, SignMode::Corrected).unwrap();
        assert_eq!(sides(&r), (ratio(3, 4), ratio(3, 4)));
        let r = check_harmonic_eulerian(3, SignMode::AsPrinted).unwrap();
        assert_eq!(sides(&r), (ratio(-3, 4), ratio(3, 4)));
        assert!(r.is_unexpected());
        assert!(
            check_harmonic_eulerian(20, SignMode::Corrected)
                .unwrap()
                .holds
        );
        assert!(check_harmonic_eulerian(1, SignMode::Corrected).is_err());
    }

    #[test]
    fn first_derivative_sum_examples() {
        let r = check_first_derivative_sum(2).unwrap();
        assert_eq!(sides(&r), (ratio(-1, 12), ratio(-1, 12)));
        let r = check_first_derivative_sum(1).unwrap();
        assert_eq!(sides(&r), (ratio(1, 2), ratio(-1, 2)));
        assert!(!r.is_unexpected());
        assert!(check_first_derivative_sum(50).unwrap().holds);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            sides(&check_first_derivative(2).unwrap()),
            (ratio(-1, 12), ratio(-1, 12))
        );
        let r = check_first_derivative(1).unwrap();
        assert_eq!(sides(&r), (ratio(-1, 2), ratio(1, 2)));
        assert_eq!(r.expected, Expectation::Fails);
        let r = check_second_derivative(4).unwrap();
        assert_eq!(sides(&r), (ratio(1, 24), ratio(1, 24)));
        let r = check_second_derivative_harmonic(4).unwrap();
        assert_eq!(sides(&r), (ratio(1, 24), ratio(1, 24)));
        assert_eq!(sides(&check_second_derivative(5).unwrap()).0, ratio(-1, 24));
        let r = check_second_derivative(2).unwrap();
        assert_eq!(sides(&r), (ratio(1, 2), int(-1)));
        assert!(!r.is_unexpected());
        assert!(check_second_derivative(1).is_err());
    }

    #[test]
    fn dilcher_and_stirling_bernoulli_examples() {
        let r = check_dilcher(2, 2).unwrap();
        assert_eq!(sides(&r), (ratio(5, 6), ratio(5, 6)));
        assert!(check_dilcher(12, 5).unwrap().holds);
        assert!(check_dilcher(3, 4).is_err());
        let r = check_stirling_bernoulli(2, 1).unwrap();
        assert_eq!(sides(&r), (ratio(1, 3), ratio(1, 3)));
        let r = check_stirling_bernoulli(2, 2).unwrap();
        assert_eq!(sides(&r), (ratio(5, 3), ratio(5, 3)));
        assert!(check_stirling_bernoulli(15, 15).unwrap().holds);
        assert!(check_stirling_bernoulli(4, 0).is_err());
    }

    #[test]
    fn cauchy_eulerian_examples() {
        assert_eq!(sides(&check_cauchy_eulerian(1).unwrap()), (int(1), int(1)));
        assert_eq!(
            sides(&check_cauchy_eulerian(2).unwrap()),
            (ratio(5, 3), ratio(5, 3))
        );
        assert!(check_cauchy_eulerian(30).unwrap().holds);
    }

    #[test]
    fn log_series_examples() {
        let r = check_log_series(4).unwrap();
        assert!(r.holds);
        assert_eq!(
            r.lhs,
            list([ratio(1, 2), ratio(1, 24), int(0), ratio(-1, 2880)])
        );
    }

    #[test]
    fn gessel_stanley_examples() {
        let r = check_gessel_stanley(2, 2).unwrap();
        assert_eq!(r.lhs, list([int(0), int(1), int(7)]));
        assert!(r.holds);
        assert!(check_gessel_stanley(10, 20).unwrap().holds);
        assert!(check_carlitz(6, 10).holds);
    }

    #[test]
    fn descent_oracle_small() {
        assert!(check_descent_oracle(4, 8).unwrap().holds);
        assert!(matches!(
            check_descent_oracle(9, 8),
            Err(IdentityError::Enumeration(_))
        ));
    }
}
