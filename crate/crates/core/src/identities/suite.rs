use std::thread;

use super::checks::*;
use super::{IdentityError, IdentityId, IdentityReport, SignMode};
use crate::eulerian::MAX_ENUMERATION_CAP;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest `n` for every check (also `m_max` and the log-series order).
    pub n_max: usize,
    /// Largest order for which Stirling permutations are enumerated.
    pub enumeration_cap: usize,
    /// Identities to run; empty means all of them.
    pub filter: Vec<IdentityId>,
    pub sign_mode: SignMode,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            n_max: 20,
            enumeration_cap: 7,
            filter: Vec::new(),
            sign_mode: SignMode::Corrected,
        }
    }
}

impl SuiteConfig {
    fn validate(&self) -> Result<(), IdentityError> {
        if self.n_max < 1 {
            return Err(IdentityError::Config("n_max must be at least 1".into()));
        }
        if self.enumeration_cap > MAX_ENUMERATION_CAP {
            return Err(IdentityError::Config(format!(
                "enumeration cap {} exceeds {MAX_ENUMERATION_CAP}",
                self.enumeration_cap
            )));
        }
        Ok(())
    }

    fn selected(&self) -> Vec<IdentityId> {
        IdentityId::ALL
            .into_iter()
            .filter(|id| self.filter.is_empty() || self.filter.contains(id))
            .collect()
    }
}

/// All reports for one identity over its range under `config`.
///
/// Ranges start where each formula is defined, so parameters where a printed
/// formula is known to fail (Miki at `n = 2`, the derivative formulas at
/// `n = 1, 2`) are included as documented exceptions.
fn reports_for(id: IdentityId, config: &SuiteConfig) -> Result<Vec<IdentityReport>, IdentityError> {
    let n_max = config.n_max;
    let each = |range: std::ops::RangeInclusive<usize>,
                f: &dyn Fn(usize) -> Result<IdentityReport, IdentityError>| {
        range.map(f).collect::<Result<Vec<_>, _>>()
    };
    match id {
        IdentityId::DescentOracle => each(1..=config.enumeration_cap, &|n| {
            check_descent_oracle(n, config.enumeration_cap)
        }),
        IdentityId::NorlundClosedForm => each(1..=n_max, &check_norlund_closed_form),
        IdentityId::NorlundInterpolation => {
            each(0..=n_max, &|n| Ok(check_norlund_interpolation(n)))
        }
        IdentityId::NegativeOrder => {
            let mut out = Vec::new();
            for n in 1..=n_max {
                for m in 0..=n_max {
                    out.push(check_negative_order(n, m)?);
                }
            }
            Ok(out)
        }
        IdentityId::Carlitz => each(0..=n_max, &|n| Ok(check_carlitz(n, n_max))),
        IdentityId::GesselStanley => each(1..=n_max, &|n| check_gessel_stanley(n, n_max)),
        IdentityId::ReciprocalBinomial => each(1..=n_max, &check_reciprocal_binomial_sum),
        IdentityId::BetaIntegral => each(1..=n_max, &check_beta_integrals),
        IdentityId::Miki => each(2..=n_max, &check_miki),
        IdentityId::HarmonicEulerian => {
            let mut out = each(3..=n_max, &|n| check_harmonic_eulerian(n, config.sign_mode))?;
            if config.sign_mode == SignMode::Corrected && n_max >= 3 {
                // Lock in that the printed sign is wrong.
                out.push(
                    check_harmonic_eulerian(3, SignMode::AsPrinted)?
                        .expect_failure("printed sign of the harmonic difference gives lhs = -rhs"),
                );
            }
            Ok(out)
        }
        IdentityId::FirstDerivativeSum => each(1..=n_max, &check_first_derivative_sum),
        IdentityId::FirstDerivative => each(1..=n_max, &check_first_derivative),
        IdentityId::SecondDerivative => each(2..=n_max, &check_second_derivative),
        IdentityId::SecondDerivativeHarmonic => each(2..=n_max, &check_second_derivative_harmonic),
        IdentityId::Dilcher | IdentityId::StirlingBernoulli => {
            let check = if id == IdentityId::Dilcher {
                check_dilcher
            } else {
                check_stirling_bernoulli
            };
            let mut out = Vec::new();
            for n in 1..=n_max {
                for big_n in 1..=n {
                    out.push(check(n, big_n)?);
                }
            }
            Ok(out)
        }
        IdentityId::CauchyEulerian => each(1..=n_max, &check_cauchy_eulerian),
        IdentityId::LogSeries => Ok(vec![check_log_series(n_max)?]),
    }
}

/// Runs every selected identity over its range up to `config.n_max`.
///
/// Identities run on separate threads where available; the result is always ordered by
/// [`IdentityId::ALL`] and then by parameters, so output is deterministic.
/// Individual failures are reports, not errors.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<IdentityReport>, IdentityError> {
    config.validate()?;
    let selected = config.selected();
    // wasm32-unknown-unknown has no threads.
    let batches: Vec<Result<Vec<IdentityReport>, IdentityError>> =
        if cfg!(target_arch = "wasm32") || selected.len() < 2 {
            selected.iter().map(|&id| reports_for(id, config)).collect()
        } else {
            thread::scope(|scope| {
                let handles: Vec<_> = selected
                    .iter()
                    .map(|&id| scope.spawn(move || reports_for(id, config)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("identity check panicked"))
                    .collect()
            })
        };
    let mut reports = Vec::new();
    for batch in batches {
        reports.extend(batch?);
    }
    Ok(reports)
}
