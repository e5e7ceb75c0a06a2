//! The scalar number families: Bernoulli, Stirling (both kinds), Cauchy
//! numbers of the second kind, harmonic numbers, binomials, factorials and
//! rising factorials.
//!
//! Every family is memoized prefix-by-prefix (or row-by-row for triangles) in
//! process-wide caches. Out-of-range triangle indices return zero so that sums
//! can run over their natural ranges.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cache::PrefixCache;
use crate::poly::Polynomial;
use crate::rational::{int, Rational};
use crate::series::Series;

static FACTORIALS: PrefixCache<BigInt> = PrefixCache::new();
static BERNOULLI: PrefixCache<Rational> = PrefixCache::new();
static CAUCHY2: PrefixCache<Rational> = PrefixCache::new();
static HARMONIC: PrefixCache<Rational> = PrefixCache::new();
static STIRLING2: PrefixCache<Vec<BigInt>> = PrefixCache::new();
static STIRLING1: PrefixCache<Vec<BigInt>> = PrefixCache::new();
static PASCAL: PrefixCache<Vec<BigInt>> = PrefixCache::new();
static RISING: PrefixCache<Polynomial> = PrefixCache::new();

/// Pascal rows beyond this are computed multiplicatively instead of cached.
const PASCAL_CACHE_ROWS: i64 = 512;

pub fn factorial(n: usize) -> BigInt {
    FACTORIALS.get(n, |t, n| {
        if t.is_empty() {
            t.push(BigInt::one());
        }
        for i in t.len()..=n {
            let next = &t[i - 1] * i;
            t.push(next);
        }
    })
}

/// Bernoulli number `B_n` (with `B_1 = −1/2`), read off as the EGF
/// coefficient of `x/(e^x − 1)`.
pub fn bernoulli(n: usize) -> Rational {
    BERNOULLI.get(n, |t, n| {
        // Grow geometrically; the inversion recomputes the whole prefix.
        let order = n.max(2 * t.len()).max(16);
        let egf = Series::bernoulli_egf(order);
        *t = (0..=order)
            .map(|k| egf.egf_coefficient(k).expect("within order"))
            .collect();
    })
}

/// Cauchy number of the second kind: EGF coefficients of `−x/((1−x)·log(1−x))`.
pub fn cauchy2(n: usize) -> Rational {
    CAUCHY2.get(n, |t, n| {
        let order = n.max(2 * t.len()).max(16);
        let egf = cauchy2_egf(order);
        *t = (0..=order)
            .map(|k| egf.egf_coefficient(k).expect("within order"))
            .collect();
    })
}

/// `−x/((1−x)·log(1−x))` through `x^order`.
pub fn cauchy2_egf(order: usize) -> Series<Rational> {
    // log(1-x) = -x·(1 + x/2 + ...); compute one order higher and divide by -x.
    let log1mx = Series::new(vec![int(1), int(-1)], order + 1)
        .log()
        .expect("constant term is 1");
    let neg_log_over_x = Series::from_fn(order, |k| -&log1mx.coeffs()[k + 1]);
    let one_minus_x = Series::new(vec![int(1), int(-1)], order);
    one_minus_x
        .mul(&neg_log_over_x)
        .inverse()
        .expect("constant term is 1")
}

/// `H_n = Σ_{i=1..n} 1/i`, with `H_0 = 0`.
pub fn harmonic(n: usize) -> Rational {
    HARMONIC.get(n, |t, n| {
        if t.is_empty() {
            t.push(Rational::zero());
        }
        for i in t.len()..=n {
            let next = &t[i - 1] + Rational::new(BigInt::one(), BigInt::from(i));
            t.push(next);
        }
    })
}

fn stirling2_row(n: usize) -> Vec<BigInt> {
    STIRLING2.get(n, |t, n| {
        if t.is_empty() {
            t.push(vec![BigInt::one()]);
        }
        for i in t.len()..=n {
            let prev = &t[i - 1];
            // S(i, m) = m·S(i−1, m) + S(i−1, m−1)
            let row = (0..=i)
                .map(|m| {
                    let stay = prev.get(m).map_or_else(BigInt::zero, |s| s * m);
                    let open = if m > 0 {
                        prev[m - 1].clone()
                    } else {
                        BigInt::zero()
                    };
                    stay + open
                })
                .collect();
            t.push(row);
        }
    })
}

/// Stirling number of the second kind `S(n, m)`; zero for `m > n`.
pub fn stirling2(n: usize, m: usize) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    stirling2_row(n)[m].clone()
}

fn stirling1_row(n: usize) -> Vec<BigInt> {
    STIRLING1.get(n, |t, n| {
        if t.is_empty() {
            t.push(vec![BigInt::one()]);
        }
        for i in t.len()..=n {
            let prev = &t[i - 1];
            // s(i, k) = s(i−1, k−1) − (i−1)·s(i−1, k)
            let row = (0..=i)
                .map(|k| {
                    let shift = if k > 0 {
                        prev[k - 1].clone()
                    } else {
                        BigInt::zero()
                    };
                    let stay = prev.get(k).map_or_else(BigInt::zero, |s| s * (i - 1));
                    shift - stay
                })
                .collect();
            t.push(row);
        }
    })
}

/// Signed Stirling number of the first kind `s(n, k)`, the coefficient of
/// `x^k` in the falling factorial `x(x−1)⋯(x−n+1)`; zero for `k > n`.
pub fn stirling1_signed(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling1_row(n)[k].clone()
}

/// `binomial(n, k)`, zero unless `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    if n >= PASCAL_CACHE_ROWS {
        let k = k.min(n - k);
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        return acc;
    }
    let row = PASCAL.get(n as usize, |t, n| {
        if t.is_empty() {
            t.push(vec![BigInt::one()]);
        }
        for i in t.len()..=n {
            let prev = &t[i - 1];
            let row = (0..=i)
                .map(|j| {
                    if j == 0 || j == i {
                        BigInt::one()
                    } else {
                        &prev[j - 1] + &prev[j]
                    }
                })
                .collect();
            t.push(row);
        }
    });
    row[k as usize].clone()
}

/// `(2n − 1)!! = 1·3·5⋯(2n − 1)`, the number of Stirling permutations of order `n`.
pub fn double_factorial_odd(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * (2 * i - 1))
}

/// `⟨z⟩_k = z(z+1)⋯(z+k−1)` as a polynomial in `z`.
pub fn rising_factorial_poly(k: usize) -> Polynomial {
    RISING.get(k, |t, k| {
        if t.is_empty() {
            t.push(Polynomial::one());
        }
        for i in t.len()..=k {
            let next = t[i - 1].mul_linear(&int((i - 1) as i64), &Rational::one());
            t.push(next);
        }
    })
}

/// `⟨a⟩_k = a(a+1)⋯(a+k−1)` evaluated directly.
pub fn rising_factorial_eval(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), ratio(-1, 2));
        assert_eq!(bernoulli(2), ratio(1, 6));
        assert_eq!(bernoulli(4), ratio(-1, 30));
        assert_eq!(bernoulli(7), int(0));
        assert_eq!(bernoulli(12), ratio(-691, 2730));
    }

    #[test]
    fn bernoulli_odd_indices_vanish() {
        for n in (3..=99).step_by(2) {
            assert!(bernoulli(n).is_zero(), "B_{n}");
        }
    }

    #[test]
    fn stirling2_values() {
        for n in 0..10 {
            assert_eq!(stirling2(n, n), BigInt::one());
        }
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(3, 0), BigInt::zero());
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(2, 5), BigInt::zero());
    }

    #[test]
    fn stirling1_values() {
        for n in 0..10 {
            assert_eq!(stirling1_signed(n, n), BigInt::one());
        }
        assert_eq!(stirling1_signed(3, 1), BigInt::from(2));
        assert_eq!(stirling1_signed(3, 2), BigInt::from(-3));
        assert_eq!(stirling1_signed(3, 0), BigInt::zero());
        assert_eq!(stirling1_signed(1, 4), BigInt::zero());
    }

    #[test]
    fn cauchy2_values() {
        assert_eq!(cauchy2(0), int(1));
        assert_eq!(cauchy2(1), ratio(1, 2));
        assert_eq!(cauchy2(2), ratio(5, 6));
        assert_eq!(cauchy2(3), ratio(9, 4));
        assert_eq!(cauchy2(4), ratio(251, 30));
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), int(0));
        assert_eq!(harmonic(1), int(1));
        assert_eq!(harmonic(3), ratio(11, 6));
        assert_eq!(harmonic(5), ratio(137, 60));
    }

    #[test]
    fn harmonic_differences() {
        for n in 1..=1000 {
            assert_eq!(harmonic(n) - harmonic(n - 1), ratio(1, n as i64));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, 0), BigInt::one());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(3, 4), BigInt::zero());
        // Cached and multiplicative paths agree across the threshold.
        let big = PASCAL_CACHE_ROWS + 3;
        assert_eq!(
            binomial(big, 5),
            binomial(big - 1, 4) + binomial(big - 1, 5)
        );
        assert_eq!(
            binomial(PASCAL_CACHE_ROWS, 7),
            binomial(PASCAL_CACHE_ROWS - 1, 6) + binomial(PASCAL_CACHE_ROWS - 1, 7)
        );
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial_odd(1), BigInt::one());
        assert_eq!(double_factorial_odd(3), BigInt::from(15));
        assert_eq!(double_factorial_odd(8), BigInt::from(2_027_025));
    }

    #[test]
    fn rising_factorials() {
        assert_eq!(rising_factorial_poly(0), Polynomial::one());
        assert_eq!(rising_factorial_poly(1), Polynomial::z());
        assert_eq!(
            rising_factorial_poly(3),
            Polynomial::from_coeffs(vec![int(0), int(2), int(3), int(1)])
        );
        assert_eq!(rising_factorial_eval(&int(-2), 3), int(0));
        for k in 0..8 {
            assert_eq!(rising_factorial_eval(&int(1), k), int(factorial(k)));
        }
        // ⟨−m⟩_k = (−1)^k m!/(m−k)! for m ≥ k
        for m in 0..8usize {
            for k in 0..=m {
                let expected =
                    crate::rational::sign(k as i64) * Rational::new(factorial(m), factorial(m - k));
                assert_eq!(rising_factorial_eval(&int(-(m as i64)), k), expected);
            }
        }
    }

    #[test]
    fn stirling_orthogonality() {
        for n in 0..=12 {
            for m in 0..=12 {
                let sum: BigInt = (0..=12)
                    .map(|k| stirling1_signed(n, k) * stirling2(k, m))
                    .sum();
                let expected = if n == m {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                assert_eq!(sum, expected, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn stirling2_reconstructs_powers() {
        for n in 0..=12usize {
            let mut falling = Polynomial::one();
            let mut total = Polynomial::zero();
            for m in 0..=n {
                total = &total + &falling.scale(&int(stirling2(n, m)));
                falling = falling.mul_linear(&int(-(m as i64)), &Rational::one());
            }
            let mut power = vec![Rational::zero(); n + 1];
            power[n] = Rational::one();
            assert_eq!(total, Polynomial::from_coeffs(power), "n={n}");
        }
    }
}
