//! Second-order Eulerian numbers `C(n, k)` and Stirling permutations.
//!
//! The triangle comes from the recurrence
//! `C(n, k) = k·C(n−1, k) + (2n − k)·C(n−1, k−1)` with `C(1, 1) = 1`.
//! Independently, [`descent_histogram`] enumerates every Stirling permutation
//! of order `n` and counts descents, which must reproduce the same row.
//!
//! Descents use a trailing sentinel: position `i` of `a_1…a_{2n}` is a descent
//! when `a_i > a_{i+1}`, with `a_{2n+1} = 0`, so the last position always
//! counts. This is the only convention giving `C(1, 1) = 1, C(1, 0) = 0`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::cache::PrefixCache;

/// Default limit on the order accepted by the enumerator.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;
/// Largest cap that may be configured at all; `(2·10 − 1)!!` is already ~6.5e8 words.
pub const MAX_ENUMERATION_CAP: usize = 10;

static ROWS: PrefixCache<Vec<BigInt>> = PrefixCache::new();

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EulerianError {
    #[error("the second-order Eulerian triangle starts at n = 1")]
    ZeroOrder,
    #[error("order {n} exceeds the enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("enumeration cap {0} exceeds the hard maximum {MAX_ENUMERATION_CAP}")]
    CapTooLarge(usize),
    #[error("not a Stirling permutation: {0}")]
    InvalidWord(String),
}

/// Row `n` of the triangle: `C(n, 1), …, C(n, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianRow {
    n: usize,
    entries: Vec<BigInt>,
}

impl EulerianRow {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entries for `k = 1..=n`.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `C(n, k)`, zero outside `1..=n`.
    pub fn get(&self, k: i64) -> BigInt {
        if k < 1 || k as usize > self.n {
            return BigInt::zero();
        }
        self.entries[k as usize - 1].clone()
    }

    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }
}

impl fmt::Display for EulerianRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Row `n ≥ 1` of the second-order Eulerian triangle by recurrence.
pub fn eulerian_row(n: usize) -> Result<EulerianRow, EulerianError> {
    if n == 0 {
        return Err(EulerianError::ZeroOrder);
    }
    // Cache slot i holds row i + 1.
    let entries = ROWS.get(n - 1, |t, idx| {
        if t.is_empty() {
            t.push(vec![BigInt::from(1)]);
        }
        for i in t.len()..=idx {
            let order = i + 1;
            let prev = &t[i - 1];
            let at = |k: usize| -> BigInt {
                if k == 0 || k > prev.len() {
                    BigInt::zero()
                } else {
                    prev[k - 1].clone()
                }
            };
            let row = (1..=order)
                .map(|k| at(k) * k + at(k - 1) * (2 * order - k))
                .collect();
            t.push(row);
        }
    });
    Ok(EulerianRow { n, entries })
}

/// A word over `{1,1,2,2,…,n,n}` in which everything strictly between the two
/// copies of `m` is larger than `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StirlingPermutation {
    word: Vec<u8>,
}

impl StirlingPermutation {
    pub fn new(word: Vec<u8>) -> Result<Self, EulerianError> {
        if !is_stirling_permutation(&word) {
            return Err(EulerianError::InvalidWord(format!("{word:?}")));
        }
        Ok(Self { word })
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn order(&self) -> usize {
        self.word.len() / 2
    }

    /// Positions `i` with `a_i > a_{i+1}`, counting the final position
    /// against the sentinel 0.
    pub fn descents(&self) -> usize {
        count_descents(&self.word)
    }
}

impl fmt::Display for StirlingPermutation {
    /// Digits run together for orders below 10, space-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.order() >= 10 { " " } else { "" };
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn count_descents(word: &[u8]) -> usize {
    word.iter()
        .zip(word.iter().skip(1).chain(std::iter::once(&0)))
        .filter(|(a, b)| a > b)
        .count()
}

/// Checks multiplicities and the "larger in between" condition.
pub fn is_stirling_permutation(word: &[u8]) -> bool {
    if !word.len().is_multiple_of(2) {
        return false;
    }
    let n = word.len() / 2;
    let mut first = vec![None; n + 1];
    let mut seen = vec![0u8; n + 1];
    for (i, &v) in word.iter().enumerate() {
        let v = v as usize;
        if v == 0 || v > n {
            return false;
        }
        seen[v] += 1;
        match (seen[v], first[v]) {
            (1, _) => first[v] = Some(i),
            (2, Some(start)) => {
                if word[start + 1..i].iter().any(|&w| w as usize <= v) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    seen[1..].iter().all(|&c| c == 2)
}

/// Iterator over all Stirling permutations of a given order.
///
/// Every permutation of order `n` arises exactly once by inserting the
/// adjacent pair `n n` into one of the `2n − 1` gaps of a permutation of order
/// `n − 1`, so the permutations correspond to gap choices
/// `(g_2, …, g_n)` with `0 ≤ g_m ≤ 2m − 2`. The iterator runs an odometer over
/// those choices (last order fastest, gaps right to left) and rebuilds only
/// the levels below the digit that changed.
pub struct StirlingPermutations {
    n: usize,
    // gaps[m] is the insertion gap for value m (index 0 and 1 unused).
    gaps: Vec<usize>,
    // levels[m] is the current permutation of order m.
    levels: Vec<Vec<u8>>,
    done: bool,
}

impl StirlingPermutations {
    fn new(n: usize) -> Self {
        let gaps: Vec<usize> = (0..=n)
            .map(|m| if m >= 2 { 2 * m - 2 } else { 0 })
            .collect();
        let mut levels = vec![Vec::new(), vec![1, 1]];
        levels.truncate(n + 1);
        let mut it = Self {
            n,
            gaps,
            levels,
            done: false,
        };
        it.rebuild_from(2);
        it
    }

    fn rebuild_from(&mut self, start: usize) {
        self.levels.truncate(start);
        for m in start..=self.n {
            let prev = &self.levels[m - 1];
            let g = self.gaps[m];
            let mut word = Vec::with_capacity(2 * m);
            word.extend_from_slice(&prev[..g]);
            word.extend_from_slice(&[m as u8, m as u8]);
            word.extend_from_slice(&prev[g..]);
            self.levels.push(word);
        }
    }
}

impl Iterator for StirlingPermutations {
    type Item = StirlingPermutation;

    fn next(&mut self) -> Option<StirlingPermutation> {
        if self.done {
            return None;
        }
        let current = StirlingPermutation {
            word: self.levels[self.n].clone(),
        };
        // Advance the odometer.
        let mut m = self.n;
        loop {
            if m < 2 {
                self.done = true;
                break;
            }
            if self.gaps[m] > 0 {
                self.gaps[m] -= 1;
                self.rebuild_from(m);
                break;
            }
            self.gaps[m] = 2 * m - 2;
            m -= 1;
        }
        Some(current)
    }
}

fn check_cap(n: usize, cap: usize) -> Result<(), EulerianError> {
    if cap > MAX_ENUMERATION_CAP {
        return Err(EulerianError::CapTooLarge(cap));
    }
    if n == 0 {
        return Err(EulerianError::ZeroOrder);
    }
    if n > cap {
        return Err(EulerianError::AboveCap { n, cap });
    }
    Ok(())
}

/// All Stirling permutations of order `n`, refusing orders above `cap`.
pub fn enumerate_stirling_perms(
    n: usize,
    cap: usize,
) -> Result<StirlingPermutations, EulerianError> {
    check_cap(n, cap)?;
    Ok(StirlingPermutations::new(n))
}

/// Histogram of descent counts over every Stirling permutation of order `n`,
/// indexed `k = 1..=n`.
pub fn descent_histogram(n: usize, cap: usize) -> Result<EulerianRow, EulerianError> {
    check_cap(n, cap)?;
    let mut counts = vec![0u64; n + 1];
    for p in StirlingPermutations::new(n) {
        counts[count_descents(&p.word)] += 1;
    }
    debug_assert_eq!(counts[0], 0);
    Ok(EulerianRow {
        n,
        entries: counts[1..].iter().map(|&c| BigInt::from(c)).collect(),
    })
}
