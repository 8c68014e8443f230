//! Rank/unrank bijection between `1..=(n-1)!` and complete cycles.
//!
//! Cycles are anchored at vertex `n` and listed in descending lexicographic
//! order of their interior, so rank 1 is `(n, n-1, ..., 2, 1, n)` and rank
//! `(n-1)!` is `(n, 1, 2, ..., n-1, n)`. Ranks are arbitrary precision since
//! `(n-1)!` leaves 64 bits at `n = 22`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::cycle::Cycle;
use crate::error::{Error, Result};

/// Default upper bound on `n` for exhaustive scans.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 11;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `n!` in 64 bits; panics past `20!`.
pub fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k)).expect("factorial overflows u64")
}

/// 1-based position of a cycle in the descending enumeration of `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank {
    value: BigUint,
    n: usize,
}

impl Rank {
    pub fn new(value: BigUint, n: usize) -> Result<Self> {
        let max = factorial(n.saturating_sub(1));
        if n < 2 || value.is_zero() || value > max {
            return Err(Error::RankOutOfRange { rank: value.to_string(), max: max.to_string() });
        }
        Ok(Self { value, n })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// Builds the cycle from its factorial-base digits.
///
/// `digits[k]` (0-based) picks the next vertex among the remaining ones kept in
/// descending order; the final digit is 0 or 1 and orders the last two.
fn cycle_from_digits(n: usize, digits: &[usize]) -> Cycle {
    let mut remaining: Vec<usize> = (1..n).rev().collect();
    let mut v = Vec::with_capacity(n + 1);
    v.push(n);
    for &d in &digits[..n - 3] {
        v.push(remaining.remove(d));
    }
    if digits[n - 3] == 0 {
        v.extend([remaining[0], remaining[1]]);
    } else {
        v.extend([remaining[1], remaining[0]]);
    }
    v.push(n);
    Cycle::new(v).expect("digits describe a permutation")
}

/// The `j`-th cycle (1-based) of the descending enumeration on `n` vertices.
pub fn unrank(j: &BigUint, n: usize) -> Result<Cycle> {
    let rank = Rank::new(j.clone(), n)?;
    if n == 2 {
        return Ok(Cycle::descending(2));
    }
    let mut rest = &rank.value - BigUint::one();
    let mut digits = Vec::with_capacity(n - 2);
    for k in 1..=n - 3 {
        let d = factorial(n - k - 1);
        let r = &rest / &d;
        rest %= &d;
        digits.push(r.to_usize().expect("digit below n"));
    }
    digits.push(rest.to_usize().expect("final digit is 0 or 1"));
    Ok(cycle_from_digits(n, &digits))
}

/// [`unrank`] with a 64-bit rank. Panics when `j` is out of range.
pub fn unrank_u64(j: u64, n: usize) -> Cycle {
    assert!(n >= 2 && j >= 1 && j <= factorial_u64(n - 1), "rank {j} out of range for n = {n}");
    if n == 2 {
        return Cycle::descending(2);
    }
    let mut rest = j - 1;
    let mut digits = Vec::with_capacity(n - 2);
    for k in 1..=n - 3 {
        let d = factorial_u64(n - k - 1);
        digits.push((rest / d) as usize);
        rest %= d;
    }
    digits.push(rest as usize);
    cycle_from_digits(n, &digits)
}

/// Inverse of [`unrank`]. The cycle must start at vertex `n`.
pub fn rank(y: &Cycle) -> Result<Rank> {
    let n = y.n();
    if y.first() != n {
        return Err(Error::NotAnchoredAtN { n });
    }
    let mut remaining: Vec<usize> = (1..n).rev().collect();
    let mut value = BigUint::zero();
    // digits of positions 2..n-1 in factorial base; the last vertex is forced
    for (k, &v) in y.open()[1..].iter().enumerate().take(n.saturating_sub(2)) {
        let pos = remaining.iter().position(|&r| r == v).expect("valid cycle");
        remaining.remove(pos);
        value += factorial(n - 2 - k) * BigUint::from(pos);
    }
    Rank::new(value + BigUint::one(), n)
}

/// Steps the interior to the previous permutation in lexicographic order.
fn prev_permutation(a: &mut [usize]) -> bool {
    let len = a.len();
    if len < 2 {
        return false;
    }
    let mut i = len - 1;
    while i > 0 && a[i - 1] <= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = len - 1;
    while a[j] >= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// In-place walker over consecutive ranks. The closed vertex sequence is
/// updated by successor steps rather than unranking each rank.
#[derive(Debug, Clone)]
pub struct CycleWalker {
    closed: Vec<usize>,
    rank: u64,
}

impl CycleWalker {
    /// Positioned at rank `start` (1-based).
    pub fn at(n: usize, start: u64) -> Self {
        Self { closed: unrank_u64(start, n).vertices().to_vec(), rank: start }
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    /// The current cycle as a closed vertex sequence.
    pub fn vertices(&self) -> &[usize] {
        &self.closed
    }

    /// Moves to the next rank; returns `false` after the last cycle.
    pub fn advance(&mut self) -> bool {
        let n = self.closed.len() - 1;
        if prev_permutation(&mut self.closed[1..n]) {
            self.rank += 1;
            true
        } else {
            false
        }
    }
}

/// Iterator over a contiguous rank range.
#[derive(Debug, Clone)]
pub struct CycleIter {
    walker: Option<CycleWalker>,
    remaining: u128,
    started: bool,
}

impl Iterator for CycleIter {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        if self.remaining == 0 {
            return None;
        }
        let w = self.walker.as_mut()?;
        if self.started && !w.advance() {
            self.remaining = 0;
            return None;
        }
        self.started = true;
        self.remaining -= 1;
        Some(Cycle::new(w.vertices().to_vec()).expect("walker yields cycles"))
    }
}

/// All `(n-1)!` cycles in ascending rank order.
pub fn enumerate_all(n: usize) -> CycleIter {
    let total = factorial(n.saturating_sub(1));
    enumerate_range(n, &BigUint::one(), &total).expect("full range is valid")
}

/// Cycles with ranks in `lo..=hi`. An empty range (`lo > hi`) yields nothing.
pub fn enumerate_range(n: usize, lo: &BigUint, hi: &BigUint) -> Result<CycleIter> {
    Rank::new(lo.clone(), n)?;
    Rank::new(hi.clone(), n)?;
    if lo > hi {
        return Ok(CycleIter { walker: None, remaining: 0, started: false });
    }
    let start = lo.to_u64().ok_or_else(|| Error::RankOutOfRange {
        rank: lo.to_string(),
        max: u64::MAX.to_string(),
    })?;
    let count = (hi - lo + BigUint::one()).to_u128().unwrap_or(u128::MAX);
    Ok(CycleIter { walker: Some(CycleWalker::at(n, start)), remaining: count, started: false })
}

/// Number of directed edges the two cycles have in common.
pub fn shared_edges(a: &Cycle, b: &Cycle) -> Result<usize> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    let succ = a.successors();
    Ok(shared_with_successors(&succ, b.vertices()))
}

#[inline]
pub(crate) fn shared_with_successors(succ: &[usize], closed: &[usize]) -> usize {
    closed.windows(2).filter(|w| succ[w[0] - 1] == w[1]).count()
}

/// Counts, over every cycle, how many directed edges it shares with
/// `reference`. Entry `k` of the result is the number of cycles sharing
/// exactly `k` edges.
pub fn coincidence_histogram(reference: &Cycle, cap: usize) -> Result<Vec<u64>> {
    let n = reference.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let succ = reference.successors();
    let mut hist = vec![0u64; n + 1];
    let mut w = CycleWalker::at(n, 1);
    loop {
        hist[shared_with_successors(&succ, w.vertices())] += 1;
        if !w.advance() {
            break;
        }
    }
    Ok(hist)
}
