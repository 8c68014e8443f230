//! ε-neighbourhood alternatives around a reference cycle.
//!
//! For a vertex `v` whose reference successor is `k`, the edge `(v, j)` is
//! admissible when
//!
//! ```text
//! c(v, j) <= c(v, k) + |c(v, k)| * eps_v
//! ```
//!
//! For `eps_v >= 0` the right-hand side equals
//! `max{c(v,k)(1 - eps_v), c(v,k)(1 + eps_v)}`; for negative `eps_v` it
//! tightens below the reference cost, and it is non-decreasing in `eps_v`
//! for every sign of `c(v, k)`. The reference edge itself is always
//! admissible.
//!
//! The admissible successor sets bound the reduced search space: its size
//! estimate is `A = prod a_v` and its degree is `sum log2(a_v) / log2(n - T)`
//! where `T` counts vertices lying on tubes.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::instance::CostMatrix;

/// Iteration cap for [`estimate_alternatives`].
pub const DEFAULT_MAX_ITER: usize = 10_000;
/// Step used by [`estimate_alternatives`].
pub const DEFAULT_EPS_STEP: f64 = 0.01;

/// Admissibility threshold for a reference edge of cost `reference`.
#[inline]
pub fn eps_threshold(reference: f64, eps: f64) -> f64 {
    if eps == f64::INFINITY {
        return f64::INFINITY;
    }
    reference + reference.abs() * eps
}

/// `marks[v - 1][j - 1]` is set when edge `(v, j)` is admissible.
pub type Marks = Vec<Vec<bool>>;

/// Marks every edge `(v, j)` satisfying the ε-inequality for `eps[v - 1]`.
pub fn admissible_edges(m: &CostMatrix, y: &Cycle, eps: &[f64]) -> Result<Marks> {
    y.check_size(m.n())?;
    let n = m.n();
    if eps.len() != n {
        return Err(Error::DimensionMismatch(format!("expected {n} eps values, got {}", eps.len())));
    }
    if let Some(k) = eps.iter().position(|e| e.is_nan() || *e < -1.0) {
        return Err(Error::InvalidParameters(format!("eps[{}] = {} is below -1", k + 1, eps[k])));
    }
    let succ = y.successors();
    Ok((1..=n)
        .map(|v| {
            let k = succ[v - 1];
            let limit = eps_threshold(m.get(v, k), eps[v - 1]);
            (1..=n).map(|j| j != v && (j == k || m.get(v, j) <= limit)).collect()
        })
        .collect())
}

/// Size estimate `A = prod max(1, a_v)` and degree
/// `p = sum log2(a_v) / log2(n)` of the space spanned by `marks`.
pub fn research_space_size(marks: &Marks) -> (BigUint, f64) {
    let n = marks.len();
    let counts: Vec<usize> = marks.iter().map(|r| r.iter().filter(|&&b| b).count().max(1)).collect();
    let a = counts.iter().fold(BigUint::one(), |acc, &c| acc * BigUint::from(c));
    let logs: f64 = counts.iter().map(|&c| (c as f64).log2()).sum();
    let p = if n >= 2 { logs / (n as f64).log2() } else { 0.0 };
    (a, p)
}

/// Admissible successors of every vertex around a reference cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct Alternatives {
    reference: Cycle,
    /// Ascending admissible successors of vertex `v` at index `v - 1`.
    sets: Vec<Vec<usize>>,
    eps: Vec<f64>,
    converged: Vec<bool>,
}

impl Alternatives {
    /// Alternatives for a fixed ε per vertex.
    pub fn from_eps(m: &CostMatrix, y: &Cycle, eps: &[f64]) -> Result<Self> {
        let marks = admissible_edges(m, y, eps)?;
        Ok(Self::from_marks(y.clone(), &marks, eps.to_vec()))
    }

    fn from_marks(reference: Cycle, marks: &Marks, eps: Vec<f64>) -> Self {
        let sets = marks
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j + 1).collect())
            .collect();
        let converged = vec![true; eps.len()];
        Self { reference, sets, eps, converged }
    }

    /// Every edge admissible: the unreduced space.
    pub fn full(reference: &Cycle) -> Self {
        let n = reference.n();
        let sets = (1..=n).map(|v| (1..=n).filter(|&j| j != v).collect()).collect();
        Self { reference: reference.clone(), sets, eps: vec![f64::INFINITY; n], converged: vec![true; n] }
    }

    /// Only the reference edges: the space holds the reference alone.
    pub fn reference_only(reference: &Cycle) -> Self {
        let n = reference.n();
        let sets = reference.successors().into_iter().map(|k| vec![k]).collect();
        Self { reference: reference.clone(), sets, eps: vec![-1.0; n], converged: vec![true; n] }
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn reference(&self) -> &Cycle {
        &self.reference
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.sets[v - 1]
    }

    pub fn eps(&self) -> &[f64] {
        &self.eps
    }

    /// `false` for vertices whose estimation hit the iteration cap.
    pub fn converged(&self) -> &[bool] {
        &self.converged
    }

    /// `a_v = max(1, |set_v|)` per vertex.
    pub fn counts(&self) -> Vec<usize> {
        self.sets.iter().map(|s| s.len().max(1)).collect()
    }

    pub fn marks(&self) -> Marks {
        let n = self.n();
        self.sets
            .iter()
            .map(|s| {
                let mut row = vec![false; n];
                for &j in s {
                    row[j - 1] = true;
                }
                row
            })
            .collect()
    }

    /// Raises every ε to at least `floor` and recomputes the sets.
    pub fn widened(&self, m: &CostMatrix, floor: f64) -> Result<Self> {
        let eps: Vec<f64> = self.eps.iter().map(|&e| e.max(floor)).collect();
        let mut out = Self::from_eps(m, &self.reference, &eps)?;
        out.converged = self.converged.clone();
        Ok(out)
    }
}

/// Per-vertex ε search starting at `-1` (see [`estimate_alternatives_from`]).
pub fn estimate_alternatives(m: &CostMatrix, y: &Cycle, step: f64, max_iter: usize) -> Result<Alternatives> {
    estimate_alternatives_from(m, y, -1.0, step, max_iter)
}

/// For each vertex, raises ε from `start` in increments of `step` until the
/// admissible set holds at least two successors (or every possible one).
///
/// A vertex that does not get there within `max_iter` steps keeps only its
/// reference successor and is flagged in [`Alternatives::converged`].
pub fn estimate_alternatives_from(
    m: &CostMatrix,
    y: &Cycle,
    start: f64,
    step: f64,
    max_iter: usize,
) -> Result<Alternatives> {
    y.check_size(m.n())?;
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidParameters(format!("step must be positive, got {step}")));
    }
    if start.is_nan() || start < -1.0 {
        return Err(Error::InvalidParameters(format!("start must be at least -1, got {start}")));
    }
    let n = m.n();
    let succ = y.successors();
    let mut sets = Vec::with_capacity(n);
    let mut eps = Vec::with_capacity(n);
    let mut converged = Vec::with_capacity(n);
    for v in 1..=n {
        let k = succ[v - 1];
        let reference = m.get(v, k);
        let admissible = |e: f64| -> Vec<usize> {
            let limit = eps_threshold(reference, e);
            (1..=n).filter(|&j| j != v && (j == k || m.get(v, j) <= limit)).collect()
        };
        let mut found = None;
        for it in 0..=max_iter {
            // multiply rather than accumulate to avoid drift
            let e = start + it as f64 * step;
            let set = admissible(e);
            if set.len() > 1 || set.len() == n - 1 {
                found = Some((set, e));
                break;
            }
        }
        match found {
            Some((set, e)) => {
                sets.push(set);
                eps.push(e);
                converged.push(true);
            }
            None => {
                sets.push(vec![k]);
                eps.push(start + max_iter as f64 * step);
                converged.push(false);
            }
        }
    }
    Ok(Alternatives { reference: y.clone(), sets, eps, converged })
}

fn degree_denominator(n: usize, tubes: usize) -> Result<f64> {
    if n < tubes + 2 {
        return Err(Error::DegenerateDenominator { n, tubes });
    }
    Ok(((n - tubes) as f64).log2())
}

fn log_sum(a: &[usize]) -> f64 {
    a.iter().map(|&x| (x.max(1) as f64).log2()).sum()
}

/// `sum log2(a_i) / log2(n - T)`. Tube vertices should enter as `a_i = 1`.
pub fn reducibility_degree(a: &[usize], tubes: usize, n: usize) -> Result<f64> {
    Ok(log_sum(a) / degree_denominator(n, tubes)?)
}

/// Largest per-cloud `sum log2(a_i)` over `log2(n - T)`.
pub fn parallel_degree(clouds: &[Vec<usize>], tubes: usize, n: usize) -> Result<f64> {
    if clouds.is_empty() {
        return Err(Error::InvalidParameters("at least one cloud is required".into()));
    }
    let denom = degree_denominator(n, tubes)?;
    let worst = clouds.iter().map(|c| log_sum(c)).fold(0.0, f64::max);
    Ok(worst / denom)
}

/// Maximal runs (at least two vertices long) of consecutive reference-cycle
/// vertices with fewer than three admissible successors. Returns the number
/// of vertices on tubes and the runs in reference order.
pub fn detect_tubes(alts: &Alternatives) -> (usize, Vec<Vec<usize>>) {
    let order = alts.reference.open();
    let n = order.len();
    let narrow: Vec<bool> = order.iter().map(|&v| alts.successors(v).len() < 3).collect();
    if narrow.iter().all(|&b| b) {
        return (n, vec![order.to_vec()]);
    }
    // start scanning just after a wide vertex so no run wraps around
    let wide = narrow.iter().position(|&b| !b).expect("some vertex is wide");
    let mut segments = Vec::new();
    let mut run = Vec::new();
    for k in 1..=n {
        let idx = (wide + k) % n;
        if narrow[idx] {
            run.push(order[idx]);
        } else if !run.is_empty() {
            segments.push(std::mem::take(&mut run));
        }
    }
    if !run.is_empty() {
        segments.push(run);
    }
    segments.retain(|s| s.len() >= 2);
    (segments.iter().map(Vec::len).sum(), segments)
}

fn biguint_as_string<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn eps_values<S: Serializer>(v: &[f64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for &e in v {
        if e.is_finite() {
            seq.serialize_element(&e)?;
        } else {
            seq.serialize_element(&crate::numfmt::fmt_g17(e))?;
        }
    }
    seq.end()
}

/// Summary of a reduced search space.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionReport {
    /// `prod a_i`, as a decimal string in JSON.
    #[serde(rename = "A", serialize_with = "biguint_as_string")]
    pub space_size: BigUint,
    /// `sum log2(a_i) / log2(n)`.
    pub p: f64,
    #[serde(rename = "a")]
    pub alternatives: Vec<usize>,
    /// Per-vertex ε; infinite values appear as the string `"inf"` in JSON.
    #[serde(serialize_with = "eps_values")]
    pub eps: Vec<f64>,
    #[serde(rename = "T")]
    pub tube_vertices: usize,
    #[serde(rename = "tubes")]
    pub tube_segments: Vec<Vec<usize>>,
    /// Degree with tube vertices counted as single-alternative and the
    /// denominator `log2(n - T)`; absent when `n - T < 2`.
    pub degree: Option<f64>,
}

pub fn reduction_report(alts: &Alternatives) -> ReductionReport {
    let (space_size, p) = research_space_size(&alts.marks());
    let alternatives = alts.counts();
    let (tube_vertices, tube_segments) = detect_tubes(alts);
    let mut effective = alternatives.clone();
    for &v in tube_segments.iter().flatten() {
        effective[v - 1] = 1;
    }
    let degree = reducibility_degree(&effective, tube_vertices, alts.n()).ok();
    ReductionReport {
        space_size,
        p,
        alternatives,
        eps: alts.eps.clone(),
        tube_vertices,
        tube_segments,
        degree,
    }
}
