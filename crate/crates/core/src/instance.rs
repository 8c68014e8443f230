//! Cost matrices for general assignment (GAP) and TSP instances.
//!
//! A [`CostMatrix`] holds the edge costs `c(i, j)` of the complete directed
//! graph on vertices `1..=n`. The diagonal is always `+inf` and every
//! off-diagonal entry is finite. Cycle costs are plain sums of edge costs.
//!
//! This module also covers instance generation (seeded random, Euclidean,
//! unique-cost), the edge identification function, the two normalizations
//! used for rendering and relabeling of vertices.

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::numfmt::fmt_g17;
use crate::sum::exact_sum;

/// Largest `n` accepted by [`gen_unique_cost`].
pub const UNIQUE_COST_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    ArbitraryGap,
    SymmetricTsp,
    Euclidean2d,
}

/// Planar point coordinates, one per vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointSet {
    points: Vec<(f64, f64)>,
}

impl PointSet {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidPoints(format!(
                "need at least 2 points, got {}",
                points.len()
            )));
        }
        if let Some(k) = points.iter().position(|(x, y)| !x.is_finite() || !y.is_finite()) {
            return Err(Error::InvalidPoints(format!("point {} is not finite", k + 1)));
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }
}

/// Edge costs of a complete directed graph on `n` vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix {
    n: usize,
    entries: Vec<f64>,
    kind: Kind,
    points: Option<PointSet>,
    duplicate_points: bool,
}

impl CostMatrix {
    /// Validates and wraps a square table of costs.
    ///
    /// The diagonal must be `+inf`, off-diagonal entries must be finite, and
    /// [`Kind::SymmetricTsp`] additionally requires symmetric nonnegative costs.
    pub fn new(n: usize, entries: Vec<Vec<f64>>, kind: Kind) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionMismatch(format!("n must be at least 2, got {n}")));
        }
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("expected a {n}x{n} table")));
        }
        let flat: Vec<f64> = entries.into_iter().flatten().collect();
        let m = Self { n, entries: flat, kind, points: None, duplicate_points: false };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 1..=n {
            if self.get(i, i) != f64::INFINITY {
                return Err(Error::DiagonalNotInfinite(i));
            }
            for j in 1..=n {
                if i != j && !self.get(i, j).is_finite() {
                    return Err(Error::NonFiniteEntry { i, j });
                }
            }
        }
        if self.kind == Kind::SymmetricTsp {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if self.get(i, j) != self.get(j, i) {
                        return Err(Error::SymmetryViolation { i, j });
                    }
                    if self.get(i, j) < 0.0 {
                        return Err(Error::NegativeCost { i, j });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Source points for [`Kind::Euclidean2d`] matrices.
    pub fn points(&self) -> Option<&PointSet> {
        self.points.as_ref()
    }

    /// Set when two source points coincide, producing a zero-cost edge.
    pub fn has_duplicate_points(&self) -> bool {
        self.duplicate_points
    }

    /// Cost of edge `(i, j)`, 1-based.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Row `i` (1-based) as a slice of length `n`.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[(i - 1) * self.n..i * self.n]
    }

    /// All entries, row-major.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    /// Minimum of each row (excluding the diagonal).
    pub fn row_minima(&self) -> Vec<f64> {
        (1..=self.n)
            .map(|i| self.row(i).iter().copied().fold(f64::INFINITY, f64::min))
            .collect()
    }
}

/// Euclidean distance matrix of a point set.
pub fn from_points(points: &PointSet) -> CostMatrix {
    let n = points.len();
    let p = points.points();
    let mut entries = vec![f64::INFINITY; n * n];
    let mut duplicate = false;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let d = (p[i].0 - p[j].0).hypot(p[i].1 - p[j].1);
                duplicate |= d == 0.0;
                entries[i * n + j] = d;
            }
        }
    }
    CostMatrix {
        n,
        entries,
        kind: Kind::Euclidean2d,
        points: Some(points.clone()),
        duplicate_points: duplicate,
    }
}

fn check_range(lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidParameters(format!("need finite lo < hi, got [{lo}, {hi}]")));
    }
    Ok(())
}

/// Random GAP instance with off-diagonal costs uniform on `[lo, hi]`.
///
/// The generator is ChaCha8 seeded with `seed`, so the output is identical
/// across platforms and runs.
pub fn gen_random_gap(n: usize, seed: u64, lo: f64, hi: f64) -> Result<CostMatrix> {
    check_range(lo, hi)?;
    if n < 2 {
        return Err(Error::DimensionMismatch(format!("n must be at least 2, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = Uniform::new_inclusive(lo, hi);
    let mut entries = vec![f64::INFINITY; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                entries[i * n + j] = dist.sample(&mut rng);
            }
        }
    }
    Ok(CostMatrix { n, entries, kind: Kind::ArbitraryGap, points: None, duplicate_points: false })
}

/// Random points uniform on `[lo, hi]^2`.
pub fn gen_random_points(n: usize, seed: u64, lo: f64, hi: f64) -> Result<PointSet> {
    check_range(lo, hi)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = Uniform::new_inclusive(lo, hi);
    PointSet::new((0..n).map(|_| (dist.sample(&mut rng), dist.sample(&mut rng))).collect())
}

/// Matrix whose every complete cycle has a distinct cost.
///
/// Row `i` holds `n^(i-1) * k` with `k` walking `1..n-1` over the
/// off-diagonal columns in ascending order, so a cycle cost is a base-`n`
/// number whose digits are the chosen `k` per row.
pub fn gen_unique_cost(n: usize) -> Result<CostMatrix> {
    if n < 2 {
        return Err(Error::DimensionMismatch(format!("n must be at least 2, got {n}")));
    }
    if n > UNIQUE_COST_MAX_N {
        return Err(Error::Overflow(n));
    }
    let base = n as u64;
    let mut entries = vec![f64::INFINITY; n * n];
    for i in 1..=n {
        let scale = base.pow((i - 1) as u32);
        for j in 1..=n {
            if i == j {
                continue;
            }
            let k = if j < i { j } else { j - 1 } as u64;
            entries[(i - 1) * n + (j - 1)] = (scale * k) as f64;
        }
    }
    Ok(CostMatrix { n, entries, kind: Kind::ArbitraryGap, points: None, duplicate_points: false })
}

/// Integer identifier of the directed edge `(i, j)`.
///
/// Edges with `i < j` map to positive integers in column-major order of the
/// strict upper triangle; the reverse edge maps to the negated value.
pub fn edge_id(i: usize, j: usize, n: usize) -> Result<i64> {
    for v in [i, j] {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if i == j {
        return Err(Error::SelfLoop(i));
    }
    let tri = |hi: usize, lo: usize| ((hi - 2) * (hi - 1) / 2 + lo) as i64;
    Ok(if i < j { tri(j, i) } else { -tri(i, j) })
}

/// Maps costs into `[-1, 1]`: nonnegative values are divided by the largest
/// finite value, negative values by the smallest value, `+inf` becomes 1.
///
/// Dividing a negative cost by the (negative) minimum yields a positive
/// result; this is the formula applied literally.
pub fn normalize_scale_values(values: &[f64]) -> Result<Vec<f64>> {
    let finite = values.iter().copied().filter(|v| v.is_finite());
    let (min, max) = finite.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    if min == f64::INFINITY {
        return Err(Error::AllInfinite);
    }
    let s_pos = if max > 0.0 { max } else { 1.0 };
    let s_neg = min;
    Ok(values
        .iter()
        .map(|&c| {
            if c == f64::INFINITY {
                1.0
            } else if c >= 0.0 {
                c / s_pos
            } else {
                c / s_neg
            }
        })
        .collect())
}

/// Affine map of the finite values onto `[0, 1]`; `+inf` becomes 1.
pub fn normalize_scale_translate_values(values: &[f64]) -> Result<Vec<f64>> {
    let finite = values.iter().copied().filter(|v| v.is_finite());
    let (min, max) = finite.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    if min == f64::INFINITY {
        return Err(Error::AllInfinite);
    }
    if max <= min {
        return Err(Error::DegenerateRange);
    }
    let span = max - min;
    Ok(values
        .iter()
        .map(|&c| if c == f64::INFINITY { 1.0 } else { ((c - min) / span).clamp(0.0, 1.0) })
        .collect())
}

/// [`normalize_scale_values`] over a matrix, row-major.
pub fn normalize_scale(m: &CostMatrix) -> Result<Vec<f64>> {
    normalize_scale_values(m.entries())
}

/// [`normalize_scale_translate_values`] over a matrix, row-major.
pub fn normalize_scale_translate(m: &CostMatrix) -> Result<Vec<f64>> {
    normalize_scale_translate_values(m.entries())
}

/// A bijection on `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    /// `forward[v - 1]` is the image of `v`.
    pub fn new(forward: Vec<usize>) -> Result<Self> {
        let n = forward.len();
        let mut inverse = vec![0; n];
        for (k, &img) in forward.iter().enumerate() {
            if img == 0 || img > n || inverse[img - 1] != 0 {
                return Err(Error::InvalidParameters(format!(
                    "{forward:?} is not a permutation of 1..={n}"
                )));
            }
            inverse[img - 1] = k + 1;
        }
        Ok(Self { forward, inverse })
    }

    pub fn identity(n: usize) -> Self {
        let v: Vec<usize> = (1..=n).collect();
        Self { forward: v.clone(), inverse: v }
    }

    pub fn n(&self) -> usize {
        self.forward.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.forward[v - 1]
    }

    pub fn apply_inverse(&self, v: usize) -> usize {
        self.inverse[v - 1]
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { forward: self.inverse.clone(), inverse: self.forward.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Image of a cycle under the relabeling.
    pub fn apply_cycle(&self, y: &Cycle) -> Cycle {
        let v = y.vertices().iter().map(|&v| self.apply(v)).collect();
        Cycle::new(v).expect("bijection maps cycles to cycles")
    }

    /// `self` after `first`: `v -> self(first(v))`.
    pub fn compose_after(&self, first: &Permutation) -> Permutation {
        let forward = first.forward.iter().map(|&v| self.apply(v)).collect();
        Permutation::new(forward).expect("composition of bijections")
    }
}

/// The matrix seen through a relabeling: `c'(a, b) = c(perm^-1(a), perm^-1(b))`.
/// Costs are copied, never recomputed.
pub fn relabel(m: &CostMatrix, perm: &Permutation) -> CostMatrix {
    let n = m.n();
    let mut entries = vec![f64::INFINITY; n * n];
    for a in 1..=n {
        for b in 1..=n {
            entries[(a - 1) * n + (b - 1)] = m.get(perm.apply_inverse(a), perm.apply_inverse(b));
        }
    }
    let points = m.points.as_ref().map(|ps| PointSet {
        points: (1..=n).map(|a| ps.points[perm.apply_inverse(a) - 1]).collect(),
    });
    CostMatrix { n, entries, kind: m.kind, points, duplicate_points: m.duplicate_points }
}

/// Relabels the vertices so that `y` becomes `(n, n-1, ..., 1, n)`, the
/// first cycle of the descending enumeration.
pub fn relabel_to_first(m: &CostMatrix, y: &Cycle) -> Result<(CostMatrix, Permutation)> {
    y.check_size(m.n())?;
    let n = m.n();
    let mut forward = vec![0; n];
    for (k, &v) in y.open().iter().enumerate() {
        forward[v - 1] = n - k;
    }
    let perm = Permutation::new(forward)?;
    Ok((relabel(m, &perm), perm))
}

/// Sum of the edge costs along `y`, correctly rounded: the result does not
/// depend on the starting vertex or on a relabeling of the vertices.
pub fn cycle_cost(m: &CostMatrix, y: &Cycle) -> Result<f64> {
    y.check_size(m.n())?;
    Ok(cycle_cost_unchecked(m, y.vertices()))
}

#[inline]
pub(crate) fn cycle_cost_unchecked(m: &CostMatrix, closed: &[usize]) -> f64 {
    exact_sum(closed.windows(2).map(|w| m.get(w[0], w[1])))
}

/// Sum of the edge costs along an open path of distinct vertices.
pub fn path_cost(m: &CostMatrix, path: &[usize]) -> Result<f64> {
    let mut seen = vec![false; m.n() + 1];
    for &v in path {
        if v == 0 || v > m.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: m.n() });
        }
        if seen[v] {
            return Err(Error::InvalidCycle(format!("path repeats vertex {v}")));
        }
        seen[v] = true;
    }
    Ok(exact_sum(path.windows(2).map(|w| m.get(w[0], w[1]))))
}

/// Side and diagonal lengths of the quadrilateral `v1 v2 v3 v4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrilateral {
    /// `|v1 v2|, |v2 v3|, |v3 v4|, |v4 v1|`
    pub sides: [f64; 4],
    /// `|v1 v3|, |v2 v4|`
    pub diagonals: [f64; 2],
}

impl Quadrilateral {
    pub fn new(v: [(f64, f64); 4]) -> Self {
        let d = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0).hypot(a.1 - b.1);
        Self {
            sides: [d(v[0], v[1]), d(v[1], v[2]), d(v[2], v[3]), d(v[3], v[0])],
            diagonals: [d(v[0], v[2]), d(v[1], v[3])],
        }
    }

    pub fn perimeter(&self) -> f64 {
        self.sides.iter().sum()
    }

    /// Length of the tour `v1 v2 v4 v3 v1`, which keeps the opposite sides
    /// `v1v2`, `v3v4` and crosses through both diagonals.
    pub fn crossing_tour(&self) -> f64 {
        self.sides[0] + self.sides[2] + self.diagonals[0] + self.diagonals[1]
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_entry(tok: &str, line: usize) -> Result<f64> {
    if tok == "inf" {
        return Ok(f64::INFINITY);
    }
    let v: f64 = tok.parse().map_err(|_| parse_err(line, format!("bad number {tok:?}")))?;
    if !v.is_finite() {
        return Err(parse_err(line, format!("non-finite value {tok:?}")));
    }
    Ok(v)
}

/// Parses the line-oriented instance format:
///
/// ```text
/// GAP 3          (or TSP n / POINTS n)
/// inf 1 2
/// 3 inf 6
/// 9 18 inf
/// ```
///
/// For `POINTS` each of the `n` lines is `x y`. Blank lines are ignored.
pub fn parse_instance(text: &str) -> Result<CostMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty instance"))?;
    let mut head = header.split_whitespace();
    let tag = head.next().unwrap_or_default();
    let n: usize = head
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(hline, "header must be `GAP n`, `TSP n` or `POINTS n`"))?;
    if head.next().is_some() {
        return Err(parse_err(hline, "trailing tokens in header"));
    }
    let body: Vec<(usize, Vec<&str>)> =
        lines.map(|(k, l)| (k, l.split_whitespace().collect())).collect();
    if body.len() != n {
        return Err(parse_err(hline, format!("expected {n} rows, found {}", body.len())));
    }
    match tag {
        "POINTS" => {
            let mut pts = Vec::with_capacity(n);
            for (k, toks) in &body {
                if toks.len() != 2 {
                    return Err(parse_err(*k, "point rows must be `x y`"));
                }
                let x = parse_entry(toks[0], *k)?;
                let y = parse_entry(toks[1], *k)?;
                if !x.is_finite() || !y.is_finite() {
                    return Err(parse_err(*k, "point coordinates must be finite"));
                }
                pts.push((x, y));
            }
            Ok(from_points(&PointSet::new(pts)?))
        }
        "GAP" | "TSP" => {
            let mut rows = Vec::with_capacity(n);
            for (r, (k, toks)) in body.iter().enumerate() {
                if toks.len() != n {
                    return Err(parse_err(*k, format!("expected {n} entries, found {}", toks.len())));
                }
                let mut row = Vec::with_capacity(n);
                for (c, t) in toks.iter().enumerate() {
                    let v = parse_entry(t, *k)?;
                    if (r == c) != (v == f64::INFINITY) {
                        return Err(parse_err(*k, "`inf` is required on the diagonal and only there"));
                    }
                    row.push(v);
                }
                rows.push(row);
            }
            let kind = if tag == "GAP" { Kind::ArbitraryGap } else { Kind::SymmetricTsp };
            CostMatrix::new(n, rows, kind)
        }
        other => Err(parse_err(hline, format!("unknown instance tag {other:?}"))),
    }
}

/// Writes a matrix in the instance format. Euclidean matrices are written as
/// their point set; values use 17 significant digits.
pub fn write_instance(m: &CostMatrix) -> String {
    let mut out = String::new();
    match (m.kind(), m.points()) {
        (Kind::Euclidean2d, Some(ps)) => {
            out.push_str(&format!("POINTS {}\n", m.n()));
            for &(x, y) in ps.points() {
                out.push_str(&format!("{} {}\n", fmt_g17(x), fmt_g17(y)));
            }
        }
        (kind, _) => {
            let tag = if kind == Kind::ArbitraryGap { "GAP" } else { "TSP" };
            out.push_str(&format!("{tag} {}\n", m.n()));
            for i in 1..=m.n() {
                let row: Vec<String> = m.row(i).iter().map(|&v| fmt_g17(v)).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
    }
    out
}
