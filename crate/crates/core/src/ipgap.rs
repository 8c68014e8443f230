//! Assignment integer program over `x_ij` in {0, 1}:
//!
//! ```text
//! min  sum_i sum_j c_ij x_ij
//! s.t. sum_j x_ij = 1   (row i)
//!      sum_i x_ij = 1   (column j)
//!      x_ii = 0
//! ```
//!
//! Every Hamiltonian cycle is a feasible point, but not conversely: any
//! fixed-point-free permutation satisfies the constraints, so for `n >= 4`
//! some feasible points split into subtours. [`point_to_cycle`] reports
//! those as [`Error::Subtour`]. No subtour-elimination constraints are added.

use std::fmt::Write as _;

use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::instance::CostMatrix;
use crate::numfmt::fmt_g17;
use crate::sum::exact_sum;

#[derive(Debug, Clone, PartialEq)]
pub struct IpModel {
    n: usize,
    /// Row-major `n x n`; diagonal coefficients are 0 and their variables fixed.
    coefficients: Vec<f64>,
}

impl IpModel {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variable_count(&self) -> usize {
        self.n * self.n
    }

    /// Coefficient of `x_ij` (1-based); zero on the diagonal.
    pub fn coefficient(&self, i: usize, j: usize) -> f64 {
        self.coefficients[(i - 1) * self.n + (j - 1)]
    }

    /// `sum c_ij x_ij` over the point's nonzero off-diagonal entries.
    pub fn objective(&self, p: &AssignmentPoint) -> Result<f64> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch(self.n, p.n()));
        }
        Ok(exact_sum((1..=self.n).map(|i| self.coefficient(i, p.successor(i)))))
    }
}

pub fn build_model(m: &CostMatrix) -> IpModel {
    let n = m.n();
    let mut coefficients = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            coefficients.push(if i == j { 0.0 } else { m.get(i, j) });
        }
    }
    IpModel { n, coefficients }
}

/// A 0/1 matrix with unit row and column sums and a zero diagonal,
/// stored as its successor map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AssignmentPoint {
    succ: Vec<usize>,
}

impl AssignmentPoint {
    /// Validates a dense 0/1 matrix.
    pub fn from_matrix(x: &[Vec<u8>]) -> Result<Self> {
        let n = x.len();
        let mut succ = Vec::with_capacity(n);
        let mut col_hits = vec![0usize; n];
        for (i, row) in x.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&b| b > 1) {
                return Err(Error::InvalidPoint(format!("entry {bad} in row {} is not binary", i + 1)));
            }
            let ones: Vec<usize> = row.iter().enumerate().filter(|(_, &b)| b == 1).map(|(j, _)| j).collect();
            if ones.len() != 1 {
                return Err(Error::InvalidPoint(format!("row {} sums to {}", i + 1, ones.len())));
            }
            col_hits[ones[0]] += 1;
            succ.push(ones[0] + 1);
        }
        if let Some(j) = col_hits.iter().position(|&c| c != 1) {
            return Err(Error::InvalidPoint(format!("column {} sums to {}", j + 1, col_hits[j])));
        }
        Self::from_successors(succ)
    }

    /// `succ[i - 1] = j` sets `x_ij = 1`.
    pub fn from_successors(succ: Vec<usize>) -> Result<Self> {
        let n = succ.len();
        let mut seen = vec![false; n];
        for (i, &j) in succ.iter().enumerate() {
            if j == 0 || j > n {
                return Err(Error::VertexOutOfRange { vertex: j, n });
            }
            if j == i + 1 {
                return Err(Error::InvalidPoint(format!("x_{j}_{j} is on the diagonal")));
            }
            if std::mem::replace(&mut seen[j - 1], true) {
                return Err(Error::InvalidPoint(format!("column {j} sums to more than 1")));
            }
        }
        Ok(Self { succ })
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    /// The column holding row `i`'s one.
    pub fn successor(&self, i: usize) -> usize {
        self.succ[i - 1]
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        u8::from(self.succ[i - 1] == j)
    }

    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        (1..=n).map(|i| (1..=n).map(|j| self.get(i, j)).collect()).collect()
    }
}

pub fn cycle_to_point(y: &Cycle) -> AssignmentPoint {
    AssignmentPoint { succ: y.successors() }
}

/// Follows successors from vertex 1. On a split returns the subtour lengths,
/// each subtour started at its smallest unvisited vertex.
pub fn point_to_cycle(p: &AssignmentPoint) -> Result<Cycle> {
    if let Some(y) = Cycle::from_successors(&p.succ, 1) {
        return Ok(y);
    }
    let n = p.n();
    let mut seen = vec![false; n + 1];
    let mut lengths = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            len += 1;
            v = p.successor(v);
        }
        lengths.push(len);
    }
    Err(Error::Subtour(lengths))
}

/// All feasible points of the `n`-vertex model (the derangements of `1..=n`),
/// in lexicographic order of their successor maps.
pub fn feasible_points(n: usize, cap: usize) -> Result<Vec<AssignmentPoint>> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    fn extend(i: usize, n: usize, used: &mut [bool], succ: &mut Vec<usize>, out: &mut Vec<AssignmentPoint>) {
        if i > n {
            out.push(AssignmentPoint { succ: succ.clone() });
            return;
        }
        for j in 1..=n {
            if j != i && !used[j] {
                used[j] = true;
                succ.push(j);
                extend(i + 1, n, used, succ, out);
                succ.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    if n >= 2 {
        extend(1, n, &mut vec![false; n + 1], &mut Vec::with_capacity(n), &mut out);
    }
    Ok(out)
}

fn push_term(out: &mut String, first: bool, coef: f64, var: &str) {
    let sign = if coef.is_sign_negative() && coef != 0.0 { '-' } else { '+' };
    let mag = fmt_g17(coef.abs());
    if first {
        let lead = if sign == '-' { "-" } else { "" };
        let _ = write!(out, " {lead}{mag} {var}");
    } else {
        let _ = write!(out, " {sign} {mag} {var}");
    }
}

/// CPLEX LP text of the model. Variables are named `x_i_j` (1-based).
pub fn export_lp(model: &IpModel) -> String {
    let n = model.n;
    let var = |i: usize, j: usize| format!("x_{i}_{j}");
    let mut out = String::from("Minimize\n obj:");
    let mut first = true;
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                push_term(&mut out, first, model.coefficient(i, j), &var(i, j));
                first = false;
            }
        }
    }
    out.push_str("\nSubject To\n");
    for i in 1..=n {
        let terms: Vec<String> = (1..=n).map(|j| var(i, j)).collect();
        let _ = writeln!(out, " r_{i}: {} = 1", terms.join(" + "));
    }
    for j in 1..=n {
        let terms: Vec<String> = (1..=n).map(|i| var(i, j)).collect();
        let _ = writeln!(out, " s_{j}: {} = 1", terms.join(" + "));
    }
    out.push_str("Bounds\n");
    for i in 1..=n {
        let _ = writeln!(out, " {} = 0", var(i, i));
    }
    out.push_str("Binary\n");
    for i in 1..=n {
        for j in 1..=n {
            let _ = writeln!(out, " {}", var(i, j));
        }
    }
    out.push_str("End\n");
    out
}
