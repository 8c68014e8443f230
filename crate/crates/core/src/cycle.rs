//! Complete (Hamiltonian) cycles over vertices `1..=n`.

use std::fmt;

use crate::error::{Error, Result};

/// A closed vertex sequence of length `n + 1`: first and last entries are
/// equal and the interior `n` entries are a permutation of `1..=n`.
///
/// Vertex labels are 1-based everywhere in the public API.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "need at least 3 entries, got {}",
                vertices.len()
            )));
        }
        let n = vertices.len() - 1;
        if vertices[0] != vertices[n] {
            return Err(Error::InvalidCycle(format!(
                "first vertex {} differs from last vertex {}",
                vertices[0], vertices[n]
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &vertices[..n] {
            if v == 0 || v > n {
                return Err(Error::InvalidCycle(format!("vertex {v} not in 1..={n}")));
            }
            if seen[v] {
                return Err(Error::InvalidCycle(format!("vertex {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Self { vertices })
    }

    /// Builds a cycle from its `n` distinct vertices, closing it automatically.
    pub fn from_open(open: &[usize]) -> Result<Self> {
        let mut v = open.to_vec();
        if let Some(&first) = open.first() {
            v.push(first);
        }
        Self::new(v)
    }

    /// Builds a cycle from a successor map (`succ[v - 1]` is the successor of `v`),
    /// starting at `start`. Returns `None` when the map is not a single n-cycle.
    pub fn from_successors(succ: &[usize], start: usize) -> Option<Self> {
        let n = succ.len();
        if start == 0 || start > n {
            return None;
        }
        let mut v = Vec::with_capacity(n + 1);
        let mut cur = start;
        for _ in 0..n {
            v.push(cur);
            cur = *succ.get(cur.wrapping_sub(1))?;
        }
        if cur != start {
            return None;
        }
        v.push(start);
        Self::new(v).ok()
    }

    /// Parses a comma-separated 1-based vertex list such as `5,4,3,2,1,5`.
    pub fn parse(text: &str) -> Result<Self> {
        let vertices = text
            .trim()
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|e| Error::Parse {
                    line: 1,
                    msg: format!("bad vertex {t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices)
    }

    pub fn n(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// The first `n` vertices (without the closing repeat).
    pub fn open(&self) -> &[usize] {
        &self.vertices[..self.n()]
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    /// Directed edges `(v_k, v_{k+1})` in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// `succ[v - 1]` is the successor of vertex `v`.
    pub fn successors(&self) -> Vec<usize> {
        let mut succ = vec![0; self.n()];
        for (a, b) in self.edges() {
            succ[a - 1] = b;
        }
        succ
    }

    /// The same cycle traversed from `start`.
    pub fn rotate_to(&self, start: usize) -> Result<Self> {
        let open = self.open();
        let pos = open
            .iter()
            .position(|&v| v == start)
            .ok_or(Error::VertexOutOfRange { vertex: start, n: self.n() })?;
        let mut v: Vec<usize> = open[pos..].iter().chain(&open[..pos]).copied().collect();
        v.push(start);
        Ok(Self { vertices: v })
    }

    /// The cycle `(n, n-1, ..., 1, n)`.
    pub fn descending(n: usize) -> Self {
        let mut v: Vec<usize> = (1..=n).rev().collect();
        v.push(n);
        Self { vertices: v }
    }

    pub(crate) fn check_size(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::InvalidCycle(format!(
                "cycle has {} vertices, instance has {n}",
                self.n()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.vertices.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed() {
        assert!(Cycle::new(vec![1, 2]).is_err());
        assert!(Cycle::new(vec![1, 2, 3, 2]).is_err());
        assert!(Cycle::new(vec![1, 1, 1]).is_err());
        assert!(Cycle::new(vec![1, 4, 2, 1]).is_err());
        assert!(Cycle::new(vec![0, 1, 0]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let c = Cycle::parse("5,4,3,2,1,5").unwrap();
        assert_eq!(c.to_string(), "5,4,3,2,1,5");
        assert_eq!(c, Cycle::descending(5));
        assert!(Cycle::parse("5,4,x").is_err());
    }

    #[test]
    fn rotation_and_successors() {
        let c = Cycle::parse("2,4,1,3,2").unwrap();
        assert_eq!(c.rotate_to(1).unwrap().vertices(), &[1, 3, 2, 4, 1]);
        assert_eq!(c.successors(), vec![3, 4, 2, 1]);
        let back = Cycle::from_successors(&c.successors(), 2).unwrap();
        assert_eq!(back, c);
        // two 2-cycles
        assert!(Cycle::from_successors(&[2, 1, 4, 3], 1).is_none());
    }
}
