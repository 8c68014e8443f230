//! Per-row sorted costs, greedy construction and frontier classification.
//!
//! [`SortedM`] keeps, for every vertex, its outgoing edges as `(cost, target)`
//! pairs in ascending cost order (ties by ascending target). The positions a
//! reference cycle occupies in those rows form its [`Frontier`]; another
//! cycle is classified against it edge by edge.

use crate::cycle::Cycle;
use crate::enumeration::CycleWalker;
use crate::error::{Error, Result};
use crate::instance::CostMatrix;
use crate::sum::exact_sum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Entry {
    pub cost: f64,
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SortedM {
    n: usize,
    rows: Vec<Vec<Entry>>,
}

impl SortedM {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted outgoing edges of vertex `v` (1-based), length `n - 1`.
    pub fn row(&self, v: usize) -> &[Entry] {
        &self.rows[v - 1]
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    /// Column of target `to` in row `from`.
    pub fn column_of(&self, from: usize, to: usize) -> Option<usize> {
        self.row(from).iter().position(|e| e.vertex == to)
    }
}

pub fn build_sorted_m(m: &CostMatrix) -> SortedM {
    let n = m.n();
    let rows = (1..=n)
        .map(|i| {
            let mut row: Vec<Entry> = (1..=n)
                .filter(|&j| j != i)
                .map(|j| Entry { cost: m.get(i, j), vertex: j })
                .collect();
            row.sort_by(|a, b| a.cost.total_cmp(&b.cost).then(a.vertex.cmp(&b.vertex)));
            row
        })
        .collect();
    SortedM { n, rows }
}

/// Outcome of reading the first column of [`SortedM`] as a successor map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FirstColumn {
    /// The row minima form one Hamiltonian cycle.
    SingleCycle,
    /// Every vertex is hit exactly once but the map splits into subtours.
    CoversButSubtours,
    /// Some vertex is the row minimum of two rows.
    NotAPermutation,
}

/// Returns the cycle formed by the row minima when they form a single
/// Hamiltonian cycle. Such a cycle attains [`row_minima_lower_bound`] and is
/// therefore optimal.
pub fn first_column_check(s: &SortedM) -> (Option<Cycle>, FirstColumn) {
    let succ: Vec<usize> = s.rows.iter().map(|r| r[0].vertex).collect();
    let mut hit = vec![false; s.n];
    for &v in &succ {
        if std::mem::replace(&mut hit[v - 1], true) {
            return (None, FirstColumn::NotAPermutation);
        }
    }
    match Cycle::from_successors(&succ, s.n) {
        Some(y) => (Some(y), FirstColumn::SingleCycle),
        None => (None, FirstColumn::CoversButSubtours),
    }
}

/// Sum of row minima, a lower bound on every cycle cost.
pub fn row_minima_lower_bound(m: &CostMatrix) -> f64 {
    exact_sum(m.row_minima())
}

/// Nearest-neighbour cycle from `start`: repeatedly follow the cheapest edge
/// to an unvisited vertex, then close the cycle.
pub fn greedy_initial_cycle(s: &SortedM, start: usize) -> Result<Cycle> {
    let n = s.n;
    if start == 0 || start > n {
        return Err(Error::VertexOutOfRange { vertex: start, n });
    }
    let mut visited = vec![false; n + 1];
    let mut path = Vec::with_capacity(n + 1);
    let mut cur = start;
    visited[cur] = true;
    path.push(cur);
    while path.len() < n {
        let next = s
            .row(cur)
            .iter()
            .map(|e| e.vertex)
            .find(|&v| !visited[v])
            .expect("complete graph always has an unvisited successor");
        visited[next] = true;
        path.push(next);
        cur = next;
    }
    path.push(start);
    Cycle::new(path)
}

/// Positions of a reference cycle's outgoing edges inside [`SortedM`].
#[derive(Debug, Clone, PartialEq)]
pub struct Frontier {
    reference: Cycle,
    /// Column of vertex `v`'s reference edge at index `v - 1`.
    positions: Vec<usize>,
    costs: Vec<f64>,
}

impl Frontier {
    pub fn reference(&self) -> &Cycle {
        &self.reference
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn costs(&self) -> &[f64] {
        &self.costs
    }
}

pub fn frontier_of(s: &SortedM, y: &Cycle) -> Result<Frontier> {
    y.check_size(s.n)?;
    let succ = y.successors();
    let mut positions = Vec::with_capacity(s.n);
    let mut costs = Vec::with_capacity(s.n);
    for (k, &to) in succ.iter().enumerate() {
        let col = s.column_of(k + 1, to).expect("every target appears once per row");
        positions.push(col);
        costs.push(s.row(k + 1)[col].cost);
    }
    Ok(Frontier { reference: y.clone(), positions, costs })
}

/// Position of a cycle relative to a frontier, compared edge by edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Every edge costs no more than the frontier's, at least one strictly less.
    Below,
    /// Every edge costs no less than the frontier's, at least one strictly more.
    Above,
    /// Strictly cheaper on some vertex and strictly dearer on another.
    Oscillating,
    /// Equal cost on every vertex.
    On,
}

pub fn classify(f: &Frontier, y: &Cycle, s: &SortedM) -> Result<Side> {
    y.check_size(s.n)?;
    Ok(classify_costs(&f.costs, y.vertices(), |a, b| {
        let col = s.column_of(a, b).expect("valid edge");
        s.row(a)[col].cost
    }))
}

pub(crate) fn classify_costs(
    frontier_costs: &[f64],
    closed: &[usize],
    cost: impl Fn(usize, usize) -> f64,
) -> Side {
    let (mut lower, mut higher) = (false, false);
    for w in closed.windows(2) {
        let c = cost(w[0], w[1]);
        let f = frontier_costs[w[0] - 1];
        lower |= c < f;
        higher |= c > f;
    }
    match (lower, higher) {
        (true, true) => Side::Oscillating,
        (true, false) => Side::Below,
        (false, true) => Side::Above,
        (false, false) => Side::On,
    }
}

/// Cost of each vertex's outgoing edge along `y`, indexed by `v - 1`.
pub(crate) fn outgoing_costs(m: &CostMatrix, y: &Cycle) -> Vec<f64> {
    let mut out = vec![0.0; m.n()];
    for (a, b) in y.edges() {
        out[a - 1] = m.get(a, b);
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub enum BelowCheck {
    Holds,
    /// A cycle lying below the frontier of the checked one.
    Violated(Cycle),
}

/// Scans every cycle for one lying below `y`'s frontier. An optimal cycle
/// never has such a cycle, so `Violated` disproves optimality.
pub fn assert_no_strictly_below(m: &CostMatrix, y: &Cycle, cap: usize) -> Result<BelowCheck> {
    y.check_size(m.n())?;
    let n = m.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let frontier = outgoing_costs(m, y);
    let mut w = CycleWalker::at(n, 1);
    loop {
        if classify_costs(&frontier, w.vertices(), |a, b| m.get(a, b)) == Side::Below {
            return Ok(BelowCheck::Violated(Cycle::new(w.vertices().to_vec())?));
        }
        if !w.advance() {
            return Ok(BelowCheck::Holds);
        }
    }
}

/// [`assert_no_strictly_below`] over a caller-supplied candidate stream, for
/// instances past the exhaustive cap.
pub fn assert_no_strictly_below_among<I>(m: &CostMatrix, y: &Cycle, candidates: I) -> Result<BelowCheck>
where
    I: IntoIterator<Item = Cycle>,
{
    y.check_size(m.n())?;
    let frontier = outgoing_costs(m, y);
    for z in candidates {
        z.check_size(m.n())?;
        if classify_costs(&frontier, z.vertices(), |a, b| m.get(a, b)) == Side::Below {
            return Ok(BelowCheck::Violated(z));
        }
    }
    Ok(BelowCheck::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{cycle_cost, from_points, gen_random_gap, CostMatrix, Kind, PointSet};

    const INF: f64 = f64::INFINITY;

    fn matrix(rows: Vec<Vec<f64>>) -> CostMatrix {
        CostMatrix::new(rows.len(), rows, Kind::ArbitraryGap).unwrap()
    }

    fn uniform(n: usize, w: f64) -> CostMatrix {
        matrix((0..n).map(|i| (0..n).map(|j| if i == j { INF } else { w }).collect()).collect())
    }

    #[test]
    fn sort_order_and_ties() {
        let s = build_sorted_m(&uniform(4, 1.0));
        assert_eq!(s.row(3).iter().map(|e| e.vertex).collect::<Vec<_>>(), vec![1, 2, 4]);

        let m = matrix(vec![
            vec![INF, 5.0, 2.0, 9.0],
            vec![1.0, INF, 1.0, 1.0],
            vec![1.0, 1.0, INF, 1.0],
            vec![1.0, 1.0, 1.0, INF],
        ]);
        let s = build_sorted_m(&m);
        assert_eq!(
            s.row(1),
            &[
                Entry { cost: 2.0, vertex: 3 },
                Entry { cost: 5.0, vertex: 2 },
                Entry { cost: 9.0, vertex: 4 }
            ]
        );
    }

    #[test]
    fn rows_are_sorted_permutations() {
        for seed in 0..100 {
            let m = gen_random_gap(6, seed, -3.0, 3.0).unwrap();
            let s = build_sorted_m(&m);
            for v in 1..=6 {
                let row = s.row(v);
                assert!(row.windows(2).all(|w| w[0].cost <= w[1].cost));
                let mut got: Vec<(usize, u64)> = row.iter().map(|e| (e.vertex, e.cost.to_bits())).collect();
                got.sort_unstable();
                let want: Vec<(usize, u64)> =
                    (1..=6).filter(|&j| j != v).map(|j| (j, m.get(v, j).to_bits())).collect();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn first_column_single_cycle() {
        let m = matrix(vec![vec![INF, 1.0, 5.0], vec![5.0, INF, 2.0], vec![3.0, 5.0, INF]]);
        let (y, diag) = first_column_check(&build_sorted_m(&m));
        assert_eq!(diag, FirstColumn::SingleCycle);
        let y = y.unwrap();
        assert_eq!(y.rotate_to(1).unwrap().vertices(), &[1, 2, 3, 1]);
        assert_eq!(cycle_cost(&m, &y).unwrap(), row_minima_lower_bound(&m));
    }

    #[test]
    fn first_column_subtours() {
        let m = matrix(vec![
            vec![INF, 1.0, 5.0, 5.0],
            vec![1.0, INF, 5.0, 5.0],
            vec![5.0, 5.0, INF, 1.0],
            vec![5.0, 5.0, 1.0, INF],
        ]);
        assert_eq!(first_column_check(&build_sorted_m(&m)), (None, FirstColumn::CoversButSubtours));

        let m = matrix(vec![vec![INF, 1.0, 5.0], vec![5.0, INF, 1.0], vec![5.0, 1.0, INF]]);
        assert_eq!(first_column_check(&build_sorted_m(&m)), (None, FirstColumn::NotAPermutation));
    }

    #[test]
    fn uniform_bound() {
        assert_eq!(row_minima_lower_bound(&uniform(5, 2.0)), 10.0);
    }

    #[test]
    fn greedy_on_a_line() {
        let pts = PointSet::new(vec![(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)]).unwrap();
        let s = build_sorted_m(&from_points(&pts));
        assert_eq!(greedy_initial_cycle(&s, 1).unwrap().vertices(), &[1, 2, 3, 4, 1]);
        assert!(greedy_initial_cycle(&s, 5).is_err());
        let m3 = gen_random_gap(3, 1, 0.0, 1.0).unwrap();
        for start in 1..=3 {
            assert_eq!(greedy_initial_cycle(&build_sorted_m(&m3), start).unwrap().n(), 3);
        }
    }

    #[test]
    fn frontier_positions() {
        // 5x5 fixture; sorted rows worked out by hand:
        // row1: 2(3) 4(2) 7(5) 9(4)
        // row2: 1(4) 3(1) 6(5) 8(3)
        // row3: 2(5) 3(1) 5(4) 9(2)
        // row4: 1(5) 2(3) 4(1) 6(2)
        // row5: 1(1) 3(2) 5(4) 8(3)
        let m = matrix(vec![
            vec![INF, 4.0, 2.0, 9.0, 7.0],
            vec![3.0, INF, 8.0, 1.0, 6.0],
            vec![3.0, 9.0, INF, 5.0, 2.0],
            vec![4.0, 6.0, 2.0, INF, 1.0],
            vec![1.0, 3.0, 8.0, 5.0, INF],
        ]);
        let s = build_sorted_m(&m);
        let y = Cycle::parse("5,4,3,2,1,5").unwrap();
        let f = frontier_of(&s, &y).unwrap();
        // succ: 1->5, 2->1, 3->2, 4->3, 5->4
        assert_eq!(f.positions(), &[2, 1, 3, 1, 2]);
        assert_eq!(f.costs(), &[7.0, 3.0, 9.0, 2.0, 5.0]);
        for v in 1..=5 {
            assert_eq!(s.row(v)[f.positions()[v - 1]].vertex, y.successors()[v - 1]);
        }
        assert_eq!(classify(&f, &y, &s), Ok(Side::On));
    }

    #[test]
    fn leftmost_frontier_for_first_column_cycle() {
        let m = matrix(vec![vec![INF, 1.0, 5.0], vec![5.0, INF, 2.0], vec![3.0, 5.0, INF]]);
        let s = build_sorted_m(&m);
        let y = first_column_check(&s).0.unwrap();
        assert_eq!(frontier_of(&s, &y).unwrap().positions(), &[0, 0, 0]);
    }

    #[test]
    fn classification_fixtures() {
        // square: perimeter tour vs the crossing tour, every edge longer or equal
        let pts = PointSet::new(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        let m = from_points(&pts);
        let s = build_sorted_m(&m);
        let reference = Cycle::parse("1,2,3,4,1").unwrap();
        let f = frontier_of(&s, &reference).unwrap();
        let detour = Cycle::parse("1,3,4,2,1").unwrap();
        assert_eq!(classify(&f, &detour, &s), Ok(Side::Above));
        assert!(cycle_cost(&m, &detour).unwrap() > cycle_cost(&m, &reference).unwrap());

        // GAP with a negative edge below the frontier and a dearer edge above
        let g = matrix(vec![
            vec![INF, 1.0, 1.0, 1.0],
            vec![1.0, INF, 1.0, 1.0],
            vec![1.0, 1.0, INF, 1.0],
            vec![-2.0, 3.0, 1.0, INF],
        ]);
        let s = build_sorted_m(&g);
        let reference = Cycle::parse("4,3,2,1,4").unwrap();
        let f = frontier_of(&s, &reference).unwrap();
        // 4->1 drops to -2, the rest stay on the frontier
        let z = Cycle::parse("4,1,3,2,4").unwrap();
        assert_eq!(classify(&f, &z, &s), Ok(Side::Below));
        let z = Cycle::parse("4,2,1,3,4").unwrap();
        assert_eq!(classify(&f, &z, &s), Ok(Side::Above));

        // same candidate, but 2->4 now costs 5: one edge on each side
        let g3 = matrix(vec![
            vec![INF, 1.0, 1.0, 1.0],
            vec![1.0, INF, 1.0, 5.0],
            vec![1.0, 1.0, INF, 1.0],
            vec![-2.0, 3.0, 1.0, INF],
        ]);
        let s3 = build_sorted_m(&g3);
        let f3 = frontier_of(&s3, &reference).unwrap();
        let z = Cycle::parse("4,1,3,2,4").unwrap();
        assert_eq!(classify(&f3, &z, &s3), Ok(Side::Oscillating));
    }

    #[test]
    fn below_check_small_cases() {
        let m = matrix(vec![vec![INF, 3.0], vec![4.0, INF]]);
        assert_eq!(assert_no_strictly_below(&m, &Cycle::descending(2), 11), Ok(BelowCheck::Holds));
        let big = gen_random_gap(12, 1, 0.0, 1.0).unwrap();
        assert!(matches!(
            assert_no_strictly_below(&big, &Cycle::descending(12), 11),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(
            assert_no_strictly_below_among(&big, &Cycle::descending(12), std::iter::empty()),
            Ok(BelowCheck::Holds)
        );
    }
}
