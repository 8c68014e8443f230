//! Exact brute force, reduced-space cycle generation and the verify/solve loop.
//!
//! [`brute_force_solve`] walks every rank and is the oracle the rest of the
//! crate is tested against. [`frontier_solve`] starts from a greedy cycle,
//! relabels it to the first rank, estimates alternatives around it and scans
//! the reduced space, restarting from every strict improvement until a full
//! pass finds none.

use num_bigint::BigUint;

use crate::cycle::Cycle;
use crate::enumeration::{factorial_u64, shared_with_successors, CycleWalker, DEFAULT_BRUTE_FORCE_CAP};
use crate::error::{Error, Result};
use crate::instance::{cycle_cost, cycle_cost_unchecked, relabel_to_first, CostMatrix, Kind};
use crate::reduction::{estimate_alternatives_from, reduction_report, Alternatives, ReductionReport, DEFAULT_MAX_ITER};
use crate::sortedm::{build_sorted_m, greedy_initial_cycle};

#[derive(Debug, Clone, PartialEq)]
pub struct SolveConfig {
    /// Starting ε of the per-vertex alternatives search.
    pub eps_lo: f64,
    /// Every vertex's ε is raised to at least this value before generation.
    pub eps_hi: f64,
    pub eps_step: f64,
    pub max_generated_cycles: u64,
    pub max_outer_iterations: usize,
    pub brute_force_cap: usize,
    /// Greedy start vertex; `None` means vertex `n`.
    pub greedy_start: Option<usize>,
    /// Cut partial paths whose cost already reaches the incumbent. Only
    /// honoured for nonnegative (TSP and Euclidean) instances.
    pub tsp_pruning: bool,
    /// Worker threads for brute force.
    pub threads: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            eps_lo: -0.9,
            eps_hi: 0.6,
            eps_step: 0.01,
            max_generated_cycles: 50_000_000,
            max_outer_iterations: 10_000,
            brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
            greedy_start: None,
            tsp_pruning: false,
            threads: 1,
        }
    }
}

impl SolveConfig {
    /// Alternatives spanning the whole space, for oracle comparisons.
    pub fn unrestricted() -> Self {
        Self { eps_hi: f64::INFINITY, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        if !(self.eps_lo >= -1.0 && self.eps_lo <= self.eps_hi) {
            return Err(Error::InvalidParameters(format!(
                "need -1 <= eps_lo <= eps_hi, got [{}, {}]",
                self.eps_lo, self.eps_hi
            )));
        }
        if self.eps_step.is_nan() || self.eps_step <= 0.0 {
            return Err(Error::InvalidParameters("eps_step must be positive".into()));
        }
        if self.max_generated_cycles == 0 || self.max_outer_iterations == 0 || self.brute_force_cap == 0 {
            return Err(Error::InvalidParameters("caps must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// Every cycle was evaluated.
    ExactByBruteForce,
    /// A full pass over the reduced space found no cheaper cycle.
    FixpointInReducedSpace,
    /// A cycle or iteration cap stopped the loop first.
    CapExhausted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub best: Cycle,
    pub cost: f64,
    pub certificate: Certificate,
    pub report: ReductionReport,
    pub cycles_examined: BigUint,
    /// Incumbent cost after the start and after every improvement.
    pub history: Vec<f64>,
}

#[derive(Debug, Clone, Copy)]
struct RankedBest {
    cost: f64,
    rank: u64,
}

impl RankedBest {
    fn better_than(&self, other: &RankedBest) -> bool {
        self.cost < other.cost || (self.cost == other.cost && self.rank < other.rank)
    }
}

fn scan_ranks(m: &CostMatrix, start: u64, count: u64) -> Option<RankedBest> {
    if count == 0 {
        return None;
    }
    let mut w = CycleWalker::at(m.n(), start);
    let mut best = RankedBest { cost: cycle_cost_unchecked(m, w.vertices()), rank: start };
    for _ in 1..count {
        w.advance();
        let cost = cycle_cost_unchecked(m, w.vertices());
        if cost < best.cost {
            best = RankedBest { cost, rank: w.rank() };
        }
    }
    Some(best)
}

/// Splits `1..=total` into `parts` contiguous `(start, count)` ranges.
pub fn partition_ranks(total: u64, parts: usize) -> Vec<(u64, u64)> {
    let parts = (parts.max(1) as u64).min(total.max(1));
    let base = total / parts;
    let extra = total % parts;
    let mut start = 1;
    (0..parts)
        .map(|k| {
            let count = base + u64::from(k < extra);
            let range = (start, count);
            start += count;
            range
        })
        .collect()
}

/// Evaluates every cycle; ties go to the lowest rank.
pub fn brute_force_solve(m: &CostMatrix, cap: usize) -> Result<SolveResult> {
    brute_force_solve_threads(m, cap, 1)
}

/// [`brute_force_solve`] over `threads` rank partitions. The merge keeps the
/// minimum by `(cost, rank)`, so the result does not depend on `threads`.
pub fn brute_force_solve_threads(m: &CostMatrix, cap: usize, threads: usize) -> Result<SolveResult> {
    let n = m.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let total = factorial_u64(n - 1);
    let ranges = partition_ranks(total, threads);
    let partials: Vec<Option<RankedBest>> = if ranges.len() == 1 {
        vec![scan_ranks(m, ranges[0].0, ranges[0].1)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(start, count)| scope.spawn(move || scan_ranks(m, start, count)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    let best = partials
        .into_iter()
        .flatten()
        .reduce(|a, b| if b.better_than(&a) { b } else { a })
        .expect("at least one cycle");
    let cycle = crate::enumeration::unrank_u64(best.rank, n);
    let cost = cycle_cost(m, &cycle)?;
    Ok(SolveResult {
        report: reduction_report(&Alternatives::full(&cycle)),
        best: cycle,
        cost,
        certificate: Certificate::ExactByBruteForce,
        cycles_examined: BigUint::from(total),
        history: vec![cost],
    })
}

/// Depth-first generator of the Hamiltonian cycles whose every edge is
/// admissible, anchored at vertex `n`. Successors are tried in ascending
/// order, so the output order is deterministic.
#[derive(Debug, Clone)]
pub struct ReducedCycles<'a> {
    alts: &'a Alternatives,
    anchor: usize,
    path: Vec<usize>,
    cursor: Vec<usize>,
    partial: Vec<f64>,
    visited: Vec<bool>,
    closed: Vec<usize>,
    pending_pop: bool,
}

pub fn generate_reduced_cycles(alts: &Alternatives) -> ReducedCycles<'_> {
    let n = alts.n();
    let mut visited = vec![false; n + 1];
    visited[n] = true;
    ReducedCycles {
        alts,
        anchor: n,
        path: vec![n],
        cursor: vec![0],
        partial: vec![0.0],
        visited,
        closed: Vec::with_capacity(n + 1),
        pending_pop: false,
    }
}

impl ReducedCycles<'_> {
    fn pop(&mut self) {
        if let Some(v) = self.path.pop() {
            if v != self.anchor {
                self.visited[v] = false;
            }
            self.cursor.pop();
            self.partial.pop();
        }
    }

    /// Advances to the next cycle. With `prune = Some((m, bound))`, branches
    /// whose partial cost reaches `bound` are skipped; that is only sound
    /// for nonnegative costs.
    pub fn advance(&mut self, prune: Option<(&CostMatrix, f64)>) -> Option<&[usize]> {
        let n = self.alts.n();
        if self.pending_pop {
            self.pop();
            self.pending_pop = false;
        }
        while let Some(&top) = self.path.last() {
            let idx = *self.cursor.last().expect("cursor per path entry");
            let succs = self.alts.successors(top);
            if idx >= succs.len() {
                self.pop();
                continue;
            }
            *self.cursor.last_mut().expect("cursor per path entry") += 1;
            let next = succs[idx];
            if self.visited[next] {
                continue;
            }
            let mut cost = *self.partial.last().expect("partial per path entry");
            if let Some((m, bound)) = prune {
                cost += m.get(top, next);
                if cost >= bound {
                    continue;
                }
            }
            if self.path.len() + 1 == n {
                if !self.alts.successors(next).contains(&self.anchor) {
                    continue;
                }
                if let Some((m, bound)) = prune {
                    if cost + m.get(next, self.anchor) >= bound {
                        continue;
                    }
                }
                self.path.push(next);
                self.cursor.push(0);
                self.partial.push(cost);
                self.visited[next] = true;
                self.pending_pop = true;
                self.closed.clear();
                self.closed.extend_from_slice(&self.path);
                self.closed.push(self.anchor);
                return Some(&self.closed);
            }
            self.path.push(next);
            self.cursor.push(0);
            self.partial.push(cost);
            self.visited[next] = true;
        }
        None
    }
}

impl Iterator for ReducedCycles<'_> {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        self.advance(None).map(|c| Cycle::new(c.to_vec()).expect("generator yields cycles"))
    }
}

struct LoopOutcome {
    best: Cycle,
    cost: f64,
    certificate: Certificate,
    report: ReductionReport,
    examined: u64,
    history: Vec<f64>,
}

/// Reduced alternatives around the relabeled reference `(n, ..., 1, n)`.
fn alternatives_for(m: &CostMatrix, cfg: &SolveConfig) -> Result<Alternatives> {
    let reference = Cycle::descending(m.n());
    estimate_alternatives_from(m, &reference, cfg.eps_lo, cfg.eps_step, DEFAULT_MAX_ITER)?.widened(m, cfg.eps_hi)
}

fn improvement_loop(m: &CostMatrix, start: Cycle, cfg: &SolveConfig) -> Result<LoopOutcome> {
    cfg.validate()?;
    let prune_ok = cfg.tsp_pruning && m.kind() != Kind::ArbitraryGap;
    let mut best = start;
    let mut best_cost = cycle_cost(m, &best)?;
    let mut history = vec![best_cost];
    let mut examined = 0u64;
    let mut report = None;
    for _ in 0..cfg.max_outer_iterations {
        let (relabeled, perm) = relabel_to_first(m, &best)?;
        let alts = alternatives_for(&relabeled, cfg)?;
        report = Some(reduction_report(&alts));
        let back = perm.inverse();
        let mut gen = generate_reduced_cycles(&alts);
        let mut improved = false;
        while let Some(closed) = gen.advance(prune_ok.then_some((&relabeled, best_cost))) {
            examined += 1;
            let cost = cycle_cost_unchecked(&relabeled, closed);
            if cost < best_cost {
                best = back.apply_cycle(&Cycle::new(closed.to_vec())?);
                best_cost = cycle_cost(m, &best)?;
                history.push(best_cost);
                improved = true;
                break;
            }
            if examined >= cfg.max_generated_cycles {
                break;
            }
        }
        if !improved {
            let certificate = if examined >= cfg.max_generated_cycles {
                Certificate::CapExhausted
            } else {
                Certificate::FixpointInReducedSpace
            };
            return Ok(LoopOutcome {
                best,
                cost: best_cost,
                certificate,
                report: report.expect("one pass ran"),
                examined,
                history,
            });
        }
        if examined >= cfg.max_generated_cycles {
            break;
        }
    }
    let report = match report {
        Some(r) => r,
        None => reduction_report(&alternatives_for(&relabel_to_first(m, &best)?.0, cfg)?),
    };
    Ok(LoopOutcome { best, cost: best_cost, certificate: Certificate::CapExhausted, report, examined, history })
}

/// Greedy start, then repeated improvement inside the reduced space until a
/// full pass finds nothing cheaper. The certificate never claims global
/// optimality.
pub fn frontier_solve(m: &CostMatrix, cfg: &SolveConfig) -> Result<SolveResult> {
    let start = greedy_initial_cycle(&build_sorted_m(m), cfg.greedy_start.unwrap_or(m.n()))?;
    frontier_solve_from(m, &start, cfg)
}

/// [`frontier_solve`] starting from `start` instead of the greedy cycle.
pub fn frontier_solve_from(m: &CostMatrix, start: &Cycle, cfg: &SolveConfig) -> Result<SolveResult> {
    start.check_size(m.n())?;
    let out = improvement_loop(m, start.clone(), cfg)?;
    Ok(SolveResult {
        best: out.best,
        cost: out.cost,
        certificate: out.certificate,
        report: out.report,
        cycles_examined: BigUint::from(out.examined),
        history: out.history,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verification {
    /// No admissible cycle around the claim is cheaper.
    ConfirmedLocal,
    /// A strictly cheaper cycle (the loop's final incumbent).
    Improved(Cycle),
    /// Caps stopped the scan before it could confirm the claim.
    CapExhausted,
}

/// Runs the improvement loop seeded with `claimed`.
pub fn verify_optimal(m: &CostMatrix, claimed: &Cycle, cfg: &SolveConfig) -> Result<Verification> {
    claimed.check_size(m.n())?;
    let claimed_cost = cycle_cost(m, claimed)?;
    let out = improvement_loop(m, claimed.clone(), cfg)?;
    Ok(if out.cost < claimed_cost {
        Verification::Improved(out.best)
    } else if out.certificate == Certificate::CapExhausted {
        Verification::CapExhausted
    } else {
        Verification::ConfirmedLocal
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandscapeRow {
    pub rank: u64,
    pub cost: f64,
    pub shared_edges: usize,
}

/// Cost and edge overlap of every rank, on the matrix relabeled so that
/// `reference` is rank 1.
pub fn landscape(m: &CostMatrix, reference: &Cycle, cap: usize) -> Result<Vec<LandscapeRow>> {
    let n = m.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let (relabeled, _) = relabel_to_first(m, reference)?;
    let succ = Cycle::descending(n).successors();
    let mut rows = Vec::with_capacity(factorial_u64(n - 1) as usize);
    let mut w = CycleWalker::at(n, 1);
    loop {
        rows.push(LandscapeRow {
            rank: w.rank(),
            cost: cycle_cost_unchecked(&relabeled, w.vertices()),
            shared_edges: shared_with_successors(&succ, w.vertices()),
        });
        if !w.advance() {
            break;
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{coincidence_histogram, enumerate_all};
    use crate::instance::{from_points, gen_random_gap, gen_unique_cost, Kind, PointSet};
    use crate::reduction::estimate_alternatives;

    const INF: f64 = f64::INFINITY;

    fn uniform(n: usize, w: f64) -> CostMatrix {
        CostMatrix::new(
            n,
            (0..n).map(|i| (0..n).map(|j| if i == j { INF } else { w }).collect()).collect(),
            Kind::ArbitraryGap,
        )
        .unwrap()
    }

    fn oracle_min(m: &CostMatrix) -> f64 {
        enumerate_all(m.n()).map(|c| cycle_cost(m, &c).unwrap()).fold(INF, f64::min)
    }

    #[test]
    fn brute_force_small_cases() {
        let m = CostMatrix::new(2, vec![vec![INF, 3.0], vec![4.0, INF]], Kind::ArbitraryGap).unwrap();
        let r = brute_force_solve(&m, 11).unwrap();
        assert_eq!(r.cost, 7.0);
        assert_eq!(r.best, Cycle::descending(2));
        assert_eq!(r.certificate, Certificate::ExactByBruteForce);

        let r = brute_force_solve(&uniform(6, 1.5), 11).unwrap();
        assert_eq!(r.cost, 9.0);
        assert_eq!(r.best, Cycle::descending(6));
        assert_eq!(r.cycles_examined, BigUint::from(120u32));

        assert_eq!(
            brute_force_solve(&uniform(12, 1.0), 11).unwrap_err(),
            Error::CapExceeded { n: 12, cap: 11 }
        );
    }

    #[test]
    fn unique_cost_single_minimizer() {
        let m = gen_unique_cost(5).unwrap();
        let r = brute_force_solve(&m, 11).unwrap();
        let ties = enumerate_all(5).filter(|c| cycle_cost(&m, c).unwrap() == r.cost).count();
        assert_eq!(ties, 1);
        // frozen from the oracle run
        assert_eq!(r.best.to_string(), "5,1,3,4,2,5");
        assert_eq!(r.cost, 972.0);
    }

    #[test]
    fn partitions_cover_all_ranks() {
        for (total, parts) in [(6, 4), (5, 8), (120, 3), (1, 1)] {
            let ranges = partition_ranks(total, parts);
            assert_eq!(ranges.iter().map(|r| r.1).sum::<u64>(), total);
            assert_eq!(ranges[0].0, 1);
            for w in ranges.windows(2) {
                assert_eq!(w[0].0 + w[0].1, w[1].0);
            }
        }
    }

    #[test]
    fn threads_do_not_change_result() {
        for seed in 0..10 {
            let m = gen_random_gap(7, seed, -1.0, 1.0).unwrap();
            let one = brute_force_solve_threads(&m, 11, 1).unwrap();
            for k in [2, 4, 8] {
                assert_eq!(brute_force_solve_threads(&m, 11, k).unwrap(), one);
            }
        }
        // ties resolved by rank regardless of partitioning
        let one = brute_force_solve_threads(&uniform(6, 2.0), 11, 1).unwrap();
        assert_eq!(brute_force_solve_threads(&uniform(6, 2.0), 11, 8).unwrap().best, one.best);
    }

    #[test]
    fn generator_full_space_matches_enumeration() {
        for n in 2..=7 {
            let alts = Alternatives::full(&Cycle::descending(n));
            let mut got: Vec<Cycle> = generate_reduced_cycles(&alts).collect();
            let mut want: Vec<Cycle> = enumerate_all(n).collect();
            assert_eq!(got.len(), want.len());
            got.sort_by(|a, b| a.vertices().cmp(b.vertices()));
            want.sort_by(|a, b| a.vertices().cmp(b.vertices()));
            assert_eq!(got, want);
        }
    }

    #[test]
    fn generator_reference_only() {
        let y = Cycle::descending(6);
        let got: Vec<Cycle> = generate_reduced_cycles(&Alternatives::reference_only(&y)).collect();
        assert_eq!(got, vec![y]);
    }

    #[test]
    fn generator_bounded_by_product() {
        for seed in 0..20 {
            let m = gen_random_gap(8, seed, 0.0, 1.0).unwrap();
            let y = Cycle::descending(8);
            let alts = Alternatives::from_eps(&m, &y, &[0.3; 8]).unwrap();
            let count = generate_reduced_cycles(&alts).count() as u64;
            let bound: u64 = alts.counts().iter().map(|&c| c as u64).product();
            assert!(count >= 1 && count <= bound);
            // every generated cycle uses admissible edges only, and no repeats
            let all: Vec<Cycle> = generate_reduced_cycles(&alts).collect();
            let mut dedup = all.clone();
            dedup.sort_by(|a, b| a.vertices().cmp(b.vertices()));
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
            for c in &all {
                assert!(c.edges().all(|(a, b)| alts.successors(a).contains(&b)));
            }
        }
    }

    #[test]
    fn frontier_matches_oracle_unrestricted() {
        let cfg = SolveConfig::unrestricted();
        for seed in 0..20 {
            let m = gen_random_gap(6, seed, -1.0, 1.0).unwrap();
            let r = frontier_solve(&m, &cfg).unwrap();
            assert_eq!(r.cost, oracle_min(&m));
            assert_eq!(r.certificate, Certificate::FixpointInReducedSpace);
            assert_eq!(r.cost, cycle_cost(&m, &r.best).unwrap());
            assert!(r.history.windows(2).all(|w| w[1] < w[0]));
        }
    }

    #[test]
    fn greedy_optimal_terminates_in_one_pass() {
        let pts: Vec<(f64, f64)> = (0..6).map(|k| (k as f64, 0.0)).collect();
        let m = from_points(&PointSet::new(pts).unwrap());
        let r = frontier_solve(&m, &SolveConfig::default()).unwrap();
        assert_eq!(r.history.len(), 1);
        assert_eq!(r.cost, 10.0);
        assert_eq!(r.certificate, Certificate::FixpointInReducedSpace);
    }

    #[test]
    fn solve_is_deterministic() {
        let m = gen_random_gap(8, 42, 0.0, 1.0).unwrap();
        let cfg = SolveConfig::default();
        assert_eq!(frontier_solve(&m, &cfg).unwrap(), frontier_solve(&m, &cfg).unwrap());
    }

    #[test]
    fn pruning_keeps_tsp_result() {
        for seed in 0..10 {
            let pts = crate::instance::gen_random_points(8, seed, 0.0, 100.0).unwrap();
            let m = from_points(&pts);
            let plain = frontier_solve(&m, &SolveConfig::unrestricted()).unwrap();
            let cfg = SolveConfig { tsp_pruning: true, ..SolveConfig::unrestricted() };
            let pruned = frontier_solve(&m, &cfg).unwrap();
            assert_eq!(pruned.cost, plain.cost);
            assert!(pruned.cycles_examined <= plain.cycles_examined);
        }
    }

    #[test]
    fn cycle_cap_is_reported() {
        let m = gen_random_gap(8, 3, 0.0, 1.0).unwrap();
        let cfg = SolveConfig { max_generated_cycles: 5, ..SolveConfig::unrestricted() };
        let r = frontier_solve(&m, &cfg).unwrap();
        assert_eq!(r.certificate, Certificate::CapExhausted);
        assert!(r.cycles_examined <= BigUint::from(5u32));
        let bad = SolveConfig { eps_lo: 1.0, eps_hi: 0.0, ..SolveConfig::default() };
        assert!(frontier_solve(&m, &bad).is_err());
    }

    #[test]
    fn verify_outcomes() {
        let m = CostMatrix::new(2, vec![vec![INF, 1.0], vec![1.0, INF]], Kind::SymmetricTsp).unwrap();
        assert_eq!(
            verify_optimal(&m, &Cycle::descending(2), &SolveConfig::default()),
            Ok(Verification::ConfirmedLocal)
        );
        for seed in 0..10 {
            let m = gen_random_gap(7, seed, 0.0, 1.0).unwrap();
            let opt = brute_force_solve(&m, 11).unwrap();
            let v = verify_optimal(&m, &opt.best, &SolveConfig::default()).unwrap();
            assert_eq!(v, Verification::ConfirmedLocal);
            let worst = enumerate_all(7)
                .max_by(|a, b| cycle_cost(&m, a).unwrap().total_cmp(&cycle_cost(&m, b).unwrap()))
                .unwrap();
            match verify_optimal(&m, &worst, &SolveConfig::default()).unwrap() {
                Verification::Improved(c) => {
                    assert!(cycle_cost(&m, &c).unwrap() < cycle_cost(&m, &worst).unwrap())
                }
                other => panic!("worst cycle not improved: {other:?}"),
            }
        }
        assert!(verify_optimal(&m, &Cycle::descending(3), &SolveConfig::default()).is_err());
    }

    #[test]
    fn landscape_rows() {
        let m = gen_random_gap(5, 6, 0.0, 1.0).unwrap();
        let reference = Cycle::parse("3,5,1,4,2,3").unwrap();
        let rows = landscape(&m, &reference, 11).unwrap();
        assert_eq!(rows.len(), 24);
        assert_eq!(rows[0].cost, cycle_cost(&m, &reference).unwrap());
        assert_eq!(rows[0].shared_edges, 5);
        let min = rows.iter().map(|r| r.cost).fold(INF, f64::min);
        assert_eq!(min, brute_force_solve(&m, 11).unwrap().cost);
        let mut hist = vec![0u64; 6];
        for r in &rows {
            hist[r.shared_edges] += 1;
        }
        assert_eq!(hist, coincidence_histogram(&reference, 11).unwrap());
        assert!(landscape(&uniform(12, 1.0), &Cycle::descending(12), 11).is_err());
    }

    #[test]
    fn solve_report_matches_estimate() {
        let m = gen_random_gap(6, 1, 0.0, 1.0).unwrap();
        let cfg = SolveConfig { eps_lo: -1.0, eps_hi: -1.0, ..SolveConfig::default() };
        let r = frontier_solve(&m, &cfg).unwrap();
        let (rm, _) = relabel_to_first(&m, &r.best).unwrap();
        let alts = estimate_alternatives(&rm, &Cycle::descending(6), 0.01, DEFAULT_MAX_ITER).unwrap();
        assert_eq!(r.report.alternatives, alts.counts());
    }
}
