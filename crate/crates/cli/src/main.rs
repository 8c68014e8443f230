use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gapcycle::enumeration::{rank, unrank, DEFAULT_BRUTE_FORCE_CAP};
use gapcycle::instance::{
    cycle_cost, from_points, gen_random_gap, gen_random_points, gen_unique_cost, parse_instance, write_instance,
};
use gapcycle::ipgap::{build_model, export_lp};
use gapcycle::numfmt::fmt_g17;
use gapcycle::reduction::{estimate_alternatives_from, reduction_report, DEFAULT_MAX_ITER};
use gapcycle::solver::{
    brute_force_solve_threads, frontier_solve, frontier_solve_from, landscape, verify_optimal, SolveConfig,
    SolveResult, Verification,
};
use gapcycle::sortedm::{build_sorted_m, first_column_check, frontier_of, greedy_initial_cycle};
use gapcycle::viz::{export_landscape_csv, render_cost_matrix, render_sorted_m, render_vertex_index};
use gapcycle::{CostMatrix, Cycle};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

/// Exact and reduced-space solvers for assignment and travelling salesman cycles.
#[derive(Debug, Parser, Serialize)]
#[command(name = "gapcycle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write a JSON run manifest (flags, seed, input and output digests) here.
    #[arg(long, global = true)]
    #[serde(skip)]
    manifest: Option<PathBuf>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Generate an instance.
    Gen(GenArgs),
    /// Find a minimum-cost cycle.
    Solve(SolveArgs),
    /// Check a claimed optimum against its reduced neighbourhood.
    Verify(VerifyArgs),
    /// Print the rank of a cycle.
    Rank(RankArgs),
    /// Print the cycle of a given rank.
    Unrank(UnrankArgs),
    /// Print each row's outgoing edges sorted by cost.
    Sortedm(SortedmArgs),
    /// Estimate alternatives around a cycle and print the reduction report.
    Reduce(ReduceArgs),
    /// Write the assignment IP in LP format.
    ExportLp(ExportLpArgs),
    /// Render a PGM/PPM image.
    Render(RenderArgs),
    /// Tabulate cost and shared edges of every cycle.
    Landscape(LandscapeArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum GenKind {
    RandomGap,
    Euclidean,
    UniqueCost,
}

#[derive(Debug, Args, Serialize)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Lower bound of costs (random-gap) or coordinates (euclidean).
    #[arg(long, allow_negative_numbers = true)]
    lo: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    hi: Option<f64>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
enum Method {
    Brute,
    Frontier,
}

#[derive(Debug, Args, Serialize)]
struct SearchArgs {
    #[arg(long, default_value_t = -0.9, allow_negative_numbers = true)]
    eps_lo: f64,
    /// Lower bound applied to every vertex's ε; `inf` searches the whole space.
    #[arg(long, default_value_t = 0.6, allow_negative_numbers = true)]
    eps_hi: f64,
    #[arg(long, default_value_t = 0.01)]
    eps_step: f64,
    #[arg(long, default_value_t = SolveConfig::default().max_generated_cycles)]
    max_cycles: u64,
    #[arg(long, default_value_t = SolveConfig::default().max_outer_iterations)]
    max_iter: usize,
    /// Skip partial paths already as long as the incumbent (symmetric instances only).
    #[arg(long)]
    tsp_pruning: bool,
}

impl SearchArgs {
    fn config(&self) -> SolveConfig {
        SolveConfig {
            eps_lo: self.eps_lo,
            eps_hi: self.eps_hi,
            eps_step: self.eps_step,
            max_generated_cycles: self.max_cycles,
            max_outer_iterations: self.max_iter,
            tsp_pruning: self.tsp_pruning,
            ..SolveConfig::default()
        }
    }
}

#[derive(Debug, Args, Serialize)]
struct SolveArgs {
    instance: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Frontier)]
    method: Method,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
    cap: usize,
    /// Greedy start vertex (default n).
    #[arg(long)]
    greedy_start: Option<usize>,
    /// Start the frontier search from this cycle instead of the greedy one.
    #[arg(long)]
    seed_cycle: Option<PathBuf>,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Debug, Args, Serialize)]
struct VerifyArgs {
    instance: PathBuf,
    #[arg(long)]
    cycle: PathBuf,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Debug, Args, Serialize)]
struct RankArgs {
    /// Comma-separated cycle starting and ending at n, e.g. `5,4,3,2,1,5`.
    cycle: String,
}

#[derive(Debug, Args, Serialize)]
struct UnrankArgs {
    #[arg(long)]
    j: String,
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Args, Serialize)]
struct SortedmArgs {
    instance: PathBuf,
    /// Also print the frontier positions of this cycle.
    #[arg(long)]
    cycle: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
struct ReduceArgs {
    instance: PathBuf,
    /// Reference cycle (default: greedy from vertex n).
    #[arg(long)]
    cycle: Option<PathBuf>,
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    eps_lo: f64,
    /// Widen every ε to at least this value after estimation.
    #[arg(long, allow_negative_numbers = true)]
    eps_hi: Option<f64>,
    #[arg(long, default_value_t = 0.01)]
    eps_step: f64,
}

#[derive(Debug, Args, Serialize)]
struct ExportLpArgs {
    instance: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum RenderWhat {
    Matrix,
    Sortedm,
    VertexIndex,
}

#[derive(Debug, Args, Serialize)]
struct RenderArgs {
    instance: PathBuf,
    #[arg(long, value_enum, default_value_t = RenderWhat::Matrix)]
    what: RenderWhat,
    /// Frontier cycle for `sortedm` (default: greedy from vertex n).
    #[arg(long)]
    cycle: Option<PathBuf>,
    /// Cycle drawn in green over the frontier.
    #[arg(long)]
    candidate: Option<PathBuf>,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Debug, Args, Serialize)]
struct LandscapeArgs {
    instance: PathBuf,
    /// Reference cycle (default: `n, n-1, ..., 1, n`).
    #[arg(long)]
    reference: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
    cap: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct RunManifest {
    command: String,
    flags: serde_json::Value,
    seed: Option<u64>,
    version: &'static str,
    input_digests: BTreeMap<String, String>,
    output_digests: BTreeMap<String, String>,
}

#[derive(Default)]
struct Run {
    inputs: BTreeMap<String, String>,
    outputs: BTreeMap<String, String>,
    stdout: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Run {
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.inputs.insert(path.display().to_string(), sha256_hex(&bytes));
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
    }

    fn instance(&mut self, path: &Path) -> Result<CostMatrix> {
        let text = self.read(path)?;
        parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
    }

    fn cycle(&mut self, path: &Path) -> Result<Cycle> {
        let text = self.read(path)?;
        let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or_default();
        Cycle::parse(line).with_context(|| format!("parsing cycle in {}", path.display()))
    }

    fn cycle_or_greedy(&mut self, path: Option<&PathBuf>, m: &CostMatrix) -> Result<Cycle> {
        match path {
            Some(p) => self.cycle(p),
            None => Ok(greedy_initial_cycle(&build_sorted_m(m), m.n())?),
        }
    }

    fn print(&mut self, text: &str) {
        self.stdout.push_str(text);
        if !text.ends_with('\n') {
            self.stdout.push('\n');
        }
    }

    fn emit(&mut self, output: Option<&PathBuf>, bytes: &[u8]) -> Result<()> {
        match output {
            Some(path) => {
                std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))?;
                self.outputs.insert(path.display().to_string(), sha256_hex(bytes));
                Ok(())
            }
            None => {
                self.print(std::str::from_utf8(bytes).context("binary output needs --output")?);
                Ok(())
            }
        }
    }
}

fn solve_json(r: &SolveResult) -> serde_json::Value {
    let certificate = format!("{:?}", r.certificate);
    json!({
        "best": r.best.to_string(),
        "cost": r.cost,
        "certificate": certificate,
        "cycles_examined": r.cycles_examined.to_string(),
        "history": r.history,
        "report": r.report,
    })
}

fn run(cmd: &Command, run: &mut Run) -> Result<()> {
    match cmd {
        Command::Gen(a) => {
            let m = match a.kind {
                GenKind::RandomGap => gen_random_gap(a.n, a.seed, a.lo.unwrap_or(0.0), a.hi.unwrap_or(1.0))?,
                GenKind::Euclidean => {
                    from_points(&gen_random_points(a.n, a.seed, a.lo.unwrap_or(0.0), a.hi.unwrap_or(100.0))?)
                }
                GenKind::UniqueCost => gen_unique_cost(a.n)?,
            };
            run.emit(a.output.as_ref(), write_instance(&m).as_bytes())?;
        }
        Command::Solve(a) => {
            let m = run.instance(&a.instance)?;
            let cfg = SolveConfig {
                brute_force_cap: a.cap,
                greedy_start: a.greedy_start,
                threads: a.threads,
                ..a.search.config()
            };
            let r = match a.method {
                Method::Brute => brute_force_solve_threads(&m, a.cap, a.threads.max(1))?,
                Method::Frontier => match &a.seed_cycle {
                    Some(p) => {
                        let start = run.cycle(p)?;
                        frontier_solve_from(&m, &start, &cfg)?
                    }
                    None => frontier_solve(&m, &cfg)?,
                },
            };
            run.print(&serde_json::to_string_pretty(&solve_json(&r))?);
        }
        Command::Verify(a) => {
            let m = run.instance(&a.instance)?;
            let claimed = run.cycle(&a.cycle)?;
            let claimed_cost = cycle_cost(&m, &claimed)?;
            let out = match verify_optimal(&m, &claimed, &a.search.config())? {
                Verification::ConfirmedLocal => json!({"status": "ConfirmedLocal", "cost": claimed_cost}),
                Verification::CapExhausted => json!({"status": "CapExhausted", "cost": claimed_cost}),
                Verification::Improved(c) => json!({
                    "status": "Improved",
                    "cost": claimed_cost,
                    "improved": c.to_string(),
                    "improved_cost": cycle_cost(&m, &c)?,
                }),
            };
            run.print(&serde_json::to_string_pretty(&out)?);
        }
        Command::Rank(a) => {
            let r = rank(&Cycle::parse(&a.cycle)?)?;
            run.print(&r.value().to_string());
        }
        Command::Unrank(a) => {
            let j: BigUint = a.j.trim().parse().with_context(|| format!("--j {:?} is not a natural number", a.j))?;
            run.print(&unrank(&j, a.n)?.to_string());
        }
        Command::Sortedm(a) => {
            let m = run.instance(&a.instance)?;
            let s = build_sorted_m(&m);
            let mut text = String::new();
            for v in 1..=m.n() {
                let cells: Vec<String> = s.row(v).iter().map(|e| format!("{}:{}", fmt_g17(e.cost), e.vertex)).collect();
                text.push_str(&format!("{v}: {}\n", cells.join(" ")));
            }
            let (cycle, diag) = first_column_check(&s);
            match cycle {
                Some(c) => text.push_str(&format!("first-column: {diag:?} {c}\n")),
                None => text.push_str(&format!("first-column: {diag:?}\n")),
            }
            if let Some(p) = &a.cycle {
                let y = run.cycle(p)?;
                let f = frontier_of(&s, &y)?;
                let pos: Vec<String> = f.positions().iter().map(usize::to_string).collect();
                text.push_str(&format!("frontier: {}\n", pos.join(" ")));
            }
            run.print(&text);
        }
        Command::Reduce(a) => {
            let m = run.instance(&a.instance)?;
            let y = run.cycle_or_greedy(a.cycle.as_ref(), &m)?;
            let mut alts = estimate_alternatives_from(&m, &y, a.eps_lo, a.eps_step, DEFAULT_MAX_ITER)?;
            if let Some(floor) = a.eps_hi {
                alts = alts.widened(&m, floor)?;
            }
            run.print(&serde_json::to_string_pretty(&reduction_report(&alts))?);
        }
        Command::ExportLp(a) => {
            let m = run.instance(&a.instance)?;
            run.emit(a.output.as_ref(), export_lp(&build_model(&m)).as_bytes())?;
        }
        Command::Render(a) => {
            let m = run.instance(&a.instance)?;
            let bytes = match a.what {
                RenderWhat::Matrix => render_cost_matrix(&m)?.to_pgm(),
                RenderWhat::VertexIndex => render_vertex_index(&build_sorted_m(&m)).to_pgm(),
                RenderWhat::Sortedm => {
                    let s = build_sorted_m(&m);
                    let y = run.cycle_or_greedy(a.cycle.as_ref(), &m)?;
                    let candidate = a.candidate.as_ref().map(|p| run.cycle(p)).transpose()?;
                    render_sorted_m(&s, &frontier_of(&s, &y)?, candidate.as_ref())?.to_ppm()
                }
            };
            run.emit(Some(&a.output), &bytes)?;
        }
        Command::Landscape(a) => {
            let m = run.instance(&a.instance)?;
            let reference = match &a.reference {
                Some(p) => run.cycle(p)?,
                None => Cycle::descending(m.n()),
            };
            let rows = landscape(&m, &reference, a.cap)?;
            run.emit(a.output.as_ref(), export_landscape_csv(&rows).as_bytes())?;
        }
    }
    Ok(())
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Gen(_) => "gen",
        Command::Solve(_) => "solve",
        Command::Verify(_) => "verify",
        Command::Rank(_) => "rank",
        Command::Unrank(_) => "unrank",
        Command::Sortedm(_) => "sortedm",
        Command::Reduce(_) => "reduce",
        Command::ExportLp(_) => "export-lp",
        Command::Render(_) => "render",
        Command::Landscape(_) => "landscape",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut state = Run::default();
    let result = run(&cli.command, &mut state).and_then(|()| {
        print!("{}", state.stdout);
        if let Some(path) = &cli.manifest {
            if !state.stdout.is_empty() {
                state.outputs.insert("stdout".into(), sha256_hex(state.stdout.as_bytes()));
            }
            let flags = serde_json::to_value(&cli.command)?;
            let manifest = RunManifest {
                command: command_name(&cli.command).into(),
                flags: flags.as_object().and_then(|o| o.values().next().cloned()).unwrap_or(flags),
                seed: match &cli.command {
                    Command::Gen(a) if !matches!(a.kind, GenKind::UniqueCost) => Some(a.seed),
                    _ => None,
                },
                version: env!("CARGO_PKG_VERSION"),
                input_digests: std::mem::take(&mut state.inputs),
                output_digests: std::mem::take(&mut state.outputs),
            };
            let text = serde_json::to_string_pretty(&manifest)? + "\n";
            if let Err(e) = std::fs::write(path, text) {
                bail!("writing manifest {}: {e}", path.display());
            }
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
