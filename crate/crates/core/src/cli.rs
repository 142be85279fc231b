//! Command-line front end.
//!
//! Exit codes: 0 success, 64 usage error, 65 malformed or invalid instance,
//! 66 unreadable input, 73 unwritable output. `solve` exits 0/1/2 for
//! FOUND/INFEASIBLE/GAVE_UP; `verify-infeasible` exits 0 when the instance
//! has no independent transversal, 1 when one is found, 2 when the budget
//! runs out. Size guards exit 3; `bench` exits 1 when a criterion fails.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis::{
    dependency_count, exact_block_probability, verify_negative_correlation, AnalysisError, DependencyMode,
};
use crate::bench::{run_acceptance, summary_json, BenchConfig};
use crate::conditions::{
    check_profile, cond_coupon, cond_coupon_dp, cond_transversals, cor_asym_log4, cor_star, cor_symmetric,
    local_sufficient, prop8_bounds, prop8_reports, ConditionError, ConditionReport,
};
use crate::constructions::{
    build_prop4, build_prop6, build_prop7, build_prop8_greedy, random_cover, verify_counting_direction, BaseModel,
    Construction, ConstructionError, CountingOutcome, RandomCoverParams, FORCE_ENV,
};
use crate::cover::{validate_cover, CoverInstance, InstanceFile, Side};
use crate::report;
use crate::solvers::{
    default_round_cap, lift_hyper_transversal, reduce_to_hypergraph, solve_exact, solve_hypergraph_it,
    solve_moser_tardos, HyperMode, SolveOutcome, SolveStats, SolveStatus, DEFAULT_NODE_BUDGET,
};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_CANT_CREATE: i32 = 73;
pub const EXIT_SIZE_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "transversal-lab", version, about = "Independent transversals of bipartite correspondence covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the cover axioms and print the degree profile.
    Validate { instance: PathBuf },
    /// Evaluate a sufficiency condition.
    Check(CheckArgs),
    /// Search for an independent transversal.
    Solve(SolveArgs),
    /// Generate an instance.
    Construct(ConstructArgs),
    /// Run exact search and report whether the instance is infeasible.
    VerifyInfeasible {
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        timing: bool,
    },
    /// Exact event analysis of an instance.
    Analyze(AnalyzeArgs),
    /// Run the acceptance suite.
    Bench {
        #[arg(long, value_enum, default_value_t = Suite::Acceptance)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated criterion numbers to run instead of all.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Acceptance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CondChoice {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    Local,
    Prop8,
    Symmetric,
    Log4,
    Star,
    /// All three conditions against an instance's profile.
    Profile,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long, value_enum)]
    cond: CondChoice,
    #[arg(long = "kA")]
    k_a: Option<u64>,
    #[arg(long = "kB")]
    k_b: Option<u64>,
    #[arg(long = "dA")]
    d_a: Option<u64>,
    #[arg(long = "dB")]
    d_b: Option<u64>,
    #[arg(long = "deltaA")]
    delta_a: Option<u64>,
    #[arg(long = "deltaB")]
    delta_b: Option<u64>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    k: Option<u64>,
    /// Number of A-vertices for `prop8`; without it only the bounds are printed.
    #[arg(long = "a-size")]
    a_size: Option<u64>,
    /// Instance whose profile feeds `--cond profile`.
    #[arg(long)]
    instance: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algo {
    Exact,
    Mt,
    Hyper,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum HyperSearch {
    Exact,
    Randomized,
}

#[derive(Args, Debug)]
struct SolveArgs {
    instance: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Exact)]
    algo: Algo,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Resampling cap; defaults to 1000 times the number of A-vertices.
    #[arg(long = "round-cap")]
    round_cap: Option<u64>,
    /// Search used on the hypergraph for `--algo hyper`.
    #[arg(long = "hyper-mode", value_enum, default_value_t = HyperSearch::Exact)]
    hyper_mode: HyperSearch,
    /// Include wall time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Prop {
    #[value(name = "4")]
    Four,
    #[value(name = "6")]
    Six,
    #[value(name = "7")]
    Seven,
    #[value(name = "8")]
    Eight,
    Random,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BaseChoice {
    Complete,
    Er,
    Bounded,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    prop: Prop,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long = "a-size")]
    a_size: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; the instance goes to stdout when absent.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    /// Lift size guards (also `TRANSVERSAL_LAB_FORCE=1`).
    #[arg(long)]
    force: bool,
    #[arg(long = "a-count", default_value_t = 10)]
    a_count: usize,
    #[arg(long = "b-count", default_value_t = 10)]
    b_count: usize,
    #[arg(long = "kA", default_value_t = 3)]
    k_a: usize,
    #[arg(long = "kB", default_value_t = 3)]
    k_b: usize,
    #[arg(long, default_value_t = 1.0)]
    density: f64,
    #[arg(long, value_enum, default_value_t = BaseChoice::Complete)]
    base: BaseChoice,
    /// Edge probability for `--base er`.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Degree bound for `--base bounded`.
    #[arg(long, default_value_t = 2)]
    delta: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AnalyzeCheck {
    Blockprob,
    Correlation,
    Deps,
    /// Exhaustive check that small DP covers are solvable (no instance).
    Counting,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DepsMode {
    Cond2,
    Cond3,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[arg(long, value_enum)]
    check: AnalyzeCheck,
    instance: Option<PathBuf>,
    /// Base vertex id; all A-vertices when absent.
    #[arg(long)]
    vertex: Option<u64>,
    #[arg(long, value_enum)]
    mode: Option<DepsMode>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long = "a-size")]
    a_size: Option<usize>,
}

/// A failed command: message for stderr and exit code.
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

type CmdResult = Result<(Value, i32), Failure>;

/// Run the command line and return the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run_with(argv, &mut out, &mut err)
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Validate { instance } => validate(&instance),
        Command::Check(args) => check(&args),
        Command::Solve(args) => solve(&args),
        Command::Construct(args) => construct(&args),
        Command::VerifyInfeasible { instance, budget, timing } => verify_infeasible(&instance, budget, timing),
        Command::Analyze(args) => analyze(&args),
        Command::Bench { suite: Suite::Acceptance, seed, only } => bench(seed, &only, err),
    };
    match result {
        Ok((value, code)) => {
            let _ = writeln!(out, "{}", report::pretty(&value));
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_file(path: &Path) -> Result<InstanceFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| fail(EXIT_NO_INPUT, format!("{}: {e}", path.display())))?;
    InstanceFile::from_json(&text).map_err(|e| fail(EXIT_DATA, format!("{}: malformed instance: {e}", path.display())))
}

fn load(path: &Path) -> Result<CoverInstance, Failure> {
    let file = read_file(path)?;
    validate_cover(&file).map_err(|e| fail(EXIT_DATA, format!("{}: {} ({e})", path.display(), e.kind())))
}

fn validate(path: &Path) -> CmdResult {
    let file = read_file(path)?;
    match validate_cover(&file) {
        Ok(inst) => Ok((
            json!({
                "valid": true,
                "base_vertices": report::int(inst.num_base() as u64),
                "cover_vertices": report::int(inst.num_cover() as u64),
                "profile": report::profile(&inst.degree_profile()),
            }),
            0,
        )),
        Err(e) => Ok((json!({ "valid": false, "error": e.kind(), "message": e.to_string() }), EXIT_DATA)),
    }
}

fn need(value: Option<u64>, flag: &str) -> Result<u64, Failure> {
    value.ok_or_else(|| fail(EXIT_USAGE, format!("--{flag} is required for this condition")))
}

fn cond_err(e: ConditionError) -> Failure {
    fail(EXIT_USAGE, e.to_string())
}

fn one(r: Result<ConditionReport, ConditionError>) -> CmdResult {
    Ok((report::condition(&r.map_err(cond_err)?), 0))
}

fn check(a: &CheckArgs) -> CmdResult {
    match a.cond {
        CondChoice::One => one(cond_transversals(need(a.k_a, "kA")?, need(a.k_b, "kB")?, need(a.d_a, "dA")?, need(a.d_b, "dB")?)),
        CondChoice::Two => one(cond_coupon(need(a.k_a, "kA")?, need(a.k_b, "kB")?, need(a.d_a, "dA")?, need(a.d_b, "dB")?)),
        CondChoice::Three => one(cond_coupon_dp(
            need(a.k_a, "kA")?,
            need(a.k_b, "kB")?,
            need(a.delta_a, "deltaA")?,
            need(a.delta_b, "deltaB")?,
        )),
        CondChoice::Local => {
            let eps = a.epsilon.ok_or_else(|| fail(EXIT_USAGE, "--epsilon is required"))?;
            one(local_sufficient(need(a.d_a, "dA")?, need(a.d_b, "dB")?, eps, a.k_a, a.k_b))
        }
        CondChoice::Symmetric => {
            let eps = a.epsilon.ok_or_else(|| fail(EXIT_USAGE, "--epsilon is required"))?;
            one(cor_symmetric(need(a.d_a, "dA")?, eps, need(a.k, "k")?))
        }
        CondChoice::Log4 => {
            let eps = a.epsilon.ok_or_else(|| fail(EXIT_USAGE, "--epsilon is required"))?;
            one(cor_asym_log4(need(a.delta_a, "deltaA")?, eps, need(a.k_a, "kA")?, need(a.k_b, "kB")?))
        }
        CondChoice::Star => one(cor_star(need(a.k, "k")?, need(a.d_a, "dA")?, need(a.d_b, "dB")?)),
        CondChoice::Prop8 => {
            let k = need(a.k, "k")?;
            match a.a_size {
                Some(n) => {
                    let [lo, hi] = prop8_reports(k, n).map_err(cond_err)?;
                    Ok((json!([report::condition(&lo), report::condition(&hi)]), 0))
                }
                None => {
                    let b = prop8_bounds(k).map_err(cond_err)?;
                    Ok((json!({ "k": report::int(k), "lower": report::exact(&b.lower), "upper": report::float(b.upper) }), 0))
                }
            }
        }
        CondChoice::Profile => {
            let path = a.instance.as_ref().ok_or_else(|| fail(EXIT_USAGE, "--instance is required"))?;
            let inst = load(path)?;
            let prof = inst.degree_profile();
            let reports: Vec<Value> = check_profile(&prof).iter().map(report::condition).collect();
            Ok((json!({ "profile": report::profile(&prof), "reports": reports }), 0))
        }
    }
}

fn run_solver(inst: &CoverInstance, a: &SolveArgs) -> SolveOutcome {
    match a.algo {
        Algo::Exact => solve_exact(inst, a.budget),
        Algo::Mt => solve_moser_tardos(inst, a.seed, Some(a.round_cap.unwrap_or_else(|| default_round_cap(inst)))),
        Algo::Hyper => {
            let hg = match reduce_to_hypergraph(inst, crate::solvers::hypergraph::DEFAULT_MAX_EDGES) {
                Ok(hg) => hg,
                Err(e) => {
                    let mut out = SolveOutcome::<crate::cover::Transversal> {
                        status: SolveStatus::GaveUp,
                        solution: None,
                        stats: SolveStats::default(),
                        notes: vec![],
                    };
                    out.notes.push(format!("reduction failed: {e}"));
                    return out;
                }
            };
            let mode = match a.hyper_mode {
                HyperSearch::Exact => HyperMode::Exact { node_budget: a.budget },
                HyperSearch::Randomized => HyperMode::Randomized { seed: a.seed, round_cap: a.round_cap },
            };
            let h = solve_hypergraph_it(&hg, mode);
            let mut notes = h.notes.clone();
            notes.push(format!("hypergraph: {} parts, {} edges", hg.num_parts(), hg.edges().len()));
            let (status, solution) = match &h.solution {
                Some(choice) => match lift_hyper_transversal(inst, &hg, choice) {
                    Ok(t) => (SolveStatus::Found, Some(t)),
                    Err(e) => {
                        notes.push(format!("lift failed: {e}"));
                        (SolveStatus::GaveUp, None)
                    }
                },
                None => (h.status, None),
            };
            SolveOutcome { status, solution, stats: h.stats, notes }
        }
    }
}

fn solve(a: &SolveArgs) -> CmdResult {
    let inst = load(&a.instance)?;
    let out = run_solver(&inst, a);
    let name = match a.algo {
        Algo::Exact => "exact",
        Algo::Mt => "mt",
        Algo::Hyper => "hyper",
    };
    Ok((report::solve_outcome(&inst, name, &out, a.timing), out.status.exit_code()))
}

fn verify_infeasible(path: &Path, budget: u64, timing: bool) -> CmdResult {
    let inst = load(path)?;
    let out = solve_exact(&inst, budget);
    let code = match out.status {
        SolveStatus::Infeasible => 0,
        SolveStatus::Found => 1,
        SolveStatus::GaveUp => 2,
    };
    let mut v = report::solve_outcome(&inst, "exact", &out, timing);
    v["infeasible"] = json!(out.status == SolveStatus::Infeasible);
    Ok((v, code))
}

fn construction_err(e: ConstructionError) -> Failure {
    match e {
        ConstructionError::SizeGuard { .. } => fail(EXIT_SIZE_GUARD, e.to_string()),
        ConstructionError::InvalidParameter(_) => fail(EXIT_USAGE, e.to_string()),
    }
}

fn force_requested(flag: bool) -> bool {
    flag || std::env::var(FORCE_ENV).is_ok_and(|v| !v.is_empty() && v != "0")
}

fn small(value: Option<u64>, flag: &str) -> Result<usize, Failure> {
    let v = need(value, flag)?;
    usize::try_from(v).map_err(|_| fail(EXIT_USAGE, format!("--{flag} is too large")))
}

fn construct(a: &ConstructArgs) -> CmdResult {
    let force = force_requested(a.force);
    let mut summary = json!({});
    let (instance, declared) = match a.prop {
        Prop::Four => {
            let k = u32::try_from(need(a.k, "k")?).map_err(|_| fail(EXIT_USAGE, "--k is too large"))?;
            let c = build_prop4(k, force).map_err(construction_err)?;
            (c.instance, Some(c.declared))
        }
        Prop::Six => {
            let Construction { instance, declared } = build_prop6(small(a.k, "k")?, force).map_err(construction_err)?;
            (instance, Some(declared))
        }
        Prop::Seven => {
            let c = build_prop7(small(a.d, "d")?, force).map_err(construction_err)?;
            (c.instance, Some(c.declared))
        }
        Prop::Eight => {
            let (c, trace) =
                build_prop8_greedy(small(a.k, "k")?, small(a.a_size, "a-size")?, force).map_err(construction_err)?;
            summary["trace"] = json!({
                "remaining": trace.remaining.iter().map(|&r| report::int(r)).collect::<Vec<_>>(),
                "chosen_system": trace.chosen,
                "fraction": report::exact(&trace.fraction),
                "respects_fraction": trace.respects_fraction(),
            });
            (c.instance, Some(c.declared))
        }
        Prop::Random => {
            let base = match a.base {
                BaseChoice::Complete => BaseModel::Complete,
                BaseChoice::Er => BaseModel::ErdosRenyi { p: a.p },
                BaseChoice::Bounded => BaseModel::BoundedDegree { delta: a.delta },
            };
            let params = RandomCoverParams::uniform(a.a_count, a.b_count, a.k_a, a.k_b, base, a.density, a.seed);
            (random_cover(&params).map_err(construction_err)?, None)
        }
    };
    let file = serde_json::to_value(instance.to_file()).expect("instance serializes");
    match &a.output {
        None => Ok((file, 0)),
        Some(path) => {
            fs::write(path, report::pretty(&file) + "\n")
                .map_err(|e| fail(EXIT_CANT_CREATE, format!("{}: {e}", path.display())))?;
            summary["output"] = json!(path.display().to_string());
            summary["profile"] = report::profile(&instance.degree_profile());
            if let Some(d) = declared {
                summary["declared_profile"] = report::profile(&d);
            }
            Ok((summary, 0))
        }
    }
}

fn analysis_err(e: AnalysisError) -> Failure {
    match e {
        AnalysisError::SizeGuard { .. } => fail(EXIT_SIZE_GUARD, e.to_string()),
        AnalysisError::NotOnSideA(_) => fail(EXIT_USAGE, e.to_string()),
    }
}

fn analyze(a: &AnalyzeArgs) -> CmdResult {
    if let AnalyzeCheck::Counting = a.check {
        let k = a.k.ok_or_else(|| fail(EXIT_USAGE, "--k is required"))?;
        let n = a.a_size.ok_or_else(|| fail(EXIT_USAGE, "--a-size is required"))?;
        let out = verify_counting_direction(k, n, DEFAULT_NODE_BUDGET).map_err(construction_err)?;
        let (v, code) = match out {
            CountingOutcome::OutOfRange => (json!({ "out_of_range": true }), 0),
            CountingOutcome::Checked { covers, all_feasible } => (
                json!({ "out_of_range": false, "covers_checked": report::int(covers), "all_feasible": all_feasible }),
                if all_feasible { 0 } else { 1 },
            ),
        };
        let mut v = v;
        v["k"] = report::int(k as u64);
        v["a_size"] = report::int(n as u64);
        return Ok((v, code));
    }
    let path = a.instance.as_ref().ok_or_else(|| fail(EXIT_USAGE, "an instance file is required"))?;
    let inst = load(path)?;
    let vertices: Vec<usize> = match a.vertex {
        Some(id) => {
            let v = inst.base_index(id).ok_or_else(|| fail(EXIT_USAGE, format!("no base vertex with id {id}")))?;
            if inst.side(v) != Side::A {
                return Err(fail(EXIT_USAGE, format!("base vertex {id} is not on side A")));
            }
            vec![v]
        }
        None => inst.a_vertices().collect(),
    };
    let mut rows = Vec::new();
    for v in vertices {
        let row = match a.check {
            AnalyzeCheck::Blockprob => json!({
                "vertex": inst.base_id(v),
                "block_probability": inst.part(v).iter()
                    .map(|&c| (inst.cover_id(c).to_string(), report::exact(&exact_block_probability(&inst, c))))
                    .collect::<serde_json::Map<_, _>>(),
            }),
            AnalyzeCheck::Correlation => report::correlation(&inst, &verify_negative_correlation(&inst, v).map_err(analysis_err)?),
            AnalyzeCheck::Deps => {
                let modes = match a.mode {
                    Some(DepsMode::Cond2) => vec![DependencyMode::Cond2],
                    Some(DepsMode::Cond3) => vec![DependencyMode::Cond3],
                    None => vec![DependencyMode::Cond2, DependencyMode::Cond3],
                };
                let mut list = Vec::new();
                for m in modes {
                    list.push(report::dependency(&inst, &dependency_count(&inst, v, m).map_err(analysis_err)?));
                }
                json!(list)
            }
            AnalyzeCheck::Counting => unreachable!("handled above"),
        };
        rows.push(row);
    }
    Ok((json!({ "check": format!("{:?}", a.check).to_lowercase(), "results": rows }), 0))
}

fn bench(seed: u64, only: &[u8], err: &mut dyn Write) -> CmdResult {
    if let Some(bad) = only.iter().find(|&&id| !(1..=10).contains(&id)) {
        return Err(fail(EXIT_USAGE, format!("no acceptance criterion {bad}")));
    }
    let cfg = BenchConfig { seed, ..BenchConfig::default() };
    let results = run_acceptance(&cfg, only);
    for r in &results {
        let _ = writeln!(err, "{}", r.line());
    }
    let summary = summary_json(&cfg, &results);
    let code = if results.iter().all(|r| r.passed) { 0 } else { 1 };
    Ok((summary, code))
}
