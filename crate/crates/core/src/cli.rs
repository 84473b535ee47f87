//! The `lagrangia` command line.
//!
//! Exit status: 0 on success, 1 when a checked bound fails, 2 on usage or
//! input errors, 3 when a search budget runs out.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certify::{self, CaseReport, Constants};
use crate::error::{Error, Result};
use crate::families::{self, EnumConfig, SweepConfig};
use crate::hypergraph::search::{contains_subgraph, has_homomorphism, SearchResult, DEFAULT_NODE_BUDGET};
use crate::hypergraph::{construct, Hypergraph, Vertex};
use crate::io;
use crate::lagrangian::{self, LagrangianConfig};
use crate::report::Report;
use crate::util::rat_f64;
use crate::wiss::{self, ProbDist, WeightOptConfig, Wiss};

const SUBCOMMANDS: [&str; 10] = [
    "lambda",
    "wiss-weight",
    "wiss-opt",
    "wiss-compress",
    "enumerate",
    "sweep",
    "conjecture",
    "verify-paper",
    "construct",
    "hom-check",
];

#[derive(Parser, Debug)]
#[command(name = "lagrangia", version, about = "Hypergraph Lagrangians and weighted intersecting set systems")]
struct Cli {
    /// File of `key = value` lines supplying default flags for the
    /// subcommand; flags given on the command line take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Pretty-print JSON reports.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Maximize the Lagrangian of a hypergraph file.
    Lambda(LambdaArgs),
    /// Weights of every member of a weighted system file.
    WissWeight(WissWeightArgs),
    /// Best distribution for the system in a weighted system file.
    WissOpt(WissOptArgs),
    /// Apply a compression (shift) to a weighted system file.
    WissCompress(WissCompressArgs),
    /// Stream intersecting set systems, one isomorphism class per line.
    Enumerate(EnumerateArgs),
    /// Best weight of every maximal intersecting class against L_r - c_r.
    Sweep(SweepArgs),
    /// Best weights of the families F(r, t, i) for i = 0..r-t.
    Conjecture(ConjectureArgs),
    /// Exact checks of the constants and the finite case computations.
    VerifyPaper(VerifyArgs),
    /// Write a named construction in the hypergraph text format.
    Construct(ConstructArgs),
    /// Search for a homomorphism (or an embedding) from F into G.
    HomCheck(HomArgs),
}

#[derive(Args, Debug, Serialize)]
struct LambdaArgs {
    /// Hypergraph file.
    file: PathBuf,
    #[arg(long, default_value_t = 200)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5000)]
    max_iters: usize,
    #[arg(long, default_value_t = 1e-15)]
    tol: f64,
    /// Sizes of consecutive vertex blocks forming at most three symmetry
    /// classes, e.g. `1,39`; switches to the exact symmetric solver.
    #[arg(long, value_delimiter = ',')]
    orbits: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ModeArg {
    Float,
    Rational,
}

#[derive(Args, Debug, Serialize)]
struct WissWeightArgs {
    /// Weighted system file.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::Rational)]
    mode: ModeArg,
    /// Also estimate the total weight from this many samples.
    #[arg(long, default_value_t = 0)]
    mc_samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug, Serialize)]
struct WissOptArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 500)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5000)]
    max_iters: usize,
    /// Search all distributions and relabel, instead of nonincreasing ones.
    #[arg(long)]
    unordered: bool,
}

#[derive(Args, Debug, Serialize)]
struct WissCompressArgs {
    file: PathBuf,
    /// Target point (the smaller label).
    #[arg(long, required_unless_present = "fixpoint")]
    i: Option<u32>,
    /// Point to replace.
    #[arg(long, required_unless_present = "fixpoint")]
    j: Option<u32>,
    /// Apply all shifts until the system is left-compressed.
    #[arg(long)]
    fixpoint: bool,
}

#[derive(Args, Debug, Serialize)]
struct EnumerateArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    max_ground: usize,
    #[arg(long, default_value_t = 1)]
    min_ground: usize,
    /// Only maximal intersecting systems.
    #[arg(long)]
    maximal: bool,
    /// Only left-compressed systems.
    #[arg(long)]
    compressed: bool,
    /// Only members of size exactly r.
    #[arg(long)]
    uniform: bool,
    #[arg(long, default_value_t = families::DEFAULT_NODE_BUDGET)]
    node_budget: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args, Debug, Serialize)]
struct SweepArgs {
    #[arg(long)]
    r: usize,
    /// Largest ground set (default 2r - 1).
    #[arg(long)]
    max_ground: Option<usize>,
    #[arg(long, default_value_t = 24)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Skip the Lagrangian of the reconstructed r-graph.
    #[arg(long)]
    no_lagrangian: bool,
    #[arg(long, default_value_t = families::DEFAULT_NODE_BUDGET)]
    node_budget: u64,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Args, Debug, Serialize)]
struct ConjectureArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    t: usize,
    #[arg(long, default_value_t = 200)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CaseArg {
    All,
    /// Two-point systems: AM-GM bound and its gap below L_r (r in [4, 10]).
    #[value(name = "2")]
    Two,
    /// Heavy last point: the no-repeat table for r in {5, 6} and the
    /// large-r chain.
    #[value(name = "3")]
    Three,
    /// r = 4: the quartic maximum and the tail inequalities.
    #[value(name = "4")]
    Four,
    /// L_r, e_r, d_r, c and c_r as exact rationals (r in [2, 12]).
    Constants,
    /// Principal systems reach exactly L_r at p(1) = 1/r (r in [2, 10]).
    Principal,
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = CaseArg::All)]
    case: CaseArg,
    /// Restrict the r-dependent checks to this r.
    #[arg(long)]
    r: Option<usize>,
    /// Approximate number of grid points in the two-point region.
    #[arg(long, default_value_t = 1_000_000)]
    grid: usize,
    /// Random points for the r = 4 tail inequalities.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
enum What {
    /// Extension of two disjoint r-edges (needs --r).
    #[value(name = "k_rr")]
    KRr,
    /// Two disjoint r-edges (needs --r).
    #[value(name = "m2")]
    M2,
    /// All r-subsets of [n] (needs --n, --r).
    #[value(name = "complete")]
    Complete,
    /// One vertex of [a] plus r-1 of the next b, for every choice (needs --a, --b, --r).
    #[value(name = "star")]
    Star,
    /// All r-subsets of [n] through vertex 1 (needs --n, --r).
    #[value(name = "principal_star")]
    PrincipalStar,
    /// Balanced blowup of the complete 3-graph on 5 vertices (needs --n).
    #[value(name = "t5")]
    T5,
    /// r-sets of [n] whose trace on [t+2i] has at least t+i points (needs --r, --t, --i, --n).
    #[value(name = "frankl")]
    Frankl,
}

#[derive(Args, Debug, Serialize)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    what: What,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
struct HomArgs {
    /// Pattern hypergraph file.
    f: PathBuf,
    /// Host hypergraph file.
    g: PathBuf,
    /// Require distinct images (F is a subgraph of G).
    #[arg(long)]
    injective: bool,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

enum Status {
    Ok,
    Failed,
    Budget,
}

impl Status {
    fn code(&self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Budget => 3,
        }
    }

    fn check(ok: bool) -> Self {
        if ok {
            Status::Ok
        } else {
            Status::Failed
        }
    }
}

struct Ctx {
    output: Option<PathBuf>,
    pretty: bool,
}

impl Ctx {
    fn sink(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.output {
            Some(p) => Box::new(std::io::BufWriter::new(fs::File::create(p)?)),
            None => Box::new(std::io::BufWriter::new(std::io::stdout().lock())),
        })
    }

    fn emit(&self, text: &str) -> Result<()> {
        let mut out = self.sink()?;
        out.write_all(text.as_bytes())?;
        out.flush()?;
        Ok(())
    }

    fn report<C: Serialize, T: Serialize>(&self, cmd: &str, cfg: &C, input: Option<&[u8]>, result: &T) -> Result<()> {
        let rep = Report::new(cmd, cfg, input, result);
        self.emit(&if self.pretty { rep.to_json_pretty() } else { rep.to_json() })
    }
}

/// Parses `key = value` lines into flags, skipping keys already present in
/// `argv`.
fn config_flags(path: &Path, argv: &[OsString]) -> std::result::Result<Vec<OsString>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut flags = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) =
            line.split_once('=').ok_or_else(|| format!("{}:{}: expected `key = value`", path.display(), idx + 1))?;
        let key = key.trim().replace('_', "-");
        let value = value.trim();
        if key.is_empty() {
            return Err(format!("{}:{}: empty key", path.display(), idx + 1));
        }
        let flag = format!("--{key}");
        let given = argv.iter().any(|a| {
            let a = a.to_string_lossy();
            a == flag || a.starts_with(&format!("{flag}="))
        });
        if given || value == "false" {
            continue;
        }
        flags.push(OsString::from(&flag));
        if value != "true" {
            flags.push(OsString::from(value));
        }
    }
    Ok(flags)
}

fn expand_config(argv: Vec<OsString>) -> std::result::Result<Vec<OsString>, String> {
    let mut path = None;
    for (k, a) in argv.iter().enumerate() {
        let a = a.to_string_lossy();
        if a == "--config" {
            path = argv.get(k + 1).map(PathBuf::from);
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(PathBuf::from(p));
        }
    }
    let Some(path) = path else { return Ok(argv) };
    let Some(at) = argv.iter().position(|a| SUBCOMMANDS.contains(&a.to_string_lossy().as_ref())) else {
        return Ok(argv);
    };
    let flags = config_flags(&path, &argv)?;
    let mut out = argv[..=at].to_vec();
    out.extend(flags);
    out.extend_from_slice(&argv[at + 1..]);
    Ok(out)
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let argv = match expand_config(argv) {
        Ok(a) => a,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // fails only if a pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let ctx = Ctx { output: cli.output.clone(), pretty: cli.pretty };
    match dispatch(&cli.cmd, &ctx) {
        Ok(status) => status.code(),
        Err(Error::BudgetExhausted { budget }) => {
            eprintln!("error: node budget of {budget} exhausted");
            3
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<(Vec<u8>, String)> {
    let bytes =
        fs::read(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::Parse { line: 1, message: format!("{} is not UTF-8", path.display()) })?;
    Ok((bytes, text))
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse { line, message: format!("{}: {message}", path.display()) },
        other => other,
    })
}

fn dispatch(cmd: &Cmd, ctx: &Ctx) -> Result<Status> {
    match cmd {
        Cmd::Lambda(a) => lambda(a, ctx),
        Cmd::WissWeight(a) => wiss_weight(a, ctx),
        Cmd::WissOpt(a) => wiss_opt(a, ctx),
        Cmd::WissCompress(a) => wiss_compress(a, ctx),
        Cmd::Enumerate(a) => enumerate(a, ctx),
        Cmd::Sweep(a) => sweep(a, ctx),
        Cmd::Conjecture(a) => conjecture(a, ctx),
        Cmd::VerifyPaper(a) => verify(a, ctx),
        Cmd::Construct(a) => construct_cmd(a, ctx),
        Cmd::HomCheck(a) => hom_check(a, ctx),
    }
}

fn lambda(a: &LambdaArgs, ctx: &Ctx) -> Result<Status> {
    let (bytes, text) = read(&a.file)?;
    let h = with_path(&a.file, io::parse_hypergraph(&text))?;
    let res = match &a.orbits {
        Some(sizes) => {
            if sizes.iter().sum::<usize>() != h.n() || sizes.contains(&0) {
                return Err(Error::InvalidOrbits(format!("block sizes {sizes:?} do not partition [{}]", h.n())));
            }
            let mut next = 1 as Vertex;
            let parts: Vec<Vec<Vertex>> = sizes
                .iter()
                .map(|&k| {
                    let part = (next..next + k as Vertex).collect();
                    next += k as Vertex;
                    part
                })
                .collect();
            lagrangian::orbit_exact(&h, &parts)?
        }
        None => {
            let cfg = LagrangianConfig {
                restarts: a.restarts,
                seed: a.seed,
                max_iters: a.max_iters,
                tol: a.tol,
                ..Default::default()
            };
            lagrangian::maximize(&h, &cfg)
        }
    };
    ctx.report("lambda", a, Some(&bytes), &res)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct WeightOut {
    #[serde(flatten)]
    report: wiss::WeightReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    monte_carlo: Option<wiss::McEstimate>,
}

fn load_wiss(path: &Path) -> Result<(Vec<u8>, Wiss)> {
    let (bytes, text) = read(path)?;
    Ok((bytes, with_path(path, io::parse_wiss(&text))?))
}

fn wiss_weight(a: &WissWeightArgs, ctx: &Ctx) -> Result<Status> {
    let (bytes, mut w) = load_wiss(&a.file)?;
    if matches!(a.mode, ModeArg::Float) {
        let d = ProbDist::with_inf(w.dist().p().to_vec(), w.dist().p_inf())?;
        w = Wiss::new(w.system().clone(), w.r(), d)?;
    }
    let report = wiss::weight_system(&w);
    let monte_carlo = if a.mc_samples > 0 { Some(wiss::monte_carlo_weight(&w, a.mc_samples, a.seed)?) } else { None };
    ctx.report("wiss-weight", a, Some(&bytes), &WeightOut { report, monte_carlo })?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct OptOut {
    input_weight: f64,
    #[serde(flatten)]
    optimum: wiss::WeightOptimum,
}

fn wiss_opt(a: &WissOptArgs, ctx: &Ctx) -> Result<Status> {
    let (bytes, w) = load_wiss(&a.file)?;
    let cfg = WeightOptConfig {
        restarts: a.restarts,
        seed: a.seed,
        max_iters: a.max_iters,
        ordered: !a.unordered,
        ..Default::default()
    };
    let optimum = wiss::optimize_weight(w.system(), w.r(), &cfg)?;
    ctx.report("wiss-opt", a, Some(&bytes), &OptOut { input_weight: w.weight(), optimum })?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct CompressOut {
    members: Vec<Vec<u32>>,
    text: String,
    weight_before: String,
    weight_after: String,
    weight_nondecreasing: bool,
    left_compressed: bool,
}

fn wiss_compress(a: &WissCompressArgs, ctx: &Ctx) -> Result<Status> {
    let (bytes, w) = load_wiss(&a.file)?;
    let g = if a.fixpoint {
        wiss::compress_to_fixpoint(w.system())
    } else {
        wiss::compress(w.system(), a.i.unwrap_or(0), a.j.unwrap_or(0))?
    };
    let out = Wiss::new(g, w.r(), w.dist().clone())?;
    let (before, after) = (w.weight_exact(), out.weight_exact());
    let res = CompressOut {
        members: out.system().members(),
        text: io::write_wiss(&out),
        weight_before: crate::util::rat_string(&before),
        weight_after: crate::util::rat_string(&after),
        weight_nondecreasing: after >= before,
        left_compressed: wiss::is_left_compressed(out.system()),
    };
    ctx.report("wiss-compress", a, Some(&bytes), &res)?;
    Ok(Status::check(res.weight_nondecreasing))
}

fn enumerate(a: &EnumerateArgs, ctx: &Ctx) -> Result<Status> {
    let cfg = EnumConfig { min_ground: a.min_ground, ..EnumConfig::new(a.r) }
        .max_ground(a.max_ground)
        .maximal_only(a.maximal)
        .left_compressed_only(a.compressed)
        .uniform(a.uniform)
        .node_budget(a.node_budget);
    let mut out = ctx.sink()?;
    let mut write_err = None;
    let stats = families::for_each_intersecting(&cfg, |g, _| {
        if write_err.is_none() {
            if let Err(e) = writeln!(out, "{}", io::system_line(&g)) {
                write_err = Some(e);
            }
        }
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    out.flush()?;
    eprintln!("classes {} labeled {} nodes {} complete {}", stats.classes, stats.labeled, stats.nodes, stats.complete);
    Ok(if stats.complete { Status::Ok } else { Status::Budget })
}

fn sweep(a: &SweepArgs, ctx: &Ctx) -> Result<Status> {
    let mut cfg = SweepConfig::new(a.r);
    if let Some(s) = a.max_ground {
        cfg.max_ground = s;
    }
    cfg.node_budget = a.node_budget;
    cfg.weight.restarts = a.restarts;
    cfg.weight.seed = a.seed;
    cfg.lagrangian = !a.no_lagrangian;
    let sw = families::nonprincipal_gap_sweep(&cfg)?;
    match a.format {
        TableFormat::Csv => {
            let mut text = String::from("canonical_key,s,principal,value,gap\n");
            for rec in &sw.records {
                text.push_str(&format!(
                    "{},{},{},{},{}\n",
                    rec.key,
                    rec.s,
                    rec.principal,
                    num(rec.value),
                    num(rec.gap)
                ));
            }
            ctx.emit(&text)?;
            let sm = &sw.summary;
            eprintln!(
                "classes {} (non-principal {}), best non-principal {:?}, bound {}, all within bound {}",
                sm.classes,
                sm.nonprincipal_classes,
                sm.max_nonprincipal,
                rat_f64(&sm.bound),
                sm.all_within_bound
            );
        }
        TableFormat::Json => ctx.report("sweep", a, None, &sw)?,
    }
    let sm = &sw.summary;
    if !sm.enumeration.complete {
        return Ok(Status::Budget);
    }
    let principal_ok = sw.records.iter().filter(|r| r.principal).all(|r| r.within_bound);
    Ok(Status::check(principal_ok && (a.r < 4 || sm.all_within_bound)))
}

/// Shortest round-trip form, as in the JSON reports.
fn num(x: f64) -> String {
    serde_json::to_string(&x).expect("finite")
}

fn conjecture(a: &ConjectureArgs, ctx: &Ctx) -> Result<Status> {
    let cfg = WeightOptConfig { restarts: a.restarts, seed: a.seed, ..Default::default() };
    let fr = families::conjecture_frontier(a.r, a.t, &cfg)?;
    ctx.report("conjecture", a, None, &fr)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct VerifyOut {
    constants: Vec<Constants>,
    cases: Vec<CaseReport>,
    passed: bool,
}

fn verify(a: &VerifyArgs, ctx: &Ctx) -> Result<Status> {
    let want = |c: CaseArg| a.case == CaseArg::All || a.case == c;
    let range = |lo: usize, hi: usize| -> Vec<usize> {
        match a.r {
            Some(r) => vec![r],
            None => (lo..=hi).collect(),
        }
    };
    let mut constants = Vec::new();
    let mut cases = Vec::new();
    let mut extra_ok = true;
    if want(CaseArg::Constants) {
        for r in range(2, 12) {
            let k = certify::constants(r)?;
            // d_r = r e_r and L_r >= 1/e
            extra_ok &= k.d_r == &k.e_r * crate::exact::int(r as i64) && rat_f64(&k.l_r) >= (-1f64).exp();
            constants.push(k);
        }
    }
    if want(CaseArg::Principal) {
        for r in range(2, 10) {
            cases.push(certify::principal_bound(r, 1000)?);
        }
    }
    if want(CaseArg::Two) {
        for r in range(4, 10) {
            cases.push(certify::case2_check(r, a.grid)?);
        }
    }
    if want(CaseArg::Three) {
        cases.push(certify::case3_table()?);
        cases.push(certify::case3_large_r());
    }
    if want(CaseArg::Four) {
        cases.push(certify::case4_quartic());
        cases.push(certify::case4_tail_bound(a.samples, a.seed));
    }
    for k in &constants {
        eprintln!(
            "constants r={}: L_r = {} e_r = {} c_r = {}",
            k.r,
            crate::util::rat_string(&k.l_r),
            crate::util::rat_string(&k.e_r),
            crate::util::rat_string(&k.c_r)
        );
    }
    for c in &cases {
        eprintln!(
            "{} {}: extremum {:.10} bound {:.10} margin {:.3e} ({})",
            if c.passed { "PASS" } else { "FAIL" },
            c.case,
            c.extremum,
            rat_f64(&c.bound),
            rat_f64(&c.margin),
            c.inputs
        );
        for ch in c.checks.iter().filter(|ch| !ch.holds) {
            eprintln!("    failed: {} ({})", ch.name, ch.detail);
        }
    }
    let passed = extra_ok && cases.iter().all(|c| c.passed);
    ctx.report("verify-paper", a, None, &VerifyOut { constants, cases, passed })?;
    Ok(Status::check(passed))
}

fn need(v: Option<usize>, name: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameter(format!("this construction needs --{name}")))
}

fn construct_cmd(a: &ConstructArgs, ctx: &Ctx) -> Result<Status> {
    let h: Hypergraph = match a.what {
        What::KRr => construct::k_rr(need(a.r, "r")?)?,
        What::M2 => construct::matching2(need(a.r, "r")?)?,
        What::Complete => construct::complete(need(a.n, "n")?, need(a.r, "r")?)?,
        What::Star => construct::star(need(a.a, "a")?, need(a.b, "b")?, need(a.r, "r")?)?,
        What::PrincipalStar => construct::principal_star(need(a.n, "n")?, need(a.r, "r")?)?,
        What::T5 => construct::balanced_blowup_t5(need(a.n, "n")?)?,
        What::Frankl => {
            let p = families::FranklParams::new(need(a.r, "r")?, need(a.t, "t")?, need(a.i, "i")?)?;
            families::g_family(&p, need(a.n, "n")?)?
        }
    };
    ctx.emit(&io::write_hypergraph(&h))?;
    Ok(Status::Ok)
}

fn hom_check(a: &HomArgs, ctx: &Ctx) -> Result<Status> {
    let (fb, ft) = read(&a.f)?;
    let (gb, gt) = read(&a.g)?;
    let f = with_path(&a.f, io::parse_hypergraph(&ft))?;
    let g = with_path(&a.g, io::parse_hypergraph(&gt))?;
    let res: SearchResult =
        if a.injective { contains_subgraph(&g, &f, a.budget)? } else { has_homomorphism(&f, &g, a.budget)? };
    let mut input = fb;
    input.extend_from_slice(&gb);
    ctx.report("hom-check", a, Some(&input), &res)?;
    Ok(if res.decided().is_some() { Status::Ok } else { Status::Budget })
}
