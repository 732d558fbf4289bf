//! The `locdom` command line.
//!
//! Exit codes: 0 success, 1 a checked bound or family property failed,
//! 2 usage / parse / precondition error, 3 exact-solver size cap exceeded.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{
    construct_ld_auto, construct_ld_cobipartite, construct_ld_split, construct_ld_two_thirds, ld_from_vertex_cover,
    TwoThirdsTrace,
};
use crate::domination::{gamma_l_exact, is_locating_dominating, min_dominating_exact, LdCertificate, Method};
use crate::extremal::{
    attach_link, gen_ak, gen_attachable_star, gen_family_t_tree, gen_hk, gen_join_of_aks, is_in_family_t,
};
use crate::graph::{classify, corona, find_twins, is_twin_free, Graph, TwinPair, VertexSet};
use crate::graph6::{from_graph6, read_graph6, to_graph6, write_graph6, ReadError};
use crate::sample::random_attach_spec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Largest order handed to the exponential solvers unless overridden.
pub const DEFAULT_MAX_EXACT: usize = 18;

/// Default cap for `gen --verify`, whose family members are sparse or small.
pub const GEN_DEFAULT_MAX_EXACT: usize = 24;

/// Environment variable holding the default number of scan workers.
pub const WORKERS_ENV: &str = "LOCDOM_WORKERS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] crate::Error),
    #[error(transparent)]
    Read(#[from] ReadError),
    #[error("order {n} exceeds the exact-solver cap {cap} (raise it with --max-exact)")]
    TooLarge { n: usize, cap: usize },
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::TooLarge { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "locdom", version, about = "Locating-dominating sets in twin-free graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact γ and γ_L of one graph, its twins, and every applicable construction.
    Solve(SolveArgs),
    /// Run exact solvers and constructions over a graph6 file and check the bounds.
    Scan(ScanArgs),
    /// Emit members of the extremal families as graph6.
    Gen(GenArgs),
    /// Run one construction and print its trace.
    Construct(ConstructArgs),
}

#[derive(Debug, clap::Args)]
pub struct SolveArgs {
    pub graph6: String,
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_EXACT)]
    pub max_exact: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Check {
    Half,
    TwoThirds,
    Both,
}

#[derive(Debug, clap::Args)]
pub struct ScanArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub connected_only: bool,
    #[arg(long)]
    pub twin_free_only: bool,
    #[arg(long, value_enum, default_value_t = Check::Both)]
    pub check: Check,
    /// Write the records to this file: CSV if it ends in `.csv`, otherwise a JSON array.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print one JSON object per record on stdout.
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_EXACT)]
    pub max_exact: usize,
    /// Worker threads; defaults to $LOCDOM_WORKERS, then to the number of CPUs.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `hk K`: H_k
    Hk,
    /// `ak K`: A_k
    Ak,
    /// `join-ak K1 K2 ...`: complete join of A_K1, A_K2, ...
    JoinAk,
    /// `corona GRAPH6`: corona of the given graph
    Corona,
    /// `star-gadget P`: subdivided star with P edges
    StarGadget,
    /// `t-tree N`: random tree of the family T of order N (uses --seed)
    TTree,
    /// `attach-demo H [MAX]`: random host of order H with gadgets, total order <= MAX (default 14)
    AttachDemo,
}

#[derive(Debug, clap::Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: Family,
    pub params: Vec<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Check the family's expected γ / γ_L values with the exact solvers.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value_t = GEN_DEFAULT_MAX_EXACT)]
    pub max_exact: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum ConstructMethod {
    TwoThirds,
    VertexCover,
    Split,
    Cobipartite,
    Auto,
}

#[derive(Debug, clap::Args)]
pub struct ConstructArgs {
    pub graph6: String,
    #[arg(long, value_enum, default_value_t = ConstructMethod::Auto)]
    pub method: ConstructMethod,
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_EXACT)]
    pub max_exact: usize,
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(&args, out),
        Command::Scan(args) => cmd_scan(&args, out, err),
        Command::Gen(args) => cmd_gen(&args, out, err),
        Command::Construct(args) => cmd_construct(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn parse_record(text: &str) -> CliResult<Graph> {
    Ok(from_graph6(text.trim_end_matches(['\r', '\n'])).map_err(crate::Error::from)?)
}

fn require_exact(g: &Graph, cap: usize) -> CliResult<()> {
    if g.order() > cap {
        Err(CliError::TooLarge { n: g.order(), cap })
    } else {
        Ok(())
    }
}

fn graph6_of(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("<order {}>", g.order()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    pub method: String,
    pub set: Option<VertexSet>,
    pub size: Option<usize>,
    pub verified: bool,
    pub error: Option<String>,
}

impl ConstructionResult {
    fn from_outcome(method: Method, outcome: crate::Result<LdCertificate>) -> Self {
        match outcome {
            Ok(c) => ConstructionResult {
                method: method.label().to_string(),
                set: Some(c.set),
                size: Some(c.size()),
                verified: c.is_locating_dominating,
                error: None,
            },
            Err(e) => ConstructionResult {
                method: method.label().to_string(),
                set: None,
                size: None,
                verified: false,
                error: Some(e.to_string()),
            },
        }
    }
}

/// Every construction whose preconditions hold for `g` (none unless `g` is
/// twin-free without isolated vertices). Exponential ones are included only up to
/// `max_exact`.
pub fn applicable_constructions(g: &Graph, max_exact: usize) -> Vec<ConstructionResult> {
    if g.order() == 0 || !g.isolated_vertices().is_empty() || !is_twin_free(g) {
        return Vec::new();
    }
    let class = classify(g);
    let mut out = Vec::new();
    if g.order() <= max_exact {
        out.push(ConstructionResult::from_outcome(
            Method::TwoThirds,
            construct_ld_two_thirds(g).and_then(|t| t.certificate(g)),
        ));
        out.push(ConstructionResult::from_outcome(
            Method::VertexCover,
            ld_from_vertex_cover(g),
        ));
    }
    if class.is_split {
        out.push(ConstructionResult::from_outcome(Method::Split, construct_ld_split(g)));
    }
    if class.is_cobipartite {
        out.push(ConstructionResult::from_outcome(
            Method::Cobipartite,
            construct_ld_cobipartite(g),
        ));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub graph6: String,
    pub n: usize,
    pub twins: Vec<TwinPair>,
    pub twin_free: bool,
    pub isolated: VertexSet,
    pub gamma: usize,
    pub dominating_set: VertexSet,
    pub gamma_l: usize,
    pub witness: VertexSet,
    pub witness_verified: bool,
    pub constructions: Vec<ConstructionResult>,
}

pub fn solve(g: &Graph, max_exact: usize) -> CliResult<SolveReport> {
    require_exact(g, max_exact)?;
    let dom = min_dominating_exact(g);
    let opt = gamma_l_exact(g);
    let twins = find_twins(g);
    Ok(SolveReport {
        graph6: graph6_of(g),
        n: g.order(),
        twin_free: twins.is_empty(),
        twins,
        isolated: g.isolated_vertices(),
        gamma: dom.len(),
        dominating_set: dom,
        gamma_l: opt.value,
        witness: opt.witness,
        witness_verified: is_locating_dominating(g, opt.witness)?,
        constructions: applicable_constructions(g, max_exact),
    })
}

impl SolveReport {
    fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "graph6: {}", self.graph6)?;
        writeln!(out, "n: {}", self.n)?;
        if self.twins.is_empty() {
            writeln!(out, "twins: none")?;
        } else {
            for t in &self.twins {
                writeln!(out, "twins: {} {} ({})", t.u, t.v, t.kind)?;
            }
        }
        if !self.isolated.is_empty() {
            writeln!(out, "isolated: {}", self.isolated)?;
        }
        writeln!(out, "gamma: {} {}", self.gamma, self.dominating_set)?;
        writeln!(
            out,
            "gamma_L: {} {} ({})",
            self.gamma_l,
            self.witness,
            if self.witness_verified {
                "verified"
            } else {
                "NOT VERIFIED"
            }
        )?;
        for c in &self.constructions {
            match (&c.set, &c.error) {
                (Some(set), _) => writeln!(
                    out,
                    "construction {}: size {} {} ({})",
                    c.method,
                    set.len(),
                    set,
                    if c.verified { "verified" } else { "NOT VERIFIED" }
                )?,
                (None, Some(e)) => writeln!(out, "construction {}: failed: {e}", c.method)?,
                (None, None) => {}
            }
        }
        Ok(())
    }
}

fn cmd_solve(args: &SolveArgs, out: &mut dyn Write) -> CliResult<i32> {
    let g = parse_record(&args.graph6)?;
    let report = solve(&g, args.max_exact)?;
    if args.json {
        serde_json::to_writer(&mut *out, &report)?;
        writeln!(out)?;
    } else {
        report.write_text(out)?;
    }
    Ok(EXIT_OK)
}

/// One scanned graph. `gamma` and `gamma_l` are absent above the exact cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub graph6: String,
    pub n: usize,
    pub twin_free: bool,
    pub isolated_free: bool,
    pub connected: bool,
    pub gamma: Option<usize>,
    pub gamma_l: Option<usize>,
    /// `2 γ_L <= n`; above the cap, `true` if some construction reaches `n/2`, else absent.
    pub half_bound_ok: Option<bool>,
    /// The two-thirds construction succeeded with `3 |D| <= 2n`; absent when its
    /// preconditions fail or above the cap.
    pub two_thirds_ok: Option<bool>,
    pub construction_sizes: BTreeMap<String, usize>,
    pub elapsed_ms: u64,
}

impl ScanRecord {
    /// The graph satisfies the hypotheses of the bounds being checked.
    pub fn eligible(&self) -> bool {
        self.twin_free && self.isolated_free
    }

    pub fn is_extremal(&self) -> bool {
        self.gamma_l.is_some_and(|l| 2 * l == self.n)
    }
}

pub fn scan_record(g: &Graph, max_exact: usize) -> ScanRecord {
    let start = Instant::now();
    let n = g.order();
    let exact = n <= max_exact;
    let (gamma, gamma_l) = if exact {
        (Some(min_dominating_exact(g).len()), Some(gamma_l_exact(g).value))
    } else {
        (None, None)
    };
    let constructions = applicable_constructions(g, max_exact);
    let construction_sizes: BTreeMap<String, usize> = constructions
        .iter()
        .filter(|c| c.verified)
        .filter_map(|c| Some((c.method.clone(), c.size?)))
        .collect();
    let half_bound_ok = match gamma_l {
        Some(l) => Some(2 * l <= n),
        None => construction_sizes.values().any(|&s| 2 * s <= n).then_some(true),
    };
    let two_thirds_ok = constructions
        .iter()
        .find(|c| c.method == Method::TwoThirds.label())
        .map(|c| c.verified && c.size.is_some_and(|s| 3 * s <= 2 * n));
    ScanRecord {
        graph6: graph6_of(g),
        n,
        twin_free: is_twin_free(g),
        isolated_free: g.isolated_vertices().is_empty(),
        connected: g.is_connected(),
        gamma,
        gamma_l,
        half_bound_ok,
        two_thirds_ok,
        construction_sizes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub connected_only: bool,
    pub twin_free_only: bool,
    pub max_exact: usize,
    pub jobs: Option<usize>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            connected_only: false,
            twin_free_only: false,
            max_exact: DEFAULT_MAX_EXACT,
            jobs: None,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ScanSummary {
    pub input: usize,
    pub scanned: usize,
    pub eligible: usize,
    /// graph6 of scanned graphs with `2 γ_L = n`.
    pub extremal: Vec<String>,
    pub half_violations: Vec<String>,
    pub two_thirds_violations: Vec<String>,
}

impl ScanSummary {
    pub fn violations(&self, check: Check) -> Vec<&str> {
        let half = self.half_violations.iter();
        let two = self.two_thirds_violations.iter();
        match check {
            Check::Half => half.map(String::as_str).collect(),
            Check::TwoThirds => two.map(String::as_str).collect(),
            Check::Both => half.chain(two).map(String::as_str).collect(),
        }
    }
}

fn worker_count(jobs: Option<usize>) -> Option<usize> {
    jobs.or_else(|| std::env::var(WORKERS_ENV).ok()?.parse().ok())
        .filter(|&j| j > 0)
}

/// Computes a record per qualifying graph on a bounded worker pool; records come
/// back in input order.
pub fn scan(graphs: &[Graph], opts: &ScanOptions) -> CliResult<(Vec<ScanRecord>, ScanSummary)> {
    let qualifying: Vec<&Graph> = graphs
        .iter()
        .filter(|g| !opts.connected_only || g.is_connected())
        .filter(|g| !opts.twin_free_only || is_twin_free(g))
        .collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = worker_count(opts.jobs) {
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let records: Vec<ScanRecord> =
        pool.install(|| qualifying.par_iter().map(|g| scan_record(g, opts.max_exact)).collect());

    let summary = summarize(graphs.len(), &records);
    Ok((records, summary))
}

/// Counts, extremal graphs and bound violations over `records`; only records
/// that are twin-free and isolated-free can violate a bound.
pub fn summarize(input: usize, records: &[ScanRecord]) -> ScanSummary {
    let mut summary = ScanSummary {
        input,
        scanned: records.len(),
        ..Default::default()
    };
    for r in records {
        if r.is_extremal() {
            summary.extremal.push(r.graph6.clone());
        }
        if !r.eligible() {
            continue;
        }
        summary.eligible += 1;
        if r.half_bound_ok == Some(false) {
            summary.half_violations.push(r.graph6.clone());
        }
        if r.two_thirds_ok == Some(false) {
            summary.two_thirds_violations.push(r.graph6.clone());
        }
    }
    summary
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    graph6: String,
    n: usize,
    twin_free: bool,
    isolated_free: bool,
    connected: bool,
    gamma: Option<usize>,
    gamma_l: Option<usize>,
    half_bound_ok: Option<bool>,
    two_thirds_ok: Option<bool>,
    construction_sizes: String,
    elapsed_ms: u64,
}

impl From<&ScanRecord> for CsvRow {
    fn from(r: &ScanRecord) -> Self {
        let sizes: Vec<String> = r.construction_sizes.iter().map(|(k, v)| format!("{k}={v}")).collect();
        CsvRow {
            graph6: r.graph6.clone(),
            n: r.n,
            twin_free: r.twin_free,
            isolated_free: r.isolated_free,
            connected: r.connected,
            gamma: r.gamma,
            gamma_l: r.gamma_l,
            half_bound_ok: r.half_bound_ok,
            two_thirds_ok: r.two_thirds_ok,
            construction_sizes: sizes.join(";"),
            elapsed_ms: r.elapsed_ms,
        }
    }
}

impl TryFrom<CsvRow> for ScanRecord {
    type Error = String;

    fn try_from(row: CsvRow) -> Result<Self, String> {
        let mut construction_sizes = BTreeMap::new();
        for item in row.construction_sizes.split(';').filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| format!("bad construction entry {item:?}"))?;
            construction_sizes.insert(k.to_string(), v.parse().map_err(|_| format!("bad size in {item:?}"))?);
        }
        Ok(ScanRecord {
            graph6: row.graph6,
            n: row.n,
            twin_free: row.twin_free,
            isolated_free: row.isolated_free,
            connected: row.connected,
            gamma: row.gamma,
            gamma_l: row.gamma_l,
            half_bound_ok: row.half_bound_ok,
            two_thirds_ok: row.two_thirds_ok,
            construction_sizes,
            elapsed_ms: row.elapsed_ms,
        })
    }
}

/// CSV with a header row; `construction_sizes` is flattened to `method=size;...`.
pub fn write_csv<W: Write>(writer: W, records: &[ScanRecord]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(writer);
    for r in records {
        w.serialize(CsvRow::from(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: io::Read>(reader: R) -> CliResult<Vec<ScanRecord>> {
    let mut rdr = csv::Reader::from_reader(reader);
    rdr.deserialize::<CsvRow>()
        .map(|row| ScanRecord::try_from(row?).map_err(CliError::Usage))
        .collect()
}

fn write_records_file(path: &Path, records: &[ScanRecord]) -> CliResult<()> {
    let file = BufWriter::new(File::create(path)?);
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        write_csv(file, records)
    } else {
        serde_json::to_writer_pretty(file, records)?;
        Ok(())
    }
}

fn cmd_scan(args: &ScanArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let graphs = read_graph6(BufReader::new(File::open(&args.input)?))?;
    let opts = ScanOptions {
        connected_only: args.connected_only,
        twin_free_only: args.twin_free_only,
        max_exact: args.max_exact,
        jobs: args.jobs,
    };
    let (records, summary) = scan(&graphs, &opts)?;
    if let Some(path) = &args.out {
        write_records_file(path, &records)?;
    }
    let report: &mut dyn Write = if args.json {
        for r in &records {
            serde_json::to_writer(&mut *out, r)?;
            writeln!(out)?;
        }
        err
    } else {
        out
    };
    writeln!(
        report,
        "scanned {} of {} graphs ({} twin-free without isolated vertices)",
        summary.scanned, summary.input, summary.eligible
    )?;
    writeln!(report, "extremal (2 gamma_L = n): {}", summary.extremal.len())?;
    for g in &summary.extremal {
        writeln!(report, "  {g}")?;
    }
    let violations = summary.violations(args.check);
    writeln!(report, "violations ({:?}): {}", args.check, violations.len())?;
    for g in &violations {
        writeln!(report, "  {g}")?;
    }
    Ok(if violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, name: &str) -> CliResult<T> {
    let raw = params
        .get(i)
        .ok_or_else(|| CliError::Usage(format!("missing parameter {name}")))?;
    raw.parse()
        .map_err(|_| CliError::Usage(format!("invalid {name}: {raw:?}")))
}

/// Outcome of a `--verify` check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub passed: bool,
    pub detail: String,
}

type Expectation = Box<dyn Fn(&Graph) -> FamilyCheck>;

/// Builds the requested family member; with `verify`, also checks its expected
/// parameters with the exact solvers.
pub fn generate(args: &GenArgs) -> CliResult<(Graph, Option<FamilyCheck>)> {
    let p = &args.params;
    let (g, expectation): (Graph, Expectation) = match args.family {
        Family::Hk => {
            let k: usize = param(p, 0, "k")?;
            (
                gen_hk(k)?,
                Box::new(move |g| {
                    let (gamma, gl) = (min_dominating_exact(g).len(), gamma_l_exact(g).value);
                    check(
                        is_twin_free(g) && gamma == 2 && gl == k + 2,
                        format!(
                            "twin-free, gamma = {gamma} (expect 2), gamma_L = {gl} (expect {})",
                            k + 2
                        ),
                    )
                }),
            )
        }
        Family::Ak => {
            let k: usize = param(p, 0, "k")?;
            (
                gen_ak(k)?,
                Box::new(move |g| {
                    let gl = gamma_l_exact(g).value;
                    check(
                        is_twin_free(g) && classify(g).is_cobipartite && gl == k,
                        format!("twin-free co-bipartite, gamma_L = {gl} (expect {k})"),
                    )
                }),
            )
        }
        Family::JoinAk => {
            if p.is_empty() {
                return Err(CliError::Usage("join-ak needs at least one k".into()));
            }
            let ks = (0..p.len())
                .map(|i| param(p, i, "k"))
                .collect::<CliResult<Vec<usize>>>()?;
            let total: usize = ks.iter().sum();
            (
                gen_join_of_aks(&ks)?,
                Box::new(move |g| {
                    let gl = gamma_l_exact(g).value;
                    check(gl == total, format!("gamma_L = {gl} (expect {total})"))
                }),
            )
        }
        Family::Corona => {
            let base = parse_record(
                p.first()
                    .ok_or_else(|| CliError::Usage("corona needs a graph6 base graph".into()))?,
            )?;
            (
                corona(&base)?,
                Box::new(|g| {
                    let (gamma, gl) = (min_dominating_exact(g).len(), gamma_l_exact(g).value);
                    let half = g.order() / 2;
                    check(
                        gamma == half && gl == half,
                        format!("gamma = {gamma}, gamma_L = {gl} (expect {half})"),
                    )
                }),
            )
        }
        Family::StarGadget => {
            let size: usize = param(p, 0, "p")?;
            (
                gen_attachable_star(size)?.graph,
                Box::new(move |g| {
                    let gl = gamma_l_exact(g).value;
                    check(gl == size + 1, format!("gamma_L = {gl} (expect {})", size + 1))
                }),
            )
        }
        Family::TTree => {
            let size: usize = param(p, 0, "n")?;
            (
                gen_family_t_tree(size, args.seed)?,
                Box::new(|g| {
                    let member = matches!(is_in_family_t(g), Ok(Some(_)));
                    let gl = gamma_l_exact(g).value;
                    check(
                        member && 2 * gl == g.order(),
                        format!("recognized = {member}, gamma_L = {gl} (expect {})", g.order() / 2),
                    )
                }),
            )
        }
        Family::AttachDemo => {
            let host: usize = param(p, 0, "host order")?;
            let max: usize = if p.len() > 1 { param(p, 1, "max order")? } else { 14 };
            if host < 2 || 2 * host > max {
                return Err(CliError::Usage(format!(
                    "need 2 <= host order and 2 * host order <= max order ({max})"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let spec = random_attach_spec(host, max, &mut rng);
            (
                attach_link(&spec)?,
                Box::new(|g| {
                    let gl = gamma_l_exact(g).value;
                    check(
                        is_twin_free(g) && 2 * gl >= g.order(),
                        format!("twin-free, gamma_L = {gl} (expect >= {})", g.order().div_ceil(2)),
                    )
                }),
            )
        }
    };
    let verdict = if args.verify {
        require_exact(&g, args.max_exact)?;
        Some(expectation(&g))
    } else {
        None
    };
    Ok((g, verdict))
}

fn check(passed: bool, detail: String) -> FamilyCheck {
    FamilyCheck { passed, detail }
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let (g, verdict) = generate(args)?;
    match &args.out {
        Some(path) => write_graph6(BufWriter::new(File::create(path)?), [&g])?,
        None => write_graph6(&mut *out, [&g])?,
    }
    Ok(match verdict {
        Some(FamilyCheck { passed: true, detail }) => {
            writeln!(err, "verify ok: {detail}")?;
            EXIT_OK
        }
        Some(FamilyCheck { passed: false, detail }) => {
            writeln!(err, "verify FAILED: {detail}")?;
            EXIT_VIOLATION
        }
        None => EXIT_OK,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructReport {
    pub graph6: String,
    pub n: usize,
    pub method: String,
    pub set: VertexSet,
    pub size: usize,
    pub verified: bool,
    /// `⌊2n/3⌋` for two-thirds, `⌊n/2⌋` for split and co-bipartite.
    pub bound: Option<usize>,
    pub trace: Option<TwoThirdsTrace>,
}

pub fn construct(g: &Graph, method: ConstructMethod, max_exact: usize) -> CliResult<ConstructReport> {
    let exponential = matches!(method, ConstructMethod::TwoThirds | ConstructMethod::VertexCover);
    if exponential {
        require_exact(g, max_exact)?;
    }
    let (cert, trace) = match method {
        ConstructMethod::TwoThirds => {
            let t = construct_ld_two_thirds(g)?;
            (t.certificate(g)?, Some(t))
        }
        ConstructMethod::VertexCover => (ld_from_vertex_cover(g)?, None),
        ConstructMethod::Split => (construct_ld_split(g)?, None),
        ConstructMethod::Cobipartite => (construct_ld_cobipartite(g)?, None),
        ConstructMethod::Auto => {
            let class = classify(g);
            if !class.is_split && !class.is_cobipartite {
                require_exact(g, max_exact)?;
                let t = construct_ld_two_thirds(g)?;
                (t.certificate(g)?, Some(t))
            } else {
                (construct_ld_auto(g)?, None)
            }
        }
    };
    let n = g.order();
    let bound = match cert.method {
        Method::TwoThirds => Some(2 * n / 3),
        Method::Split | Method::Cobipartite => Some(n / 2),
        _ => None,
    };
    Ok(ConstructReport {
        graph6: graph6_of(g),
        n,
        method: cert.method.label().to_string(),
        set: cert.set,
        size: cert.size(),
        verified: cert.is_locating_dominating,
        bound,
        trace,
    })
}

fn cmd_construct(args: &ConstructArgs, out: &mut dyn Write) -> CliResult<i32> {
    let g = parse_record(&args.graph6)?;
    let report = construct(&g, args.method, args.max_exact)?;
    if args.json {
        serde_json::to_writer(&mut *out, &report)?;
        writeln!(out)?;
    } else {
        writeln!(out, "graph6: {}", report.graph6)?;
        writeln!(out, "method: {}", report.method)?;
        if let Some(t) = &report.trace {
            writeln!(out, "S: {}", t.s0)?;
            writeln!(out, "D: {}", t.d)?;
            writeln!(out, "X_D: {} (n1 = {}, n2 = {})", t.sig.x_set, t.sig.n1, t.sig.n2)?;
            writeln!(out, "candidate D + X_D: size {} {}", t.candidate_a.len(), t.candidate_a)?;
            writeln!(
                out,
                "candidate D + Y'_D: size {} {}",
                t.candidate_b.len(),
                t.candidate_b
            )?;
        }
        writeln!(
            out,
            "set: {} size {} ({})",
            report.set,
            report.size,
            if report.verified { "verified" } else { "NOT VERIFIED" }
        )?;
        if let Some(b) = report.bound {
            writeln!(out, "bound: {b}")?;
        }
    }
    Ok(if report.verified && report.bound.is_none_or(|b| report.size <= b) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}
