//! Command-line interface: characters, tensor decompositions, classification
//! verdicts, exhaustive verification sweeps, and fusion tables for the rank-2
//! systems A2 and B2 in prime characteristic.
//!
//! Exit codes: 0 success, 1 verification mismatch or internal failure,
//! 2 usage error, 3 unmet precondition.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use modtensor::alcoves::{fundamental_alcove, in_open, omega_dot_b2, reflection_small};
use modtensor::cache::{self, CacheFile};
use modtensor::characters::{weyl_character, SimpleExpansion};
use modtensor::classify::{self, RowMatch};
use modtensor::rootdata::{RootDatum, RootSystem, Weight};
use modtensor::simples::{is_prime, ModularContext};
use modtensor::tensor::{
    cr_necessary_conditions, klimyk_char0, minuscule_decompose,
    reflection_small_multiplicities, tensor_simple_decomposition, verlinde_coefficient,
    verlinde_table,
};

/// Characteristics above this are rejected as usage errors: the restricted
/// character table has p^2 entries and is built eagerly.
const MAX_PRIME: i64 = 499;

/// Weight coordinates above this are rejected as usage errors: character
/// supports grow quadratically in the coordinates.
const MAX_COORDINATE: i64 = 1000;

#[derive(Parser)]
#[command(
    name = "modtensor",
    version,
    about = "Tensor products of simple modules for A2 and B2 in characteristic p",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the formal character of a simple module (or a Weyl module).
    Character(CharacterArgs),
    /// Decompose a tensor product of two simple modules into simples.
    Decompose(DecomposeArgs),
    /// Complete-reducibility and multiplicity-freeness verdict for a pair.
    Classify(ClassifyArgs),
    /// Sweep all nonzero restricted pairs, checking tables against the oracle.
    Verify(VerifyArgs),
    /// Fusion table over the interior weights of the lowest alcove.
    Fusion(FusionArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SystemArg {
    A2,
    B2,
}

impl SystemArg {
    fn system(self) -> RootSystem {
        match self {
            SystemArg::A2 => RootSystem::A2,
            SystemArg::B2 => RootSystem::B2,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Csv,
}

#[derive(Args)]
struct CharacterArgs {
    /// Root system.
    #[arg(long, value_enum)]
    system: SystemArg,
    /// Prime characteristic.
    #[arg(short, long, value_parser = parse_prime)]
    p: i64,
    /// Dominant highest weight as `a,b`.
    #[arg(long, value_parser = parse_dominant_weight)]
    weight: Weight,
    /// Print the Weyl character instead of the simple character.
    #[arg(long)]
    weyl: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Multiply characters and peel off simple characters from the top.
    Oracle,
    /// Closed-form multiplicities for reflection-small pairs.
    TheoremB,
    /// Alcove-wise translation by a minuscule weight.
    Minuscule,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::TheoremB => "theorem-b",
            Method::Minuscule => "minuscule",
        }
    }
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(long, value_enum)]
    system: SystemArg,
    #[arg(short, long, value_parser = parse_prime)]
    p: i64,
    /// First dominant highest weight as `a,b`.
    #[arg(long, value_parser = parse_dominant_weight)]
    lambda: Weight,
    /// Second dominant highest weight as `a,b`.
    #[arg(long, value_parser = parse_dominant_weight)]
    mu: Weight,
    #[arg(long, value_enum, default_value_t = Method::Oracle)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, value_enum)]
    system: SystemArg,
    #[arg(short, long, value_parser = parse_prime)]
    p: i64,
    /// First dominant highest weight as `a,b`.
    #[arg(long, value_parser = parse_dominant_weight)]
    lambda: Weight,
    /// Second dominant highest weight as `a,b`.
    #[arg(long, value_parser = parse_dominant_weight)]
    mu: Weight,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    system: SystemArg,
    /// Comma-separated list of prime characteristics, e.g. `2,3,5,7`.
    #[arg(short, long, value_delimiter = ',', value_parser = parse_prime, required = true)]
    p: Vec<i64>,
    /// Worker threads for the sweep; 0 picks a sensible default.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Character cache file. The MODTENSOR_CACHE environment variable takes
    /// precedence over this flag.
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
}

#[derive(Args)]
struct FusionArgs {
    #[arg(long, value_enum)]
    system: SystemArg,
    #[arg(short, long, value_parser = parse_prime)]
    p: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn parse_prime(s: &str) -> Result<i64, String> {
    let p: i64 = s.trim().parse().map_err(|e| format!("bad characteristic `{s}`: {e}"))?;
    if !(2..=MAX_PRIME).contains(&p) {
        return Err(format!("characteristic must be a prime in 2..={MAX_PRIME}, got {p}"));
    }
    if !is_prime(p) {
        return Err(format!("characteristic must be prime, got {p}"));
    }
    Ok(p)
}

fn parse_dominant_weight(s: &str) -> Result<Weight, String> {
    let w = Weight::parse_arg(s)?;
    if !w.is_dominant() {
        return Err(format!("weight {w} must be dominant (both coordinates >= 0)"));
    }
    if w.a > MAX_COORDINATE || w.b > MAX_COORDINATE {
        return Err(format!("weight coordinates must be at most {MAX_COORDINATE}, got {w}"));
    }
    Ok(w)
}

enum Failure {
    /// A verification check failed; the tables and the oracle disagree.
    Mismatch(String),
    /// The requested computation does not apply to the given input.
    Precondition(String),
    /// Environment problems: thread pool, I/O.
    Runtime(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Precondition(_) => 3,
            Failure::Runtime(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Mismatch(m) | Failure::Precondition(m) | Failure::Runtime(m) => m,
        }
    }
}

fn main() {
    // A closed stdout pipe (e.g. `modtensor fusion ... | head`) should end
    // the process quietly instead of panicking mid-write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Err(failure) = run(cli) {
        eprintln!("error: {}", failure.message());
        std::process::exit(failure.code());
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Character(args) => cmd_character(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Fusion(args) => cmd_fusion(args),
    }
}

fn pair(w: Weight) -> [i64; 2] {
    [w.a, w.b]
}

fn triples(expansion: impl IntoIterator<Item = (Weight, i64)>) -> Vec<[i64; 3]> {
    expansion.into_iter().map(|(w, c)| [w.a, w.b, c]).collect()
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let doc = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Runtime(format!("serialization failed: {e}")))?;
    println!("{doc}");
    Ok(())
}

fn print_weight_table(rows: &[[i64; 3]], label: &str) {
    println!("{:>6} {:>6} {:>8}", "a", "b", label);
    for row in rows {
        println!("{:>6} {:>6} {:>8}", row[0], row[1], row[2]);
    }
}

#[derive(Serialize)]
struct CharacterOut {
    system: String,
    p: i64,
    weight: [i64; 2],
    module: &'static str,
    dimension: i64,
    character: Vec<[i64; 3]>,
}

fn cmd_character(args: CharacterArgs) -> Result<(), Failure> {
    let system = args.system.system();
    let ch = if args.weyl {
        weyl_character(&RootDatum::new(system), args.weight)
    } else {
        let ctx = ModularContext::new(system, args.p);
        ctx.simple_character(args.weight).as_ref().clone()
    };
    let out = CharacterOut {
        system: system.name().to_string(),
        p: args.p,
        weight: pair(args.weight),
        module: if args.weyl { "weyl" } else { "simple" },
        dimension: ch.dimension(),
        character: triples(ch.iter()),
    };
    match args.format {
        Format::Json => print_json(&out)?,
        Format::Text => {
            println!(
                "{} p={} {} module of highest weight {}, dimension {}",
                out.system, out.p, out.module, args.weight, out.dimension
            );
            print_weight_table(&out.character, "mult");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct DecomposeOut {
    system: String,
    p: i64,
    lambda: [i64; 2],
    mu: [i64; 2],
    method: &'static str,
    summands: Vec<[i64; 3]>,
    dimension: i64,
    multiplicity_free: bool,
}

fn cmd_decompose(args: DecomposeArgs) -> Result<(), Failure> {
    let system = args.system.system();
    let ctx = ModularContext::new(system, args.p);
    let summands: SimpleExpansion = match args.method {
        Method::Oracle => tensor_simple_decomposition(&ctx, args.lambda, args.mu),
        Method::TheoremB => reflection_small_multiplicities(&ctx, args.lambda, args.mu)
            .map_err(|e| Failure::Precondition(e.to_string()))?,
        Method::Minuscule => minuscule_decompose(&ctx, args.lambda, args.mu)
            .map_err(|e| Failure::Precondition(e.to_string()))?,
    };
    if args.method != Method::Oracle {
        let oracle = tensor_simple_decomposition(&ctx, args.lambda, args.mu);
        if summands != oracle {
            return Err(Failure::Mismatch(format!(
                "method {} disagrees with the oracle on L{} (x) L{}",
                args.method.name(),
                args.lambda,
                args.mu
            )));
        }
    }
    let dimension = summands.iter().map(|(&nu, &c)| c * ctx.simple_dimension(nu)).sum();
    let multiplicity_free = summands.values().all(|&c| c <= 1);
    let out = DecomposeOut {
        system: system.name().to_string(),
        p: args.p,
        lambda: pair(args.lambda),
        mu: pair(args.mu),
        method: args.method.name(),
        summands: triples(summands),
        dimension,
        multiplicity_free,
    };
    match args.format {
        Format::Json => print_json(&out)?,
        Format::Text => {
            println!(
                "{} p={}: L{} (x) L{} via {}, dimension {}",
                out.system, out.p, args.lambda, args.mu, out.method, out.dimension
            );
            print_weight_table(&out.summands, "mult");
            println!("multiplicity-free: {}", out.multiplicity_free);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyOut {
    system: String,
    p: i64,
    lambda: [i64; 2],
    mu: [i64; 2],
    cr: bool,
    mf: bool,
    rows: Vec<RowMatch>,
}

fn cmd_classify(args: ClassifyArgs) -> Result<(), Failure> {
    let system = args.system.system();
    let datum = RootDatum::new(system);
    let verdict = classify::verdict(&datum, args.p, args.lambda, args.mu);
    let out = ClassifyOut {
        system: system.name().to_string(),
        p: args.p,
        lambda: pair(args.lambda),
        mu: pair(args.mu),
        cr: verdict.cr,
        mf: verdict.mf,
        rows: verdict.rows,
    };
    match args.format {
        Format::Json => print_json(&out)?,
        Format::Text => {
            println!(
                "{} p={} L{} (x) L{}: completely reducible {}, multiplicity-free {}",
                out.system, out.p, args.lambda, args.mu, out.cr, out.mf
            );
            if out.rows.is_empty() {
                println!("rows: none");
            } else {
                let labels: Vec<String> = out.rows.iter().map(|r| r.to_string()).collect();
                println!("rows: {}", labels.join(" "));
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Mismatch {
    lambda: [i64; 2],
    mu: [i64; 2],
    oracle: bool,
    table: bool,
    rows: Vec<RowMatch>,
    detail: String,
}

#[derive(Serialize)]
struct SweepReport {
    system: String,
    p: i64,
    pairs_total: usize,
    mf_oracle_true: usize,
    mf_table_true: usize,
    mismatches: Vec<Mismatch>,
    #[serde(skip)]
    elapsed: std::time::Duration,
    #[serde(skip)]
    workers: usize,
}

struct PairOutcome {
    lambda: Weight,
    mu: Weight,
    oracle_mf: bool,
    cr: bool,
    mf: bool,
    rows: Vec<RowMatch>,
    problems: Vec<String>,
}

/// Runs every per-pair consistency check. Character computations reuse the
/// memoized store inside `ctx`, so the pair loop parallelizes cleanly.
fn check_pair(ctx: &ModularContext, lambda: Weight, mu: Weight) -> PairOutcome {
    let (datum, p) = (ctx.datum(), ctx.p());
    let decomposition = tensor_simple_decomposition(ctx, lambda, mu);
    let oracle_mf = decomposition.values().all(|&c| c <= 1);
    let verdict = classify::verdict(datum, p, lambda, mu);
    let mut problems = Vec::new();

    if oracle_mf != verdict.mf {
        problems.push(format!(
            "oracle multiplicity-freeness is {oracle_mf} but the tables say {}",
            verdict.mf
        ));
    }
    if verdict.mf && !verdict.cr {
        problems.push("tables claim multiplicity-free without complete reducibility".to_string());
    }
    if verdict.cr {
        let conds = cr_necessary_conditions(ctx, lambda, mu);
        if !conds.all_pass() {
            problems.push(format!(
                "necessary conditions fail for a completely reducible pair: \
                 levi={} singular={} gfd={}",
                conds.levi, conds.singular, conds.gfd
            ));
        }
        let ch_mu = ctx.simple_character(mu);
        if !decomposition.iter().all(|(&nu, &c)| c <= ch_mu.coeff(nu - lambda)) {
            problems.push(
                "weight-space bound fails for a completely reducible pair".to_string(),
            );
        }
    }
    if reflection_small(datum, p, lambda, mu) {
        let closed = reflection_small_multiplicities(ctx, lambda, mu)
            .expect("reflection smallness was checked");
        if closed != decomposition {
            problems.push("closed-form multiplicities disagree with the oracle".to_string());
        }
    }
    if let Ok(table) = verlinde_table(datum, p, lambda, mu) {
        let char0 = klimyk_char0(datum, lambda, mu);
        let mu_dual = datum.dual_weight(mu);
        for (&nu, &c) in &table {
            if c > char0.get(&nu).copied().unwrap_or(0) {
                problems.push(format!(
                    "fusion multiplicity at {nu} exceeds the characteristic-zero bound"
                ));
            }
            match verlinde_coefficient(datum, p, nu, mu_dual, lambda) {
                Ok(flipped) if flipped == c => {}
                Ok(flipped) => problems.push(format!(
                    "fusion flipping identity fails at {nu}: {c} vs {flipped}"
                )),
                Err(e) => problems.push(format!("fusion flipping identity at {nu}: {e}")),
            }
        }
    }

    PairOutcome {
        lambda,
        mu,
        oracle_mf,
        cr: verdict.cr,
        mf: verdict.mf,
        rows: verdict.rows,
        problems,
    }
}

fn load_cache_file(path: &Path) -> CacheFile {
    if !path.exists() {
        return CacheFile::new();
    }
    match cache::load(path) {
        Ok(file) => file,
        Err(e) => {
            eprintln!("warning: ignoring unusable cache at {}: {e}", path.display());
            CacheFile::new()
        }
    }
}

/// Returns a context for `(system, p)`, preferring the cache; the flag is
/// true when the table had to be rebuilt and should be written back.
fn cached_context(file: &CacheFile, system: RootSystem, p: i64) -> (ModularContext, bool) {
    if let Some(table) = file.find(system, p) {
        match cache::context_from_table(table) {
            Ok(ctx) => return (ctx, false),
            Err(e) => {
                eprintln!("warning: rebuilding cache table for {system} p={p}: {e}");
            }
        }
    }
    (ModularContext::new(system, p), true)
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let system = args.system.system();
    let cache_path = std::env::var_os("MODTENSOR_CACHE")
        .map(PathBuf::from)
        .or_else(|| args.cache.clone());
    let mut cache_file = match &cache_path {
        Some(path) => load_cache_file(path),
        None => CacheFile::new(),
    };
    let mut cache_dirty = false;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.workers)
        .build()
        .map_err(|e| Failure::Runtime(format!("thread pool: {e}")))?;

    let mut reports = Vec::new();
    let mut csv_rows = Vec::new();
    for &p in &args.p {
        let started = Instant::now();
        let (ctx, rebuilt) = cached_context(&cache_file, system, p);
        if rebuilt {
            cache_file.upsert(cache::table_from_context(&ctx));
            cache_dirty = true;
        }
        let weights: Vec<Weight> = (0..p)
            .flat_map(|a| (0..p).map(move |b| Weight::new(a, b)))
            .filter(|w| !w.is_zero())
            .collect();
        let pairs: Vec<(Weight, Weight)> = weights
            .iter()
            .flat_map(|&l| weights.iter().map(move |&m| (l, m)))
            .collect();
        let outcomes: Vec<PairOutcome> = pool.install(|| {
            pairs.par_iter().map(|&(l, m)| check_pair(&ctx, l, m)).collect()
        });

        let mut report = SweepReport {
            system: system.name().to_string(),
            p,
            pairs_total: outcomes.len(),
            mf_oracle_true: 0,
            mf_table_true: 0,
            mismatches: Vec::new(),
            elapsed: started.elapsed(),
            workers: pool.current_num_threads(),
        };
        for outcome in &outcomes {
            report.mf_oracle_true += outcome.oracle_mf as usize;
            report.mf_table_true += outcome.mf as usize;
            if !outcome.problems.is_empty() {
                report.mismatches.push(Mismatch {
                    lambda: pair(outcome.lambda),
                    mu: pair(outcome.mu),
                    oracle: outcome.oracle_mf,
                    table: outcome.mf,
                    rows: outcome.rows.clone(),
                    detail: outcome.problems.join("; "),
                });
            }
            let rows: Vec<String> = outcome.rows.iter().map(|r| r.to_string()).collect();
            csv_rows.push(format!(
                "{},{},{},{},{},{},{},{},{}",
                system.name(),
                p,
                outcome.lambda.a,
                outcome.lambda.b,
                outcome.mu.a,
                outcome.mu.b,
                outcome.cr,
                outcome.mf,
                rows.join(";")
            ));
        }
        report.elapsed = started.elapsed();
        eprintln!(
            "{} p={}: {} pairs, oracle-mf {}, table-mf {}, mismatches {}, {:.2?} on {} workers",
            report.system,
            report.p,
            report.pairs_total,
            report.mf_oracle_true,
            report.mf_table_true,
            report.mismatches.len(),
            report.elapsed,
            report.workers
        );
        reports.push(report);
    }

    if cache_dirty {
        if let Some(path) = &cache_path {
            if let Err(e) = cache::save(path, &cache_file) {
                eprintln!("warning: could not write cache to {}: {e}", path.display());
            }
        }
    }

    match args.emit {
        Emit::Json => print_json(&reports)?,
        Emit::Csv => {
            println!("system,p,la,lb,ma,mb,cr,mf,rows");
            for row in &csv_rows {
                println!("{row}");
            }
        }
    }

    let bad: usize = reports.iter().map(|r| r.mismatches.len()).sum();
    if bad > 0 {
        if args.emit == Emit::Csv {
            for report in &reports {
                for m in &report.mismatches {
                    match serde_json::to_string(m) {
                        Ok(doc) => eprintln!("mismatch: {doc}"),
                        Err(e) => eprintln!("mismatch (unserializable): {e}"),
                    }
                }
            }
        }
        return Err(Failure::Mismatch(format!("{bad} pair(s) failed verification")));
    }
    Ok(())
}

#[derive(Serialize)]
struct FusionEntry {
    lambda: [i64; 2],
    mu: [i64; 2],
    nu: [i64; 2],
    coeff: i64,
}

#[derive(Serialize)]
struct FusionOut {
    system: String,
    p: i64,
    points: Vec<[i64; 2]>,
    entries: Vec<FusionEntry>,
}

fn cmd_fusion(args: FusionArgs) -> Result<(), Failure> {
    let system = args.system.system();
    let datum = RootDatum::new(system);
    let p = args.p;
    let alcove = fundamental_alcove(&datum);
    let mut points: Vec<Weight> = (0..p)
        .flat_map(|a| (0..p).map(move |b| Weight::new(a, b)))
        .filter(|&w| in_open(&datum, p, &alcove, w))
        .collect();
    points.sort();

    let mut entries = Vec::new();
    for &lambda in &points {
        for &mu in &points {
            let table = verlinde_table(&datum, p, lambda, mu)
                .map_err(|e| Failure::Runtime(format!("fusion table at {lambda}, {mu}: {e}")))?;
            let mu_dual = datum.dual_weight(mu);
            for (&nu, &c) in &table {
                let flipped = verlinde_coefficient(&datum, p, nu, mu_dual, lambda)
                    .map_err(|e| Failure::Runtime(format!("flipping at {nu}: {e}")))?;
                if flipped != c {
                    return Err(Failure::Mismatch(format!(
                        "fusion flipping identity fails at {lambda}, {mu}, {nu}: {c} vs {flipped}"
                    )));
                }
                if system == RootSystem::B2 {
                    let twist = |x| omega_dot_b2(&datum, p, x).expect("fusion system is b2");
                    let twisted =
                        verlinde_coefficient(&datum, p, twist(lambda), mu, twist(nu))
                            .map_err(|e| Failure::Runtime(format!("twisting at {nu}: {e}")))?;
                    if twisted != c {
                        return Err(Failure::Mismatch(format!(
                            "fusion twist invariance fails at {lambda}, {mu}, {nu}: {c} vs {twisted}"
                        )));
                    }
                }
                entries.push(FusionEntry {
                    lambda: pair(lambda),
                    mu: pair(mu),
                    nu: pair(nu),
                    coeff: c,
                });
            }
        }
    }

    let out = FusionOut {
        system: system.name().to_string(),
        p,
        points: points.iter().copied().map(pair).collect(),
        entries,
    };
    match args.format {
        Format::Json => print_json(&out)?,
        Format::Text => {
            println!("{} p={}: {} interior weights", out.system, out.p, out.points.len());
            for entry in &out.entries {
                println!(
                    "({},{}) ({},{}) -> ({},{})  {}",
                    entry.lambda[0],
                    entry.lambda[1],
                    entry.mu[0],
                    entry.mu[1],
                    entry.nu[0],
                    entry.nu[1],
                    entry.coeff
                );
            }
        }
    }
    Ok(())
}
