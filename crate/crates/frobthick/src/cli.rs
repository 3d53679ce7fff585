//! Command-line front door: parse inputs, dispatch analyses and sweeps,
//! emit human/JSON/CSV output, and run the named verification checks.
//!
//! Exit codes: 0 when the requested analyses complete (and, for `verify`,
//! every check passes); 1 when a verification check fails; 2 for invalid
//! input; 3 for a desk-scale guardrail refusal; 4 for an internal error.

use crate::error::{Error, Result};
use crate::graded::{is_smooth_projective_ci, regular_sequence_probe};
use crate::linalg::PrimeModulus;
use crate::parse::parse;
use crate::poly::{HomogPoly, RingSpec};
use crate::report::{Report, CSV_HEADER};
use crate::thickening::{
    codomain_monomial_estimate, fpt_estimate, is_injective, is_injective_at, minimal_t, nu,
    ThickeningMode, ThickeningQuery, Variety,
};
use crate::verify::{run_check_with, CheckId, CheckParams};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use std::path::PathBuf;

/// Refuse (without --force) any query whose predicted codomain coordinate
/// count exceeds this.
pub const GUARDRAIL_LIMIT: u128 = 500_000;

#[derive(Parser)]
#[command(
    name = "frobthick",
    version,
    about = "Exact Frobenius-injectivity analysis on thickenings of projective \
             complete intersections over F_p"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Proceed past the desk-scale guardrail.
    #[arg(long, global = true)]
    force: bool,
    /// Worker threads for sweeps; the FROBTHICK_THREADS variable overrides.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Power,
    Bracket,
}

impl From<ModeArg> for ThickeningMode {
    fn from(m: ModeArg) -> ThickeningMode {
        match m {
            ModeArg::Power => ThickeningMode::Power,
            ModeArg::Bracket => ThickeningMode::Bracket,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide injectivity of Frobenius into one thickening.
    Analyze(AnalyzeArgs),
    /// Find the least thickening exponent with an injective map.
    #[command(name = "minimal-t")]
    MinimalT(MinimalTArgs),
    /// Analyze a family over a prime grid, one report per (p, t) point.
    Sweep(SweepArgs),
    /// Frobenius membership order nu and the F-pure threshold lower bound.
    Fpt(FptArgs),
    /// Jacobian-criterion smoothness certificate, with a regular-sequence
    /// probe in codimension two and up.
    Smooth(SmoothArgs),
    /// Run named verification checks; any failure exits with code 1.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VarietyArgs {
    /// Ambient projective dimension n (variables x0..xn).
    #[arg(long)]
    n: usize,
    /// The prime p.
    #[arg(long)]
    p: u64,
    /// Hypersurface equation, e.g. "x0^3 - x1^2*x2".
    #[arg(long, conflicts_with = "ideal")]
    poly: Option<String>,
    /// Complete-intersection generator; repeat once per form.
    #[arg(long)]
    ideal: Vec<String>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    variety: VarietyArgs,
    /// Thickening exponent, 1 <= t <= p.
    #[arg(long)]
    t: u64,
    /// Serre twist j of the cohomology being compared.
    #[arg(long, default_value_t = 0)]
    twist: i64,
    #[arg(long, value_enum, default_value_t = ModeArg::Bracket)]
    mode: ModeArg,
    /// Compute at this Cech level instead of the minimal one.
    #[arg(long)]
    level: Option<u64>,
}

#[derive(Args)]
struct MinimalTArgs {
    #[command(flatten)]
    variety: VarietyArgs,
    #[arg(long, default_value_t = 0)]
    twist: i64,
    #[arg(long, value_enum, default_value_t = ModeArg::Bracket)]
    mode: ModeArg,
}

#[derive(Args)]
struct SweepArgs {
    /// Ambient projective dimension n (variables x0..xn).
    #[arg(long)]
    n: usize,
    /// Primes to sweep, comma separated.
    #[arg(long = "p-list", value_name = "P1,P2,...")]
    p_list: String,
    /// Sweep the Fermat family of this degree.
    #[arg(long, conflicts_with_all = ["poly", "ideal"])]
    fermat: Option<u64>,
    /// Hypersurface equation, re-read over each prime in the list.
    #[arg(long, conflicts_with = "ideal")]
    poly: Option<String>,
    /// Complete-intersection generator; repeat once per form.
    #[arg(long)]
    ideal: Vec<String>,
    /// Thickening exponents: a value "2", a list "1,3,4", or an inclusive
    /// range "1..4". Pairs with t > p are skipped.
    #[arg(long)]
    t: String,
    #[arg(long, default_value_t = 0)]
    twist: i64,
    #[arg(long, value_enum, default_value_t = ModeArg::Bracket)]
    mode: ModeArg,
}

#[derive(Args)]
struct FptArgs {
    /// Ambient projective dimension n (variables x0..xn).
    #[arg(long)]
    n: usize,
    /// The prime p.
    #[arg(long)]
    p: u64,
    /// Hypersurface equation.
    #[arg(long)]
    poly: String,
    /// Frobenius exponent; the membership order is taken against m^[p^e].
    #[arg(long, default_value_t = 1)]
    e: u32,
}

#[derive(Args)]
struct SmoothArgs {
    #[command(flatten)]
    variety: VarietyArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check names; all checks run when omitted.
    checks: Vec<String>,
    /// Prime-grid override for the prime-swept checks, comma separated.
    #[arg(long)]
    p: Option<String>,
    /// Seed for the randomized corpora.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random smooth samples per corpus cell.
    #[arg(long)]
    samples: Option<u32>,
}

#[derive(Serialize)]
struct FptOut {
    p: u64,
    e: u32,
    q: u64,
    nu: u64,
    bound: String,
    bound_decimal: f64,
}

#[derive(Serialize)]
struct SmoothOut {
    n: usize,
    p: u64,
    c: usize,
    degrees: Vec<u64>,
    smooth: bool,
    regular_sequence_probe: Option<bool>,
}

#[derive(Serialize)]
struct VerifyOut {
    check: String,
    passed: bool,
    cases: u64,
    detail: String,
    elapsed_ms: u64,
}

enum Output {
    Single(Report),
    Many(Vec<Report>),
    MinimalT(Report),
    Fpt(FptOut),
    Smooth(SmoothOut),
    Verify(Vec<VerifyOut>),
}

pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok((text, code)) => match emit(&cli.out, &text) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: {e}");
                4
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Guardrail { .. } => 3,
        Error::Internal(_) | Error::Io(_) | Error::DivisionByZero => 4,
        _ => 2,
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n")).map_err(Error::Io),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{text}") {
                Ok(()) => Ok(()),
                // A downstream consumer (head, a closed pager) hanging up
                // is not our error; stop quietly with the conventional
                // SIGPIPE status rather than panicking mid-print.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {
                    std::process::exit(141)
                }
                Err(e) => Err(Error::Io(e)),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<(String, i32)> {
    let threads = resolve_threads(cli.threads)?;
    let output = match &cli.command {
        Cmd::Analyze(a) => run_analyze(a, cli.force)?,
        Cmd::MinimalT(a) => run_minimal_t(a, cli.force)?,
        Cmd::Sweep(a) => run_sweep(a, cli.force, threads)?,
        Cmd::Fpt(a) => run_fpt(a)?,
        Cmd::Smooth(a) => run_smooth(a)?,
        Cmd::Verify(a) => run_verify(a)?,
    };
    Ok(render(&output, cli.format))
}

/// FROBTHICK_THREADS, when set, overrides the --threads flag.
fn resolve_threads(flag: Option<usize>) -> Result<Option<usize>> {
    let threads = match std::env::var("FROBTHICK_THREADS") {
        Ok(text) => Some(text.trim().parse::<usize>().map_err(|_| {
            Error::Precondition(format!(
                "FROBTHICK_THREADS must be a positive integer, got {text:?}"
            ))
        })?),
        Err(_) => flag,
    };
    if threads == Some(0) {
        return Err(Error::Precondition("thread count must be positive".into()));
    }
    Ok(threads)
}

fn with_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            Ok(pool.install(job))
        }
        None => Ok(job()),
    }
}

fn parse_u64_list(text: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        out.push(piece.parse::<u64>().map_err(|_| {
            Error::Precondition(format!("expected a number in the list, got {piece:?}"))
        })?);
    }
    Ok(out)
}

/// "2" | "1,3,4" | inclusive range "1..4".
fn parse_t_spec(text: &str) -> Result<Vec<u64>> {
    if let Some((lo, hi)) = text.split_once("..") {
        let bad = |s: &str| Error::Precondition(format!("bad range endpoint {s:?}"));
        let lo_v = lo.trim().parse::<u64>().map_err(|_| bad(lo))?;
        let hi_v = hi.trim().parse::<u64>().map_err(|_| bad(hi))?;
        if lo_v > hi_v {
            return Err(Error::Precondition(format!("empty range {text:?}")));
        }
        return Ok((lo_v..=hi_v).collect());
    }
    parse_u64_list(text)
}

fn parse_gens(ring: RingSpec, poly: &Option<String>, ideal: &[String]) -> Result<Vec<HomogPoly>> {
    match (poly, ideal.is_empty()) {
        (Some(text), true) => Ok(vec![parse(ring, text)?]),
        (None, false) => ideal.iter().map(|text| parse(ring, text)).collect(),
        (None, true) => Err(Error::Precondition(
            "give --poly or at least one --ideal generator".into(),
        )),
        (Some(_), false) => Err(Error::Precondition(
            "--poly and --ideal are mutually exclusive".into(),
        )),
    }
}

fn build_variety(args: &VarietyArgs) -> Result<Variety> {
    let ring = RingSpec::new(args.n + 1, PrimeModulus::new(args.p)?);
    Variety::new(ring, parse_gens(ring, &args.poly, &args.ideal)?)
}

fn fermat_text(n: usize, d: u64) -> String {
    (0..=n).map(|i| format!("x{i}^{d}")).collect::<Vec<_>>().join(" + ")
}

fn guardrail(v: &Variety, q: &ThickeningQuery, level: Option<u64>, force: bool) -> Result<()> {
    let estimate = codomain_monomial_estimate(v, q, level);
    if estimate > GUARDRAIL_LIMIT && !force {
        return Err(Error::Guardrail {
            estimate,
            limit: GUARDRAIL_LIMIT,
            what: format!(
                "codomain coordinate build at p = {}, t = {}, twist = {}",
                v.ring().modulus().get(),
                q.t,
                q.twist
            ),
        });
    }
    Ok(())
}

fn run_analyze(a: &AnalyzeArgs, force: bool) -> Result<Output> {
    let v = build_variety(&a.variety)?;
    let q = ThickeningQuery { t: a.t, twist: a.twist, mode: a.mode.into() };
    guardrail(&v, &q, a.level, force)?;
    let analysis = is_injective_at(&v, &q, a.level)?;
    Ok(Output::Single(Report::new(&v, &analysis)))
}

fn run_minimal_t(a: &MinimalTArgs, force: bool) -> Result<Output> {
    let v = build_variety(&a.variety)?;
    let mode: ThickeningMode = a.mode.into();
    // The search probes downward as far as t = 1; gate on the widest
    // matrix it could build.
    guardrail(&v, &ThickeningQuery { t: 1, twist: a.twist, mode }, None, force)?;
    let t_min = minimal_t(&v, a.twist, mode)?;
    let analysis = is_injective(&v, &ThickeningQuery { t: t_min, twist: a.twist, mode })?;
    Ok(Output::MinimalT(Report::new(&v, &analysis)))
}

fn run_sweep(a: &SweepArgs, force: bool, threads: Option<usize>) -> Result<Output> {
    let primes = parse_u64_list(&a.p_list)?;
    let ts = parse_t_spec(&a.t)?;
    let mode: ThickeningMode = a.mode.into();
    let mut points: Vec<(Variety, ThickeningQuery)> = Vec::new();
    for &p in &primes {
        let ring = RingSpec::new(a.n + 1, PrimeModulus::new(p)?);
        let gens = match a.fermat {
            Some(d) => vec![parse(ring, &fermat_text(a.n, d))?],
            None => parse_gens(ring, &a.poly, &a.ideal)?,
        };
        let v = Variety::new(ring, gens)?;
        for &t in &ts {
            if t > p {
                continue;
            }
            let q = ThickeningQuery { t, twist: a.twist, mode };
            guardrail(&v, &q, None, force)?;
            points.push((v.clone(), q));
        }
    }
    if points.is_empty() {
        return Err(Error::Precondition(
            "sweep grid is empty (every t exceeded its p?)".into(),
        ));
    }
    // Grid points are independent; reports come back in input order.
    let reports = with_pool(threads, || {
        points
            .par_iter()
            .map(|(v, q)| is_injective(v, q).map(|analysis| Report::new(v, &analysis)))
            .collect::<Result<Vec<Report>>>()
    })??;
    Ok(Output::Many(reports))
}

fn run_fpt(a: &FptArgs) -> Result<Output> {
    let ring = RingSpec::new(a.n + 1, PrimeModulus::new(a.p)?);
    let f = parse(ring, &a.poly)?;
    let q = a.p.checked_pow(a.e).ok_or_else(|| {
        Error::Precondition(format!("p^e = {}^{} does not fit in 64 bits", a.p, a.e))
    })?;
    let order = nu(&f, a.e)?;
    let bound = fpt_estimate(&f, a.e)?;
    Ok(Output::Fpt(FptOut {
        p: a.p,
        e: a.e,
        q,
        nu: order,
        bound: bound.to_string(),
        bound_decimal: bound.as_f64(),
    }))
}

fn run_smooth(a: &SmoothArgs) -> Result<Output> {
    let v = build_variety(&a.variety)?;
    let smooth = is_smooth_projective_ci(v.generators())?;
    let probe = if v.codim() >= 2 {
        Some(regular_sequence_probe(v.generators())?)
    } else {
        None
    };
    Ok(Output::Smooth(SmoothOut {
        n: v.ambient_dim(),
        p: v.ring().modulus().get(),
        c: v.codim(),
        degrees: v.degrees(),
        smooth,
        regular_sequence_probe: probe,
    }))
}

fn run_verify(a: &VerifyArgs) -> Result<Output> {
    let ids: Vec<CheckId> = if a.checks.is_empty() {
        CheckId::ALL.to_vec()
    } else {
        a.checks
            .iter()
            .map(|name| {
                CheckId::from_name(name).ok_or_else(|| {
                    Error::Precondition(format!(
                        "unknown check {name:?}; known checks: {}",
                        CheckId::ALL.map(|id| id.name()).join(", ")
                    ))
                })
            })
            .collect::<Result<Vec<CheckId>>>()?
    };
    let params = CheckParams {
        primes: a.p.as_deref().map(parse_u64_list).transpose()?,
        randoms_per_cell: a.samples,
    };
    let rows = ids
        .iter()
        .map(|&id| {
            let outcome = run_check_with(id, a.seed, &params);
            VerifyOut {
                check: outcome.id.name().to_string(),
                passed: outcome.passed,
                cases: outcome.cases,
                detail: outcome.detail,
                elapsed_ms: outcome.elapsed.as_millis() as u64,
            }
        })
        .collect();
    Ok(Output::Verify(rows))
}

fn render_reports(reports: &[Report], format: Format) -> String {
    match format {
        Format::Human => {
            reports.iter().map(Report::to_string).collect::<Vec<_>>().join("\n\n")
        }
        Format::Json => {
            reports.iter().map(Report::to_json).collect::<Vec<_>>().join("\n")
        }
        Format::Csv => {
            let mut lines = vec![CSV_HEADER.to_string()];
            lines.extend(reports.iter().map(Report::csv_row));
            lines.join("\n")
        }
    }
}

fn render(output: &Output, format: Format) -> (String, i32) {
    match output {
        Output::Single(report) => (render_reports(std::slice::from_ref(report), format), 0),
        Output::Many(reports) => (render_reports(reports, format), 0),
        Output::MinimalT(report) => {
            let text = match format {
                Format::Human => format!(
                    "least injective t = {} ({} mode, twist {})\n{report}",
                    report.query.t, report.query.mode, report.query.twist
                ),
                _ => render_reports(std::slice::from_ref(report), format),
            };
            (text, 0)
        }
        Output::Fpt(o) => {
            let text = match format {
                Format::Human => format!(
                    "nu(f, q = {}) = {}\nF-pure threshold lower bound: {} ~ {:.6}",
                    o.q, o.nu, o.bound, o.bound_decimal
                ),
                Format::Json => serde_json::to_string(o).expect("fpt output serializes"),
                Format::Csv => format!(
                    "p,e,q,nu,bound,bound_decimal\n{},{},{},{},{},{}",
                    o.p, o.e, o.q, o.nu, o.bound, o.bound_decimal
                ),
            };
            (text, 0)
        }
        Output::Smooth(o) => {
            let text = match format {
                Format::Human => {
                    let mut lines = vec![format!(
                        "n = {}, p = {}, c = {}, degrees {:?}",
                        o.n, o.p, o.c, o.degrees
                    )];
                    lines.push(format!(
                        "smooth: {}",
                        if o.smooth { "yes (Jacobian ideal is irrelevant-primary)" } else { "no" }
                    ));
                    if let Some(probe) = o.regular_sequence_probe {
                        lines.push(format!(
                            "regular sequence probe: {}",
                            if probe { "consistent with a regular sequence" } else { "FAILED" }
                        ));
                    }
                    lines.join("\n")
                }
                Format::Json => serde_json::to_string(o).expect("smooth output serializes"),
                Format::Csv => format!(
                    "n,p,c,smooth,regular_sequence_probe\n{},{},{},{},{}",
                    o.n,
                    o.p,
                    o.c,
                    o.smooth,
                    o.regular_sequence_probe.map_or("".to_string(), |b| b.to_string())
                ),
            };
            (text, 0)
        }
        Output::Verify(rows) => {
            let all_passed = rows.iter().all(|r| r.passed);
            let text = match format {
                Format::Human => rows
                    .iter()
                    .map(|r| {
                        format!(
                            "{} {} — {} cases in {} ms — {}",
                            if r.passed { "PASS" } else { "FAIL" },
                            r.check,
                            r.cases,
                            r.elapsed_ms,
                            r.detail
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => rows
                    .iter()
                    .map(|r| serde_json::to_string(r).expect("verify output serializes"))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Csv => {
                    let mut lines = vec!["check,passed,cases,elapsed_ms".to_string()];
                    lines.extend(rows.iter().map(|r| {
                        format!("{},{},{},{}", r.check, r.passed, r.cases, r.elapsed_ms)
                    }));
                    lines.join("\n")
                }
            };
            (text, if all_passed { 0 } else { 1 })
        }
    }
}
