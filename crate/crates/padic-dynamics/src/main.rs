//! Thin command-line front end for the library: classify parameter tuples,
//! run exact orbits with prediction columns, iterate the radius map on its
//! own, execute verification suites, and sample spheres — exact arithmetic
//! end to end, machine-readable output.
//!
//! Every number printed is exact: rationals as `num/den` strings, radii as
//! powers `p^e` of the base prime (integer or half-integer exponent), never
//! a float. Identical configuration (flags + seed) produces byte-identical
//! output, so reports can be diffed and frozen.
//!
//! Exit codes are a stable scripting interface:
//!
//! ```text
//! 0  success (for `verify`: every gating check passed)
//! 1  a verification suite found a counterexample
//! 2  usage error: bad flags, malformed rationals, invalid parameters
//! 3  the tuple is outside the classified catalogue (δ = √α = √β)
//! ```
//!
//! All mathematics lives in the library; this binary only parses flags,
//! calls one library entry point, and renders the result.

use clap::{Args, Parser, Subcommand, ValueEnum};
use padic_dynamics::classify::{classify_map, CaseTag, CriticalData};
use padic_dynamics::dynamics::{
    fixed_radii, limit_behavior, radius_orbit, DynamicsError, LimitBehavior, RadiusOrbitHalt,
};
use padic_dynamics::map::{Character, MapParams, OrbitTermination, SingularPoints};
use padic_dynamics::padic::{
    parse_rational, rational_repr, ExactPadic, FixedPadic, Radius, Valuation,
};
use padic_dynamics::verify::{
    judge_orbit_radii, run_suite, run_tuple_plan, sample_sphere, siegel_report, suite_to_csv,
    suite_to_json, JudgedOrbit, SiegelReport, SphereSpec, SuiteConfig, SuiteKind, SuiteOutcome,
    VerifyError, DEFAULT_BUDGET_BITS, DEFAULT_K_THRESHOLD, DEFAULT_PRECISION,
};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

// ── Flag structures ─────────────────────────────────────────────────────────

/// The map is `f(x) = (x³ + a·x² + b·x + c) / (x² + a·x + d)` over ℚ_p.
#[derive(Args, Debug)]
struct TupleArgs {
    /// Base prime of Q_p.
    #[arg(long)]
    p: u64,
    /// Coefficient a, as "num/den" or an integer.
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Coefficient b.
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    /// Coefficient c.
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    /// Coefficient d (must differ from b).
    #[arg(long, allow_hyphen_values = true)]
    d: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable lines.
    Text,
    /// Pretty-printed JSON (stable field order).
    Json,
    /// One row per record; header included.
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CliSuite {
    /// Distance-formula exactness on random tuples and points.
    Ff,
    /// Orbit radii vs. the stylized radius map on curated tuples.
    LemmaLf,
    /// Sphere invariance on the catalogued ranges.
    Spheres,
    /// Convergence to the fixed point for contracting shapes.
    Attraction,
    /// Landing sets for expanding shapes.
    Landing,
    /// Multiplier norm vs. observed drift direction.
    Character,
    /// Everything, plus Siegel-disk reports.
    All,
}

impl CliSuite {
    fn kind(self) -> SuiteKind {
        match self {
            CliSuite::Ff => SuiteKind::Formula,
            CliSuite::LemmaLf => SuiteKind::LemmaLf,
            CliSuite::Spheres => SuiteKind::Spheres,
            CliSuite::Attraction => SuiteKind::Attraction,
            CliSuite::Landing => SuiteKind::Landing,
            CliSuite::Character => SuiteKind::Character,
            CliSuite::All => SuiteKind::All,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "padic-dynamics",
    version,
    about = "Exact p-adic local dynamics of f(x) = (x^3+ax^2+bx+c)/(x^2+ax+d)",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a tuple: fixed point, poles, critical norms, multiplier,
    /// case shape, fixed radii, and the Siegel report.
    Classify {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Seed for the Siegel interior confirmation sampling.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Output format (csv is not meaningful here).
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Iterate f from a starting point and compare each step's distance to
    /// the fixed point against the radius-map prediction.
    Orbit {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Starting point, "num/den" or an integer.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Number of steps.
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Bit budget: iteration stops before a step whose operands exceed it.
        #[arg(long, default_value_t = DEFAULT_BUDGET_BITS)]
        budget: u64,
        /// Run on the fixed-precision backend with this many base-p digits
        /// instead of exact rationals.
        #[arg(long)]
        precision: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Iterate the stylized radius map only — no p-adic points involved.
    Radii {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Starting radius exponent e: the orbit begins on radius p^e.
        #[arg(long, allow_hyphen_values = true)]
        r_exp: i64,
        /// Number of steps.
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites: the built-in tuple catalogue by default, or
    /// a single explicit tuple via a derived sampling plan.
    Verify {
        /// Which suite to run.
        #[arg(long, value_enum, default_value_t = CliSuite::All)]
        suite: CliSuite,
        /// Optional explicit tuple (give all five of --p --a --b --c --d).
        #[arg(long)]
        p: Option<u64>,
        /// Coefficient a for the explicit tuple.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Coefficient b.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Coefficient c.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// Coefficient d.
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
        /// Base seed; each check derives its own from it and its claim id.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Per-sphere sample-count override.
        #[arg(long)]
        samples: Option<usize>,
        /// Convergence threshold exponent K (attraction must reach p^-K).
        #[arg(long, default_value_t = DEFAULT_K_THRESHOLD, allow_hyphen_values = true)]
        k_threshold: i64,
        /// Fixed-backend precision (significant base-p digits).
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample exact rational points on a sphere centered at the fixed point.
    Sample {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Sphere radius exponent e: points satisfy |x - x0|_p = p^e.
        #[arg(long, allow_hyphen_values = true)]
        r_exp: i64,
        /// How many points.
        #[arg(long, default_value_t = 10)]
        samples: usize,
        /// Sampling seed.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

// ── Failure plumbing ────────────────────────────────────────────────────────

/// A terminal failure: message for stderr plus the contractual exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn unclassified(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

fn verify_failure(e: VerifyError) -> Failure {
    match e {
        VerifyError::Dynamics(DynamicsError::UnclassifiedCase) => unclassified(
            "tuple sits on the boundary delta = sqrt(alpha) = sqrt(beta), \
             outside the case catalogue",
        ),
        other => usage(other.to_string()),
    }
}

impl TupleArgs {
    fn build(&self) -> Result<MapParams, Failure> {
        let parse =
            |name: &str, s: &str| parse_rational(s).map_err(|e| usage(format!("--{name}: {e}")));
        let a = parse("a", &self.a)?;
        let b = parse("b", &self.b)?;
        let c = parse("c", &self.c)?;
        let d = parse("d", &self.d)?;
        MapParams::new(self.p, a, b, c, d).map_err(|e| usage(format!("invalid parameters: {e}")))
    }
}

/// Writes the payload to `--out` or standard output.
fn emit(out: Option<&PathBuf>, payload: &str) -> Result<(), Failure> {
    match out {
        None => {
            print!("{payload}");
            Ok(())
        }
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

// ── Shared rendering ────────────────────────────────────────────────────────

fn show(p: u64, r: Radius) -> String {
    r.display_with_base(p)
}

fn character_label(ch: Character) -> &'static str {
    match ch {
        Character::Attracting => "attracting",
        Character::Indifferent => "indifferent",
        Character::Repelling => "repelling",
    }
}

fn termination_label(t: OrbitTermination) -> String {
    match t {
        OrbitTermination::Completed => "completed".to_string(),
        OrbitTermination::HitSingularity(k) => format!("hit-singularity at step {k}"),
        OrbitTermination::PrecisionLoss(k) => format!("precision-loss at step {k}"),
        OrbitTermination::BudgetExceeded(k) => format!("budget-exceeded at step {k}"),
    }
}

fn singular_points_label(sp: &SingularPoints) -> String {
    match sp {
        SingularPoints::TwoRational(x1, x2) => {
            format!("x = {} and x = {}", rational_repr(x1), rational_repr(x2))
        }
        SingularPoints::DoubleRational(x) => format!("double pole at x = {}", rational_repr(x)),
        SingularPoints::IrrationalInQp => "irrational pair in Q_p".to_string(),
        SingularPoints::NoneInQp => "not in Q_p".to_string(),
    }
}

fn bounds_label(p: u64, lower: Radius, upper: Option<Radius>) -> String {
    match (lower, upper) {
        (Radius::Zero, None) => "unbounded".to_string(),
        (Radius::Zero, Some(u)) => format!("<= {}", show(p, u)),
        (l, None) => format!(">= {}", show(p, l)),
        (l, Some(u)) => format!(">= {} and <= {}", show(p, l), show(p, u)),
    }
}

fn limit_label(p: u64, behavior: &LimitBehavior) -> String {
    match behavior {
        LimitBehavior::ConvergesToZero => "converges to the fixed point (radius -> 0)".to_string(),
        LimitBehavior::StaysAt(r) => format!("stays at {}", show(p, *r)),
        LimitBehavior::LandsIn(set) => format!("lands in {}", set.display_with_base(p)),
        LimitBehavior::PointDependentAfterCritical(set) => format!(
            "point-dependent after the critical sphere; outcomes in {}",
            set.display_with_base(p)
        ),
    }
}

fn show_fixed_point_digits(x: &FixedPadic) -> String {
    match x.valuation() {
        Valuation::Infinite => "0".to_string(),
        Valuation::Finite(v) => {
            let digits: Vec<String> = x.digits().iter().map(u32::to_string).collect();
            format!("{}^{} * [{}]", x.prime(), v, digits.join(" "))
        }
    }
}

// ── classify ────────────────────────────────────────────────────────────────

#[derive(Serialize)]
struct ClassifyReport {
    params: padic_dynamics::verify::ParamsRepr,
    fixed_point: String,
    singular_points: String,
    alpha: String,
    beta: String,
    delta: String,
    cap_a: String,
    cap_b: String,
    sqrt_alpha: String,
    sqrt_beta: String,
    multiplier_norm: String,
    character: String,
    case_tag: String,
    fixed_radii: String,
    siegel: SiegelReport,
}

fn build_classify_report(params: &MapParams, seed: u64) -> Result<ClassifyReport, Failure> {
    let (data, tag) =
        classify_map(params).map_err(|e| usage(format!("invalid parameters: {e}")))?;
    if tag == CaseTag::Unclassified {
        let p = params.prime();
        return Err(unclassified(format!(
            "case Unclassified: delta = {}, sqrt(alpha) = {}, sqrt(beta) = {} all coincide; \
             the catalogue excludes this boundary",
            show(p, data.delta),
            show(p, data.sqrt_alpha),
            show(p, data.sqrt_beta),
        )));
    }
    let p = params.prime();
    let character = params
        .fixed_point_character()
        .map_err(|e| usage(format!("invalid parameters: {e}")))?;
    let fixed = fixed_radii(tag, &data).map_err(verify_failure_dyn)?;
    let siegel = siegel_report(params, seed).map_err(verify_failure)?;
    Ok(ClassifyReport {
        params: padic_dynamics::verify::ParamsRepr::of(params),
        fixed_point: rational_repr(params.fixed_point().value()),
        singular_points: singular_points_label(&params.singular_points()),
        alpha: show(p, data.alpha),
        beta: show(p, data.beta),
        delta: show(p, data.delta),
        cap_a: show(p, data.cap_a),
        cap_b: show(p, data.cap_b),
        sqrt_alpha: show(p, data.sqrt_alpha),
        sqrt_beta: show(p, data.sqrt_beta),
        multiplier_norm: show(p, character.lambda_norm),
        character: character_label(character.character).to_string(),
        case_tag: tag.name().to_string(),
        fixed_radii: fixed.display_with_base(p),
        siegel,
    })
}

fn verify_failure_dyn(e: DynamicsError) -> Failure {
    verify_failure(VerifyError::Dynamics(e))
}

fn classify_text(report: &ClassifyReport) -> String {
    let mut s = String::new();
    let p = &report.params;
    let _ = writeln!(
        s,
        "tuple            p={} a={} b={} c={} d={}",
        p.p, p.a, p.b, p.c, p.d
    );
    let _ = writeln!(s, "fixed point x0   {}", report.fixed_point);
    let _ = writeln!(s, "poles            {}", report.singular_points);
    let _ = writeln!(s, "|alpha|          {}", report.alpha);
    let _ = writeln!(s, "|beta|           {}", report.beta);
    let _ = writeln!(s, "delta            {}", report.delta);
    let _ = writeln!(s, "capA             {}", report.cap_a);
    let _ = writeln!(s, "capB             {}", report.cap_b);
    let _ = writeln!(s, "sqrt(alpha)      {}", report.sqrt_alpha);
    let _ = writeln!(s, "sqrt(beta)       {}", report.sqrt_beta);
    let _ = writeln!(
        s,
        "|lambda|         {} ({})",
        report.multiplier_norm, report.character
    );
    let _ = writeln!(s, "case             {}", report.case_tag);
    let _ = writeln!(s, "fixed radii      {}", report.fixed_radii);
    let _ = writeln!(
        s,
        "siegel disk      {}",
        report.siegel.disk.as_deref().unwrap_or("none")
    );
    if report.siegel.degenerate_alpha {
        let _ = writeln!(s, "note             alpha = 0: inner geometry degenerates");
    }
    if let Some(conf) = &report.siegel.confirmation {
        let _ = writeln!(
            s,
            "siegel interior  sampled: {} passed, {} failed, {} skipped, {} inconclusive",
            conf.passed, conf.failed, conf.skipped, conf.inconclusive
        );
    }
    s
}

fn cmd_classify(
    tuple: &TupleArgs,
    seed: u64,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<ExitCode, Failure> {
    let params = tuple.build()?;
    let report = build_classify_report(&params, seed)?;
    let payload = match format {
        Format::Text => classify_text(&report),
        Format::Json => to_json(&report),
        Format::Csv => return Err(usage("classify emits text or json, not csv")),
    };
    emit(out, &payload)?;
    Ok(ExitCode::SUCCESS)
}

// ── orbit ───────────────────────────────────────────────────────────────────

#[derive(Serialize)]
struct OrbitRow {
    n: usize,
    point: String,
    radius: String,
    predicted: String,
    verdict: String,
}

#[derive(Serialize)]
struct OrbitReport {
    params: padic_dynamics::verify::ParamsRepr,
    case_tag: String,
    x: String,
    backend: String,
    termination: String,
    rows: Vec<OrbitRow>,
}

/// Builds display rows: row 0 is the start, later rows carry the stylized
/// prediction produced by the verifier's judge (or `-` outside the
/// catalogue).
fn orbit_rows(
    p: u64,
    tag: CaseTag,
    data: &CriticalData,
    points: Vec<String>,
    radii: &[Radius],
) -> Vec<OrbitRow> {
    let mut rows = Vec::with_capacity(radii.len());
    if radii.is_empty() {
        return rows;
    }
    rows.push(OrbitRow {
        n: 0,
        point: points.first().cloned().unwrap_or_else(|| "-".to_string()),
        radius: show(p, radii[0]),
        predicted: "-".to_string(),
        verdict: "start".to_string(),
    });
    let judged = if tag == CaseTag::Unclassified {
        None
    } else {
        judge_orbit_radii(p, tag, data, radii).ok()
    };
    let steps = match judged {
        Some(JudgedOrbit::Agrees(rows)) | Some(JudgedOrbit::Disagrees { rows, .. }) => rows,
        None => Vec::new(),
    };
    for (k, r) in radii.iter().enumerate().skip(1) {
        let point = points.get(k).cloned().unwrap_or_else(|| "-".to_string());
        match steps.get(k - 1) {
            Some(step) => rows.push(OrbitRow {
                n: step.n,
                point,
                radius: step.observed.clone(),
                predicted: step.predicted.clone(),
                verdict: step.verdict.clone(),
            }),
            None => rows.push(OrbitRow {
                n: k,
                point,
                radius: show(p, *r),
                predicted: "-".to_string(),
                verdict: "info".to_string(),
            }),
        }
    }
    rows
}

fn orbit_text(report: &OrbitReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "orbit of x = {} (case {}, backend {})",
        report.x, report.case_tag, report.backend
    );
    // The exact point goes last: orbit numerators grow without bound, and a
    // trailing column keeps the aligned part of the table readable.
    let rwidth = report
        .rows
        .iter()
        .map(|r| r.radius.len())
        .max()
        .unwrap_or(6)
        .max(6);
    let pwidth = report
        .rows
        .iter()
        .map(|r| r.predicted.len())
        .max()
        .unwrap_or(9)
        .max(9);
    let vwidth = report
        .rows
        .iter()
        .map(|r| r.verdict.len())
        .max()
        .unwrap_or(7)
        .max(7);
    let _ = writeln!(
        s,
        "{:>3}  {:<rwidth$}  {:<pwidth$}  {:<vwidth$}  point",
        "n", "radius", "predicted", "verdict"
    );
    for row in &report.rows {
        let _ = writeln!(
            s,
            "{:>3}  {:<rwidth$}  {:<pwidth$}  {:<vwidth$}  {}",
            row.n, row.radius, row.predicted, row.verdict, row.point
        );
    }
    let _ = writeln!(s, "termination: {}", report.termination);
    s
}

fn orbit_csv(report: &OrbitReport) -> String {
    let mut s = String::from("n,point,radius,predicted,verdict\n");
    for row in &report.rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            row.n, row.point, row.radius, row.predicted, row.verdict
        );
    }
    s
}

#[allow(clippy::too_many_arguments)]
fn cmd_orbit(
    tuple: &TupleArgs,
    x: &str,
    n: usize,
    budget: u64,
    precision: Option<usize>,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<ExitCode, Failure> {
    let params = tuple.build()?;
    let p = params.prime();
    let value = parse_rational(x).map_err(|e| usage(format!("--x: {e}")))?;
    let start = ExactPadic::new(p, value).map_err(|e| usage(format!("--x: {e}")))?;
    let (data, tag) =
        classify_map(&params).map_err(|e| usage(format!("invalid parameters: {e}")))?;

    let (backend, points, radii, termination) = match precision {
        None => {
            let record = params
                .orbit(&start, n, budget)
                .map_err(|e| usage(e.to_string()))?;
            let points: Vec<String> = record
                .points
                .iter()
                .map(|pt| rational_repr(pt.value()))
                .collect();
            (
                "exact".to_string(),
                points,
                record.radii,
                record.termination,
            )
        }
        Some(digits) => {
            let record = params
                .orbit_fixed(&start, n, digits)
                .map_err(|e| usage(e.to_string()))?;
            let points: Vec<String> = record.points.iter().map(show_fixed_point_digits).collect();
            (
                format!("fixed({digits} digits)"),
                points,
                record.radii,
                record.termination,
            )
        }
    };

    let report = OrbitReport {
        params: padic_dynamics::verify::ParamsRepr::of(&params),
        case_tag: tag.name().to_string(),
        x: x.trim().to_string(),
        backend,
        termination: termination_label(termination),
        rows: orbit_rows(p, tag, &data, points, &radii),
    };
    let payload = match format {
        Format::Text => orbit_text(&report),
        Format::Json => to_json(&report),
        Format::Csv => orbit_csv(&report),
    };
    emit(out, &payload)?;
    Ok(ExitCode::SUCCESS)
}

// ── radii ───────────────────────────────────────────────────────────────────

#[derive(Serialize)]
struct RadiusRow {
    n: usize,
    radius: String,
}

#[derive(Serialize)]
struct RadiiReport {
    params: padic_dynamics::verify::ParamsRepr,
    case_tag: String,
    start: String,
    rows: Vec<RadiusRow>,
    halt: String,
    limit: String,
}

fn radii_text(report: &RadiiReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "radius orbit from {} (case {})",
        report.start, report.case_tag
    );
    for row in &report.rows {
        let _ = writeln!(s, "{:>3}  {}", row.n, row.radius);
    }
    let _ = writeln!(s, "halt:  {}", report.halt);
    let _ = writeln!(s, "limit: {}", report.limit);
    s
}

fn radii_csv(report: &RadiiReport) -> String {
    let mut s = String::from("n,radius\n");
    for row in &report.rows {
        let _ = writeln!(s, "{},{}", row.n, row.radius);
    }
    s
}

fn cmd_radii(
    tuple: &TupleArgs,
    r_exp: i64,
    n: usize,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<ExitCode, Failure> {
    let params = tuple.build()?;
    let p = params.prime();
    let (data, tag) =
        classify_map(&params).map_err(|e| usage(format!("invalid parameters: {e}")))?;
    if tag == CaseTag::Unclassified {
        return Err(unclassified(
            "radius dynamics needs a classified shape; this tuple sits on the \
             excluded boundary delta = sqrt(alpha) = sqrt(beta)",
        ));
    }
    let r0 = Radius::int_power(r_exp);
    let orbit = radius_orbit(tag, &data, r0, n).map_err(verify_failure_dyn)?;
    let halt = match orbit.halt {
        RadiusOrbitHalt::Completed => "completed".to_string(),
        RadiusOrbitHalt::PointDependent {
            at_step,
            lower,
            upper,
        } => format!(
            "point-dependent after step {at_step}: next radius {}",
            bounds_label(p, lower, upper)
        ),
    };
    let limit = limit_behavior(tag, &data, r0).map_err(verify_failure_dyn)?;
    let report = RadiiReport {
        params: padic_dynamics::verify::ParamsRepr::of(&params),
        case_tag: tag.name().to_string(),
        start: show(p, r0),
        rows: orbit
            .radii
            .iter()
            .enumerate()
            .map(|(i, r)| RadiusRow {
                n: i,
                radius: show(p, *r),
            })
            .collect(),
        halt,
        limit: limit_label(p, &limit),
    };
    let payload = match format {
        Format::Text => radii_text(&report),
        Format::Json => to_json(&report),
        Format::Csv => radii_csv(&report),
    };
    emit(out, &payload)?;
    Ok(ExitCode::SUCCESS)
}

// ── verify ──────────────────────────────────────────────────────────────────

fn suite_text(outcome: &SuiteOutcome) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "suite {} (seed {})", outcome.suite, outcome.seed);
    for report in &outcome.reports {
        let mut flags = String::new();
        if report.vacuous {
            flags.push_str(" [vacuous]");
        }
        if !report.gating {
            flags.push_str(" [non-gating]");
        }
        let _ = writeln!(
            s,
            "{}: pass={} fail={} skip={} inconclusive={}{}",
            report.claim, report.passed, report.failed, report.skipped, report.inconclusive, flags
        );
    }
    for sr in &outcome.siegel {
        let _ = writeln!(
            s,
            "{}: case={} disk={}",
            sr.claim,
            sr.case_tag,
            sr.disk.as_deref().unwrap_or("none")
        );
    }
    let _ = writeln!(s, "failures: {}", outcome.failures);
    s
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: CliSuite,
    tuple: Option<MapParams>,
    config: &SuiteConfig,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<ExitCode, Failure> {
    let kind = suite.kind();
    let outcome = match tuple {
        None => run_suite(kind, config),
        Some(params) => run_tuple_plan(&params, kind, config).map_err(verify_failure)?,
    };
    let payload = match format {
        Format::Text => suite_text(&outcome),
        Format::Json => {
            let mut s = suite_to_json(&outcome);
            s.push('\n');
            s
        }
        Format::Csv => suite_to_csv(&outcome),
    };
    emit(out, &payload)?;
    eprintln!(
        "suite {}: {} reports, {} failures",
        outcome.suite,
        outcome.reports.len(),
        outcome.failures
    );
    if outcome.failures > 0 {
        // Print the first reproducer so a failing run is actionable.
        for report in &outcome.reports {
            if report.gating && report.failed > 0 {
                if let Some(ce) = &report.counterexample {
                    eprintln!(
                        "counterexample: claim={} sample={} point={} step={} observed={} expected={} (rerun with --seed {})",
                        report.claim,
                        ce.sample_index,
                        ce.point,
                        ce.step,
                        ce.observed,
                        ce.expected,
                        outcome.seed
                    );
                }
                break;
            }
        }
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

// ── sample ──────────────────────────────────────────────────────────────────

#[derive(Serialize)]
struct SampleReport {
    params: padic_dynamics::verify::ParamsRepr,
    center: String,
    radius: String,
    seed: u64,
    points: Vec<String>,
}

fn cmd_sample(
    tuple: &TupleArgs,
    r_exp: i64,
    samples: usize,
    seed: u64,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<ExitCode, Failure> {
    let params = tuple.build()?;
    let p = params.prime();
    let center = params.fixed_point();
    let spec = SphereSpec::on_radius(center.clone(), Radius::int_power(r_exp), samples, seed)
        .map_err(|e| usage(e.to_string()))?;
    let points: Vec<String> = sample_sphere(&spec)
        .iter()
        .map(|x| rational_repr(x.value()))
        .collect();
    let report = SampleReport {
        params: padic_dynamics::verify::ParamsRepr::of(&params),
        center: rational_repr(center.value()),
        radius: show(p, Radius::int_power(r_exp)),
        seed,
        points,
    };
    let payload = match format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{} points with |x - {}|_{} = {}",
                report.points.len(),
                report.center,
                p,
                report.radius
            );
            for pt in &report.points {
                let _ = writeln!(s, "{pt}");
            }
            s
        }
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("index,point\n");
            for (i, pt) in report.points.iter().enumerate() {
                let _ = writeln!(s, "{i},{pt}");
            }
            s
        }
    };
    emit(out, &payload)?;
    Ok(ExitCode::SUCCESS)
}

// ── entry point ─────────────────────────────────────────────────────────────

fn dispatch(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Classify {
            tuple,
            seed,
            format,
            out,
        } => cmd_classify(&tuple, seed, format, out.as_ref()),
        Command::Orbit {
            tuple,
            x,
            n,
            budget,
            precision,
            format,
            out,
        } => cmd_orbit(&tuple, &x, n, budget, precision, format, out.as_ref()),
        Command::Radii {
            tuple,
            r_exp,
            n,
            format,
            out,
        } => cmd_radii(&tuple, r_exp, n, format, out.as_ref()),
        Command::Verify {
            suite,
            p,
            a,
            b,
            c,
            d,
            seed,
            samples,
            k_threshold,
            precision,
            format,
            out,
        } => {
            let tuple = match (p, a, b, c, d) {
                (None, None, None, None, None) => None,
                (Some(p), Some(a), Some(b), Some(c), Some(d)) => {
                    let args = TupleArgs { p, a, b, c, d };
                    Some(args.build()?)
                }
                _ => {
                    return Err(usage(
                        "provide all of --p --a --b --c --d, or none to verify the \
                         built-in catalogue",
                    ))
                }
            };
            let config = SuiteConfig {
                seed,
                samples,
                k_threshold,
                precision,
            };
            cmd_verify(suite, tuple, &config, format, out.as_ref())
        }
        Command::Sample {
            tuple,
            r_exp,
            samples,
            seed,
            format,
            out,
        } => cmd_sample(&tuple, r_exp, samples, seed, format, out.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
