//! Empirical verification harness: sample exact rational points on spheres
//! around the fixed point, run p-adic orbits, and check every claim of the
//! radius-dynamics catalogue against what actually happens — the distance
//! formula, the stylized radius maps, sphere invariance, attraction, landing
//! sets, the fixed-point character, and Siegel disks.
//!
//! Everything here is exact: sampled points are rationals `x₀ + pᵐ·u` with
//! `u` a random rational unit, orbits run in exact rational arithmetic (or
//! the fixed-precision backend where only invariance over many steps is at
//! stake), and every comparison is an equality of exponents of `p`. A check
//! can therefore *fail* only if the claim (or this crate) is wrong — there
//! is no tolerance to hide behind.
//!
//! Reports are serializable ([`CheckReport`]); a failing sample always
//! carries a [`Counterexample`] with enough data (`params`, point, step) to
//! re-run the failure bit-exactly. Same seed, same report bytes.

use crate::classify::{classify_map, CaseTag, CriticalData};
use crate::cookbook::{CookbookEntry, COOKBOOK};
use crate::dynamics::{
    catalogue_notes, fixed_radii, limit_behavior, sphi2_is_landing, stylized_map, DynamicsError,
    LimitBehavior, RadiusSetDescriptor, RadiusStepResult,
};
use crate::map::{Character, MapError, MapParams, OrbitTermination};
use crate::padic::{rational_repr, ExactPadic, PadicError, Radius};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Default exact-orbit size cap (bits per numerator/denominator).
pub const DEFAULT_BUDGET_BITS: u64 = 1 << 20;
/// Tighter cap for exploratory orbits that may wander through several
/// point-dependent steps. Even with gcd-free radius tracking the integer
/// pairs triple in size per step, so an unbounded exploration would grow
/// exponentially; claims that need more steps than this allows are reported
/// inconclusive rather than ground out.
pub const EXPLORATION_BUDGET_BITS: u64 = 1 << 18;
/// Default fixed-backend precision (significant base-p digits).
pub const DEFAULT_PRECISION: usize = 64;
/// Default convergence threshold exponent: attraction must reach `p^{-K}`.
pub const DEFAULT_K_THRESHOLD: i64 = 10;

/// Errors from the verification layer.
#[derive(Debug, Error)]
pub enum VerifyError {
    /// The requested sphere has no rational points (non-integer exponent).
    #[error("sphere radius {0} is vacuous in Q_p: the value group needs an integer exponent")]
    VacuousSphere(String),
    /// Underlying map error.
    #[error(transparent)]
    Map(#[from] MapError),
    /// Underlying dynamics error.
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
    /// Underlying arithmetic error.
    #[error(transparent)]
    Padic(#[from] PadicError),
}

// ── Sphere sampling ─────────────────────────────────────────────────────────

/// A request for random exact points on the sphere `|x − center|_p = p^{−m}`.
#[derive(Debug, Clone)]
pub struct SphereSpec {
    /// Sphere center (normally the fixed point).
    pub center: ExactPadic,
    /// Valuation offset `m`: points are `center + pᵐ·u`, radius `p^{−m}`.
    pub exponent: i64,
    /// How many points to draw.
    pub sample_count: usize,
    /// RNG seed (ChaCha8, platform-independent).
    pub seed: u64,
}

impl SphereSpec {
    /// Builds a spec from a radius, rejecting radii outside the ℚ_p value
    /// group (zero or half-integer exponents).
    ///
    /// # Errors
    /// [`VerifyError::VacuousSphere`].
    pub fn on_radius(
        center: ExactPadic,
        radius: Radius,
        sample_count: usize,
        seed: u64,
    ) -> Result<Self, VerifyError> {
        let p = center.prime();
        match radius.integer_exponent() {
            Some(e) => Ok(SphereSpec {
                center,
                exponent: -e,
                sample_count,
                seed,
            }),
            None => Err(VerifyError::VacuousSphere(radius.display_with_base(p))),
        }
    }

    /// The sphere radius `p^{−m}`.
    #[must_use]
    pub fn radius(&self) -> Radius {
        Radius::int_power(-self.exponent)
    }
}

/// A random integer that is a p-adic unit: `digits` base-p digits drawn
/// uniformly, the lowest forced nonzero.
fn random_unit_integer(rng: &mut ChaCha8Rng, p: u64, digits: usize) -> BigUint {
    let mut acc = BigUint::from(rng.gen_range(1..p));
    let mut scale = BigUint::from(1u32);
    for _ in 1..digits {
        scale *= p;
        acc += BigUint::from(rng.gen_range(0..p)) * &scale;
    }
    acc
}

/// A random rational unit `u` (numerator and denominator both coprime to
/// `p`), with an occasional sign flip for coverage of both sphere "sides".
fn random_unit(rng: &mut ChaCha8Rng, p: u64) -> BigRational {
    let numer = BigInt::from(random_unit_integer(rng, p, 12));
    let denom = BigInt::from(random_unit_integer(rng, p, 6));
    let unit = BigRational::new(numer, denom);
    if rng.gen_bool(0.5) {
        -unit
    } else {
        unit
    }
}

/// Draws `spec.sample_count` exact points with `|x − center|_p = p^{−m}`,
/// deterministically per seed.
#[must_use]
pub fn sample_sphere(spec: &SphereSpec) -> Vec<ExactPadic> {
    let p = spec.center.prime();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let step = BigRational::from(BigInt::from(p)).pow(spec.exponent as i32);
    (0..spec.sample_count)
        .map(|_| {
            let u = random_unit(&mut rng, p);
            let value = spec.center.value() + &step * u;
            let x = ExactPadic::new(p, value).expect("prime already validated");
            debug_assert_eq!(
                x.sub(&spec.center).expect("same prime").norm(),
                spec.radius(),
                "sampled point off the requested sphere"
            );
            x
        })
        .collect()
}

/// Derives a per-check seed from a base seed and the claim id (FNV-1a), so
/// suites stay deterministic while different checks draw independent points.
#[must_use]
pub fn derive_seed(base: u64, claim: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in claim.as_bytes() {
        h ^= u64::from(*byte);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^ base
}

// ── Report types ────────────────────────────────────────────────────────────

/// Map parameters as exact rational strings.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ParamsRepr {
    /// The prime.
    pub p: u64,
    /// `a` as `num/den`.
    pub a: String,
    /// `b` as `num/den`.
    pub b: String,
    /// `c` as `num/den`.
    pub c: String,
    /// `d` as `num/den`.
    pub d: String,
}

impl ParamsRepr {
    /// Snapshot of a parameter set.
    #[must_use]
    pub fn of(params: &MapParams) -> Self {
        ParamsRepr {
            p: params.prime(),
            a: rational_repr(params.a()),
            b: rational_repr(params.b()),
            c: rational_repr(params.c()),
            d: rational_repr(params.d()),
        }
    }
}

/// One orbit step compared against its prediction.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct StepRow {
    /// Step index (`n = 0` is the starting sphere).
    pub n: usize,
    /// Observed radius, rendered with the concrete base (`3^-2`, `0`).
    pub observed: String,
    /// Predicted radius or bound (`3^-2`, `>=3^-1`, `<=3^-4`, `unbounded`).
    pub predicted: String,
    /// `exact`, `within-bound`, `mismatch`, or `out-of-bound`.
    pub verdict: String,
}

/// Verdict for one sampled point.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SampleVerdict {
    /// Sample index (reports are sorted by it).
    pub index: usize,
    /// The point, as `num/den`.
    pub point: String,
    /// `pass`, `fail`, `skipped`, or `inconclusive`.
    pub verdict: String,
    /// Free-form deterministic diagnostics.
    pub detail: String,
    /// Per-step comparison rows (may be empty for summary-style checks).
    pub steps: Vec<StepRow>,
}

/// Minimal reproducer for a failed sample.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    /// Index of the failing sample.
    pub sample_index: usize,
    /// The failing point, as `num/den`.
    pub point: String,
    /// First failing step.
    pub step: usize,
    /// What was observed there.
    pub observed: String,
    /// What the claim demanded.
    pub expected: String,
}

/// Outcome of one claim checked on one parameter tuple.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    /// Stable claim id, e.g. `lemma-lf/phi1/r-exp=-2`.
    pub claim: String,
    /// Human-readable statement of what was checked.
    pub clause: String,
    /// Case shape of the tuple.
    pub case_tag: String,
    /// The tuple.
    pub params: ParamsRepr,
    /// Seed used for sampling within this check.
    pub seed: u64,
    /// Whether failures here gate the suite (side-by-side companion clauses
    /// are reported with `gating: false`).
    pub gating: bool,
    /// True when the claim had nothing to check (e.g. no convergence clause).
    pub vacuous: bool,
    /// Counts by verdict.
    pub passed: usize,
    /// Failing samples.
    pub failed: usize,
    /// Samples skipped (singularity hits, out-of-clause starts).
    pub skipped: usize,
    /// Samples that neither passed nor failed within budget.
    pub inconclusive: usize,
    /// Clarifying notes attached to the whole report.
    pub notes: Vec<String>,
    /// First failing sample, if any, as a reproducer.
    pub counterexample: Option<Counterexample>,
    /// All sample verdicts, by index.
    pub samples: Vec<SampleVerdict>,
}

impl CheckReport {
    fn assemble(
        claim: String,
        clause: String,
        tag: CaseTag,
        params: &MapParams,
        seed: u64,
        samples: Vec<SampleVerdict>,
        notes: Vec<String>,
    ) -> Self {
        let mut passed = 0;
        let mut failed = 0;
        let mut skipped = 0;
        let mut inconclusive = 0;
        let mut counterexample = None;
        for s in &samples {
            match s.verdict.as_str() {
                "pass" => passed += 1,
                "fail" => {
                    failed += 1;
                    if counterexample.is_none() {
                        let bad = s
                            .steps
                            .iter()
                            .find(|row| row.verdict == "mismatch" || row.verdict == "out-of-bound");
                        counterexample = Some(Counterexample {
                            sample_index: s.index,
                            point: s.point.clone(),
                            step: bad.map_or(0, |row| row.n),
                            observed: bad
                                .map_or_else(|| s.detail.clone(), |row| row.observed.clone()),
                            expected: bad.map_or_else(String::new, |row| row.predicted.clone()),
                        });
                    }
                }
                "skipped" => skipped += 1,
                _ => inconclusive += 1,
            }
        }
        let vacuous = samples.is_empty();
        CheckReport {
            claim,
            clause,
            case_tag: tag.name().to_string(),
            params: ParamsRepr::of(params),
            seed,
            gating: true,
            vacuous,
            passed,
            failed,
            skipped,
            inconclusive,
            notes,
            counterexample,
            samples,
        }
    }
}

fn show(p: u64, r: Radius) -> String {
    r.display_with_base(p)
}

fn show_bounds(p: u64, lower: Radius, upper: Option<Radius>) -> String {
    match (lower, upper) {
        (Radius::Zero, None) => "unbounded".to_string(),
        (Radius::Zero, Some(u)) => format!("<={}", show(p, u)),
        (l, None) => format!(">={}", show(p, l)),
        (l, Some(u)) => format!(">={} and <={}", show(p, l), show(p, u)),
    }
}

// ── Orbit-vs-prediction comparison (shared by several checks) ──────────────

/// Verdict of [`judge_orbit_radii`]: either every observed step matched its
/// prediction, or the first disagreeing step is flagged.
#[derive(Debug, Clone)]
pub enum JudgedOrbit {
    /// All rows are `exact` or `within-bound`.
    Agrees(Vec<StepRow>),
    /// At least one row disagrees; `first_bad` is its step index.
    Disagrees {
        /// Every judged row, disagreeing ones included.
        rows: Vec<StepRow>,
        /// Step index of the first `mismatch`/`out-of-bound` row.
        first_bad: usize,
    },
}

/// Walks an observed radius sequence against the stylized map, resuming
/// through point-dependent steps: deterministic predictions must match
/// exactly, point-dependent ones must admit the observation.
///
/// # Errors
/// [`DynamicsError::UnclassifiedCase`] when the tag is outside the
/// catalogue.
pub fn judge_orbit_radii(
    p: u64,
    tag: CaseTag,
    data: &CriticalData,
    radii: &[Radius],
) -> Result<JudgedOrbit, DynamicsError> {
    let mut rows = Vec::new();
    let mut first_bad = None;
    for k in 0..radii.len().saturating_sub(1) {
        let observed = radii[k + 1];
        let row = match stylized_map(tag, data, radii[k])? {
            RadiusStepResult::Deterministic(expected) => StepRow {
                n: k + 1,
                observed: show(p, observed),
                predicted: show(p, expected),
                verdict: if observed == expected {
                    "exact"
                } else {
                    "mismatch"
                }
                .to_string(),
            },
            RadiusStepResult::PointDependent { lower, upper } => {
                let admitted = observed >= lower && upper.is_none_or(|u| observed <= u);
                StepRow {
                    n: k + 1,
                    observed: show(p, observed),
                    predicted: show_bounds(p, lower, upper),
                    verdict: if admitted {
                        "within-bound"
                    } else {
                        "out-of-bound"
                    }
                    .to_string(),
                }
            }
        };
        if first_bad.is_none() && (row.verdict == "mismatch" || row.verdict == "out-of-bound") {
            first_bad = Some(k + 1);
        }
        rows.push(row);
    }
    Ok(match first_bad {
        None => JudgedOrbit::Agrees(rows),
        Some(step) => JudgedOrbit::Disagrees {
            rows,
            first_bad: step,
        },
    })
}

/// Runs a distance-only orbit step by step, appending radii until `stop`
/// says the caller has seen enough (checked after every step), the step
/// budget runs out, or the orbit degenerates. Rides the gcd-free
/// [`MapParams::radius_walker`], so budgets bound multiplication cost only.
fn incremental_orbit(
    params: &MapParams,
    x: &ExactPadic,
    max_steps: usize,
    budget_bits: u64,
    mut stop: impl FnMut(&[Radius]) -> bool,
) -> Result<(Vec<Radius>, OrbitTermination), MapError> {
    let mut walker = params.radius_walker(x)?;
    let mut radii = vec![walker.current_radius()];
    let mut termination = OrbitTermination::Completed;
    for step in 0..max_steps {
        if stop(&radii) {
            break;
        }
        if walker.at_pole() {
            termination = OrbitTermination::HitSingularity(step);
            break;
        }
        if walker.bits() > budget_bits {
            termination = OrbitTermination::BudgetExceeded(step);
            break;
        }
        walker.step()?;
        radii.push(walker.current_radius());
    }
    Ok((radii, termination))
}

// ── Formula check ───────────────────────────────────────────────────────────

/// Checks the exact distance formula on explicit samples: the directly
/// measured `|f(x) − x₀|_p` must equal
/// `|x − x₀|_p · |(x+a/2)² + α₀|_p / |(x+a/2)² + β₀|_p`
/// with both sides computed independently. Singular samples are recorded as
/// skipped.
#[must_use]
pub fn check_formula_ff(
    params: &MapParams,
    samples: &[ExactPadic],
    claim: &str,
    seed: u64,
) -> CheckReport {
    let p = params.prime();
    let x0 = params.fixed_point();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let half_a = ExactPadic::new(p, params.a() * half).expect("validated prime");
    let alpha0 = params.alpha0();
    let beta0 = params.beta0();
    let tag = classify_map(params).map_or(CaseTag::Unclassified, |(_, t)| t);

    let verdicts = samples
        .iter()
        .enumerate()
        .map(|(index, x)| {
            let point = rational_repr(x.value());
            if params.is_singular(x.value()) {
                return SampleVerdict {
                    index,
                    point,
                    verdict: "skipped".to_string(),
                    detail: "x is a pole of the map".to_string(),
                    steps: Vec::new(),
                };
            }
            let t = x.add(&half_a).expect("same prime");
            let t2 = t.mul(&t).expect("same prime");
            let num = t2.add(&alpha0).expect("same prime");
            let den = t2.add(&beta0).expect("same prime");
            let rhs = (x.sub(&x0).expect("same prime").norm() * num.norm())
                .checked_div(den.norm())
                .expect("non-singular x has nonzero denominator norm");
            let fx = params.eval(x).expect("non-singular input");
            let lhs = fx.sub(&x0).expect("same prime").norm();
            let ok = lhs == rhs;
            SampleVerdict {
                index,
                point,
                verdict: if ok { "pass" } else { "fail" }.to_string(),
                detail: format!("direct={} formula={}", show(p, lhs), show(p, rhs)),
                steps: vec![StepRow {
                    n: 0,
                    observed: show(p, lhs),
                    predicted: show(p, rhs),
                    verdict: if ok { "exact" } else { "mismatch" }.to_string(),
                }],
            }
        })
        .collect();

    CheckReport::assemble(
        claim.to_string(),
        "direct |f(x)-x0| equals the factored distance formula exactly".to_string(),
        tag,
        params,
        seed,
        verdicts,
        Vec::new(),
    )
}

/// Random-tuple formula suite: ≥ `pairs` random `(params, x)` pairs spread
/// over the primes 2, 3, 5, 7, one report per tuple.
#[must_use]
pub fn formula_suite(seed: u64, pairs: usize) -> Vec<CheckReport> {
    const PRIMES: [u64; 4] = [2, 3, 5, 7];
    const POINTS_PER_TUPLE: usize = 4;
    let tuples_per_prime = pairs.div_ceil(PRIMES.len() * POINTS_PER_TUPLE);
    let mut reports = Vec::new();
    for p in PRIMES {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &format!("formula-ff/p={p}")));
        let mut made = 0;
        while made < tuples_per_prime {
            let a = BigRational::new(
                BigInt::from(rng.gen_range(-20i64..=20)),
                BigInt::from(*[1i64, 2, 3].get(rng.gen_range(0..3)).expect("fixed list")),
            );
            let b = BigRational::from(BigInt::from(rng.gen_range(-40i64..=40)));
            let c = BigRational::from(BigInt::from(rng.gen_range(-40i64..=40)));
            let d = BigRational::from(BigInt::from(rng.gen_range(-40i64..=40)));
            let Ok(params) = MapParams::new(p, a, b, c, d) else {
                continue; // b = d: redraw
            };
            made += 1;
            let claim = format!("formula-ff/p={p}/tuple={made}");
            let x0 = params.fixed_point();
            let points: Vec<ExactPadic> = (0..POINTS_PER_TUPLE)
                .map(|_| {
                    // x₀ + pʲ·u for j in [−3, 3]: spheres at assorted radii.
                    let j = rng.gen_range(-3i32..=3);
                    let u = random_unit(&mut rng, p);
                    let value = x0.value() + BigRational::from(BigInt::from(p)).pow(j) * u;
                    ExactPadic::new(p, value).expect("validated prime")
                })
                .collect();
            reports.push(check_formula_ff(&params, &points, &claim, seed));
        }
    }
    reports
}

// ── Stylized-map check (lemma lf) ──────────────────────────────────────────

/// Samples a sphere and compares every orbit's radii with the stylized
/// radius map: deterministic steps must match exactly; point-dependent
/// steps are bound-checked, and the comparison resumes from the observed
/// radius.
///
/// # Errors
/// [`DynamicsError::UnclassifiedCase`] via [`VerifyError`], or a vacuous
/// sphere.
pub fn check_lemma_lf(
    params: &MapParams,
    r_exp: i64,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<CheckReport, VerifyError> {
    let (data, tag) = classify_map(params)?;
    if tag == CaseTag::Unclassified {
        return Err(DynamicsError::UnclassifiedCase.into());
    }
    let p = params.prime();
    let claim = format!("lemma-lf/r-exp={r_exp}");
    let spec = SphereSpec::on_radius(
        params.fixed_point(),
        Radius::int_power(r_exp),
        samples,
        seed,
    )?;
    let points = sample_sphere(&spec);

    let verdicts = points
        .iter()
        .enumerate()
        .map(|(index, x)| {
            let point = rational_repr(x.value());
            let orbit = match params.orbit_radii(x, n, DEFAULT_BUDGET_BITS) {
                Ok(o) => o,
                Err(e) => {
                    return SampleVerdict {
                        index,
                        point,
                        verdict: "inconclusive".to_string(),
                        detail: format!("orbit error: {e}"),
                        steps: Vec::new(),
                    }
                }
            };
            let (termination_note, terminated_ok) = match orbit.termination {
                OrbitTermination::Completed => (String::new(), true),
                OrbitTermination::HitSingularity(k) => {
                    return SampleVerdict {
                        index,
                        point,
                        verdict: "skipped".to_string(),
                        detail: format!("orbit hits a pole at step {k}"),
                        steps: Vec::new(),
                    }
                }
                OrbitTermination::BudgetExceeded(k) => {
                    (format!("budget exceeded at step {k}"), false)
                }
                OrbitTermination::PrecisionLoss(k) => {
                    (format!("precision loss at step {k}"), false)
                }
            };
            match judge_orbit_radii(p, tag, &data, &orbit.radii) {
                Ok(JudgedOrbit::Agrees(rows)) => SampleVerdict {
                    index,
                    point,
                    verdict: if terminated_ok {
                        "pass"
                    } else {
                        "inconclusive"
                    }
                    .to_string(),
                    detail: if terminated_ok {
                        format!("{} steps agree", rows.len())
                    } else {
                        termination_note
                    },
                    steps: rows,
                },
                Ok(JudgedOrbit::Disagrees { rows, first_bad }) => SampleVerdict {
                    index,
                    point,
                    verdict: "fail".to_string(),
                    detail: format!("first disagreement at step {first_bad}"),
                    steps: rows,
                },
                Err(e) => SampleVerdict {
                    index,
                    point,
                    verdict: "inconclusive".to_string(),
                    detail: format!("prediction error: {e}"),
                    steps: Vec::new(),
                },
            }
        })
        .collect();

    Ok(CheckReport::assemble(
        claim,
        "orbit radii equal the stylized radius map on deterministic steps and \
         satisfy its bounds on point-dependent ones"
            .to_string(),
        tag,
        params,
        seed,
        verdicts,
        catalogue_notes().iter().map(|s| (*s).to_string()).collect(),
    ))
}

// ── Invariant spheres ───────────────────────────────────────────────────────

/// Checks `f(S_r(x₀) ∖ 𝒫) ⊆ S_r(x₀)` on sampled points for `steps` steps,
/// using the fixed-precision backend (radii only need leading digits).
/// Samples that hit a pole are skipped; precision loss retries at double
/// precision and then reports inconclusive.
///
/// # Errors
/// Vacuous sphere.
pub fn check_invariant_spheres(
    params: &MapParams,
    r_exp: i64,
    samples: usize,
    seed: u64,
    steps: usize,
    precision: usize,
) -> Result<CheckReport, VerifyError> {
    let tag = classify_map(params).map_or(CaseTag::Unclassified, |(_, t)| t);
    let p = params.prime();
    let claim = format!("invariant-spheres/r-exp={r_exp}");
    let spec = SphereSpec::on_radius(
        params.fixed_point(),
        Radius::int_power(r_exp),
        samples,
        seed,
    )?;
    let points = sample_sphere(&spec);
    let target = Radius::int_power(r_exp);

    let verdicts = points
        .iter()
        .enumerate()
        .map(|(index, x)| {
            let point = rational_repr(x.value());
            for attempt_precision in [precision, precision * 2] {
                let orbit = match params.orbit_fixed(x, steps, attempt_precision) {
                    Ok(o) => o,
                    Err(e) => {
                        return SampleVerdict {
                            index,
                            point,
                            verdict: "inconclusive".to_string(),
                            detail: format!("orbit error: {e}"),
                            steps: Vec::new(),
                        }
                    }
                };
                match orbit.termination {
                    OrbitTermination::HitSingularity(k) => {
                        return SampleVerdict {
                            index,
                            point,
                            verdict: "skipped".to_string(),
                            detail: format!("orbit hits a pole at step {k}"),
                            steps: Vec::new(),
                        };
                    }
                    OrbitTermination::PrecisionLoss(_) => continue,
                    OrbitTermination::BudgetExceeded(_) | OrbitTermination::Completed => {}
                }
                return match orbit.radii.iter().position(|r| *r != target) {
                    None => SampleVerdict {
                        index,
                        point,
                        verdict: "pass".to_string(),
                        detail: format!(
                            "constant at {} for {} steps",
                            show(p, target),
                            orbit.radii.len() - 1
                        ),
                        steps: Vec::new(),
                    },
                    Some(k) => SampleVerdict {
                        index,
                        point,
                        verdict: "fail".to_string(),
                        detail: format!("left the sphere at step {k}"),
                        steps: vec![StepRow {
                            n: k,
                            observed: show(p, orbit.radii[k]),
                            predicted: show(p, target),
                            verdict: "mismatch".to_string(),
                        }],
                    },
                };
            }
            SampleVerdict {
                index,
                point,
                verdict: "inconclusive".to_string(),
                detail: "precision loss at doubled precision".to_string(),
                steps: Vec::new(),
            }
        })
        .collect();

    Ok(CheckReport::assemble(
        claim,
        "every sampled orbit stays on its starting sphere".to_string(),
        tag,
        params,
        seed,
        verdicts,
        Vec::new(),
    ))
}

// ── Attraction ──────────────────────────────────────────────────────────────

/// The radius below which the shape's orbits converge to the fixed point
/// (when it has a convergence clause at all).
#[must_use]
pub fn convergence_threshold(tag: CaseTag, data: &CriticalData) -> Option<Radius> {
    match tag {
        CaseTag::Phi1 | CaseTag::Phi3 | CaseTag::SPhi1 => Some(data.sqrt_beta),
        CaseTag::Psi2 => Some(data.delta),
        _ => None,
    }
}

/// Checks convergence to the fixed point from a sphere strictly inside the
/// convergence clause: radii must never increase, must reach `p^{−K}`
/// within the step budget, and every deterministic step must contract by
/// exactly the stylized slope. Out-of-clause starts are reported (vacuous),
/// not failed.
///
/// # Errors
/// Vacuous sphere, or unclassified tuple.
pub fn check_attraction(
    params: &MapParams,
    r_exp: i64,
    samples: usize,
    seed: u64,
    k_threshold: i64,
    max_steps: usize,
) -> Result<CheckReport, VerifyError> {
    let (data, tag) = classify_map(params)?;
    if tag == CaseTag::Unclassified {
        return Err(DynamicsError::UnclassifiedCase.into());
    }
    let p = params.prime();
    let claim = format!("attraction/r-exp={r_exp}");
    let start = Radius::int_power(r_exp);
    let clause = convergence_threshold(tag, &data);
    let in_clause = clause.is_some_and(|threshold| start < threshold);
    if !in_clause {
        let mut report = CheckReport::assemble(
            claim,
            "orbit radii fall below the convergence threshold".to_string(),
            tag,
            params,
            seed,
            Vec::new(),
            vec![match clause {
                Some(threshold) => format!(
                    "start radius {} is not inside the convergence clause (< {}); out-of-clause, nothing to check",
                    show(p, start),
                    show(p, threshold)
                ),
                None => "this shape has no convergence clause".to_string(),
            }],
        );
        report.vacuous = true;
        return Ok(report);
    }

    let threshold = Radius::int_power(-k_threshold);
    let spec = SphereSpec::on_radius(params.fixed_point(), start, samples, seed)?;
    let points = sample_sphere(&spec);

    let verdicts = points
        .iter()
        .enumerate()
        .map(|(index, x)| {
            let point = rational_repr(x.value());
            let run = incremental_orbit(params, x, max_steps, EXPLORATION_BUDGET_BITS, |radii| {
                radii.last().is_some_and(|r| *r <= threshold)
            });
            let (radii, termination) = match run {
                Ok(pair) => pair,
                Err(e) => {
                    return SampleVerdict {
                        index,
                        point,
                        verdict: "inconclusive".to_string(),
                        detail: format!("orbit error: {e}"),
                        steps: Vec::new(),
                    }
                }
            };
            if let OrbitTermination::HitSingularity(k) = termination {
                return SampleVerdict {
                    index,
                    point,
                    verdict: "skipped".to_string(),
                    detail: format!("orbit hits a pole at step {k}"),
                    steps: Vec::new(),
                };
            }
            let monotone = radii.windows(2).all(|w| w[1] <= w[0]);
            let reached = radii.last().is_some_and(|r| *r <= threshold);
            match judge_orbit_radii(p, tag, &data, &radii) {
                Ok(JudgedOrbit::Agrees(rows)) => {
                    if !monotone {
                        SampleVerdict {
                            index,
                            point,
                            verdict: "fail".to_string(),
                            detail: "radius increased during convergence".to_string(),
                            steps: rows,
                        }
                    } else if reached {
                        SampleVerdict {
                            index,
                            point,
                            verdict: "pass".to_string(),
                            detail: format!(
                                "reached {} after {} steps at the exact stylized slopes",
                                show(p, *radii.last().expect("nonempty")),
                                radii.len() - 1
                            ),
                            steps: rows,
                        }
                    } else {
                        SampleVerdict {
                            index,
                            point,
                            verdict: "inconclusive".to_string(),
                            detail: format!(
                                "did not reach {} in {max_steps} steps",
                                show(p, threshold)
                            ),
                            steps: rows,
                        }
                    }
                }
                Ok(JudgedOrbit::Disagrees { rows, first_bad }) => SampleVerdict {
                    index,
                    point,
                    verdict: "fail".to_string(),
                    detail: format!(
                        "contraction factor off the stylized slope at step {first_bad}"
                    ),
                    steps: rows,
                },
                Err(e) => SampleVerdict {
                    index,
                    point,
                    verdict: "inconclusive".to_string(),
                    detail: format!("prediction error: {e}"),
                    steps: Vec::new(),
                },
            }
        })
        .collect();

    Ok(CheckReport::assemble(
        claim,
        format!(
            "orbit radii are non-increasing, contract at the exact stylized slope on \
             deterministic steps, and fall below {}",
            show(p, threshold)
        ),
        tag,
        params,
        seed,
        verdicts,
        Vec::new(),
    ))
}

// ── Landing sets ────────────────────────────────────────────────────────────

/// The landing clause of an expanding shape: the critical radius orbits must
/// exit, and the set their first outside radius must belong to.
#[must_use]
pub fn landing_clause(tag: CaseTag, data: &CriticalData) -> Option<(Radius, RadiusSetDescriptor)> {
    let critical = match tag {
        CaseTag::Phi4 | CaseTag::Phi5 | CaseTag::Psi1 => data.sqrt_alpha,
        CaseTag::SPhi2 if sphi2_is_landing(data) => data.delta,
        _ => return None,
    };
    match limit_behavior(tag, data, critical) {
        Ok(LimitBehavior::LandsIn(set)) => Some((critical, set)),
        _ => None,
    }
}

/// How a first-exit radius relates to the landing set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LandingKind {
    /// Strictly inside the open landing interval.
    Interior,
    /// At/above the interval's critical-image bound, coming off the critical
    /// sphere (the "sphere reached from the critical bound" clause).
    CriticalBound,
    /// Not acceptable: below the set, or above it without having come off
    /// the critical sphere.
    Outside,
}

/// Classifies `r_out` as a first-exit radius, given the radius it exited
/// from. Open-interval membership is unconditional; exits off the critical
/// sphere may attain the interval's endpoint image (or, where the exit step
/// is unbounded above, overshoot it from near a pole on that sphere); a
/// deterministic step may also attain the endpoint exactly.
fn landing_membership(
    tag: CaseTag,
    data: &CriticalData,
    set: &RadiusSetDescriptor,
    critical: Radius,
    from: Radius,
    r_out: Radius,
) -> LandingKind {
    if set.contains_unconditional(r_out) {
        return LandingKind::Interior;
    }
    let conditional_floor = match set {
        RadiusSetDescriptor::Union(parts) => parts.iter().find_map(|part| match part {
            RadiusSetDescriptor::ConditionalPoint { radius, .. } => Some(*radius),
            _ => None,
        }),
        RadiusSetDescriptor::ConditionalPoint { radius, .. } => Some(*radius),
        _ => None,
    };
    if from == critical {
        return match conditional_floor {
            // The critical sphere's images are bounded below by the endpoint.
            Some(floor) if r_out >= floor => LandingKind::CriticalBound,
            Some(_) => LandingKind::Outside,
            // No endpoint bound: the exit step off this sphere is unbounded
            // above (a pole sits on the sphere), so any exit is an image of
            // the critical bound.
            None => LandingKind::CriticalBound,
        };
    }
    match stylized_map(tag, data, from) {
        Ok(RadiusStepResult::Deterministic(r))
            if r == r_out && conditional_floor == Some(r_out) =>
        {
            LandingKind::CriticalBound
        }
        _ => LandingKind::Outside,
    }
}

/// Checks the landing clause from an inner sphere: every sampled orbit must
/// exit the critical interval, its first outside radius must belong to the
/// landing set, and the radius must stay there for the remaining budgeted
/// steps. Orbits still inside at the step budget are inconclusive.
///
/// # Errors
/// Vacuous sphere, or unclassified tuple.
pub fn check_landing_sets(
    params: &MapParams,
    r_exp: i64,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<CheckReport, VerifyError> {
    let (data, tag) = classify_map(params)?;
    if tag == CaseTag::Unclassified {
        return Err(DynamicsError::UnclassifiedCase.into());
    }
    let p = params.prime();
    let claim = format!("landing-sets/r-exp={r_exp}");
    let Some((critical, set)) = landing_clause(tag, &data) else {
        let mut report = CheckReport::assemble(
            claim,
            "first radius outside the critical interval lies in the landing set".to_string(),
            tag,
            params,
            seed,
            Vec::new(),
            vec!["this shape has no landing clause".to_string()],
        );
        report.vacuous = true;
        return Ok(report);
    };
    let start = Radius::int_power(r_exp);
    let set_rendered = set.display_with_base(p);
    let spec = SphereSpec::on_radius(params.fixed_point(), start, samples, seed)?;
    let points = sample_sphere(&spec);
    const STICKING_WINDOW: usize = 3;

    let verdicts = points
        .iter()
        .enumerate()
        .map(|(index, x)| {
            let point = rational_repr(x.value());
            // Stop once the orbit has been outside for STICKING_WINDOW steps.
            let run = incremental_orbit(params, x, n, EXPLORATION_BUDGET_BITS, |radii| {
                radii
                    .iter()
                    .position(|r| *r > critical)
                    .is_some_and(|k| radii.len() - k > STICKING_WINDOW)
            });
            let (radii, termination) = match run {
                Ok(pair) => pair,
                Err(e) => {
                    return SampleVerdict {
                        index,
                        point,
                        verdict: "inconclusive".to_string(),
                        detail: format!("orbit error: {e}"),
                        steps: Vec::new(),
                    }
                }
            };
            if let OrbitTermination::HitSingularity(k) = termination {
                return SampleVerdict {
                    index,
                    point,
                    verdict: "skipped".to_string(),
                    detail: format!("orbit hits a pole at step {k}"),
                    steps: Vec::new(),
                };
            }
            let rows: Vec<StepRow> = radii
                .iter()
                .enumerate()
                .map(|(k, r)| StepRow {
                    n: k,
                    observed: show(p, *r),
                    predicted: set_rendered.clone(),
                    verdict: "info".to_string(),
                })
                .collect();
            let Some(exit) = radii.iter().position(|r| *r > critical) else {
                // Repeated point-dependent critical visits without exiting:
                // the landing set constrains exits only.
                return SampleVerdict {
                    index,
                    point,
                    verdict: "inconclusive".to_string(),
                    detail: format!(
                        "still inside the critical interval after {} steps (recurrent \
                         point-dependent visits; no exit to judge)",
                        radii.len() - 1
                    ),
                    steps: rows,
                };
            };
            if exit == 0 {
                // Start already outside: the sphere is invariant; sticking is
                // the whole claim.
                let constant = radii.iter().all(|r| *r == radii[0]);
                return SampleVerdict {
                    index,
                    point,
                    verdict: if constant { "pass" } else { "fail" }.to_string(),
                    detail: "start already outside the critical interval (invariant sphere)"
                        .to_string(),
                    steps: rows,
                };
            }
            let r_out = radii[exit];
            let membership = landing_membership(tag, &data, &set, critical, radii[exit - 1], r_out);
            let stuck = radii[exit..].iter().all(|r| *r == r_out);
            let (verdict, detail) = match membership {
                LandingKind::Outside => (
                    "fail",
                    format!(
                        "first outside radius {} is not in {}",
                        show(p, r_out),
                        set_rendered
                    ),
                ),
                _ if !stuck => ("fail", "radius moved after landing".to_string()),
                LandingKind::Interior => (
                    "pass",
                    format!(
                        "landed on {} at step {exit}, constant for {} more steps",
                        show(p, r_out),
                        radii.len() - 1 - exit
                    ),
                ),
                LandingKind::CriticalBound => (
                    "pass",
                    format!(
                        "landed on {} at step {exit} as an image of the critical bound, \
                         constant for {} more steps",
                        show(p, r_out),
                        radii.len() - 1 - exit
                    ),
                ),
            };
            SampleVerdict {
                index,
                point,
                verdict: verdict.to_string(),
                detail,
                steps: rows,
            }
        })
        .collect::<Vec<_>>();

    let mut notes = Vec::new();
    let bound_exits = verdicts
        .iter()
        .filter(|s: &&SampleVerdict| s.detail.contains("image of the critical bound"))
        .count();
    if bound_exits > 0 {
        notes.push(format!(
            "{bound_exits} exit(s) came off the critical sphere at or above the interval \
             endpoint and stuck on invariant spheres"
        ));
    }
    let recurrent = verdicts
        .iter()
        .filter(|s: &&SampleVerdict| s.verdict == "inconclusive" && s.detail.contains("recurrent"))
        .count();
    if recurrent > 0 {
        notes.push(format!(
            "{recurrent} orbit(s) kept revisiting point-dependent spheres without exiting; \
             the landing set constrains exits only"
        ));
    }

    Ok(CheckReport::assemble(
        claim,
        format!(
            "first radius outside {} lies in {} and then never moves",
            show(p, critical),
            set_rendered
        ),
        tag,
        params,
        seed,
        verdicts,
        notes,
    ))
}

// ── Character consistency ───────────────────────────────────────────────────

/// Checks that the multiplier-norm verdict matches the observed drift of
/// small spheres: shrinking iff attracting, growing iff repelling, constant
/// iff indifferent (one exact step from a non-critical inner sphere).
///
/// # Errors
/// Vacuous sphere, or a pole at the fixed point.
pub fn check_character(
    params: &MapParams,
    r_exp: i64,
    samples: usize,
    seed: u64,
) -> Result<CheckReport, VerifyError> {
    let character = params.fixed_point_character()?;
    let tag = classify_map(params).map_or(CaseTag::Unclassified, |(_, t)| t);
    let p = params.prime();
    let claim = format!("character/r-exp={r_exp}");
    let spec = SphereSpec::on_radius(
        params.fixed_point(),
        Radius::int_power(r_exp),
        samples,
        seed,
    )?;
    let points = sample_sphere(&spec);
    let expected = match character.character {
        Character::Attracting => "shrinking",
        Character::Indifferent => "constant",
        Character::Repelling => "growing",
    };

    let verdicts = points
        .iter()
        .enumerate()
        .map(|(index, x)| {
            let point = rational_repr(x.value());
            let orbit = match params.orbit_radii(x, 1, DEFAULT_BUDGET_BITS) {
                Ok(o) => o,
                Err(e) => {
                    return SampleVerdict {
                        index,
                        point,
                        verdict: "inconclusive".to_string(),
                        detail: format!("orbit error: {e}"),
                        steps: Vec::new(),
                    }
                }
            };
            if let OrbitTermination::HitSingularity(k) = orbit.termination {
                return SampleVerdict {
                    index,
                    point,
                    verdict: "skipped".to_string(),
                    detail: format!("orbit hits a pole at step {k}"),
                    steps: Vec::new(),
                };
            }
            let drift = match orbit.radii[1].cmp(&orbit.radii[0]) {
                std::cmp::Ordering::Less => "shrinking",
                std::cmp::Ordering::Equal => "constant",
                std::cmp::Ordering::Greater => "growing",
            };
            let ok = drift == expected;
            SampleVerdict {
                index,
                point,
                verdict: if ok { "pass" } else { "fail" }.to_string(),
                detail: format!(
                    "|lambda| = {}: expected {expected}, observed {drift} ({} -> {})",
                    show(p, character.lambda_norm),
                    show(p, orbit.radii[0]),
                    show(p, orbit.radii[1])
                ),
                steps: Vec::new(),
            }
        })
        .collect();

    Ok(CheckReport::assemble(
        claim,
        "multiplier verdict matches the drift direction of small spheres".to_string(),
        tag,
        params,
        seed,
        verdicts,
        Vec::new(),
    ))
}

// ── Siegel disks ────────────────────────────────────────────────────────────

/// Structured summary of the maximal Siegel disk at the fixed point.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SiegelReport {
    /// Stable claim id.
    pub claim: String,
    /// Case shape.
    pub case_tag: String,
    /// The tuple.
    pub params: ParamsRepr,
    /// Radius of the maximal Siegel disk (every sphere strictly inside is
    /// invariant), or `None` when orbits inside move between spheres.
    pub disk: Option<String>,
    /// The full fixed-radii descriptor, rendered.
    pub fixed_set: String,
    /// True when `α = 0` (the numerator shift vanishes; the inner geometry
    /// degenerates to pure powers of δ).
    pub degenerate_alpha: bool,
    /// Sampled confirmation on three interior spheres (when a disk exists).
    pub confirmation: Option<CheckReport>,
}

/// Derives the maximal Siegel disk from the classification: the largest
/// radius below which every realizable sphere is invariant.
///
/// # Errors
/// [`DynamicsError::UnclassifiedCase`] via [`VerifyError`].
pub fn siegel_report(params: &MapParams, seed: u64) -> Result<SiegelReport, VerifyError> {
    let (data, tag) = classify_map(params)?;
    if tag == CaseTag::Unclassified {
        return Err(DynamicsError::UnclassifiedCase.into());
    }
    let p = params.prime();
    let fixed = fixed_radii(tag, &data)?;
    // A disk exists exactly when every sphere strictly below the critical
    // radius is fixed — the shapes whose fixed set has a Complement part.
    let disk = match tag {
        CaseTag::Phi2 => Some(data.sqrt_alpha),
        CaseTag::SPhi3 | CaseTag::Psi3 => Some(data.delta),
        CaseTag::SPhi2 if !sphi2_is_landing(&data) => Some(data.delta),
        _ => None,
    };
    let confirmation = match disk {
        None => None,
        Some(radius) => {
            // Three largest realizable sphere exponents strictly inside.
            let top = radius.exponent().map_or(0, |e| {
                let floor = e.floor().to_integer();
                if e.is_integer() {
                    floor - 1
                } else {
                    floor
                }
            });
            let exponents = [top, top - 1, top - 2];
            let mut merged: Option<CheckReport> = None;
            for e in exponents {
                let claim = format!("siegel/interior/r-exp={e}");
                let mut report = check_invariant_spheres(
                    params,
                    e,
                    10,
                    derive_seed(seed, &claim),
                    5,
                    DEFAULT_PRECISION,
                )?;
                report.claim = claim;
                match &mut merged {
                    None => merged = Some(report),
                    Some(acc) => {
                        acc.passed += report.passed;
                        acc.failed += report.failed;
                        acc.skipped += report.skipped;
                        acc.inconclusive += report.inconclusive;
                        if acc.counterexample.is_none() {
                            acc.counterexample = report.counterexample;
                        }
                        acc.samples.extend(report.samples);
                        acc.claim = "siegel/interior".to_string();
                    }
                }
            }
            merged
        }
    };
    Ok(SiegelReport {
        claim: "siegel".to_string(),
        case_tag: tag.name().to_string(),
        params: ParamsRepr::of(params),
        disk: disk.map(|r| show(p, r)),
        fixed_set: fixed.display_with_base(p),
        degenerate_alpha: data.alpha.is_zero(),
        confirmation,
    })
}

// ── Suites ──────────────────────────────────────────────────────────────────

/// Which verification suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    /// Distance-formula exactness on random tuples and points.
    Formula,
    /// Stylized-map agreement on cookbook orbits.
    LemmaLf,
    /// Sphere invariance on the catalogued fixed-radius ranges.
    Spheres,
    /// Convergence to the fixed point for attracting shapes.
    Attraction,
    /// Landing sets for expanding shapes.
    Landing,
    /// Multiplier-vs-drift character consistency.
    Character,
    /// Everything, plus Siegel reports.
    All,
}

impl SuiteKind {
    /// Stable name (CLI argument and report field).
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Formula => "ff",
            SuiteKind::LemmaLf => "lemma-lf",
            SuiteKind::Spheres => "spheres",
            SuiteKind::Attraction => "attraction",
            SuiteKind::Landing => "landing",
            SuiteKind::Character => "character",
            SuiteKind::All => "all",
        }
    }
}

/// Shared configuration for suite runs.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    /// Base seed; every check derives its own from it and its claim id.
    pub seed: u64,
    /// Per-sphere sample-count override (each check has its own default).
    pub samples: Option<usize>,
    /// Convergence threshold exponent `K`.
    pub k_threshold: i64,
    /// Fixed-backend precision.
    pub precision: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 7,
            samples: None,
            k_threshold: DEFAULT_K_THRESHOLD,
            precision: DEFAULT_PRECISION,
        }
    }
}

/// Everything a suite run produced.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    /// Which suite ran.
    pub suite: String,
    /// The base seed.
    pub seed: u64,
    /// Clarifying notes (catalogue readings) that apply suite-wide.
    pub notes: Vec<String>,
    /// Number of gating reports with at least one failed sample.
    pub failures: usize,
    /// All check reports, in deterministic order.
    pub reports: Vec<CheckReport>,
    /// Siegel summaries (suite `all` only).
    pub siegel: Vec<SiegelReport>,
}

fn entry_claim(entry: &CookbookEntry, base: &str) -> String {
    format!("{}/{}", base, entry.label)
}

fn push_with_claim(reports: &mut Vec<CheckReport>, claim: String, mut report: CheckReport) {
    report.claim = claim;
    reports.push(report);
}

/// Runs one suite over the cookbook. Infallible by construction: cookbook
/// entries are validated by tests, so per-entry errors are reported as
/// panics (a broken table is a bug, not a runtime condition).
#[must_use]
pub fn run_suite(kind: SuiteKind, config: &SuiteConfig) -> SuiteOutcome {
    let mut reports: Vec<CheckReport> = Vec::new();
    let mut siegel = Vec::new();
    let seed = config.seed;

    let want = |k: SuiteKind| kind == k || kind == SuiteKind::All;

    if want(SuiteKind::Formula) {
        reports.extend(formula_suite(seed, config.samples.unwrap_or(500)));
        // The cookbook tuples too, on their own orbit spheres.
        for entry in &COOKBOOK {
            let params = entry.params();
            let claim = entry_claim(entry, "formula-ff");
            let check_seed = derive_seed(seed, &claim);
            let mut points = Vec::new();
            for &e in entry.orbit_exponents {
                let spec = SphereSpec::on_radius(
                    params.fixed_point(),
                    Radius::int_power(e),
                    4,
                    derive_seed(check_seed, &format!("e={e}")),
                )
                .expect("cookbook exponents are integers");
                points.extend(sample_sphere(&spec));
            }
            let mut report = check_formula_ff(&params, &points, &claim, check_seed);
            report.claim = claim;
            reports.push(report);
        }
    }

    if want(SuiteKind::LemmaLf) {
        let samples = config.samples.unwrap_or(20);
        for entry in &COOKBOOK {
            let params = entry.params();
            for &e in entry.orbit_exponents {
                let claim = format!("lemma-lf/{}/r-exp={e}", entry.label);
                let report = check_lemma_lf(&params, e, 6, samples, derive_seed(seed, &claim))
                    .expect("cookbook tuples classify");
                push_with_claim(&mut reports, claim, report);
            }
            for &e in entry.critical_exponents {
                let claim = format!("lemma-lf-critical/{}/r-exp={e}", entry.label);
                let report =
                    check_lemma_lf(&params, e, 4, samples.min(8), derive_seed(seed, &claim))
                        .expect("cookbook tuples classify");
                push_with_claim(&mut reports, claim, report);
            }
        }
    }

    if want(SuiteKind::Spheres) {
        let samples = config.samples.unwrap_or(50);
        for entry in &COOKBOOK {
            let params = entry.params();
            for &e in entry.invariant_exponents {
                let claim = format!("invariant-spheres/{}/r-exp={e}", entry.label);
                let report = check_invariant_spheres(
                    &params,
                    e,
                    samples,
                    derive_seed(seed, &claim),
                    10,
                    config.precision,
                )
                .expect("cookbook exponents are integers");
                push_with_claim(&mut reports, claim, report);
            }
            // Side-by-side companion clause for the expanding shapes: "every
            // sphere r ≠ √α is invariant" as stated, reported but not gating
            // (inner spheres expand; the gating clause is r > √α).
            if matches!(entry.tag, CaseTag::Phi4 | CaseTag::Phi5) {
                let e = entry.orbit_exponents[0];
                let claim = format!("invariant-spheres-companion/{}/r-exp={e}", entry.label);
                let mut report = check_invariant_spheres(
                    &params,
                    e,
                    samples.min(10),
                    derive_seed(seed, &claim),
                    10,
                    config.precision,
                )
                .expect("cookbook exponents are integers");
                report.gating = false;
                report.notes.push(
                    "companion clause 'every sphere r != sqrt(alpha) is invariant' checked as \
                     stated for comparison; the gating clause is 'r > sqrt(alpha)', and inner \
                     spheres are expected to leave"
                        .to_string(),
                );
                push_with_claim(&mut reports, claim, report);
            }
        }
    }

    if want(SuiteKind::Attraction) {
        let samples = config.samples.unwrap_or(20);
        for entry in &COOKBOOK {
            let Some(e) = entry.attraction_exponent else {
                continue;
            };
            let params = entry.params();
            let claim = format!("attraction/{}/r-exp={e}", entry.label);
            let report = check_attraction(
                &params,
                e,
                samples,
                derive_seed(seed, &claim),
                config.k_threshold,
                12,
            )
            .expect("cookbook tuples classify");
            push_with_claim(&mut reports, claim, report);
        }
    }

    if want(SuiteKind::Landing) {
        let samples = config.samples.unwrap_or(20);
        for entry in &COOKBOOK {
            if entry.landing_exponents.is_empty() {
                continue;
            }
            let params = entry.params();
            for &e in entry.landing_exponents {
                let claim = format!("landing-sets/{}/r-exp={e}", entry.label);
                let report = check_landing_sets(&params, e, 8, samples, derive_seed(seed, &claim))
                    .expect("cookbook tuples classify");
                push_with_claim(&mut reports, claim, report);
            }
        }
    }

    if want(SuiteKind::Character) {
        let samples = config.samples.unwrap_or(10);
        for entry in &COOKBOOK {
            let params = entry.params();
            let e = entry.orbit_exponents[0];
            let claim = format!("character/{}/r-exp={e}", entry.label);
            let report = check_character(&params, e, samples, derive_seed(seed, &claim))
                .expect("cookbook exponents are integers");
            push_with_claim(&mut reports, claim, report);
        }
    }

    if kind == SuiteKind::All {
        for entry in &COOKBOOK {
            let report = siegel_report(
                &entry.params(),
                derive_seed(seed, &entry_claim(entry, "siegel")),
            )
            .expect("cookbook tuples classify");
            let mut report = report;
            report.claim = entry_claim(entry, "siegel");
            siegel.push(report);
        }
    }

    let failures = reports.iter().filter(|r| r.gating && r.failed > 0).count()
        + siegel
            .iter()
            .filter(|s| s.confirmation.as_ref().is_some_and(|c| c.failed > 0))
            .count();

    SuiteOutcome {
        suite: kind.name().to_string(),
        seed,
        notes: catalogue_notes().iter().map(|s| (*s).to_string()).collect(),
        failures,
        reports,
        siegel,
    }
}

// ── Output rendering ────────────────────────────────────────────────────────

/// Deterministic JSON for the whole outcome.
#[must_use]
pub fn suite_to_json(outcome: &SuiteOutcome) -> String {
    serde_json::to_string_pretty(outcome).expect("suite outcomes serialize")
}

/// CSV rendering: header plus one row per sample-step (summary-style checks
/// contribute one row per sample). All fields are comma-free by
/// construction.
#[must_use]
pub fn suite_to_csv(outcome: &SuiteOutcome) -> String {
    let mut out = String::from("claim,sample,step,observed,predicted,verdict\n");
    for report in &outcome.reports {
        for sample in &report.samples {
            if sample.steps.is_empty() {
                out.push_str(&format!(
                    "{},{},0,-,-,{}\n",
                    report.claim, sample.index, sample.verdict
                ));
            } else {
                for row in &sample.steps {
                    out.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        report.claim, sample.index, row.n, row.observed, row.predicted, row.verdict
                    ));
                }
            }
        }
    }
    out
}

// ── Ad-hoc tuple plans (for the CLI on non-cookbook parameters) ────────────

/// A sampling plan derived from the classification of an arbitrary tuple:
/// which integer sphere exponents exercise deterministic stretches, the
/// invariant range, the convergence clause, the landing clause, and the
/// point-dependent spheres.
#[derive(Debug, Clone, Default)]
pub struct TuplePlan {
    /// Deterministic non-critical exponents (up to 3, spread out).
    pub orbit: Vec<i64>,
    /// Exponents with `StaysAt` behaviour (up to 3).
    pub invariant: Vec<i64>,
    /// One exponent inside the convergence clause, if any.
    pub attraction: Option<i64>,
    /// Exponents inside the landing clause (up to 3).
    pub landing: Vec<i64>,
    /// Point-dependent (critical) exponents.
    pub critical: Vec<i64>,
}

/// Scans integer exponents around the critical radii and buckets them by
/// their stylized behaviour.
#[must_use]
pub fn plan_for(data: &CriticalData, tag: CaseTag) -> TuplePlan {
    let mut plan = TuplePlan::default();
    if tag == CaseTag::Unclassified {
        return plan;
    }
    // Anchor the scan on every radius where branches can change: the three
    // separators and the two inner tie spheres capA/δ, capB/δ.
    let mut anchor_radii = vec![data.delta, data.sqrt_alpha, data.sqrt_beta];
    for cap in [data.cap_a, data.cap_b] {
        if let Some(tie) = cap.checked_div(data.delta) {
            anchor_radii.push(tie);
        }
    }
    let anchors: Vec<i64> = anchor_radii
        .iter()
        .filter_map(|r| r.exponent())
        .map(|e| e.floor().to_integer())
        .collect();
    let lo = anchors.iter().min().copied().unwrap_or(0) - 3;
    let hi = anchors.iter().max().copied().unwrap_or(0) + 2;
    let mut stays = Vec::new();
    let mut lands = Vec::new();
    let mut converges = Vec::new();
    for e in lo..=hi {
        let r = Radius::int_power(e);
        match stylized_map(tag, data, r) {
            Ok(RadiusStepResult::PointDependent { .. }) => {
                plan.critical.push(e);
                continue;
            }
            Ok(RadiusStepResult::Deterministic(_)) => {}
            Err(_) => continue,
        }
        match limit_behavior(tag, data, r) {
            Ok(LimitBehavior::StaysAt(s)) if s == r => stays.push(e),
            Ok(LimitBehavior::LandsIn(_)) => lands.push(e),
            Ok(LimitBehavior::ConvergesToZero) => converges.push(e),
            _ => {}
        }
    }
    let spread = |bucket: &[i64]| -> Vec<i64> {
        match bucket.len() {
            0 => Vec::new(),
            1 => vec![bucket[0]],
            2 => bucket.to_vec(),
            len => vec![bucket[0], bucket[len / 2], bucket[len - 1]],
        }
    };
    // Orbits: prefer a spread over everything deterministic.
    let mut det: Vec<i64> = (lo..=hi).filter(|e| !plan.critical.contains(e)).collect();
    det.sort_unstable();
    plan.orbit = spread(&det);
    plan.invariant = spread(&stays);
    plan.landing = spread(&lands);
    plan.attraction = converges.last().copied();
    plan
}

/// Runs the requested suite on one arbitrary tuple, with sphere exponents
/// chosen by [`plan_for`] instead of the cookbook's curated lists. Claims
/// are keyed by check name and exponent (there is no cookbook label), and
/// seeds derive from them exactly as in [`run_suite`], so identical
/// configurations reproduce byte-identical outcomes.
///
/// # Errors
/// Unclassified tuples and tuples whose fixed point is a pole; clauses the
/// shape simply does not have produce vacuous reports, not errors.
pub fn run_tuple_plan(
    params: &MapParams,
    kind: SuiteKind,
    config: &SuiteConfig,
) -> Result<SuiteOutcome, VerifyError> {
    let (data, tag) = classify_map(params)?;
    if tag == CaseTag::Unclassified {
        return Err(DynamicsError::UnclassifiedCase.into());
    }
    let plan = plan_for(&data, tag);
    let seed = config.seed;
    let mut reports = Vec::new();
    let mut siegel = Vec::new();
    let want = |k: SuiteKind| kind == k || kind == SuiteKind::All;

    if want(SuiteKind::Formula) {
        let claim = "formula-ff".to_string();
        let check_seed = derive_seed(seed, &claim);
        let mut points = Vec::new();
        for &e in &plan.orbit {
            let spec = SphereSpec::on_radius(
                params.fixed_point(),
                Radius::int_power(e),
                4,
                derive_seed(check_seed, &format!("e={e}")),
            )?;
            points.extend(sample_sphere(&spec));
        }
        reports.push(check_formula_ff(params, &points, &claim, check_seed));
    }

    if want(SuiteKind::LemmaLf) {
        let samples = config.samples.unwrap_or(20);
        for &e in &plan.orbit {
            let claim = format!("lemma-lf/r-exp={e}");
            let report = check_lemma_lf(params, e, 6, samples, derive_seed(seed, &claim))?;
            push_with_claim(&mut reports, claim, report);
        }
        for &e in &plan.critical {
            let claim = format!("lemma-lf-critical/r-exp={e}");
            let report = check_lemma_lf(params, e, 4, samples.min(8), derive_seed(seed, &claim))?;
            push_with_claim(&mut reports, claim, report);
        }
    }

    if want(SuiteKind::Spheres) {
        let samples = config.samples.unwrap_or(50);
        for &e in &plan.invariant {
            let claim = format!("invariant-spheres/r-exp={e}");
            let report = check_invariant_spheres(
                params,
                e,
                samples,
                derive_seed(seed, &claim),
                10,
                config.precision,
            )?;
            push_with_claim(&mut reports, claim, report);
        }
    }

    if want(SuiteKind::Attraction) {
        if let Some(e) = plan.attraction {
            let claim = format!("attraction/r-exp={e}");
            let report = check_attraction(
                params,
                e,
                config.samples.unwrap_or(20),
                derive_seed(seed, &claim),
                config.k_threshold,
                12,
            )?;
            push_with_claim(&mut reports, claim, report);
        }
    }

    if want(SuiteKind::Landing) {
        let samples = config.samples.unwrap_or(20);
        for &e in &plan.landing {
            let claim = format!("landing-sets/r-exp={e}");
            let report = check_landing_sets(params, e, 8, samples, derive_seed(seed, &claim))?;
            push_with_claim(&mut reports, claim, report);
        }
    }

    if want(SuiteKind::Character) {
        if let Some(&e) = plan.orbit.first() {
            let claim = format!("character/r-exp={e}");
            let report = check_character(
                params,
                e,
                config.samples.unwrap_or(10),
                derive_seed(seed, &claim),
            )?;
            push_with_claim(&mut reports, claim, report);
        }
    }

    if kind == SuiteKind::All {
        let mut report = siegel_report(params, derive_seed(seed, "siegel"))?;
        report.claim = "siegel".to_string();
        siegel.push(report);
    }

    let failures = reports.iter().filter(|r| r.gating && r.failed > 0).count()
        + siegel
            .iter()
            .filter(|s| s.confirmation.as_ref().is_some_and(|c| c.failed > 0))
            .count();

    Ok(SuiteOutcome {
        suite: format!("{}(tuple)", kind.name()),
        seed,
        notes: catalogue_notes().iter().map(|s| (*s).to_string()).collect(),
        failures,
        reports,
        siegel,
    })
}
