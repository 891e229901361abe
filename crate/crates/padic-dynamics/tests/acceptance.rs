//! Acceptance gate: the nine primary criteria, one pass/fail line each.
//!
//! Every test prints exactly one `[criterion N] PASS/FAIL` line (visible
//! under `--nocapture`, and always on failure) and then asserts, so the
//! suite both narrates and gates. Seeds are pinned: reruns are
//! byte-for-byte reproducible.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use padic_dynamics::classify::{CaseTag, CriticalData};
use padic_dynamics::cookbook::COOKBOOK;
use padic_dynamics::dynamics::{catalogue_notes, stylized_map, ultrametric_step, RadiusStepResult};
use padic_dynamics::map::MapParams;
use padic_dynamics::padic::{ExactPadic, Radius};
use padic_dynamics::verify::{
    check_attraction, check_character, check_invariant_spheres, check_landing_sets, check_lemma_lf,
    formula_suite, CheckReport, DEFAULT_BUDGET_BITS, DEFAULT_PRECISION,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_0001;

/// Prints the criterion verdict line, then enforces it.
fn verdict(n: u8, ok: bool, detail: &str) {
    let word = if ok { "PASS" } else { "FAIL" };
    println!("[criterion {n}] {word} — {detail}");
    assert!(ok, "criterion {n} failed: {detail}");
}

fn failures(reports: &[CheckReport]) -> usize {
    reports.iter().map(|r| r.failed).sum()
}

// ── 1. distance-formula exactness ───────────────────────────────────────────

#[test]
fn criterion_1_formula_exactness_on_random_tuples() {
    let t0 = Instant::now();
    let reports = formula_suite(SEED, 500);
    let pairs: usize = reports
        .iter()
        .map(|r| r.passed + r.failed + r.skipped)
        .sum();
    let failed = failures(&reports);
    let elapsed = t0.elapsed();
    let ok = pairs >= 500 && failed == 0 && elapsed.as_secs() < 10;
    verdict(
        1,
        ok,
        &format!(
            "distance formula exact on {pairs} random (params, x) pairs over p in {{2,3,5,7}}, \
             {failed} failures, {:.2}s",
            elapsed.as_secs_f64()
        ),
    );
}

// ── 2. case coverage and stylized-orbit agreement ───────────────────────────

#[test]
fn criterion_2_case_coverage_with_six_step_orbits() {
    let t0 = Instant::now();

    // Every one of the eleven shapes has a realizing tuple.
    let mut missing = Vec::new();
    for tag in CaseTag::ALL {
        if !COOKBOOK.iter().any(|e| e.tag == tag) {
            missing.push(tag.name());
        }
    }

    // For each realized tag: 6-step orbits from 20 points on each of 3
    // non-critical spheres must match the stylized map on every
    // deterministic step.
    let mut failed = 0;
    let mut spheres = 0;
    for tag in CaseTag::ALL {
        let entry = COOKBOOK
            .iter()
            .find(|e| e.tag == tag)
            .expect("coverage checked above");
        let params = entry.params();
        assert!(
            entry.orbit_exponents.len() >= 3,
            "three non-critical spheres per tag"
        );
        for &e in entry.orbit_exponents.iter().take(3) {
            let report = check_lemma_lf(&params, e, 6, 20, SEED).expect("cookbook tuples classify");
            assert!(
                report.passed + report.inconclusive >= 20,
                "all samples judged"
            );
            failed += report.failed;
            spheres += 1;
        }
    }

    let elapsed = t0.elapsed();
    let ok = missing.is_empty() && failed == 0 && elapsed.as_secs() < 60;
    verdict(
        2,
        ok,
        &format!(
            "all 11 shapes realized (missing: {missing:?}); 6-step orbits, 20 points on each \
             of {spheres} spheres, {failed} mismatches, {:.2}s",
            elapsed.as_secs_f64()
        ),
    );
}

// ── 3. stylized-vs-general equivalence over the exponent grid ───────────────

/// Radius from an integer exponent, or the zero radius.
fn grid_cap_candidates(tied: bool, envelope: Radius, p: u64, allow_zero: bool) -> Vec<Radius> {
    if tied {
        // A tie only bounds the norm from above: exercise the envelope, a
        // strict drop, and (for capA) total cancellation.
        let mut v = vec![
            envelope,
            envelope
                .checked_div(Radius::int_power(1))
                .expect("p^1 is nonzero"),
        ];
        let _ = p;
        if allow_zero {
            v.push(Radius::Zero);
        }
        v
    } else {
        vec![envelope]
    }
}

#[test]
fn criterion_3_stylized_equals_general_on_exponent_grid() {
    let p = 3;
    let mut patterns = 0usize;
    let mut comparisons = 0usize;
    let mut boundary_skips = 0usize;
    let mut mismatches: Vec<String> = Vec::new();

    for e_alpha in -6i64..=6 {
        for e_beta in -6i64..=6 {
            for e_delta in -6i64..=6 {
                let alpha = Radius::int_power(e_alpha);
                let beta = Radius::int_power(e_beta);
                let delta = Radius::int_power(e_delta);
                let d2 = delta.square();
                let cap_as = grid_cap_candidates(d2 == alpha, d2.max(alpha), p, true);
                let cap_bs = grid_cap_candidates(d2 == beta, d2.max(beta), p, false);
                for &cap_a in &cap_as {
                    for &cap_b in &cap_bs {
                        let data = CriticalData::from_norms(alpha, beta, delta, cap_a, cap_b)
                            .expect("grid caps honour the envelope rules");
                        let tag = data.classify();
                        patterns += 1;
                        if tag == CaseTag::Unclassified {
                            // The excluded boundary: check it only occurs
                            // where all three critical values tie.
                            assert_eq!(data.sqrt_alpha, data.sqrt_beta);
                            assert_eq!(data.sqrt_alpha, data.delta);
                            boundary_skips += 1;
                            continue;
                        }
                        for e_r in -25i64..25 {
                            let r = Radius::int_power(e_r);
                            let general = ultrametric_step(r, &data);
                            let stylized = stylized_map(tag, &data, r).expect("classified shape");
                            comparisons += 1;
                            let agree = match (&general, &stylized) {
                                (
                                    RadiusStepResult::Deterministic(g),
                                    RadiusStepResult::Deterministic(s),
                                ) => g == s,
                                // A point-dependent general step may be
                                // pinned down by case knowledge, but the
                                // pinned value must respect the bounds.
                                (general, RadiusStepResult::Deterministic(s)) => general.admits(*s),
                                // The stylized map must never blur a step
                                // the general rule resolves.
                                (RadiusStepResult::Deterministic(_), _) => false,
                                (g, s) => g == s,
                            };
                            if !agree && mismatches.len() < 8 {
                                mismatches.push(format!(
                                    "alpha=3^{e_alpha} beta=3^{e_beta} delta=3^{e_delta} \
                                     capA={cap_a:?} capB={cap_b:?} tag={tag} r=3^{e_r}: \
                                     general {general:?} vs stylized {stylized:?}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }

    // The two reconciled ambiguities are flagged on every run, never silent.
    for (i, note) in catalogue_notes().iter().enumerate() {
        println!("[criterion 3] flagged open-question item {}: {note}", i + 1);
    }

    let ok = mismatches.is_empty() && patterns > 2196 && boundary_skips > 0;
    verdict(
        3,
        ok,
        &format!(
            "{comparisons} stylized-vs-general comparisons over {patterns} exponent patterns \
             ({boundary_skips} excluded-boundary patterns detected); mismatches: {mismatches:?}"
        ),
    );
}

// ── 4. sphere invariance ────────────────────────────────────────────────────

#[test]
fn criterion_4_sphere_invariance_fifty_points_ten_steps() {
    let mut failed = 0;
    let mut passed = 0;
    let mut spheres = 0;
    for tag in CaseTag::ALL {
        let entry = COOKBOOK
            .iter()
            .find(|e| e.tag == tag)
            .expect("all tags realized");
        let params = entry.params();
        assert!(
            entry.invariant_exponents.len() >= 3,
            "three invariant spheres per tag"
        );
        for &e in entry.invariant_exponents.iter().take(3) {
            let report = check_invariant_spheres(&params, e, 50, SEED, 10, DEFAULT_PRECISION)
                .expect("cookbook spheres are inhabited");
            failed += report.failed;
            passed += report.passed;
            spheres += 1;
        }
    }
    let ok = failed == 0 && spheres == 33 && passed > 0;
    verdict(
        4,
        ok,
        &format!(
            "{passed} orbits stayed on their sphere across {spheres} spheres \
             (50 points, 10 steps each); {failed} escapes"
        ),
    );
}

// ── 5. attraction speed and the inner contraction factor ───────────────────

#[test]
fn criterion_5_attraction_reaches_threshold_with_exact_factor() {
    let mut failed = 0;
    let mut converged = 0;
    let mut factor_checks = 0;
    let mut alpha_beta_checks = 0;
    for entry in &COOKBOOK {
        let Some(e) = entry.attraction_exponent else {
            continue;
        };
        let params = entry.params();
        let (data, tag) = entry.classified();

        // Orbits from inside the clause must fall below p^-10.
        let report =
            check_attraction(&params, e, 20, SEED, 10, 60).expect("cookbook tuples classify");
        assert!(!report.vacuous, "curated attraction spheres are in-clause");
        failed += report.failed;
        converged += report.passed;

        // On the inner branch the per-step factor is exactly the
        // multiplier norm, which for the alpha < beta shapes is alpha/beta
        // on the nose.
        for e_inner in [e, e - 1, e - 2] {
            let r = Radius::int_power(e_inner);
            let step = stylized_map(tag, &data, r).expect("classified shape");
            let expected = r * data.multiplier_norm();
            assert_eq!(
                step,
                RadiusStepResult::Deterministic(expected),
                "inner branch of {} contracts by |lambda| exactly",
                entry.label
            );
            factor_checks += 1;
            // Where the inner dominances are literal (capA = alpha,
            // capB = beta, the delta < sqrt(alpha) ordering), the factor
            // is alpha/beta on the nose; the other attracting shapes
            // contract by their own cap ratio, checked above.
            if data.cap_a == data.alpha
                && data.cap_b == data.beta
                && !data.alpha.is_zero()
                && data.alpha < data.beta
            {
                let ratio = data.alpha.checked_div(data.beta).expect("beta nonzero");
                assert_eq!(
                    data.multiplier_norm(),
                    ratio,
                    "alpha < beta shapes contract by alpha/beta"
                );
                alpha_beta_checks += 1;
            }
        }
    }
    let ok = failed == 0 && converged > 0 && factor_checks > 0 && alpha_beta_checks > 0;
    verdict(
        5,
        ok,
        &format!(
            "{converged} orbits reached p^-10; {factor_checks} inner radii contracted by \
             exactly |lambda|, {alpha_beta_checks} of them literally by alpha/beta; \
             {failed} stragglers"
        ),
    );
}

// ── 6. landing sets ─────────────────────────────────────────────────────────

#[test]
fn criterion_6_landing_sets_catch_first_exit_and_stick() {
    let mut failed = 0;
    let mut landed = 0;
    let mut entries = 0;
    for entry in &COOKBOOK {
        if entry.landing_exponents.is_empty() {
            continue;
        }
        entries += 1;
        let params = entry.params();
        let mut entry_passed = 0;
        for &e in entry.landing_exponents {
            let report =
                check_landing_sets(&params, e, 8, 20, SEED).expect("cookbook tuples classify");
            assert!(!report.vacuous, "curated landing spheres are in-clause");
            failed += report.failed;
            entry_passed += report.passed;
        }
        // Recurrent inner spheres may stay honestly inconclusive, but each
        // landing case must actually exhibit landings somewhere.
        assert!(entry_passed > 0, "{} never landed", entry.label);
        landed += entry_passed;
    }
    let ok = failed == 0 && entries >= 4 && landed > 0;
    verdict(
        6,
        ok,
        &format!(
            "{landed} orbits across {entries} expanding cases exited into their landing set \
             and froze there; {failed} violations"
        ),
    );
}

// ── 7. multiplier consistency ───────────────────────────────────────────────

#[test]
fn criterion_7_multiplier_norm_and_character_drift() {
    let mut failed = 0;
    let mut tuples = 0;
    for entry in &COOKBOOK {
        let params = entry.params();
        let (data, _tag) = entry.classified();

        // |f'(x0)| computed from the derivative itself equals capA/capB.
        let lambda = params.multiplier().expect("fixed point is not a pole");
        assert_eq!(
            lambda.norm(),
            data.multiplier_norm(),
            "{}: |f'(x0)| != capA/capB",
            entry.label
        );

        // The catalogued character matches, and so does observed drift.
        let character = params
            .fixed_point_character()
            .expect("fixed point is not a pole");
        assert_eq!(character.character, entry.character, "{}", entry.label);
        let e = entry.orbit_exponents.first().expect("curated exponents");
        let report = check_character(&params, *e, 10, SEED).expect("sphere inhabited");
        failed += report.failed;
        tuples += 1;
    }
    let ok = failed == 0 && tuples == COOKBOOK.len();
    verdict(
        7,
        ok,
        &format!(
            "|f'(x0)| = capA/capB on all {tuples} cookbook tuples; drift matched the \
             character verdict with {failed} exceptions"
        ),
    );
}

// ── 8. ultrametric arithmetic suite ─────────────────────────────────────────

fn random_rational(rng: &mut ChaCha8Rng, p: u64) -> BigRational {
    // p^j * u/w with modest height and j in [-6, 6]: valuations collide
    // often enough to exercise every branch of the ultrametric rules.
    let num = rng.gen_range(-9_999i64..=9_999);
    let den = rng.gen_range(1i64..=9_999);
    let j = rng.gen_range(-6i32..=6);
    BigRational::new(BigInt::from(num), BigInt::from(den))
        * BigRational::from(BigInt::from(p)).pow(j)
}

#[test]
fn criterion_8_ultrametric_digit_and_backend_agreement() {
    let mut checks = 0usize;

    // Properties 1, 2, 3, 3.1, 3.2 on 1000 random exact pairs per prime.
    for p in [2u64, 3, 5, 7] {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ p);
        for _ in 0..1000 {
            let x = ExactPadic::new(p, random_rational(&mut rng, p)).expect("prime");
            let y = ExactPadic::new(p, random_rational(&mut rng, p)).expect("prime");
            let (nx, ny) = (x.norm(), y.norm());

            // 1) definiteness.
            assert_eq!(nx.is_zero(), x.is_zero());
            // 2) multiplicativity.
            assert_eq!(x.mul(&y).expect("same prime").norm(), nx * ny);
            // 3) strong triangle inequality.
            let ns = x.add(&y).expect("same prime").norm();
            assert!(ns <= nx.max(ny));
            if nx != ny {
                // 3.1) distinct norms force equality.
                assert_eq!(ns, nx.max(ny));
            } else {
                // 3.2) tied norms can only stay or drop.
                assert!(ns <= nx);
            }
            checks += 1;
        }
    }

    // Digit-expansion residual bound on 200 inputs: truncating after k
    // digits leaves a tail of norm at most p^-(gamma + k).
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xd1617);
    let mut digit_checks = 0usize;
    while digit_checks < 200 {
        let p = *[2u64, 3, 5, 7]
            .get(rng.gen_range(0..4))
            .expect("fixed list");
        let value = random_rational(&mut rng, p);
        if value == BigRational::from(BigInt::from(0)) {
            continue;
        }
        let x = ExactPadic::new(p, value).expect("prime");
        let k = rng.gen_range(1usize..=10);
        let (gamma, digits) = x.digit_expansion(k).expect("nonzero");
        let mut partial = BigRational::from(BigInt::from(0));
        for (i, d) in digits.iter().enumerate() {
            partial += BigRational::from(BigInt::from(*d))
                * BigRational::from(BigInt::from(p))
                    .pow(i32::try_from(i).expect("small") + i32::try_from(gamma).expect("small"));
        }
        let residual = ExactPadic::new(p, x.value() - partial).expect("prime");
        let bound = Radius::int_power(-(gamma + i64::try_from(k).expect("small")));
        assert!(
            residual.norm() <= bound,
            "residual {:?} exceeds p^-(gamma+k) = {bound:?}",
            residual.norm()
        );
        digit_checks += 1;
    }

    // Exact vs fixed-precision orbit agreement, n = 8, on 50 random tuples.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x0f1c);
    let mut orbit_checks = 0usize;
    while orbit_checks < 50 {
        let p = *[2u64, 3, 5, 7]
            .get(rng.gen_range(0..4))
            .expect("fixed list");
        let a = rng.gen_range(-6i64..=6);
        let b = rng.gen_range(-12i64..=12);
        let c = rng.gen_range(-12i64..=12);
        let d = rng.gen_range(-12i64..=12);
        let Ok(params) = MapParams::from_ints(p, a, b, c, d) else {
            continue; // b = d: redraw
        };
        let x = ExactPadic::new(
            p,
            BigRational::new(
                BigInt::from(rng.gen_range(-30i64..=30)),
                BigInt::from(rng.gen_range(1i64..=30)),
            ),
        )
        .expect("prime");
        let exact = params
            .orbit(&x, 8, DEFAULT_BUDGET_BITS)
            .expect("same prime");
        let fixed = params.orbit_fixed(&x, 8, 64).expect("same prime");
        let shared = exact.radii.len().min(fixed.radii.len());
        assert!(
            exact.radii[..shared] == fixed.radii[..shared],
            "backends disagree on {:?} from {}",
            (p, a, b, c, d),
            x.value()
        );
        orbit_checks += 1;
    }

    verdict(
        8,
        true,
        &format!(
            "{checks} random pairs satisfied norms 1/2/3/3.1/3.2; {digit_checks} digit \
             residual bounds held; {orbit_checks} tuples agreed exact-vs-fixed for n <= 8"
        ),
    );
}

// ── 9. determinism of the CLI verifier ─────────────────────────────────────

#[test]
fn criterion_9_verify_all_is_byte_identical_across_runs() {
    let run = || {
        std::process::Command::new(env!("CARGO_BIN_EXE_padic-dynamics"))
            .args(["verify", "--suite", "all", "--seed", "11"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert!(first.status.success(), "verify --suite all must pass");
    assert!(second.status.success());
    assert!(!first.stdout.is_empty(), "verify emits JSON on stdout");
    let ok = first.stdout == second.stdout;
    verdict(
        9,
        ok,
        &format!(
            "two `verify --suite all --seed 11` runs produced {} identical JSON bytes",
            first.stdout.len()
        ),
    );
}
