//! Exact orbits against the stylized radius map, step by step.
//!
//! The central claim of the whole crate is that the distance to the fixed
//! point evolves by an explicit exact rule
//!
//! ```text
//! |f(x) − x₀|_p = |x − x₀|_p · |(x+a/2)² + α₀| / |(x+a/2)² + β₀|,
//! ```
//!
//! and that away from the two critical spheres this rule depends only on
//! the radius `r = |x − x₀|_p`, never on the point. This example iterates a
//! map exactly (arbitrary-precision rationals), records the observed radii,
//! and prints them beside the prediction from the piecewise catalogue —
//! `exact` where the stylized map is deterministic, a bound check on the
//! critical spheres.
//!
//! It also shows the two ways an exact orbit can stop early: hitting a pole
//! dead-on, and exceeding the bit budget that keeps arbitrary-precision
//! iteration honest about its cost.
//!
//! Run with:
//!
//! ```bash
//! cargo run -p padic-dynamics --example orbit_vs_radius_prediction
//! ```

use padic_dynamics::classify::classify_map;
use padic_dynamics::cookbook::SINGULAR_ORBIT_EXAMPLE;
use padic_dynamics::map::{MapParams, OrbitTermination};
use padic_dynamics::padic::{parse_rational, rational_repr, ExactPadic};
use padic_dynamics::verify::{judge_orbit_radii, JudgedOrbit, DEFAULT_BUDGET_BITS};

fn main() {
    // f(x) = (x³ + 9x − 72)/(x² + 1) over Q₃: Phi1, attracting, x₀ = 9.
    let params = MapParams::from_ints(3, 0, 9, -72, 1).expect("valid tuple");
    let p = params.prime();
    let (data, tag) = classify_map(&params).expect("tuple classifies");
    println!(
        "map over Q_{p}, case {tag}, fixed point x0 = {}",
        rational_repr(params.fixed_point().value())
    );

    // Start on the sphere of radius 3⁻³, inside the attracting basin.
    let x = ExactPadic::new(p, parse_rational("36").expect("literal")).expect("prime checked");
    let record = params
        .orbit(&x, 8, DEFAULT_BUDGET_BITS)
        .expect("orbit runs");
    assert_eq!(record.termination, OrbitTermination::Completed);

    let judged = judge_orbit_radii(p, tag, &data, &record.radii).expect("radii judge");
    let rows = match judged {
        JudgedOrbit::Agrees(rows) => {
            println!("stylized map agrees with every step:\n");
            rows
        }
        JudgedOrbit::Disagrees { first_bad, .. } => {
            panic!("prediction failed at step {first_bad}")
        }
    };
    println!("{:>3}  {:<9} {:<9} verdict", "n", "observed", "predicted");
    println!(
        "{:>3}  {:<9} {:<9} start",
        0,
        record.radii[0].display_with_base(p),
        "-"
    );
    for row in &rows {
        println!(
            "{:>3}  {:<9} {:<9} {}",
            row.n, row.observed, row.predicted, row.verdict
        );
    }

    // ── Radii without points: the gcd-free walker ───────────────────────────
    // orbit_radii tracks only the distance, on unreduced integer pairs — far
    // cheaper than full orbits, byte-for-byte the same radii.
    let trace = params
        .orbit_radii(&x, 8, DEFAULT_BUDGET_BITS)
        .expect("walker runs");
    assert_eq!(trace.radii, record.radii);
    assert_eq!(trace.termination, record.termination);
    println!("\ndistance-only walker reproduces the radii exactly");

    // ── Early terminations are reported, never glossed over ────────────────
    let (sp, sa, sb, sc, sd) = SINGULAR_ORBIT_EXAMPLE;
    let singular = MapParams::from_ints(sp, sa, sb, sc, sd).expect("valid tuple");
    let start = ExactPadic::from_int(sp, 2).expect("prime checked");
    let hit = singular
        .orbit(&start, 8, DEFAULT_BUDGET_BITS)
        .expect("orbit runs");
    println!(
        "orbit from 2 under the pole-hitting map: {:?} after {} recorded points",
        hit.termination,
        hit.points.len()
    );
    assert_eq!(hit.termination, OrbitTermination::HitSingularity(1));

    let tight = params.orbit(&x, 64, 4096).expect("orbit runs");
    match tight.termination {
        OrbitTermination::BudgetExceeded(step) => {
            println!("64-step request under a 4096-bit budget stopped at step {step}");
        }
        other => panic!("expected a budget stop, got {other:?}"),
    }
}
