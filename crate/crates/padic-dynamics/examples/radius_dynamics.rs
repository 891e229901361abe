//! The radius map as a dynamical system of its own — no p-adic points.
//!
//! Away from the critical spheres, `|f(x) − x₀|_p` is a function of
//! `r = |x − x₀|_p` alone, so the piecewise catalogue defines a genuine
//! scalar dynamical system on radii:
//!
//! ```text
//! r ↦ r · |r² ∨ δ² ∨ α|-style piecewise ratios,
//! ```
//!
//! with three flavours of long-run behaviour:
//!
//! * contraction to `0` (attracting shapes, inside the basin),
//! * a sphere of fixed radii (indifferent rotation domains),
//! * landing: after finitely many expanding steps the radius enters an
//!   interval it never leaves.
//!
//! This example walks one representative of each flavour, prints the
//! radius orbits, the set of fixed radii, and the predicted limit, and
//! shows how iteration halts honestly when it reaches a critical sphere
//! where the next radius is point-dependent.
//!
//! Run with:
//!
//! ```bash
//! cargo run -p padic-dynamics --example radius_dynamics
//! ```

use padic_dynamics::classify::classify_map;
use padic_dynamics::cookbook::{find, COOKBOOK};
use padic_dynamics::dynamics::{
    fixed_radii, limit_behavior, radius_orbit, LimitBehavior, RadiusOrbitHalt,
};
use padic_dynamics::padic::Radius;

fn show_orbit(label: &str, start_exp: i64, steps: usize) {
    let entry = find(label).expect("cookbook label exists");
    let params = entry.params();
    let p = params.prime();
    let (data, tag) = classify_map(&params).expect("cookbook tuples classify");

    let r0 = Radius::int_power(start_exp);
    let orbit = radius_orbit(tag, &data, r0, steps).expect("classified shape");
    let radii: Vec<String> = orbit.radii.iter().map(|r| r.display_with_base(p)).collect();
    println!(
        "{label} ({tag}), starting radius {}:",
        r0.display_with_base(p)
    );
    println!("  orbit  {}", radii.join(" -> "));
    match orbit.halt {
        RadiusOrbitHalt::Completed => {}
        RadiusOrbitHalt::PointDependent {
            at_step,
            lower,
            upper,
        } => {
            let upper = upper.map_or("unbounded".to_string(), |u| u.display_with_base(p));
            println!(
                "  halt   critical sphere at step {at_step}: next radius in [{}, {upper}]",
                lower.display_with_base(p)
            );
        }
    }

    let fixed = fixed_radii(tag, &data).expect("classified shape");
    println!("  fixed  {}", fixed.display_with_base(p));

    match limit_behavior(tag, &data, r0).expect("classified shape") {
        LimitBehavior::ConvergesToZero => println!("  limit  converges to the fixed point"),
        LimitBehavior::StaysAt(r) => println!("  limit  stays at {}", r.display_with_base(p)),
        LimitBehavior::LandsIn(set) => {
            println!("  limit  lands in {}", set.display_with_base(p));
        }
        LimitBehavior::PointDependentAfterCritical(set) => {
            println!(
                "  limit  point-dependent after the critical sphere; outcomes in {}",
                set.display_with_base(p)
            );
        }
    }
    println!();
}

fn main() {
    // Contraction: Phi1 multiplies every small radius by |λ| = 3⁻² forever.
    show_orbit("phi1", -3, 6);

    // Rotation: Phi2's Siegel-style region keeps every inner radius fixed.
    show_orbit("phi2", -2, 6);

    // Landing: Phi4 expands small radii until they land in a closed interval.
    show_orbit("phi4", -9, 10);

    // Critical halt: starting exactly on a critical sphere, the very next
    // radius depends on the point, so the scalar orbit stops at step 0 and
    // reports bounds instead of inventing a value.
    show_orbit("phi3", -1, 6);

    // Every cookbook tuple admits a sensible radius orbit from its own
    // catalogued starting exponents — a cheap smoke test of the catalogue.
    let mut runs = 0;
    for entry in COOKBOOK {
        let params = entry.params();
        let (data, tag) = classify_map(&params).expect("cookbook tuples classify");
        for &e in entry.orbit_exponents {
            let orbit =
                radius_orbit(tag, &data, Radius::int_power(e), 6).expect("classified shape");
            assert!(!orbit.radii.is_empty());
            runs += 1;
        }
    }
    println!("ran {runs} catalogued radius orbits across all shapes without a hitch");
}
