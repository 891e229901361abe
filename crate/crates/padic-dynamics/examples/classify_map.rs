//! Classifying maps into the eleven piecewise shapes.
//!
//! Every map `f(x) = (x³+ax²+bx+c)/(x²+ax+d)` with `b ≠ d` is summarised by
//! five critical norms measured at its fixed point `x₀ = c/(d−b)`:
//!
//! ```text
//! α = |α₀|_p^(1/2)-ish inner critical radius   √α = |b − a²/4|^(1/2)
//! β = outer critical radius                    √β = |d − a²/4|^(1/2)
//! δ = |x₀ + a/2|_p                             (distance to the symmetry axis)
//! capA = |δ² + α|-type numerator norm at x₀,   capB = same for the denominator,
//! ```
//!
//! and the ordering of `√α`, `√β`, `δ` picks one of eleven case shapes
//! (`Phi1`…`Psi3`). The multiplier norm is always the ratio `capA / capB`.
//! The single excluded boundary is `δ = √α = √β`, which the classifier
//! reports as `Unclassified` rather than guessing.
//!
//! Run with:
//!
//! ```bash
//! cargo run -p padic-dynamics --example classify_map
//! ```

use padic_dynamics::classify::{classify_map, CaseTag};
use padic_dynamics::cookbook::{COOKBOOK, UNCLASSIFIED_EXAMPLE};
use padic_dynamics::map::MapParams;
use padic_dynamics::padic::rational_repr;

fn main() {
    println!(
        "{:<12} {:>2}  {:>11} {:>10} {:>8}  {:>8}  case",
        "label", "p", "sqrt(alpha)", "sqrt(beta)", "delta", "|lambda|"
    );
    for entry in COOKBOOK {
        let params = entry.params();
        let p = params.prime();
        let (data, tag) = classify_map(&params).expect("cookbook tuples are valid");
        assert_eq!(tag, entry.tag, "cookbook labels match the classifier");

        // The multiplier norm is the ratio of the two top-level norms.
        let lambda = data.multiplier_norm();
        assert_eq!(
            Some(lambda),
            data.cap_a.checked_div(data.cap_b),
            "|f'(x0)| = capA/capB holds on every classified tuple"
        );

        println!(
            "{:<12} {:>2}  {:>11} {:>10} {:>8}  {:>8}  {}",
            entry.label,
            p,
            data.sqrt_alpha.display_with_base(p),
            data.sqrt_beta.display_with_base(p),
            data.delta.display_with_base(p),
            lambda.display_with_base(p),
            tag,
        );
    }

    // ── Every shape is inhabited ────────────────────────────────────────────
    let mut seen: Vec<CaseTag> = COOKBOOK.iter().map(|e| e.tag).collect();
    seen.sort_by_key(CaseTag::name);
    seen.dedup();
    println!("\nshapes realized by the cookbook: {}", seen.len());
    assert!(
        CaseTag::ALL.iter().all(|t| seen.contains(t)),
        "all eleven shapes have a curated witness"
    );

    // ── The excluded boundary is detected, not mislabeled ──────────────────
    let (p, a, b, c, d) = UNCLASSIFIED_EXAMPLE;
    let boundary = MapParams::from_ints(p, a, b, c, d).expect("boundary tuple is well formed");
    let (data, tag) = classify_map(&boundary).expect("boundary tuple is a valid map");
    println!(
        "\nboundary tuple x0 = {}: delta = sqrt(alpha) = sqrt(beta) = {} -> {}",
        rational_repr(boundary.fixed_point().value()),
        data.delta.display_with_base(boundary.prime()),
        tag
    );
    assert_eq!(tag, CaseTag::Unclassified);
}
