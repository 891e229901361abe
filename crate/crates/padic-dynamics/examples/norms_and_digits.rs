//! Exact p-adic arithmetic from first principles: valuations, norms, the
//! ultrametric inequality, and digit expansions.
//!
//! Every number here is an exact rational; the p-adic norm is
//!
//! ```text
//! |x|_p = p^(−v_p(x)),     v_p(p^v · u/w) = v   (p ∤ u·w),
//! ```
//!
//! so norms are exact powers of p and never floats. The fixed-precision
//! backend truncates digit tails but keeps the leading digits and the
//! valuation exact, which is why its norms agree with the exact backend
//! whenever it can see the leading digit at all.
//!
//! Run with:
//!
//! ```bash
//! cargo run -p padic-dynamics --example norms_and_digits
//! ```

use num_rational::BigRational;
use padic_dynamics::padic::{parse_rational, rational_repr, ExactPadic, FixedPadic, Radius};

fn rat(s: &str) -> BigRational {
    parse_rational(s).expect("example literals parse")
}

fn main() {
    let p = 3;

    // ── Norms are exact powers of p ─────────────────────────────────────────
    println!("p-adic norms over Q_{p}:");
    for s in ["45", "1/45", "-7", "162/35", "0"] {
        let x = ExactPadic::new(p, rat(s)).expect("3 is prime");
        println!(
            "  |{:>6}|_{p} = {}",
            rational_repr(x.value()),
            x.norm().display_with_base(p)
        );
    }

    // ── The ultrametric inequality, with its equality case ─────────────────
    // |x + y| ≤ max(|x|, |y|), with equality whenever |x| ≠ |y|.
    let x = ExactPadic::new(p, rat("9/2")).expect("prime checked");
    let y = ExactPadic::new(p, rat("5")).expect("prime checked");
    let sum = x.add(&y).expect("same prime");
    println!("\nultrametric inequality:");
    println!(
        "  |9/2|_3 = {}, |5|_3 = {}, |9/2 + 5|_3 = {}",
        x.norm().display_with_base(p),
        y.norm().display_with_base(p),
        sum.norm().display_with_base(p)
    );
    assert_eq!(sum.norm(), Radius::one(), "distinct norms force equality");

    // Equal norms can genuinely cancel: 1 + 2 = 3 drops the norm.
    let one = ExactPadic::from_int(p, 1).expect("prime checked");
    let two = ExactPadic::from_int(p, 2).expect("prime checked");
    let three = one.add(&two).expect("same prime");
    println!(
        "  |1|_3 = |2|_3 = 3^0, but |1 + 2|_3 = {}",
        three.norm().display_with_base(p)
    );

    // ── Digit expansions ────────────────────────────────────────────────────
    // x = p^γ · (d₀ + d₁·p + d₂·p² + …) with d₀ ≠ 0. Negative numbers get
    // infinite repeating tails — exactly representable up to any precision.
    println!("\ndigit expansions (first 8 digits):");
    for s in ["45", "-1", "1/2", "7/9"] {
        let x = ExactPadic::new(p, rat(s)).expect("prime checked");
        let (gamma, digits) = x.digit_expansion(8).expect("nonzero, positive count");
        println!("  {:>4} = 3^{gamma} * {digits:?}", rational_repr(x.value()));
    }

    // ── Fixed-precision backend agrees on what it can see ──────────────────
    let exact = ExactPadic::new(p, rat("162/35")).expect("prime checked");
    let fixed = FixedPadic::from_exact(&exact, 12).expect("positive precision");
    println!("\nfixed-precision backend (12 digits):");
    println!(
        "  exact norm {}  vs  fixed norm {}",
        exact.norm().display_with_base(p),
        fixed.norm().display_with_base(p)
    );
    assert_eq!(exact.norm(), fixed.norm());

    // Catastrophic cancellation is *detected*, not silently absorbed: the
    // backend reports precision loss instead of inventing digits.
    let a = FixedPadic::from_exact(&exact, 6).expect("positive precision");
    let loss = a.sub(&a);
    println!(
        "  x - x at 6 digits: {:?} (all visible digits cancelled)",
        loss.expect_err("cancellation must be reported")
    );
}
