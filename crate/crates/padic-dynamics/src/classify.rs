//! Critical norms of the map at its fixed point, and the case classification
//! that drives the radius dynamics.
//!
//! Taking norms of the exact factorisation (see [`crate::map`])
//!
//! ```text
//! f(x) − x₀ = (x−x₀) · ((x+a/2)² + α₀) / ((x+a/2)² + β₀)
//! ```
//!
//! shows that the distance `|f(x) − x₀|_p` depends on `|x − x₀|_p` through
//! five constants of the map:
//!
//! ```text
//! α    = |α₀|_p                      (numerator shift norm)
//! β    = |β₀|_p                      (denominator shift norm)
//! δ    = |x₀ + a/2|_p                (how far the fixed point sits from the
//!                                     common center −a/2 of both quadratics)
//! capA = |(x₀+a/2)² + α₀|_p = |x₀²+a·x₀+b|_p
//! capB = |(x₀+a/2)² + β₀|_p = |x₀²+a·x₀+d|_p
//! ```
//!
//! The ultrametric pins `capA` down whenever `δ² ≠ α` (then
//! `capA = max(δ², α)`) and only leaves it free — anywhere `≤ δ²` — on the
//! tie `δ² = α`; likewise for `capB`/`β`. The multiplier norm is exactly
//! `|f′(x₀)|_p = capA/capB`.
//!
//! The relative order of `δ`, `√α`, `√β` selects one of eleven piecewise
//! shapes for the induced radius map (see [`crate::dynamics`]); the triple
//! tie `δ = √α = √β` is the one pattern the piecewise catalogue does not
//! cover and is reported as [`CaseTag::Unclassified`]. Two patterns share
//! the boundary `√β < δ = √α`; there `capA < δ²` gives genuine contraction
//! ([`CaseTag::Psi2`]) while `capA = δ²` behaves like the neutral case
//! ([`CaseTag::Psi3`]), so the classifier consults `capA` for exactly that
//! split.

use crate::map::{MapError, MapParams};
use crate::padic::{rational_repr, Radius};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// A synthetic norm tuple that no actual map can produce.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormConsistencyError {
    /// `capB = 0` would put the fixed point on a pole.
    #[error("capB must be positive (a zero capB means the fixed point is a pole)")]
    ZeroCapB,
    /// A cap norm exceeds its ultrametric envelope, or misses a forced value.
    #[error("{name} = {got:?} violates its ultrametric envelope (expected {expected})")]
    EnvelopeViolation {
        /// Which cap norm is inconsistent.
        name: &'static str,
        /// The offending value.
        got: Radius,
        /// What the envelope allows.
        expected: String,
    },
}

/// The five critical norms (plus the two derived square roots) of a map at
/// its fixed point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriticalData {
    /// `|α₀|_p` with `α₀ = b − a²/4`.
    pub alpha: Radius,
    /// `|β₀|_p` with `β₀ = d − a²/4`.
    pub beta: Radius,
    /// `|x₀ + a/2|_p`.
    pub delta: Radius,
    /// `|(x₀+a/2)² + α₀|_p = |x₀² + a·x₀ + b|_p`.
    pub cap_a: Radius,
    /// `|(x₀+a/2)² + β₀|_p = |x₀² + a·x₀ + d|_p`; nonzero because the fixed
    /// point is required not to be a pole.
    pub cap_b: Radius,
    /// `√α` (exponent halved; may have a half-integer exponent).
    pub sqrt_alpha: Radius,
    /// `√β`.
    pub sqrt_beta: Radius,
}

/// Which of the eleven piecewise radius-map shapes applies (or none).
///
/// `Phi*` are the shapes with `δ ≤ min(√α, √β)`, `SPhi*` the ones with
/// `√α ≤ min(δ, √β)`, `Psi*` the ones with `√β ≤ min(δ, √α)`; the digit
/// distinguishes the strict/tied sub-patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CaseTag {
    /// `δ < √α < √β`
    Phi1,
    /// `δ < √α = √β`
    Phi2,
    /// `δ = √α < √β`
    Phi3,
    /// `δ < √β < √α`
    Phi4,
    /// `δ = √β < √α`
    Phi5,
    /// `√α < δ < √β`
    SPhi1,
    /// `√α < δ = √β`
    SPhi2,
    /// `√α ≤ √β < δ`
    SPhi3,
    /// `√β < δ < √α`
    Psi1,
    /// `√β < δ = √α` with `capA < δ²`
    Psi2,
    /// `√β < √α ≤ δ`, i.e. the strict pattern, or the boundary
    /// `√β < δ = √α` with `capA = δ²`
    Psi3,
    /// `δ = √α = √β`: outside the piecewise catalogue.
    Unclassified,
}

impl CaseTag {
    /// All classified tags, in catalogue order.
    pub const ALL: [CaseTag; 11] = [
        CaseTag::Phi1,
        CaseTag::Phi2,
        CaseTag::Phi3,
        CaseTag::Phi4,
        CaseTag::Phi5,
        CaseTag::SPhi1,
        CaseTag::SPhi2,
        CaseTag::SPhi3,
        CaseTag::Psi1,
        CaseTag::Psi2,
        CaseTag::Psi3,
    ];

    /// Stable identifier (used in reports and the CLI).
    #[must_use]
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::Phi1 => "Phi1",
            CaseTag::Phi2 => "Phi2",
            CaseTag::Phi3 => "Phi3",
            CaseTag::Phi4 => "Phi4",
            CaseTag::Phi5 => "Phi5",
            CaseTag::SPhi1 => "SPhi1",
            CaseTag::SPhi2 => "SPhi2",
            CaseTag::SPhi3 => "SPhi3",
            CaseTag::Psi1 => "Psi1",
            CaseTag::Psi2 => "Psi2",
            CaseTag::Psi3 => "Psi3",
            CaseTag::Unclassified => "Unclassified",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl CriticalData {
    /// Computes the critical norms for a map; errors when the fixed point is
    /// a pole (then `capB = 0` and no local analysis makes sense).
    pub fn for_map(params: &MapParams) -> Result<Self, MapError> {
        let x0 = params.fixed_point();
        let s = params.shifted_fixed_point(); // x₀ + a/2
        let alpha0 = params.alpha0();
        let beta0 = params.beta0();
        let s2 = s.mul(&s).expect("same prime");
        let cap_a = s2.add(&alpha0).expect("same prime").norm();
        let cap_b_val = s2.add(&beta0).expect("same prime");
        if cap_b_val.is_zero() {
            return Err(MapError::SingularFixedPoint(rational_repr(x0.value())));
        }
        let alpha = alpha0.norm();
        let beta = beta0.norm();
        Ok(CriticalData {
            alpha,
            beta,
            delta: s.norm(),
            cap_a,
            cap_b: cap_b_val.norm(),
            sqrt_alpha: alpha.sqrt(),
            sqrt_beta: beta.sqrt(),
        })
    }

    /// Builds critical data from bare norms, checking the ultrametric
    /// envelope relations a real map would satisfy. Useful for sweeping the
    /// radius dynamics over synthetic exponent grids without hunting for a
    /// parameter tuple realising each pattern.
    ///
    /// # Errors
    /// [`NormConsistencyError`] when `cap_b` is zero, when a cap norm
    /// deviates from its forced value `max(δ², ·)` off the tie, or when it
    /// exceeds the tied envelope on it.
    pub fn from_norms(
        alpha: Radius,
        beta: Radius,
        delta: Radius,
        cap_a: Radius,
        cap_b: Radius,
    ) -> Result<Self, NormConsistencyError> {
        if cap_b.is_zero() {
            return Err(NormConsistencyError::ZeroCapB);
        }
        let d2 = delta.square();
        let check = |name: &'static str, shift: Radius, cap: Radius| {
            if d2 == shift {
                if cap <= d2 {
                    Ok(())
                } else {
                    Err(NormConsistencyError::EnvelopeViolation {
                        name,
                        got: cap,
                        expected: format!("anything ≤ the tied envelope {d2:?}"),
                    })
                }
            } else if cap == d2.max(shift) {
                Ok(())
            } else {
                Err(NormConsistencyError::EnvelopeViolation {
                    name,
                    got: cap,
                    expected: format!("exactly max(δ², ·) = {:?}", d2.max(shift)),
                })
            }
        };
        check("capA", alpha, cap_a)?;
        check("capB", beta, cap_b)?;
        Ok(CriticalData {
            alpha,
            beta,
            delta,
            cap_a,
            cap_b,
            sqrt_alpha: alpha.sqrt(),
            sqrt_beta: beta.sqrt(),
        })
    }

    /// `|f′(x₀)|_p = capA/capB` (exact; `capB > 0` by construction).
    #[must_use]
    pub fn multiplier_norm(&self) -> Radius {
        self.cap_a.checked_div(self.cap_b).expect("capB is nonzero")
    }

    /// `δ²`, used all over the piecewise case analysis.
    #[must_use]
    pub fn delta_sq(&self) -> Radius {
        self.delta.square()
    }

    /// Selects the piecewise shape from the relative order of `δ`, `√α`,
    /// `√β` (and `capA` on the one boundary pattern that needs it).
    #[must_use]
    pub fn classify(&self) -> CaseTag {
        use std::cmp::Ordering::*;
        let d = self.delta;
        let sa = self.sqrt_alpha;
        let sb = self.sqrt_beta;
        match (d.cmp(&sa), d.cmp(&sb), sa.cmp(&sb)) {
            (Less, Less, Less) => CaseTag::Phi1,
            (Less, Less, Equal) => CaseTag::Phi2,
            (Equal, Less, Less) => CaseTag::Phi3,
            (Less, Less, Greater) => CaseTag::Phi4,
            (Less, Equal, Greater) => CaseTag::Phi5,
            (Greater, Less, Less) => CaseTag::SPhi1,
            (Greater, Equal, Less) => CaseTag::SPhi2,
            (Greater, Greater, Less) | (Greater, Greater, Equal) => CaseTag::SPhi3,
            (Less, Greater, Greater) => CaseTag::Psi1,
            (Equal, Greater, Greater) => {
                // Boundary shared by the contracting and neutral shapes:
                // capA < δ² contracts, capA = δ² is neutral (capA > δ² is
                // impossible here since capA ≤ max(δ², α) = δ²).
                debug_assert!(self.cap_a <= self.delta_sq());
                if self.cap_a < self.delta_sq() {
                    CaseTag::Psi2
                } else {
                    CaseTag::Psi3
                }
            }
            (Greater, Greater, Greater) => CaseTag::Psi3,
            (Equal, Equal, Equal) => CaseTag::Unclassified,
            // Remaining combinations are arithmetically impossible for a
            // total order (e.g. d < sa, d = sb, sa < sb would need sb < sb).
            _ => unreachable!("inconsistent ordering of δ, √α, √β"),
        }
    }
}

/// One-call convenience: critical data plus tag.
pub fn classify_map(params: &MapParams) -> Result<(CriticalData, CaseTag), MapError> {
    let data = CriticalData::for_map(params)?;
    let tag = data.classify();
    Ok((data, tag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::MapParams;

    fn data(p: u64, a: i64, b: i64, c: i64, d: i64) -> CriticalData {
        CriticalData::for_map(&MapParams::from_ints(p, a, b, c, d).unwrap()).unwrap()
    }

    fn pw(e: i64) -> Radius {
        Radius::int_power(e)
    }

    #[test]
    fn critical_norms_for_a_contracting_tuple() {
        // (0,9,−72,1) over Q₃: x₀ = 9, α₀ = 9, β₀ = 1.
        let d = data(3, 0, 9, -72, 1);
        assert_eq!(d.delta, pw(-2));
        assert_eq!(d.alpha, pw(-2));
        assert_eq!(d.beta, pw(0));
        assert_eq!(d.sqrt_alpha, pw(-1));
        assert_eq!(d.sqrt_beta, pw(0));
        assert_eq!(d.cap_a, pw(-2), "capA = |81+9|₃ = |90|₃");
        assert_eq!(d.cap_b, pw(0), "capB = |82|₃");
        assert_eq!(d.multiplier_norm(), pw(-2));
        assert_eq!(d.classify(), CaseTag::Phi1);
    }

    #[test]
    fn zero_alpha_is_ordered_below_everything() {
        // (0,0,2,1) over Q₂: α₀ = 0, so √α = 0 < δ = 2⁻¹ < √β = 1.
        let d = data(2, 0, 0, 2, 1);
        assert_eq!(d.alpha, Radius::Zero);
        assert_eq!(d.sqrt_alpha, Radius::Zero);
        assert_eq!(d.delta, pw(-1));
        assert_eq!(d.sqrt_beta, pw(0));
        assert_eq!(d.cap_a, pw(-2));
        assert_eq!(d.cap_b, pw(0));
        assert_eq!(d.classify(), CaseTag::SPhi1);
        // Multiplier norm equals capA/capB — cross-checked against f′.
        let f = MapParams::from_ints(2, 0, 0, 2, 1).unwrap();
        assert_eq!(d.multiplier_norm(), f.multiplier().unwrap().norm());
    }

    #[test]
    fn capa_tiebreak_separates_the_two_neutral_boundary_shapes() {
        // Both tuples have √β < δ = √α; capA decides.
        let contracting = data(3, 0, 720, 27, 729);
        assert_eq!(contracting.delta, pw(-1));
        assert_eq!(contracting.sqrt_alpha, pw(-1));
        assert_eq!(contracting.sqrt_beta, pw(-3));
        assert_eq!(contracting.cap_a, pw(-6), "capA = |9+720|₃ = |729|₃");
        assert_eq!(contracting.classify(), CaseTag::Psi2);

        let neutral = data(3, 0, 9, 2160, 729);
        assert_eq!(neutral.delta, pw(-1));
        assert_eq!(neutral.sqrt_alpha, pw(-1));
        assert_eq!(neutral.sqrt_beta, pw(-3));
        assert_eq!(neutral.cap_a, pw(-2), "capA = |9+9|₃ = |18|₃ = δ²");
        assert_eq!(neutral.classify(), CaseTag::Psi3);
    }

    #[test]
    fn triple_tie_is_unclassified() {
        // (0,1,1,2) over Q₃: δ = √α = √β = 1.
        let d = data(3, 0, 1, 1, 2);
        assert_eq!(d.delta, pw(0));
        assert_eq!(d.sqrt_alpha, pw(0));
        assert_eq!(d.sqrt_beta, pw(0));
        assert_eq!(d.classify(), CaseTag::Unclassified);
    }

    #[test]
    fn singular_fixed_point_is_rejected() {
        // x₀ = 1 with d = −1−a·1 ⇒ denominator vanishes at x₀:
        // pick a=0, d=−1, then x₀ = c/(d−b) = 1 needs c = d−b = −1.
        let params = MapParams::from_ints(3, 0, 0, -1, -1).unwrap();
        assert!(matches!(
            CriticalData::for_map(&params),
            Err(MapError::SingularFixedPoint(_))
        ));
    }

    #[test]
    fn cap_norms_obey_the_ultrametric_envelope() {
        // capA ≤ max(δ², α) with equality when δ² ≠ α; same for capB/β.
        for (p, a, b, c, d) in [
            (3u64, 0i64, 9i64, -72i64, 1i64),
            (3, 0, 9, -24, 1),
            (3, 0, 81, 6291, 2178),
            (3, 0, 720, 27, 729),
            (5, 0, 25, -600, 1),
            (2, 0, 4, -12, 1),
            (7, 3, 2, 5, 11),
        ] {
            let cd = data(p, a, b, c, d);
            let d2 = cd.delta_sq();
            let env_a = d2.max(cd.alpha);
            let env_b = d2.max(cd.beta);
            assert!(cd.cap_a <= env_a, "capA envelope at p={p}");
            assert!(cd.cap_b <= env_b, "capB envelope at p={p}");
            if d2 != cd.alpha {
                assert_eq!(cd.cap_a, env_a, "capA strict max at p={p}");
            }
            if d2 != cd.beta {
                assert_eq!(cd.cap_b, env_b, "capB strict max at p={p}");
            }
        }
    }

    #[test]
    fn synthetic_norms_are_validated() {
        // Valid: δ=p⁻¹, α=p⁻², β=p⁰ ties δ²=α (so δ=√α: shape Phi3), which
        // frees capA to anything ≤ p⁻²; capB is forced to p⁰.
        let ok = CriticalData::from_norms(pw(-2), pw(0), pw(-1), pw(-4), pw(0));
        assert!(ok.is_ok());
        assert_eq!(ok.unwrap().classify(), CaseTag::Phi3);

        // capA above the tied envelope is impossible.
        assert!(matches!(
            CriticalData::from_norms(pw(-2), pw(0), pw(-1), pw(-1), pw(0)),
            Err(NormConsistencyError::EnvelopeViolation { name: "capA", .. })
        ));
        // Off the tie the cap is forced to the max.
        assert!(matches!(
            CriticalData::from_norms(pw(-2), pw(0), pw(-1), pw(-4), pw(-1)),
            Err(NormConsistencyError::EnvelopeViolation { name: "capB", .. })
        ));
        assert_eq!(
            CriticalData::from_norms(pw(-2), Radius::Zero, pw(-1), pw(-4), Radius::Zero),
            Err(NormConsistencyError::ZeroCapB)
        );
    }
}
