//! Exact dynamics of the distance-to-fixed-point under the map: the general
//! ultrametric step rule, the piecewise catalogue of stylized radius maps,
//! their fixed radii, and limit behaviour.
//!
//! # The general step rule
//!
//! For `x` on the sphere `|x − x₀|_p = r`, write `s = x₀ + a/2` (so
//! `|s|_p = δ`) and decompose the shifted quadratics exactly:
//!
//! ```text
//! (x + a/2)² + α₀ = (x−x₀)² + 2s·(x−x₀) + (s² + α₀)
//! ```
//!
//! whose three terms have norms `r²`, `r·δ` (times `|2|_p`, which is 1 for
//! every odd prime), and `capA`. The ultrametric then gives, exactly:
//!
//! ```text
//! |f(x) − x₀|  =  r · N/D,
//!     N = max(r², r·δ, capA)   when the maximum is attained once,
//!     N ≤ the tied maximum     when it is attained twice or more,
//! ```
//!
//! and the same for `D` with `capB`. A unique maximum on both sides makes
//! the step *deterministic*: every point of the sphere moves to the same
//! sphere. A tie makes it *point-dependent*: different points of the sphere
//! land at different distances, but sound one-sided bounds survive —
//! a numerator tie caps the image (`N` can only fall), a denominator tie
//! props it up (`D` can only fall, so the quotient can only grow).
//!
//! [`ultrametric_step`] implements exactly this rule. It is stated with the
//! odd-prime middle term `r·δ`; for `p = 2` that term is really `r·δ/2`,
//! which can only matter in the narrow regime `r < δ`, `cap < r·δ` on a side
//! whose envelope is tied (`δ² = α` or `δ² = β`). Deterministic answers
//! outside that regime, and every point-dependent upper/lower bound, remain
//! sound for `p = 2`.
//!
//! # The piecewise catalogue
//!
//! Fixing the case pattern of `(δ, √α, √β)` collapses the rule into one of
//! eleven piecewise shapes in `r` alone ([`stylized_map`]): linear stretches
//! `λ·r`, the cubic stretch `r³/β`, the inversion `α/r`, identity plateaus,
//! and point-dependent critical spheres. [`fixed_radii`] and
//! [`limit_behavior`] read off each shape's fixed radii and eventual
//! behaviour, including the landing intervals of the expanding shapes.

use crate::classify::{CaseTag, CriticalData};
use crate::padic::Radius;
use thiserror::Error;

/// Errors from the radius-dynamics layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DynamicsError {
    /// The triple tie `δ = √α = √β` has no shape in the catalogue.
    #[error("the pattern δ = √α = √β is outside the piecewise catalogue")]
    UnclassifiedCase,
}

/// Image of one radius under one application of the map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusStepResult {
    /// Every point of the sphere `S_r` maps to the sphere of this radius.
    Deterministic(Radius),
    /// Different points of `S_r` map to different radii; the image radius
    /// `ρ` of any individual point obeys `lower ≤ ρ` and `ρ ≤ upper` (when
    /// `upper` is `Some`). `lower = 0` / `upper = None` mean the respective
    /// side is unbounded: a numerator tie can cancel arbitrarily deep, and a
    /// denominator tie can push the image arbitrarily high (points close to
    /// a pole).
    PointDependent {
        /// Sound lower bound (`Radius::Zero` when vacuous).
        lower: Radius,
        /// Sound upper bound (`None` when none exists).
        upper: Option<Radius>,
    },
}

impl RadiusStepResult {
    /// The deterministic image, if any.
    #[must_use]
    pub fn deterministic(&self) -> Option<Radius> {
        match self {
            RadiusStepResult::Deterministic(r) => Some(*r),
            RadiusStepResult::PointDependent { .. } => None,
        }
    }

    /// True when an observed image radius is consistent with this step.
    #[must_use]
    pub fn admits(&self, observed: Radius) -> bool {
        match self {
            RadiusStepResult::Deterministic(r) => observed == *r,
            RadiusStepResult::PointDependent { lower, upper } => {
                observed >= *lower && upper.is_none_or(|u| observed <= u)
            }
        }
    }
}

/// `(max, attained uniquely?)` over the three step terms.
fn term_max(t1: Radius, t2: Radius, t3: Radius) -> (Radius, bool) {
    let max = t1.max(t2).max(t3);
    let hits = usize::from(t1 == max) + usize::from(t2 == max) + usize::from(t3 == max);
    (max, hits == 1)
}

/// The general ultrametric step rule — the source of truth every stylized
/// shape must agree with on deterministic radii.
///
/// See the module docs for the derivation. `r = 0` is the fixed point and
/// stays put.
#[must_use]
pub fn ultrametric_step(r: Radius, data: &CriticalData) -> RadiusStepResult {
    if r.is_zero() {
        return RadiusStepResult::Deterministic(Radius::Zero);
    }
    let r2 = r.square();
    let rd = r * data.delta;
    let (num_max, num_unique) = term_max(r2, rd, data.cap_a);
    let (den_max, den_unique) = term_max(r2, rd, data.cap_b);
    // r > 0 forces r² > 0, so both maxima are positive.
    let envelope = (r * num_max)
        .checked_div(den_max)
        .expect("denominator maximum is positive for r > 0");
    match (num_unique, den_unique) {
        (true, true) => RadiusStepResult::Deterministic(envelope),
        // Numerator exact, denominator only capped: the quotient can only
        // grow beyond the envelope.
        (true, false) => RadiusStepResult::PointDependent {
            lower: envelope,
            upper: None,
        },
        // Numerator capped, denominator exact: the quotient can only fall.
        (false, true) => RadiusStepResult::PointDependent {
            lower: Radius::Zero,
            upper: Some(envelope),
        },
        (false, false) => RadiusStepResult::PointDependent {
            lower: Radius::Zero,
            upper: None,
        },
    }
}

fn det(r: Radius) -> RadiusStepResult {
    RadiusStepResult::Deterministic(r)
}

fn pd(lower: Radius, upper: Option<Radius>) -> RadiusStepResult {
    RadiusStepResult::PointDependent { lower, upper }
}

/// `a/b` for radii; the catalogue only divides by radii that are positive
/// for validated critical data.
fn rdiv(a: Radius, b: Radius) -> Radius {
    a.checked_div(b).expect("catalogue divisors are positive")
}

/// Is the tied neutral shape `SPhi2` in its outward-landing sub-case?
///
/// `√α < δ = √β` leaves `capB ≤ δ²` free: `capB = δ²` preserves every
/// non-critical sphere, while `capB < δ²` expands inner spheres outward.
#[must_use]
pub fn sphi2_is_landing(data: &CriticalData) -> bool {
    data.cap_b < data.delta_sq()
}

/// The stylized radius map for one case shape.
///
/// This is the piecewise catalogue made executable: each tag fixes a
/// partition of the positive radii into linear/cubic/inversion/identity
/// stretches and critical spheres. Branch values are derived from the same
/// exact term analysis as [`ultrametric_step`] (the two functions are
/// checked against each other on exponent grids), with the catalogue's
/// sub-branch refinements spelled out per shape:
///
/// ```text
/// Phi1   δ<√α<√β   (α/β)·r │ ≤α√α/β at √α │ r³/β │ ≥√β at √β │ r
/// Phi2   δ<√α=√β   r everywhere except the critical sphere √α (unbounded)
/// Phi3   δ=√α<√β   capA-vs-rδ sub-branches below δ │ ≤δ³/β at δ │ r³/β │ ≥√β at √β │ r
/// Phi4   δ<√β<√α   (α/β)·r │ ≥α/√β at √β │ α/r │ ≤√α at √α │ r
/// Phi5   δ=√β<√α   capB-vs-rδ sub-branches below δ │ ≥α/δ at δ │ α/r │ ≤√α at √α │ r
/// SPhi1  √α<δ<√β   (δ²/β)·r │ ≤δ³/β at δ │ r³/β │ ≥√β at √β │ r
/// SPhi2  √α<δ=√β   preserving: r except at δ; landing: climb to δ, then r
/// SPhi3  √α≤√β<δ   r everywhere except the critical sphere δ (unbounded)
/// Psi1   √β<δ<√α   (α/δ²)·r │ ≥α/δ at δ │ α/r │ ≤√α at √α │ r
/// Psi2   √β<δ=√α   capA-vs-rδ sub-branches below δ │ unbounded at δ │ r
/// Psi3   √β<√α≤δ   r everywhere except the critical sphere δ (unbounded)
/// ```
///
/// # Errors
/// [`DynamicsError::UnclassifiedCase`] for [`CaseTag::Unclassified`].
pub fn stylized_map(
    tag: CaseTag,
    data: &CriticalData,
    r: Radius,
) -> Result<RadiusStepResult, DynamicsError> {
    use std::cmp::Ordering::*;
    if r.is_zero() {
        return Ok(det(Radius::Zero));
    }
    let d = data;
    let step = match tag {
        CaseTag::Unclassified => return Err(DynamicsError::UnclassifiedCase),

        CaseTag::Phi1 => match r.cmp(&d.sqrt_alpha) {
            // Inner stretch contracts by α/β (< 1 here).
            Less => det(rdiv(r * d.alpha, d.beta)),
            // Numerator tie: image only capped, by α√α/β.
            Equal => pd(Radius::Zero, Some(rdiv(r * d.alpha, d.beta))),
            Greater => match r.cmp(&d.sqrt_beta) {
                Less => det(rdiv(r.square() * r, d.beta)),
                // Denominator tie: image at least √β, unbounded above.
                Equal => pd(r, None),
                Greater => det(r),
            },
        },

        CaseTag::Phi2 => match r.cmp(&d.sqrt_alpha) {
            // Double tie on the critical sphere: no sound bound either way.
            Equal => pd(Radius::Zero, None),
            _ => det(r),
        },

        CaseTag::Phi3 => match r.cmp(&d.delta) {
            Less => {
                // δ = √α ties the numerator envelope; the stored capA (≤ δ²)
                // competes with the middle term r·δ.
                let rd = r * d.delta;
                match d.cap_a.cmp(&rd) {
                    Greater => det(rdiv(r * d.cap_a, d.beta)),
                    Equal => pd(Radius::Zero, Some(rdiv(r * rd, d.beta))),
                    Less => det(rdiv(r * rd, d.beta)),
                }
            }
            Equal => pd(Radius::Zero, Some(rdiv(r * d.delta_sq(), d.beta))),
            Greater => match r.cmp(&d.sqrt_beta) {
                Less => det(rdiv(r.square() * r, d.beta)),
                Equal => pd(r, None),
                Greater => det(r),
            },
        },

        CaseTag::Phi4 => match r.cmp(&d.sqrt_beta) {
            // Inner stretch expands by α/β (> 1 here).
            Less => det(rdiv(r * d.alpha, d.beta)),
            // Denominator tie: image at least α/√β, unbounded above.
            Equal => pd(rdiv(r * d.alpha, d.beta), None),
            Greater => match r.cmp(&d.sqrt_alpha) {
                Less => det(rdiv(d.alpha, r)),
                // Numerator tie: image capped by √α.
                Equal => pd(Radius::Zero, Some(r)),
                Greater => det(r),
            },
        },

        CaseTag::Phi5 => match r.cmp(&d.delta) {
            Less => {
                // δ = √β ties the denominator envelope; the stored capB
                // (≤ δ²) competes with the middle term r·δ.
                let rd = r * d.delta;
                match d.cap_b.cmp(&rd) {
                    Greater => det(rdiv(r * d.alpha, d.cap_b)),
                    Equal => pd(rdiv(d.alpha, d.delta), None),
                    Less => det(rdiv(d.alpha, d.delta)),
                }
            }
            Equal => pd(rdiv(d.alpha, d.delta), None),
            Greater => match r.cmp(&d.sqrt_alpha) {
                Less => det(rdiv(d.alpha, r)),
                Equal => pd(Radius::Zero, Some(r)),
                Greater => det(r),
            },
        },

        CaseTag::SPhi1 => match r.cmp(&d.delta) {
            Less => det(rdiv(r * d.delta_sq(), d.beta)),
            Equal => pd(Radius::Zero, Some(rdiv(r * d.delta_sq(), d.beta))),
            Greater => match r.cmp(&d.sqrt_beta) {
                Less => det(rdiv(r.square() * r, d.beta)),
                Equal => pd(r, None),
                Greater => det(r),
            },
        },

        CaseTag::SPhi2 => match r.cmp(&d.delta) {
            Less => {
                if sphi2_is_landing(d) {
                    let rd = r * d.delta;
                    match d.cap_b.cmp(&rd) {
                        Greater => det(rdiv(r * d.delta_sq(), d.cap_b)),
                        Equal => pd(d.delta, None),
                        // Once r·δ overtakes capB the whole inner annulus
                        // maps straight onto the critical sphere.
                        Less => det(d.delta),
                    }
                } else {
                    det(r)
                }
            }
            Equal => pd(Radius::Zero, None),
            Greater => det(r),
        },

        CaseTag::SPhi3 | CaseTag::Psi3 => match r.cmp(&d.delta) {
            Equal => pd(Radius::Zero, None),
            _ => det(r),
        },

        CaseTag::Psi1 => match r.cmp(&d.delta) {
            Less => det(rdiv(r * d.alpha, d.delta_sq())),
            Equal => pd(rdiv(d.alpha, d.delta), None),
            Greater => match r.cmp(&d.sqrt_alpha) {
                Less => det(rdiv(d.alpha, r)),
                Equal => pd(Radius::Zero, Some(r)),
                Greater => det(r),
            },
        },

        CaseTag::Psi2 => match r.cmp(&d.delta) {
            Less => {
                // δ = √α ties the numerator envelope; capA < δ² by the case
                // condition, and competes with the middle term r·δ.
                let rd = r * d.delta;
                match d.cap_a.cmp(&rd) {
                    Greater => det(rdiv(r * d.cap_a, d.delta_sq())),
                    Equal => pd(Radius::Zero, Some(rdiv(r * rd, d.delta_sq()))),
                    Less => det(rdiv(r * rd, d.delta_sq())),
                }
            }
            Equal => pd(Radius::Zero, None),
            Greater => det(r),
        },
    };
    Ok(step)
}

// ── Radius sets, fixed radii, limits ────────────────────────────────────────

/// A set of radii, described symbolically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadiusSetDescriptor {
    /// Exactly one radius.
    Singleton(Radius),
    /// `(lo, hi)`, both ends excluded.
    OpenInterval(Radius, Radius),
    /// `{r : r > radius}` (or `≥` when `strict` is false).
    RayAbove {
        /// Lower threshold.
        radius: Radius,
        /// Exclude the threshold itself?
        strict: bool,
    },
    /// Every radius except one.
    Complement(Radius),
    /// Union of the parts.
    Union(Vec<RadiusSetDescriptor>),
    /// A radius that belongs to the set only under the stated side
    /// condition (typically: a point-dependent critical image that happens
    /// to land there). Unconditional membership tests exclude it.
    ConditionalPoint {
        /// The radius in question.
        radius: Radius,
        /// Why/when it belongs.
        note: &'static str,
    },
}

impl RadiusSetDescriptor {
    /// Membership ignoring conditional points (their side conditions are
    /// orbit-dependent and judged by the verifier with orbit context).
    #[must_use]
    pub fn contains_unconditional(&self, r: Radius) -> bool {
        match self {
            RadiusSetDescriptor::Singleton(s) => r == *s,
            RadiusSetDescriptor::OpenInterval(lo, hi) => *lo < r && r < *hi,
            RadiusSetDescriptor::RayAbove { radius, strict } => {
                if *strict {
                    r > *radius
                } else {
                    r >= *radius
                }
            }
            RadiusSetDescriptor::Complement(s) => r != *s,
            RadiusSetDescriptor::Union(parts) => parts.iter().any(|p| p.contains_unconditional(r)),
            RadiusSetDescriptor::ConditionalPoint { .. } => false,
        }
    }

    /// Renders with a concrete base prime.
    #[must_use]
    pub fn display_with_base(&self, p: u64) -> String {
        match self {
            RadiusSetDescriptor::Singleton(r) => format!("{{{}}}", r.display_with_base(p)),
            RadiusSetDescriptor::OpenInterval(lo, hi) => {
                format!("({}, {})", lo.display_with_base(p), hi.display_with_base(p))
            }
            RadiusSetDescriptor::RayAbove { radius, strict } => {
                let op = if *strict { ">" } else { ">=" };
                format!("{{r {op} {}}}", radius.display_with_base(p))
            }
            RadiusSetDescriptor::Complement(r) => {
                format!("{{r != {}}}", r.display_with_base(p))
            }
            RadiusSetDescriptor::Union(parts) => {
                let rendered: Vec<String> =
                    parts.iter().map(|part| part.display_with_base(p)).collect();
                rendered.join(" ∪ ")
            }
            RadiusSetDescriptor::ConditionalPoint { radius, note } => {
                format!("{{{} if {note}}}", radius.display_with_base(p))
            }
        }
    }
}

/// Eventual behaviour of the radius orbit started at one radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitBehavior {
    /// Radii shrink to zero: the orbit converges to the fixed point.
    ConvergesToZero,
    /// The radius is fixed from the start.
    StaysAt(Radius),
    /// The orbit eventually enters (and then never leaves) this set.
    LandsIn(RadiusSetDescriptor),
    /// The orbit reaches a point-dependent critical sphere; afterwards the
    /// limit can be anything in this set, depending on the point.
    PointDependentAfterCritical(RadiusSetDescriptor),
}

fn note_critical_return() -> &'static str {
    "every image of the critical sphere happens to land back on it"
}

fn note_critical_floor() -> &'static str {
    "reached as an image of the critical sphere; such images start here and may lie anywhere above"
}

/// The set of radii fixed under the stylized map (the fixed point's own
/// radius `0` always is). Critical spheres whose images *can* land back on
/// themselves appear as [`RadiusSetDescriptor::ConditionalPoint`]s; critical
/// spheres whose image bounds forbid returning do not appear at all.
pub fn fixed_radii(
    tag: CaseTag,
    data: &CriticalData,
) -> Result<RadiusSetDescriptor, DynamicsError> {
    use RadiusSetDescriptor::*;
    let zero = Singleton(Radius::Zero);
    let d = data;
    let set = match tag {
        CaseTag::Unclassified => return Err(DynamicsError::UnclassifiedCase),
        // Contracting shapes: everything strictly above √β stays, the
        // critical sphere √β may stick (its image is ≥ √β).
        CaseTag::Phi1 | CaseTag::Phi3 | CaseTag::SPhi1 => Union(vec![
            zero,
            RayAbove {
                radius: d.sqrt_beta,
                strict: true,
            },
            ConditionalPoint {
                radius: d.sqrt_beta,
                note: note_critical_return(),
            },
        ]),
        // Neutral shapes: every sphere except the single critical one.
        CaseTag::Phi2 => Union(vec![
            zero,
            Complement(d.sqrt_alpha),
            ConditionalPoint {
                radius: d.sqrt_alpha,
                note: note_critical_return(),
            },
        ]),
        CaseTag::SPhi3 | CaseTag::Psi3 => Union(vec![
            zero,
            Complement(d.delta),
            ConditionalPoint {
                radius: d.delta,
                note: note_critical_return(),
            },
        ]),
        CaseTag::SPhi2 => {
            if sphi2_is_landing(d) {
                Union(vec![
                    zero,
                    RayAbove {
                        radius: d.delta,
                        strict: true,
                    },
                    ConditionalPoint {
                        radius: d.delta,
                        note: note_critical_return(),
                    },
                ])
            } else {
                Union(vec![
                    zero,
                    Complement(d.delta),
                    ConditionalPoint {
                        radius: d.delta,
                        note: note_critical_return(),
                    },
                ])
            }
        }
        // Expanding shapes: everything strictly above √α stays, and the
        // critical sphere √α may stick (its image is ≤ √α).
        CaseTag::Phi4 | CaseTag::Phi5 | CaseTag::Psi1 => Union(vec![
            zero,
            RayAbove {
                radius: d.sqrt_alpha,
                strict: true,
            },
            ConditionalPoint {
                radius: d.sqrt_alpha,
                note: note_critical_return(),
            },
        ]),
        CaseTag::Psi2 => Union(vec![
            zero,
            RayAbove {
                radius: d.delta,
                strict: true,
            },
            ConditionalPoint {
                radius: d.delta,
                note: note_critical_return(),
            },
        ]),
    };
    Ok(set)
}

/// Landing interval plus its conditional entry point for the expanding
/// shapes: the open interval is reached by orbits that skip the critical
/// sphere, the conditional endpoint by images of the critical sphere.
fn landing_set(lo: Radius, hi: Radius) -> RadiusSetDescriptor {
    RadiusSetDescriptor::Union(vec![
        RadiusSetDescriptor::OpenInterval(lo, hi),
        RadiusSetDescriptor::ConditionalPoint {
            radius: hi,
            note: note_critical_floor(),
        },
    ])
}

/// Eventual behaviour of the radius orbit from `r` under the stylized map.
pub fn limit_behavior(
    tag: CaseTag,
    data: &CriticalData,
    r: Radius,
) -> Result<LimitBehavior, DynamicsError> {
    use std::cmp::Ordering::*;
    use LimitBehavior::*;
    use RadiusSetDescriptor::*;
    if tag == CaseTag::Unclassified {
        return Err(DynamicsError::UnclassifiedCase);
    }
    if r.is_zero() {
        return Ok(StaysAt(Radius::Zero));
    }
    let d = data;
    let behaviour = match tag {
        CaseTag::Unclassified => unreachable!("handled above"),

        CaseTag::Phi1 | CaseTag::Phi3 | CaseTag::SPhi1 => match r.cmp(&d.sqrt_beta) {
            Less => ConvergesToZero,
            Equal => PointDependentAfterCritical(RayAbove {
                radius: d.sqrt_beta,
                strict: false,
            }),
            Greater => StaysAt(r),
        },

        CaseTag::Phi2 => {
            if r == d.sqrt_alpha {
                PointDependentAfterCritical(Union(vec![
                    Complement(d.sqrt_alpha),
                    ConditionalPoint {
                        radius: d.sqrt_alpha,
                        note: note_critical_return(),
                    },
                ]))
            } else {
                StaysAt(r)
            }
        }

        CaseTag::Phi4 => match r.cmp(&d.sqrt_alpha) {
            Greater => StaysAt(r),
            _ => LandsIn(landing_set(d.sqrt_alpha, rdiv(d.alpha, d.sqrt_beta))),
        },

        CaseTag::Phi5 => match r.cmp(&d.sqrt_alpha) {
            Greater => StaysAt(r),
            _ => LandsIn(landing_set(d.sqrt_alpha, rdiv(d.alpha, d.delta))),
        },

        CaseTag::SPhi2 => {
            if sphi2_is_landing(d) {
                match r.cmp(&d.delta) {
                    Greater => StaysAt(r),
                    // Inner radii climb onto/over the critical sphere and
                    // exit into the annulus (δ, δ³/capB).
                    _ => LandsIn(OpenInterval(d.delta, rdiv(d.delta * d.delta_sq(), d.cap_b))),
                }
            } else if r == d.delta {
                PointDependentAfterCritical(Union(vec![
                    Complement(d.delta),
                    ConditionalPoint {
                        radius: d.delta,
                        note: note_critical_return(),
                    },
                ]))
            } else {
                StaysAt(r)
            }
        }

        CaseTag::SPhi3 | CaseTag::Psi3 => {
            if r == d.delta {
                PointDependentAfterCritical(Union(vec![
                    Complement(d.delta),
                    ConditionalPoint {
                        radius: d.delta,
                        note: note_critical_return(),
                    },
                ]))
            } else {
                StaysAt(r)
            }
        }

        CaseTag::Psi1 => match r.cmp(&d.sqrt_alpha) {
            Greater => StaysAt(r),
            _ => LandsIn(landing_set(d.sqrt_alpha, rdiv(d.alpha, d.delta))),
        },

        CaseTag::Psi2 => match r.cmp(&d.delta) {
            Less => ConvergesToZero,
            Equal => PointDependentAfterCritical(Union(vec![
                Singleton(Radius::Zero),
                RayAbove {
                    radius: d.delta,
                    strict: true,
                },
                ConditionalPoint {
                    radius: d.delta,
                    note: note_critical_return(),
                },
            ])),
            Greater => StaysAt(r),
        },
    };
    Ok(behaviour)
}

// ── Radius orbits ───────────────────────────────────────────────────────────

/// Why a radius orbit stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusOrbitHalt {
    /// All requested steps were deterministic.
    Completed,
    /// The step from `radii.last()` is point-dependent; the stated bounds
    /// apply to the (unrecorded) next radius.
    PointDependent {
        /// Index of the radius whose image is point-dependent.
        at_step: usize,
        /// Sound lower bound for the next radius.
        lower: Radius,
        /// Sound upper bound (`None` = unbounded).
        upper: Option<Radius>,
    },
}

/// A deterministic prefix of the radius orbit under the stylized map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusOrbit {
    /// `radii[0] = r₀`, then each deterministic image in turn.
    pub radii: Vec<Radius>,
    /// Whether the prefix ended by exhausting the step budget or by hitting
    /// a point-dependent sphere.
    pub halt: RadiusOrbitHalt,
}

/// Iterates [`stylized_map`] from `r0`, stopping (with the bounds as a
/// marker) at the first point-dependent step.
pub fn radius_orbit(
    tag: CaseTag,
    data: &CriticalData,
    r0: Radius,
    steps: usize,
) -> Result<RadiusOrbit, DynamicsError> {
    let mut radii = vec![r0];
    for i in 0..steps {
        match stylized_map(tag, data, radii[i])? {
            RadiusStepResult::Deterministic(next) => radii.push(next),
            RadiusStepResult::PointDependent { lower, upper } => {
                return Ok(RadiusOrbit {
                    radii,
                    halt: RadiusOrbitHalt::PointDependent {
                        at_step: i,
                        lower,
                        upper,
                    },
                });
            }
        }
    }
    Ok(RadiusOrbit {
        radii,
        halt: RadiusOrbitHalt::Completed,
    })
}

/// Clarifying notes attached to every stylized-vs-general comparison report:
/// the two places where the catalogue's shapes are commonly (mis)stated and
/// the readings this crate uses. Both readings are enforced by the
/// comparison suite itself.
#[must_use]
pub fn catalogue_notes() -> [&'static str; 2] {
    [
        "SPhi3 covers the region √α ≤ √β < δ; the superficially similar region √α ≤ δ < √β \
         belongs to SPhi1/SPhi2 and is dispatched there",
        "for Phi5 the landing interval's upper endpoint α/δ can equivalently be written α/√β, \
         since δ = √β in that shape; both spellings denote the same radius",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify_map;
    use crate::map::MapParams;

    fn case(p: u64, a: i64, b: i64, c: i64, d: i64) -> (CriticalData, CaseTag) {
        classify_map(&MapParams::from_ints(p, a, b, c, d).unwrap()).unwrap()
    }

    fn pw(e: i64) -> Radius {
        Radius::int_power(e)
    }

    #[test]
    fn contracting_shape_matches_hand_tables() {
        // (0,9,−72,1)/Q₃: δ=3⁻², √α=3⁻¹, √β=1, capA=3⁻², capB=1.
        let (data, tag) = case(3, 0, 9, -72, 1);
        assert_eq!(tag, CaseTag::Phi1);
        // Inner stretch: slope α/β = 3⁻².
        assert_eq!(stylized_map(tag, &data, pw(-3)).unwrap(), det(pw(-5)));
        // Critical √α: capped by α√α/β = 3⁻³.
        assert_eq!(
            stylized_map(tag, &data, pw(-1)).unwrap(),
            pd(Radius::Zero, Some(pw(-3)))
        );
        // Critical √β: at least √β = 1, unbounded.
        assert_eq!(stylized_map(tag, &data, pw(0)).unwrap(), pd(pw(0), None));
        // Outer plateau.
        assert_eq!(stylized_map(tag, &data, pw(2)).unwrap(), det(pw(2)));
        // Middle cubic stretch needs a wider gap — (0,81,6480,1): √α=3⁻², √β=1.
        let (wide, wtag) = case(3, 0, 81, 6480, 1);
        assert_eq!(wtag, CaseTag::Phi1);
        assert_eq!(stylized_map(wtag, &wide, pw(-1)).unwrap(), det(pw(-3)));
    }

    #[test]
    fn expanding_shape_matches_hand_tables() {
        // (0,1,2160,81)/Q₃: δ=3⁻³, √β=3⁻², √α=1, capA=1, capB=3⁻⁴.
        let (data, tag) = case(3, 0, 1, 2160, 81);
        assert_eq!(tag, CaseTag::Phi4);
        // Inner stretch expands by α/β = 3⁴.
        assert_eq!(stylized_map(tag, &data, pw(-3)).unwrap(), det(pw(1)));
        // Critical √β: at least α/√β = 3², unbounded.
        assert_eq!(stylized_map(tag, &data, pw(-2)).unwrap(), pd(pw(2), None));
        // Inversion stretch: α/r.
        assert_eq!(stylized_map(tag, &data, pw(-1)).unwrap(), det(pw(1)));
        // Critical √α: capped by √α itself.
        assert_eq!(
            stylized_map(tag, &data, pw(0)).unwrap(),
            pd(Radius::Zero, Some(pw(0)))
        );
        assert_eq!(stylized_map(tag, &data, pw(1)).unwrap(), det(pw(1)));
    }

    #[test]
    fn neutral_shapes_freeze_all_but_the_critical_sphere() {
        for (tuple, critical) in [
            ((3u64, 0i64, 1i64, 3i64, 2i64), pw(0)), // Phi2 at √α
            ((3, 0, 81, -72, 9), pw(0)),             // SPhi3 at δ = 1
            ((3, 0, 9, 72, 81), pw(0)),              // Psi3 at δ = 1
        ] {
            let (p, a, b, c, d) = tuple;
            let (data, tag) = case(p, a, b, c, d);
            for e in -4..=4 {
                let r = pw(e);
                let expect = if r == critical {
                    pd(Radius::Zero, None)
                } else {
                    det(r)
                };
                assert_eq!(
                    stylized_map(tag, &data, r).unwrap(),
                    expect,
                    "{tag} at 3^{e}"
                );
            }
        }
    }

    #[test]
    fn tied_neutral_shape_splits_on_cap_b() {
        // Preserving sub-case (capB = δ²): identity off the critical sphere.
        let (pres, tag_a) = case(3, 0, 81, -216, 9);
        assert_eq!(tag_a, CaseTag::SPhi2);
        assert!(!sphi2_is_landing(&pres));
        assert_eq!(stylized_map(tag_a, &pres, pw(-3)).unwrap(), det(pw(-3)));
        assert_eq!(
            stylized_map(tag_a, &pres, pw(-1)).unwrap(),
            pd(Radius::Zero, None)
        );

        // Landing sub-case (capB = 3⁻⁷ < δ² = 3⁻²): δ = 3⁻¹.
        let (land, tag_b) = case(3, 0, 81, 6291, 2178);
        assert_eq!(tag_b, CaseTag::SPhi2);
        assert!(sphi2_is_landing(&land));
        // Deep inner radii climb at slope δ²/capB = 3⁵.
        assert_eq!(stylized_map(tag_b, &land, pw(-9)).unwrap(), det(pw(-4)));
        // The tie radius capB/δ = 3⁻⁶ is point-dependent with floor δ.
        assert_eq!(
            stylized_map(tag_b, &land, pw(-6)).unwrap(),
            pd(pw(-1), None)
        );
        // The rest of the inner annulus maps straight onto the critical sphere.
        for e in -5..=-2 {
            assert_eq!(
                stylized_map(tag_b, &land, pw(e)).unwrap(),
                det(pw(-1)),
                "3^{e}"
            );
        }
        assert_eq!(
            stylized_map(tag_b, &land, pw(-1)).unwrap(),
            pd(Radius::Zero, None)
        );
        assert_eq!(stylized_map(tag_b, &land, pw(1)).unwrap(), det(pw(1)));
    }

    #[test]
    fn attracting_tied_shape_has_linear_and_quadratic_stretches() {
        // Psi2 (0,720,27,729)/Q₃: δ=√α=3⁻¹, capA=3⁻⁶, capB=δ²=3⁻².
        let (data, tag) = case(3, 0, 720, 27, 729);
        assert_eq!(tag, CaseTag::Psi2);
        // Deep stretch: slope capA/δ² = 3⁻⁴ while capA > r·δ (r < 3⁻⁵).
        assert_eq!(stylized_map(tag, &data, pw(-6)).unwrap(), det(pw(-10)));
        // Tie at r = capA/δ = 3⁻⁵: capped by r²/δ = 3⁻⁹.
        assert_eq!(
            stylized_map(tag, &data, pw(-5)).unwrap(),
            pd(Radius::Zero, Some(pw(-9)))
        );
        // Shallow stretch: r ↦ r²/δ (quadratic contraction).
        assert_eq!(stylized_map(tag, &data, pw(-2)).unwrap(), det(pw(-3)));
        assert_eq!(
            stylized_map(tag, &data, pw(-1)).unwrap(),
            pd(Radius::Zero, None)
        );
        assert_eq!(stylized_map(tag, &data, pw(3)).unwrap(), det(pw(3)));
    }

    #[test]
    fn stylized_agrees_with_general_rule_on_cookbook_grids() {
        for (p, a, b, c, d) in [
            (3u64, 0i64, 9i64, -72i64, 1i64),
            (3, 0, 1, 3, 2),
            (3, 0, 9, -24, 1),
            (3, 0, 1, 2160, 81),
            (3, 0, 1, 720, 81),
            (3, 0, 81, -240, 1),
            (3, 0, 81, -216, 9),
            (3, 0, 81, 6291, 2178),
            (3, 0, 81, -72, 9),
            (3, 0, 1, 6552, 729),
            (3, 0, 720, 27, 729),
            (3, 0, 9, 72, 81),
            (3, 0, 9, 2160, 729),
        ] {
            let (data, tag) = case(p, a, b, c, d);
            for e in -12..=6 {
                let r = pw(e);
                let stylized = stylized_map(tag, &data, r).unwrap();
                let general = ultrametric_step(r, &data);
                assert_eq!(stylized, general, "tag {tag} r=3^{e} ({a},{b},{c},{d})");
            }
        }
    }

    #[test]
    fn fixed_radii_shapes() {
        use RadiusSetDescriptor::*;
        let (data, tag) = case(3, 0, 9, -72, 1); // Phi1, √β = 1
        let set = fixed_radii(tag, &data).unwrap();
        assert!(set.contains_unconditional(Radius::Zero));
        assert!(set.contains_unconditional(pw(1)));
        assert!(
            !set.contains_unconditional(pw(0)),
            "critical sphere only conditionally"
        );
        assert!(!set.contains_unconditional(pw(-1)));
        match set {
            Union(parts) => assert!(matches!(
                parts[2],
                ConditionalPoint { radius, .. } if radius == pw(0)
            )),
            other => panic!("expected union, got {other:?}"),
        }

        let (data, tag) = case(3, 0, 81, -72, 9); // SPhi3, δ = 1
        let set = fixed_radii(tag, &data).unwrap();
        assert!(set.contains_unconditional(pw(-5)));
        assert!(set.contains_unconditional(pw(5)));
        assert!(!set.contains_unconditional(pw(0)));
    }

    #[test]
    fn limit_behaviour_matches_shape_analysis() {
        use LimitBehavior::*;
        // Contracting: below √β go to zero, above stay.
        let (data, tag) = case(3, 0, 9, -72, 1);
        assert_eq!(limit_behavior(tag, &data, pw(-4)).unwrap(), ConvergesToZero);
        assert_eq!(limit_behavior(tag, &data, pw(2)).unwrap(), StaysAt(pw(2)));
        assert!(matches!(
            limit_behavior(tag, &data, pw(0)).unwrap(),
            PointDependentAfterCritical(_)
        ));

        // Expanding: inner radii land in (√α, α/√β) ∪ {conditional α/√β}.
        let (data, tag) = case(3, 0, 1, 2160, 81);
        match limit_behavior(tag, &data, pw(-3)).unwrap() {
            LandsIn(set) => {
                assert!(set.contains_unconditional(pw(1)));
                assert!(!set.contains_unconditional(pw(0)), "open at √α");
                assert!(
                    !set.contains_unconditional(pw(2)),
                    "endpoint is conditional"
                );
            }
            other => panic!("expected landing, got {other:?}"),
        }

        // Landing sub-case of the tied neutral shape: (δ, δ³/capB) = (3⁻¹, 3⁴).
        let (data, tag) = case(3, 0, 81, 6291, 2178);
        match limit_behavior(tag, &data, pw(-3)).unwrap() {
            LandsIn(RadiusSetDescriptor::OpenInterval(lo, hi)) => {
                assert_eq!(lo, pw(-1));
                assert_eq!(hi, pw(4));
            }
            other => panic!("expected open interval, got {other:?}"),
        }

        // Attracting tied shape: inner radii converge.
        let (data, tag) = case(3, 0, 720, 27, 729);
        assert_eq!(limit_behavior(tag, &data, pw(-2)).unwrap(), ConvergesToZero);
        assert_eq!(limit_behavior(tag, &data, pw(2)).unwrap(), StaysAt(pw(2)));
    }

    #[test]
    fn radius_orbit_stops_at_point_dependent_spheres() {
        let (data, tag) = case(3, 0, 81, 6291, 2178); // SPhi2 landing
        let orbit = radius_orbit(tag, &data, pw(-3), 10).unwrap();
        assert_eq!(orbit.radii, vec![pw(-3), pw(-1)]);
        match orbit.halt {
            RadiusOrbitHalt::PointDependent {
                at_step,
                lower,
                upper,
            } => {
                assert_eq!(at_step, 1);
                assert_eq!(lower, Radius::Zero);
                assert_eq!(upper, None);
            }
            RadiusOrbitHalt::Completed => panic!("expected point-dependent stop"),
        }
        let full = radius_orbit(tag, &data, pw(2), 5).unwrap();
        assert_eq!(full.halt, RadiusOrbitHalt::Completed);
        assert_eq!(full.radii.len(), 6);
    }

    #[test]
    fn unclassified_pattern_is_rejected_everywhere() {
        let (data, tag) = case(3, 0, 1, 1, 2);
        assert_eq!(tag, CaseTag::Unclassified);
        assert_eq!(
            stylized_map(tag, &data, pw(0)).unwrap_err(),
            DynamicsError::UnclassifiedCase
        );
        assert!(fixed_radii(tag, &data).is_err());
        assert!(limit_behavior(tag, &data, pw(1)).is_err());
    }
}
