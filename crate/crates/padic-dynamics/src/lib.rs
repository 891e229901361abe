//! Exact arithmetic for the local dynamics of degree-(3,2) rational maps
//! over the p-adic numbers.
//!
//! The crate studies maps of the form
//!
//! ```text
//!          x³ + a·x² + b·x + c
//! f(x)  =  ───────────────────          (b ≠ d)
//!            x² + a·x + d
//! ```
//!
//! near their unique finite fixed point `x₀ = c/(d−b)`, entirely in exact
//! rational arithmetic — no floating point anywhere. The key algebraic fact,
//! verified rather than assumed by this crate's test-suite, is the exact
//! factorisation
//!
//! ```text
//! f(x) − x₀ = (x − x₀) · ((x+a/2)² + α₀) / ((x+a/2)² + β₀),
//!     α₀ = b − a²/4,   β₀ = d − a²/4,
//! ```
//!
//! which turns the distance `|x − x₀|_p` into a (mostly) deterministic
//! dynamical system on radii: spheres around `x₀` map onto spheres, except
//! at finitely many *critical* radii where the image depends on the point.
//!
//! # Module map
//!
//! * [`padic`] — primes, valuations, norms, digit expansions; exact
//!   ([`padic::ExactPadic`]) and fixed-precision ([`padic::FixedPadic`])
//!   backends.
//! * [`map`] — the rational map itself: evaluation, orbits, poles,
//!   multiplier, fixed-point character.
//! * [`classify`] — the five critical norms `(α, β, δ, capA, capB)` and the
//!   case classification into eleven piecewise shapes.
//! * [`dynamics`] — the exact radius step rule, the stylized piecewise
//!   catalogue, fixed radii, limit behaviour, radius orbits.
//! * [`cookbook`] — curated parameter tuples realizing every shape, with
//!   per-tuple sphere plans for the verification suites.
//! * [`verify`] — the empirical harness: sphere sampling, orbit-vs-claim
//!   checks, Siegel-disk reports, JSON/CSV suite output.
//!
//! # Quick taste
//!
//! ```
//! use padic_dynamics::map::MapParams;
//! use padic_dynamics::classify::classify_map;
//! use padic_dynamics::padic::Radius;
//! use padic_dynamics::dynamics::{stylized_map, RadiusStepResult};
//!
//! // f(x) = (x³ + 9x − 72)/(x² + 1) over Q₃: attracting fixed point x₀ = 9.
//! let f = MapParams::from_ints(3, 0, 9, -72, 1).unwrap();
//! let (data, tag) = classify_map(&f).unwrap();
//! assert_eq!(tag.name(), "Phi1");
//!
//! // A sphere of radius 3⁻³ contracts by the multiplier norm 3⁻²:
//! let step = stylized_map(tag, &data, Radius::int_power(-3)).unwrap();
//! assert_eq!(step, RadiusStepResult::Deterministic(Radius::int_power(-5)));
//! ```
//!
//! The `examples/` directory demonstrates each capability end to end, and
//! the `padic-dynamics` binary exposes them as a small CLI.

#![warn(missing_docs)]

pub mod classify;
pub mod cookbook;
pub mod dynamics;
pub mod map;
pub mod padic;
pub mod verify;
