//! Curated parameter tuples realising every classified case shape, with
//! per-entry sampling plans for the verification suites.
//!
//! Each entry was found by searching small-height integer parameters and
//! every stated norm was checked by hand; the unit tests below re-derive all
//! of them from scratch, so the table cannot drift from the classifier.
//!
//! Exponent conventions: every exponent list in an entry is a *radius*
//! exponent `e`, meaning the sphere `|x − x₀|_p = p^e`. (The sampling layer
//! converts to the valuation `m = −e` it needs internally.)
//!
//! ```text
//! label        p  (a, b, c, d)          x₀    δ      √α     √β     shape
//! phi1         3  (0, 9, −72, 1)        9     3⁻²    3⁻¹    1      Phi1, attracting
//! phi1-wide    3  (0, 81, 6480, 1)      −81   3⁻⁴    3⁻²    1      Phi1, wide gaps
//! phi1-p5      5  (0, 25, −600, 1)      25    5⁻²    5⁻¹    1      Phi1 over ℚ₅
//! phi1-p2      2  (0, 4, −12, 1)        4     2⁻²    2⁻¹    1      Phi1 over ℚ₂
//! phi2         3  (0, 1, 3, 2)          3     3⁻¹    1      1      Phi2, neutral
//! phi3         3  (0, 9, −24, 1)        3     3⁻¹    3⁻¹    1      Phi3, tied inner
//! phi4         3  (0, 1, 2160, 81)      27    3⁻³    1      3⁻²    Phi4, repelling
//! phi5         3  (0, 1, 720, 81)       9     3⁻²    1      3⁻²    Phi5, tied denominator
//! sphi1        3  (0, 81, −240, 1)      3     3⁻¹    3⁻²    1      SPhi1, attracting
//! sphi2-rot    3  (0, 81, −216, 9)      3     3⁻¹    3⁻²    3⁻¹    SPhi2, capB = δ²
//! sphi2-land   3  (0, 81, 6291, 2178)   3     3⁻¹    3⁻²    3⁻¹    SPhi2, capB = 3⁻⁷
//! sphi3        3  (0, 81, −72, 9)       1     1      3⁻²    3⁻¹    SPhi3, neutral
//! psi1         3  (0, 1, 6552, 729)     9     3⁻²    1      3⁻³    Psi1, repelling
//! psi2         3  (0, 720, 27, 729)     3     3⁻¹    3⁻¹    3⁻³    Psi2, capA = 3⁻⁶
//! psi3         3  (0, 9, 72, 81)        1     1      3⁻¹    3⁻²    Psi3, strict
//! psi3-tie     3  (0, 9, 2160, 729)     3     3⁻¹    3⁻¹    3⁻³    Psi3 via capA = δ²
//! ```

use crate::classify::{classify_map, CaseTag, CriticalData};
use crate::map::{Character, MapParams};

/// One curated tuple together with its verified classification and the
/// sphere exponents the verification suites should exercise on it.
#[derive(Debug, Clone, Copy)]
pub struct CookbookEntry {
    /// Stable lookup key (also used in report claim ids).
    pub label: &'static str,
    /// The prime.
    pub p: u64,
    /// Numerator quadratic coefficient `a`.
    pub a: i64,
    /// Numerator linear coefficient `b`.
    pub b: i64,
    /// Numerator constant `c`.
    pub c: i64,
    /// Denominator constant `d`.
    pub d: i64,
    /// Verified case shape.
    pub tag: CaseTag,
    /// Verified fixed-point character (`|f′(x₀)|_p` vs 1).
    pub character: Character,
    /// Non-critical sphere exponents covering each deterministic stretch of
    /// the shape (orbits from here must match the stylized map exactly,
    /// resuming through any point-dependent step they run into).
    pub orbit_exponents: &'static [i64],
    /// Critical sphere exponents (point-dependent steps; orbits from here
    /// check the sound bounds rather than exact values).
    pub critical_exponents: &'static [i64],
    /// Inner sphere exponents whose orbits must exit into the shape's
    /// landing set (only the expanding shapes have any).
    pub landing_exponents: &'static [i64],
    /// Sphere exponents inside the shape's invariant range.
    pub invariant_exponents: &'static [i64],
    /// A sphere exponent from which the orbit must fall below `p^{−10}`
    /// (only the attracting shapes have one).
    pub attraction_exponent: Option<i64>,
    /// What the entry is for.
    pub notes: &'static str,
}

impl CookbookEntry {
    /// The tuple as validated map parameters.
    #[must_use]
    pub fn params(&self) -> MapParams {
        MapParams::from_ints(self.p, self.a, self.b, self.c, self.d)
            .expect("cookbook tuples are valid parameters")
    }

    /// Critical data plus tag, re-derived from the parameters.
    #[must_use]
    pub fn classified(&self) -> (CriticalData, CaseTag) {
        classify_map(&self.params()).expect("cookbook fixed points are not poles")
    }
}

/// The curated table: at least one realizing tuple per classified tag, two
/// primes besides 3, and both sub-cases of the tied neutral shape.
pub static COOKBOOK: [CookbookEntry; 16] = [
    CookbookEntry {
        label: "phi1",
        p: 3,
        a: 0,
        b: 9,
        c: -72,
        d: 1,
        tag: CaseTag::Phi1,
        character: Character::Attracting,
        orbit_exponents: &[-2, -3, 1],
        critical_exponents: &[-1, 0],
        landing_exponents: &[],
        invariant_exponents: &[1, 2, 3],
        attraction_exponent: Some(-2),
        notes: "reference attracting tuple; multiplier norm 3^-2",
    },
    CookbookEntry {
        label: "phi1-wide",
        p: 3,
        a: 0,
        b: 81,
        c: 6480,
        d: 1,
        tag: CaseTag::Phi1,
        character: Character::Attracting,
        orbit_exponents: &[-1, -3, -5],
        critical_exponents: &[-2, 0],
        landing_exponents: &[],
        invariant_exponents: &[1, 2, 3],
        attraction_exponent: Some(-3),
        notes: "gap between √α and √β wide enough for an integer-exponent cubic stretch",
    },
    CookbookEntry {
        label: "phi1-p5",
        p: 5,
        a: 0,
        b: 25,
        c: -600,
        d: 1,
        tag: CaseTag::Phi1,
        character: Character::Attracting,
        orbit_exponents: &[-2, -3, 1],
        critical_exponents: &[-1, 0],
        landing_exponents: &[],
        invariant_exponents: &[1, 2, 3],
        attraction_exponent: Some(-2),
        notes: "same shape over Q5 (the denominator has two Q5 poles on the unit sphere)",
    },
    CookbookEntry {
        label: "phi1-p2",
        p: 2,
        a: 0,
        b: 4,
        c: -12,
        d: 1,
        tag: CaseTag::Phi1,
        character: Character::Attracting,
        orbit_exponents: &[-2, -3, 1],
        critical_exponents: &[-1, 0],
        landing_exponents: &[],
        invariant_exponents: &[1, 2, 3],
        attraction_exponent: Some(-2),
        notes: "even-prime entry: |2|-weighted middle term never decides a branch here",
    },
    CookbookEntry {
        label: "phi2",
        p: 3,
        a: 0,
        b: 1,
        c: 3,
        d: 2,
        tag: CaseTag::Phi2,
        character: Character::Indifferent,
        orbit_exponents: &[-1, -2, 1],
        critical_exponents: &[0],
        landing_exponents: &[],
        invariant_exponents: &[-1, -2, 1],
        attraction_exponent: None,
        notes: "α = β neutral shape; every sphere except r = 1 is invariant",
    },
    CookbookEntry {
        label: "phi3",
        p: 3,
        a: 0,
        b: 9,
        c: -24,
        d: 1,
        tag: CaseTag::Phi3,
        character: Character::Attracting,
        orbit_exponents: &[-2, -3, 1],
        critical_exponents: &[-1, 0],
        landing_exponents: &[],
        invariant_exponents: &[1, 2, 3],
        attraction_exponent: Some(-2),
        notes: "tied numerator envelope (δ = √α) with capA = δ²; inner slope capA/β",
    },
    CookbookEntry {
        label: "phi4",
        p: 3,
        a: 0,
        b: 1,
        c: 2160,
        d: 81,
        tag: CaseTag::Phi4,
        character: Character::Repelling,
        orbit_exponents: &[-3, -5, 1],
        critical_exponents: &[-2, 0],
        landing_exponents: &[-3, -5, -7],
        invariant_exponents: &[1, 2, 3],
        attraction_exponent: None,
        notes: "expanding shape; inner orbits land in (√α, α/√β) = (1, 3^2)",
    },
    CookbookEntry {
        label: "phi5",
        p: 3,
        a: 0,
        b: 1,
        c: 720,
        d: 81,
        tag: CaseTag::Phi5,
        character: Character::Repelling,
        orbit_exponents: &[-3, -5, 1],
        critical_exponents: &[-2, 0],
        landing_exponents: &[-3, -5, -7],
        invariant_exponents: &[1, 2, 3],
        attraction_exponent: None,
        notes: "tied denominator envelope (δ = √β) with capB = δ²; lands in (1, 3^2)",
    },
    CookbookEntry {
        label: "sphi1",
        p: 3,
        a: 0,
        b: 81,
        c: -240,
        d: 1,
        tag: CaseTag::SPhi1,
        character: Character::Attracting,
        orbit_exponents: &[-2, -3, 1],
        critical_exponents: &[-1, 0],
        landing_exponents: &[],
        invariant_exponents: &[1, 2, 3],
        attraction_exponent: Some(-2),
        notes: "δ strictly between √α and √β; inner slope δ²/β",
    },
    CookbookEntry {
        label: "sphi2-rot",
        p: 3,
        a: 0,
        b: 81,
        c: -216,
        d: 9,
        tag: CaseTag::SPhi2,
        character: Character::Indifferent,
        orbit_exponents: &[-2, -3, 1],
        critical_exponents: &[-1],
        landing_exponents: &[],
        invariant_exponents: &[-2, -3, 1],
        attraction_exponent: None,
        notes: "sphere-preserving sub-case: capB = δ², every sphere except r = δ invariant",
    },
    CookbookEntry {
        label: "sphi2-land",
        p: 3,
        a: 0,
        b: 81,
        c: 6291,
        d: 2178,
        tag: CaseTag::SPhi2,
        character: Character::Repelling,
        orbit_exponents: &[-2, -9, 1],
        critical_exponents: &[-1, -6],
        landing_exponents: &[-1, -2, -3],
        invariant_exponents: &[0, 1, 2],
        attraction_exponent: None,
        notes: "outward-landing sub-case: capB = 3^-7 < δ². One pole sits on the capB/δ tie \
                sphere r = 3^-6, the other on the critical sphere r = δ itself, so exits \
                from S_δ are unbounded above. Inner spheres map into the contracting sector \
                of S_δ (unit part ≡ -1 mod 3 by the leading terms), so orbits from r < δ \
                recur forever and only critical-sphere starts actually land",
    },
    CookbookEntry {
        label: "sphi3",
        p: 3,
        a: 0,
        b: 81,
        c: -72,
        d: 9,
        tag: CaseTag::SPhi3,
        character: Character::Indifferent,
        orbit_exponents: &[-1, -2, 1],
        critical_exponents: &[0],
        landing_exponents: &[],
        invariant_exponents: &[-1, -2, 1],
        attraction_exponent: None,
        notes: "both shifts small against δ; every sphere except r = δ = 1 invariant",
    },
    CookbookEntry {
        label: "psi1",
        p: 3,
        a: 0,
        b: 1,
        c: 6552,
        d: 729,
        tag: CaseTag::Psi1,
        character: Character::Repelling,
        orbit_exponents: &[-3, -5, 1],
        critical_exponents: &[-2, 0],
        landing_exponents: &[-3, -5, -7],
        invariant_exponents: &[1, 2, 3],
        attraction_exponent: None,
        notes: "expanding shape with δ between √β and √α; lands in (1, α/δ) = (1, 3^2)",
    },
    CookbookEntry {
        label: "psi2",
        p: 3,
        a: 0,
        b: 720,
        c: 27,
        d: 729,
        tag: CaseTag::Psi2,
        character: Character::Attracting,
        orbit_exponents: &[-2, -6, 1],
        critical_exponents: &[-1, -5],
        landing_exponents: &[],
        invariant_exponents: &[0, 1, 2],
        attraction_exponent: Some(-6),
        notes: "tied numerator with capA = 3^-6 < δ²: quadratic stretch r²/δ near δ, \
                linear slope capA/δ² deeper in; tie sphere at r = 3^-5",
    },
    CookbookEntry {
        label: "psi3",
        p: 3,
        a: 0,
        b: 9,
        c: 72,
        d: 81,
        tag: CaseTag::Psi3,
        character: Character::Indifferent,
        orbit_exponents: &[-1, -2, 1],
        critical_exponents: &[0],
        landing_exponents: &[],
        invariant_exponents: &[-1, -2, 1],
        attraction_exponent: None,
        notes: "strict pattern √β < √α < δ; every sphere except r = δ = 1 invariant",
    },
    CookbookEntry {
        label: "psi3-tie",
        p: 3,
        a: 0,
        b: 9,
        c: 2160,
        d: 729,
        tag: CaseTag::Psi3,
        character: Character::Indifferent,
        orbit_exponents: &[-2, -3, 1],
        critical_exponents: &[-1],
        landing_exponents: &[],
        invariant_exponents: &[-2, -3, 1],
        attraction_exponent: None,
        notes: "boundary pattern √β < δ = √α resolved to the neutral shape by capA = δ²",
    },
];

/// The one pattern outside the catalogue: `δ = √α = √β = 1` for
/// `(a,b,c,d) = (0,1,1,2)` over ℚ₃.
pub const UNCLASSIFIED_EXAMPLE: (u64, i64, i64, i64, i64) = (3, 0, 1, 1, 2);

/// A tuple whose orbit from `x = 2` reaches the pole `x = 1` in one step
/// (for demonstrating singularity handling; over ℚ₃).
pub const SINGULAR_ORBIT_EXAMPLE: (u64, i64, i64, i64, i64) = (3, 0, 0, -5, -1);

/// Looks an entry up by label.
#[must_use]
pub fn find(label: &str) -> Option<&'static CookbookEntry> {
    COOKBOOK.iter().find(|e| e.label == label)
}

/// All entries realising a tag.
pub fn entries_for(tag: CaseTag) -> impl Iterator<Item = &'static CookbookEntry> {
    COOKBOOK.iter().filter(move |e| e.tag == tag)
}
