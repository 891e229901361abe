//! The (3,2)-rational map, its fixed point, and exact orbit computation.
//!
//! The object of study is the degree-(3,2) rational function
//!
//! ```text
//!          x³ + a·x² + b·x + c
//! f(x)  =  ───────────────────── ,        b ≠ d,
//!            x² + a·x + d
//! ```
//!
//! over ℚ_p. The condition `b ≠ d` makes the fixed-point equation
//! `f(x) = x ⟺ (d−b)·x = c` linear, so `f` has the *unique* fixed point
//!
//! ```text
//! x₀ = c / (d − b).
//! ```
//!
//! Substituting `c = x₀(d−b)` into the numerator factors it exactly:
//!
//! ```text
//! f(x) − x₀ = (x − x₀) · (x² + a·x + b) / (x² + a·x + d),
//! ```
//!
//! and completing the square in `t = x + a/2` puts both quadratics into the
//! normal form `t² + const`:
//!
//! ```text
//! x² + a·x + b = t² + α₀,   α₀ = b − a²/4,
//! x² + a·x + d = t² + β₀,   β₀ = d − a²/4.
//! ```
//!
//! These two constants drive everything in [`crate::classify`] and
//! [`crate::dynamics`]: taking norms of the factorisation gives the exact
//! local step rule for the distance to the fixed point, and
//! `f′(x₀) = (x₀²+a·x₀+b)/(x₀²+a·x₀+d)` follows from the same identity.
//!
//! Points where the denominator vanishes (at most two, the roots of
//! `x² + a·x + d`) are poles; orbits that reach one stop with an explicit
//! marker, since such points belong to the map's forbidden set together with
//! all of their preimages.

use crate::padic::{
    check_prime, int_valuation, is_square, rational_repr, rational_sqrt, ExactPadic, FixedPadic,
    PadicError, Radius,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from map construction and evaluation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    /// `b = d` collapses the fixed-point equation; the family is defined
    /// away from it.
    #[error("parameters require b ≠ d (unique fixed point x₀ = c/(d−b))")]
    EqualBD,
    /// The fixed point itself is a pole of the map.
    #[error("fixed point x₀ = {0} is a pole (x₀² + a·x₀ + d = 0)")]
    SingularFixedPoint(String),
    /// The evaluated point is a pole.
    #[error("input is a pole of the map (x² + a·x + d = 0)")]
    SingularInput,
    /// Underlying arithmetic error (prime mismatch, bad precision, …).
    #[error(transparent)]
    Padic(#[from] PadicError),
}

/// Parameters `(a, b, c, d)` of the map over a fixed prime, validated so the
/// unique fixed point exists (`b ≠ d`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapParams {
    p: u64,
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

/// How an orbit computation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitTermination {
    /// All requested steps were computed.
    Completed,
    /// `points[step]` is a pole; `f` cannot be applied to it.
    HitSingularity(usize),
    /// Fixed-precision arithmetic lost every known digit at `step`.
    PrecisionLoss(usize),
    /// The exact representation outgrew the bit budget at `step`.
    BudgetExceeded(usize),
}

/// An orbit `x, f(x), f²(x), …` with the distance of every recorded point
/// from the fixed point.
#[derive(Debug, Clone)]
pub struct OrbitRecordOf<T> {
    /// Visited points, starting with the initial one.
    pub points: Vec<T>,
    /// `radii[i] = |points[i] − x₀|_p`.
    pub radii: Vec<Radius>,
    /// Why iteration stopped.
    pub termination: OrbitTermination,
}

/// Exact-arithmetic orbit record.
pub type OrbitRecord = OrbitRecordOf<ExactPadic>;
/// Fixed-precision orbit record.
pub type FixedOrbitRecord = OrbitRecordOf<FixedPadic>;

/// Distance-only orbit record: the `radii` column of an [`OrbitRecordOf`]
/// without the points themselves. Produced by [`MapParams::orbit_radii`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusTrace {
    /// `radii[i] = |fⁱ(x) − x₀|_p`.
    pub radii: Vec<Radius>,
    /// Why iteration stopped.
    pub termination: OrbitTermination,
}

/// Multiplier classification of the fixed point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Character {
    /// `|f′(x₀)|_p < 1`: nearby spheres contract.
    Attracting,
    /// `|f′(x₀)|_p = 1`: nearby spheres are preserved.
    Indifferent,
    /// `|f′(x₀)|_p > 1`: nearby spheres expand.
    Repelling,
}

/// The fixed point's multiplier norm and the local character it implies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedPointCharacter {
    /// `|f′(x₀)|_p`.
    pub lambda_norm: Radius,
    /// Attracting / indifferent / repelling.
    pub character: Character,
}

/// Location of the map's poles (roots of `x² + a·x + d`) relative to ℚ_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularPoints {
    /// Two distinct rational poles.
    TwoRational(BigRational, BigRational),
    /// One rational double pole (`a² = 4d`).
    DoubleRational(BigRational),
    /// The discriminant is a nonzero square in ℚ_p but not in ℚ: the poles
    /// exist in ℚ_p yet are irrational, so no exact rational orbit can hit
    /// them.
    IrrationalInQp,
    /// The discriminant is not a square in ℚ_p: no poles in ℚ_p at all.
    NoneInQp,
}

impl MapParams {
    /// Validates the prime and `b ≠ d`.
    pub fn new(
        p: u64,
        a: BigRational,
        b: BigRational,
        c: BigRational,
        d: BigRational,
    ) -> Result<Self, MapError> {
        check_prime(p)?;
        if b == d {
            return Err(MapError::EqualBD);
        }
        Ok(MapParams { p, a, b, c, d })
    }

    /// Convenience constructor from integers.
    pub fn from_ints(p: u64, a: i64, b: i64, c: i64, d: i64) -> Result<Self, MapError> {
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        Self::new(p, r(a), r(b), r(c), r(d))
    }

    /// The prime.
    #[must_use]
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Coefficient accessors.
    #[must_use]
    pub fn a(&self) -> &BigRational {
        &self.a
    }
    /// See [`MapParams::a`].
    #[must_use]
    pub fn b(&self) -> &BigRational {
        &self.b
    }
    /// See [`MapParams::a`].
    #[must_use]
    pub fn c(&self) -> &BigRational {
        &self.c
    }
    /// See [`MapParams::a`].
    #[must_use]
    pub fn d(&self) -> &BigRational {
        &self.d
    }

    /// The unique fixed point `x₀ = c/(d−b)`.
    #[must_use]
    pub fn fixed_point(&self) -> ExactPadic {
        let x0 = &self.c / (&self.d - &self.b);
        ExactPadic::new(self.p, x0).expect("prime validated at construction")
    }

    /// Constant term of the numerator quadratic in the shifted coordinate:
    /// `x² + a·x + b = (x + a/2)² + α₀` with `α₀ = b − a²/4`.
    #[must_use]
    pub fn alpha0(&self) -> ExactPadic {
        let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
        let v = &self.b - &self.a * &self.a * quarter;
        ExactPadic::new(self.p, v).expect("prime validated at construction")
    }

    /// Constant term of the denominator quadratic in the shifted coordinate:
    /// `x² + a·x + d = (x + a/2)² + β₀` with `β₀ = d − a²/4`.
    #[must_use]
    pub fn beta0(&self) -> ExactPadic {
        let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
        let v = &self.d - &self.a * &self.a * quarter;
        ExactPadic::new(self.p, v).expect("prime validated at construction")
    }

    /// The shifted fixed point `x₀ + a/2` (center of the completed square).
    #[must_use]
    pub fn shifted_fixed_point(&self) -> ExactPadic {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let v = self.fixed_point().value() + &self.a * half;
        ExactPadic::new(self.p, v).expect("prime validated at construction")
    }

    /// Numerator polynomial `x³ + a·x² + b·x + c` (Horner form).
    fn numer_at(&self, x: &BigRational) -> BigRational {
        ((x + &self.a) * x + &self.b) * x + &self.c
    }

    /// Denominator polynomial `x² + a·x + d` (Horner form).
    fn denom_at(&self, x: &BigRational) -> BigRational {
        (x + &self.a) * x + &self.d
    }

    /// True when `x` is a pole.
    #[must_use]
    pub fn is_singular(&self, x: &BigRational) -> bool {
        self.denom_at(x).is_zero()
    }

    /// Exact evaluation `f(x)`; rejects poles and mismatched primes.
    pub fn eval(&self, x: &ExactPadic) -> Result<ExactPadic, MapError> {
        if x.prime() != self.p {
            return Err(MapError::Padic(PadicError::PrimeMismatch(
                self.p,
                x.prime(),
            )));
        }
        let q = self.denom_at(x.value());
        if q.is_zero() {
            return Err(MapError::SingularInput);
        }
        let v = self.numer_at(x.value()) / q;
        Ok(ExactPadic::new(self.p, v).expect("prime validated at construction"))
    }

    /// Poles of the map relative to ℚ_p, solving `x² + a·x + d = 0` exactly.
    #[must_use]
    pub fn singular_points(&self) -> SingularPoints {
        let four = BigRational::from_integer(BigInt::from(4));
        let two = BigRational::from_integer(BigInt::from(2));
        let disc = &self.a * &self.a - four * &self.d;
        if disc.is_zero() {
            return SingularPoints::DoubleRational(-&self.a / two);
        }
        if let Some(root) = rational_sqrt(&disc) {
            let x1 = (-&self.a + &root) / &two;
            let x2 = (-&self.a - &root) / &two;
            return SingularPoints::TwoRational(x1, x2);
        }
        let disc_p = ExactPadic::new(self.p, disc).expect("prime validated at construction");
        if is_square(&disc_p) {
            SingularPoints::IrrationalInQp
        } else {
            SingularPoints::NoneInQp
        }
    }

    /// The derivative at the fixed point, computed symbolically with the
    /// quotient rule
    ///
    /// ```text
    /// f′ = [(3x²+2a·x+b)(x²+a·x+d) − (x³+a·x²+b·x+c)(2x+a)] / (x²+a·x+d)²
    /// ```
    ///
    /// evaluated at `x₀`. Errors when the fixed point is a pole.
    pub fn multiplier(&self) -> Result<ExactPadic, MapError> {
        let x0 = self.fixed_point();
        let x = x0.value();
        let q = self.denom_at(x);
        if q.is_zero() {
            return Err(MapError::SingularFixedPoint(rational_repr(x)));
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let three = BigRational::from_integer(BigInt::from(3));
        let p_prime = (&three * x + &two * &self.a) * x + &self.b;
        let q_prime = &two * x + &self.a;
        let num = &p_prime * &q - self.numer_at(x) * q_prime;
        let lambda = num / (&q * &q);
        Ok(ExactPadic::new(self.p, lambda).expect("prime validated at construction"))
    }

    /// Multiplier norm and local character of the fixed point.
    pub fn fixed_point_character(&self) -> Result<FixedPointCharacter, MapError> {
        let lambda_norm = self.multiplier()?.norm();
        let character = match lambda_norm.cmp(&Radius::one()) {
            std::cmp::Ordering::Less => Character::Attracting,
            std::cmp::Ordering::Equal => Character::Indifferent,
            std::cmp::Ordering::Greater => Character::Repelling,
        };
        Ok(FixedPointCharacter {
            lambda_norm,
            character,
        })
    }

    /// Exact orbit of `x` for up to `steps` applications of `f`.
    ///
    /// Numerator/denominator bit sizes roughly triple per step; once a point
    /// exceeds `budget_bits` the orbit stops with
    /// [`OrbitTermination::BudgetExceeded`] instead of grinding on.
    /// Reaching a pole stops with [`OrbitTermination::HitSingularity`].
    pub fn orbit(
        &self,
        x: &ExactPadic,
        steps: usize,
        budget_bits: u64,
    ) -> Result<OrbitRecord, MapError> {
        if x.prime() != self.p {
            return Err(MapError::Padic(PadicError::PrimeMismatch(
                self.p,
                x.prime(),
            )));
        }
        let x0 = self.fixed_point();
        let mut points = vec![x.clone()];
        let mut radii = vec![x.sub(&x0)?.norm()];
        let mut termination = OrbitTermination::Completed;
        for step in 0..steps {
            let cur = &points[step];
            if self.is_singular(cur.value()) {
                termination = OrbitTermination::HitSingularity(step);
                break;
            }
            if rational_bits(cur.value()) > budget_bits {
                termination = OrbitTermination::BudgetExceeded(step);
                break;
            }
            let next = self.eval(cur)?;
            radii.push(next.sub(&x0)?.norm());
            points.push(next);
        }
        Ok(OrbitRecord {
            points,
            radii,
            termination,
        })
    }

    /// Fixed-precision orbit: same contract as [`MapParams::orbit`], but all
    /// arithmetic runs on truncated digit expansions, so each step costs the
    /// same regardless of how large the exact representation would be.
    ///
    /// Catastrophic digit cancellation (either inside an evaluation or when
    /// measuring the distance to the fixed point) stops the orbit with
    /// [`OrbitTermination::PrecisionLoss`].
    pub fn orbit_fixed(
        &self,
        x: &ExactPadic,
        steps: usize,
        precision: usize,
    ) -> Result<FixedOrbitRecord, MapError> {
        if x.prime() != self.p {
            return Err(MapError::Padic(PadicError::PrimeMismatch(
                self.p,
                x.prime(),
            )));
        }
        let lift = |v: &BigRational| -> ExactPadic {
            ExactPadic::new(self.p, v.clone()).expect("prime validated at construction")
        };
        let fx0 = FixedPadic::from_exact(&self.fixed_point(), precision)?;
        let fa = FixedPadic::from_exact(&lift(&self.a), precision)?;
        let fb = FixedPadic::from_exact(&lift(&self.b), precision)?;
        let fc = FixedPadic::from_exact(&lift(&self.c), precision)?;
        let fd = FixedPadic::from_exact(&lift(&self.d), precision)?;

        let mut points = vec![FixedPadic::from_exact(x, precision)?];
        let mut radii = Vec::new();
        let mut termination = OrbitTermination::Completed;
        match points[0].sub(&fx0) {
            Ok(diff) => radii.push(diff.norm()),
            Err(PadicError::InsufficientPrecision) => {
                return Ok(FixedOrbitRecord {
                    points,
                    radii,
                    termination: OrbitTermination::PrecisionLoss(0),
                })
            }
            Err(e) => return Err(e.into()),
        }
        for step in 0..steps {
            let cur = points[step].clone();
            let next = (|| -> Result<FixedPadic, PadicError> {
                // Horner evaluation of both polynomials.
                let num = cur.add(&fa)?.mul(&cur)?.add(&fb)?.mul(&cur)?.add(&fc)?;
                let den = cur.add(&fa)?.mul(&cur)?.add(&fd)?;
                if den.is_zero() {
                    // Exact-zero denominator can only appear for exact-zero
                    // inputs; treated as a pole by the caller via div error.
                    return Err(PadicError::DivisionByZero);
                }
                num.div(&den)
            })();
            match next {
                Ok(next) => match next.sub(&fx0) {
                    Ok(diff) => {
                        radii.push(diff.norm());
                        points.push(next);
                    }
                    Err(PadicError::InsufficientPrecision) => {
                        points.push(next);
                        termination = OrbitTermination::PrecisionLoss(step + 1);
                        break;
                    }
                    Err(e) => return Err(e.into()),
                },
                Err(PadicError::InsufficientPrecision) => {
                    termination = OrbitTermination::PrecisionLoss(step + 1);
                    break;
                }
                Err(PadicError::DivisionByZero) => {
                    termination = OrbitTermination::HitSingularity(step);
                    break;
                }
                Err(e) => return Err(e.into()),
            }
        }
        Ok(FixedOrbitRecord {
            points,
            radii,
            termination,
        })
    }

    /// Incremental distance-only orbit walker starting at `x`.
    ///
    /// See [`RadiusWalker`] for the arithmetic; use this when a caller needs
    /// to inspect radii step by step (early stopping, adaptive budgets).
    /// For a fire-and-forget trace use [`MapParams::orbit_radii`].
    pub fn radius_walker(&self, x: &ExactPadic) -> Result<RadiusWalker, MapError> {
        if x.prime() != self.p {
            return Err(MapError::Padic(PadicError::PrimeMismatch(
                self.p,
                x.prime(),
            )));
        }
        // Clear coefficient denominators once: M = lcm of the four reduced
        // denominators, so M, M·a, M·b, M·c, M·d are all integers.
        let m = self
            .a
            .denom()
            .lcm(self.b.denom())
            .lcm(self.c.denom())
            .lcm(self.d.denom());
        let scale = BigRational::from_integer(m.clone());
        let lift = |coeff: &BigRational| (coeff * &scale).to_integer();
        let x0 = self.fixed_point();
        let x0_den_val = int_valuation(x0.value().denom(), self.p);
        Ok(RadiusWalker {
            p: self.p,
            m,
            ma: lift(&self.a),
            mb: lift(&self.b),
            mc: lift(&self.c),
            md: lift(&self.d),
            x0_num: x0.value().numer().clone(),
            x0_den: x0.value().denom().clone(),
            x0_den_val,
            num: x.value().numer().clone(),
            den: x.value().denom().clone(),
        })
    }

    /// Distances `|fⁱ(x) − x₀|_p` for `i = 0..=steps`, skipping the points.
    ///
    /// Same stopping contract as [`MapParams::orbit`] (poles halt with
    /// [`OrbitTermination::HitSingularity`], oversized representations with
    /// [`OrbitTermination::BudgetExceeded`]), but the iteration never reduces
    /// a fraction, so each step costs a few multiplications instead of a
    /// cascade of gcds. Radii are nevertheless *exact*: see [`RadiusWalker`].
    pub fn orbit_radii(
        &self,
        x: &ExactPadic,
        steps: usize,
        budget_bits: u64,
    ) -> Result<RadiusTrace, MapError> {
        let mut walker = self.radius_walker(x)?;
        let mut radii = vec![walker.current_radius()];
        let mut termination = OrbitTermination::Completed;
        for step in 0..steps {
            if walker.at_pole() {
                termination = OrbitTermination::HitSingularity(step);
                break;
            }
            if walker.bits() > budget_bits {
                termination = OrbitTermination::BudgetExceeded(step);
                break;
            }
            walker.step().expect("pole ruled out above");
            radii.push(walker.current_radius());
        }
        Ok(RadiusTrace { radii, termination })
    }
}

/// Iterates `f` on an *unreduced* numerator/denominator pair and reads off
/// `|fⁿ(x) − x₀|_p` by valuation bookkeeping alone.
///
/// [`MapParams::orbit`] keeps every iterate in lowest terms, and each
/// reduction is a big-integer gcd — quadratic in the bit size, which itself
/// triples per step. Distances never need the reduced value: a p-adic norm
/// only reads valuations, and for any integer pair `(n, d)` with `d ≠ 0`
///
/// ```text
/// v_p(n/d) = v_p(n) − v_p(d)
/// ```
///
/// holds whether or not the pair shares factors. Clearing the coefficient
/// denominators with `M = lcm(den a, den b, den c, den d)` homogenises the
/// map into pure integer arithmetic:
///
/// ```text
/// (n, d)  ↦  ( M·n³ + A·n²·d + B·n·d² + C·d³ ,  d·(M·n² + A·n·d + D·d²) )
/// ```
///
/// with `A = M·a, B = M·b, C = M·c, D = M·d`. The parenthesised factor of
/// the image denominator vanishes exactly at the poles of `f`, and with the
/// fixed point written in lowest terms as `x₀ = P/Q`,
///
/// ```text
/// |n/d − x₀|_p = p^( v_p(d) + v_p(Q) − v_p(n·Q − P·d) ).
/// ```
///
/// Every step is a handful of big-integer multiplications plus two valuation
/// scans — no gcd anywhere — so long exact orbits become cheap enough to
/// sample in bulk. The trade-off: points are not available in reduced form,
/// only their distances to `x₀`.
#[derive(Debug, Clone)]
pub struct RadiusWalker {
    p: u64,
    /// Homogenised integer coefficients `M, M·a, M·b, M·c, M·d`.
    m: BigInt,
    ma: BigInt,
    mb: BigInt,
    mc: BigInt,
    md: BigInt,
    /// Fixed point `P/Q` in lowest terms, with `v_p(Q)` cached.
    x0_num: BigInt,
    x0_den: BigInt,
    x0_den_val: i64,
    /// Current iterate as an unreduced pair `num/den`, `den ≠ 0`.
    num: BigInt,
    den: BigInt,
}

impl RadiusWalker {
    /// `|current − x₀|_p`, read from valuations of the unreduced pair.
    #[must_use]
    pub fn current_radius(&self) -> Radius {
        let diff = &self.num * &self.x0_den - &self.x0_num * &self.den;
        if diff.is_zero() {
            return Radius::Zero;
        }
        // |diff / (den·Q)| = p^{−v(diff) + v(den) + v(Q)}.
        let e = int_valuation(&self.den, self.p) + self.x0_den_val - int_valuation(&diff, self.p);
        Radius::int_power(e)
    }

    /// True when the current point is a pole of `f`, i.e. the next
    /// denominator would vanish.
    #[must_use]
    pub fn at_pole(&self) -> bool {
        let head = (&self.m * &self.num + &self.ma * &self.den) * &self.num;
        (head + &self.md * (&self.den * &self.den)).is_zero()
    }

    /// Bit size of the current unreduced pair; compare against a budget to
    /// bound runtime (sizes triple per step, reduced or not).
    #[must_use]
    pub fn bits(&self) -> u64 {
        self.num.bits() + self.den.bits()
    }

    /// Advances one application of `f`; rejects poles (check
    /// [`RadiusWalker::at_pole`] first to stop gracefully).
    pub fn step(&mut self) -> Result<(), MapError> {
        let n = &self.num;
        let d = &self.den;
        let d2 = d * d;
        // Shared head M·n² + A·n·d of both image polynomials.
        let head = (&self.m * n + &self.ma * d) * n;
        let den_poly = &head + &self.md * &d2;
        if den_poly.is_zero() {
            return Err(MapError::SingularInput);
        }
        let num_next = (head + &self.mb * &d2) * n + &self.mc * (&d2 * d);
        let den_next = d * den_poly;
        self.num = num_next;
        self.den = den_next;
        Ok(())
    }
}

/// Total bit size of a rational's reduced numerator and denominator.
#[must_use]
pub fn rational_bits(x: &BigRational) -> u64 {
    x.numer().abs().to_biguint().map_or(0, |n| n.bits())
        + x.denom().abs().to_biguint().map_or(0, |n| n.bits())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Radius;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn params(p: u64, a: i64, b: i64, c: i64, d: i64) -> MapParams {
        MapParams::from_ints(p, a, b, c, d).unwrap()
    }

    fn point(p: u64, n: i64, d: i64) -> ExactPadic {
        ExactPadic::new(p, rat(n, d)).unwrap()
    }

    #[test]
    fn fixed_point_is_c_over_d_minus_b() {
        assert_eq!(params(2, 0, 0, 2, 1).fixed_point().value(), &rat(2, 1));
        assert_eq!(params(5, 1, 1, 6, 3).fixed_point().value(), &rat(3, 1));
    }

    #[test]
    fn equal_b_d_is_rejected() {
        assert_eq!(
            MapParams::from_ints(3, 0, 1, 5, 1).unwrap_err(),
            MapError::EqualBD
        );
    }

    #[test]
    fn eval_matches_hand_computation() {
        // f(1) = (1+0+0+0)/(1+0+1) = 1/2 for (a,b,c,d) = (0,0,0,1).
        let f = params(2, 0, 0, 0, 1);
        assert_eq!(f.eval(&point(2, 1, 1)).unwrap().value(), &rat(1, 2));
    }

    #[test]
    fn eval_rejects_poles() {
        let f = params(3, 0, 0, -5, -1); // poles at ±1
        assert_eq!(
            f.eval(&point(3, 1, 1)).unwrap_err(),
            MapError::SingularInput
        );
        assert!(f.is_singular(&rat(-1, 1)));
        assert!(!f.is_singular(&rat(2, 1)));
    }

    #[test]
    fn factorisation_identity_holds_exactly() {
        // f(x) − x₀ = (x−x₀)·((x+a/2)² + α₀)/((x+a/2)² + β₀), checked as
        // exact rational arithmetic on assorted tuples and points.
        let tuples = [
            (3u64, 0, 9, -72, 1),
            (3, 2, 5, 7, 11),
            (5, -3, 4, 9, 2),
            (2, 1, 3, -8, 6),
        ];
        let xs = [rat(1, 1), rat(7, 3), rat(-5, 2), rat(10, 1), rat(-1, 6)];
        for (p, a, b, c, d) in tuples {
            let f = params(p, a, b, c, d);
            let x0 = f.fixed_point().value().clone();
            let alpha0 = f.alpha0().value().clone();
            let beta0 = f.beta0().value().clone();
            let half_a = rat(a, 2);
            for x in &xs {
                if f.is_singular(x) {
                    continue;
                }
                let t = x + &half_a;
                let lhs = f.eval(&ExactPadic::new(p, x.clone()).unwrap()).unwrap();
                let lhs = lhs.value() - &x0;
                let rhs = (x - &x0) * (&t * &t + &alpha0) / (&t * &t + &beta0);
                assert_eq!(lhs, rhs, "identity failed at p={p} x={x}");
            }
        }
    }

    #[test]
    fn singular_point_layouts() {
        // x² + 1 over Q_7: −4 is not a residue mod 7 → no poles in Q_7.
        assert_eq!(
            params(7, 0, 0, 1, 1).singular_points(),
            SingularPoints::NoneInQp
        );
        // x² − 1: rational poles ±1.
        assert_eq!(
            params(7, 0, 0, 1, -1).singular_points(),
            SingularPoints::TwoRational(rat(1, 1), rat(-1, 1))
        );
        // (x+1)²: double pole at −1.
        assert_eq!(
            params(7, 2, 0, 1, 1).singular_points(),
            SingularPoints::DoubleRational(rat(-1, 1))
        );
        // disc = 68 = 4·17: a square in Q_2 (17 ≡ 1 mod 8) but not in Q.
        assert_eq!(
            params(2, 0, 0, 1, -17).singular_points(),
            SingularPoints::IrrationalInQp
        );
    }

    #[test]
    fn multiplier_quotient_rule_and_local_slope_agree() {
        // For (0,0,2,1): λ = f′(2) = 4/5, |λ|₂ = 2⁻², attracting. The
        // factorisation gives the independent oracle λ = g(x₀)/Q(x₀).
        let f = params(2, 0, 0, 2, 1);
        let lambda = f.multiplier().unwrap();
        assert_eq!(lambda.value(), &rat(4, 5));
        let ch = f.fixed_point_character().unwrap();
        assert_eq!(ch.lambda_norm, Radius::int_power(-2));
        assert_eq!(ch.character, Character::Attracting);

        // Oracle on a spread of tuples: λ = (x₀²+a·x₀+b)/(x₀²+a·x₀+d).
        for (p, a, b, c, d) in [(3u64, 0, 9, -72, 1), (5, -3, 4, 9, 2), (7, 2, 5, 7, 11)] {
            let f = params(p, a, b, c, d);
            let x0 = f.fixed_point().value().clone();
            let g = (&x0 + rat(a, 1)) * &x0 + rat(b, 1);
            let q = (&x0 + rat(a, 1)) * &x0 + rat(d, 1);
            assert_eq!(f.multiplier().unwrap().value(), &(g / q), "p={p}");
        }
    }

    #[test]
    fn orbit_contracts_at_the_multiplier_rate_near_the_fixed_point() {
        // (0,0,2,1) over Q_2: |λ| = 1/4; starting at distance 2⁻² every step
        // multiplies the distance by exactly 2⁻².
        let f = params(2, 0, 0, 2, 1);
        let x = point(2, 6, 1); // |6−2|₂ = 2⁻²
        let orbit = f.orbit(&x, 6, 1 << 20).unwrap();
        assert_eq!(orbit.termination, OrbitTermination::Completed);
        for (i, r) in orbit.radii.iter().enumerate() {
            assert_eq!(*r, Radius::int_power(-2 - 2 * i as i64), "step {i}");
        }
    }

    #[test]
    fn orbit_stops_at_singularities_with_the_step_index() {
        // (0,0,−5,−1): f(2) = 3/3 = 1, and 1 is a pole.
        let f = params(3, 0, 0, -5, -1);
        let orbit = f.orbit(&point(3, 2, 1), 5, 1 << 20).unwrap();
        assert_eq!(orbit.termination, OrbitTermination::HitSingularity(1));
        assert_eq!(orbit.points.len(), 2);
        assert_eq!(orbit.points[1].value(), &rat(1, 1));
        // Radii: |2−5|₃ = 3⁻¹, |1−5|₃ = 1.
        assert_eq!(
            orbit.radii,
            vec![Radius::int_power(-1), Radius::int_power(0)]
        );
        // Starting on the pole reports step 0.
        let at_pole = f.orbit(&point(3, 1, 1), 3, 1 << 20).unwrap();
        assert_eq!(at_pole.termination, OrbitTermination::HitSingularity(0));
    }

    #[test]
    fn orbit_respects_bit_budget() {
        let f = params(3, 0, 9, -72, 1);
        let x = point(3, 1000000007, 999999937);
        let orbit = f.orbit(&x, 50, 256).unwrap();
        match orbit.termination {
            OrbitTermination::BudgetExceeded(step) => {
                assert!(step < 50);
                assert!(rational_bits(orbit.points[step].value()) > 256);
            }
            t => panic!("expected budget stop, got {t:?}"),
        }
    }

    #[test]
    fn radius_trace_agrees_with_the_exact_orbit() {
        // The gcd-free walker must reproduce the reduced-arithmetic radii
        // bit for bit, including fractional coefficients (which exercise the
        // common-denominator clearing), starts whose denominators carry
        // powers of p, and the fixed point itself (all-zero trace).
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let fractional = MapParams::new(5, half, rat(1, 1), rat(6, 1), rat(3, 1)).unwrap();
        let maps = [
            params(3, 0, 9, -72, 1),
            params(2, 0, 0, 2, 1),
            params(5, -3, 4, 9, 2),
            fractional,
        ];
        let xs = [
            rat(1, 1),
            rat(7, 3),
            rat(-5, 2),
            rat(10, 1),
            rat(-1, 6),
            rat(4, 75),
        ];
        for f in &maps {
            let mut starts = xs.to_vec();
            starts.push(f.fixed_point().value().clone());
            for xv in &starts {
                let x = ExactPadic::new(f.prime(), xv.clone()).unwrap();
                let exact = f.orbit(&x, 6, 1 << 20).unwrap();
                let trace = f.orbit_radii(&x, 6, 1 << 20).unwrap();
                assert_eq!(trace.radii, exact.radii, "p={} x={xv}", f.prime());
                assert_eq!(
                    trace.termination,
                    exact.termination,
                    "p={} x={xv}",
                    f.prime()
                );
            }
        }
    }

    #[test]
    fn radius_trace_stops_at_poles_with_matching_step_index() {
        let f = params(3, 0, 0, -5, -1);
        let trace = f.orbit_radii(&point(3, 2, 1), 5, 1 << 20).unwrap();
        assert_eq!(trace.termination, OrbitTermination::HitSingularity(1));
        assert_eq!(
            trace.radii,
            vec![Radius::int_power(-1), Radius::int_power(0)]
        );
        let at_pole = f.orbit_radii(&point(3, 1, 1), 3, 1 << 20).unwrap();
        assert_eq!(at_pole.termination, OrbitTermination::HitSingularity(0));
        assert_eq!(at_pole.radii.len(), 1);
    }

    #[test]
    fn radius_trace_respects_bit_budget() {
        // Unreduced pairs grow at the same cubic rate, so the budget still
        // bounds runtime; radii computed before the stop stay exact.
        let f = params(3, 0, 9, -72, 1);
        let x = point(3, 1000000007, 999999937);
        let exact = f.orbit(&x, 6, 1 << 20).unwrap();
        let trace = f.orbit_radii(&x, 6, 2048).unwrap();
        match trace.termination {
            OrbitTermination::BudgetExceeded(step) => {
                assert!(0 < step && step < 6);
                assert_eq!(trace.radii[..], exact.radii[..=step]);
            }
            t => panic!("expected budget stop, got {t:?}"),
        }
    }

    #[test]
    fn radius_walker_drives_stepwise_and_refuses_poles() {
        let f = params(2, 0, 0, 2, 1);
        let start = point(2, 6, 1);
        let mut walker = f.radius_walker(&start).unwrap();
        let mut seen = vec![walker.current_radius()];
        for _ in 0..5 {
            assert!(!walker.at_pole());
            walker.step().unwrap();
            seen.push(walker.current_radius());
        }
        assert_eq!(seen, f.orbit(&start, 5, 1 << 20).unwrap().radii);

        let g = params(3, 0, 0, -5, -1);
        let mut parked = g.radius_walker(&point(3, 1, 1)).unwrap();
        assert!(parked.at_pole());
        assert_eq!(parked.step().unwrap_err(), MapError::SingularInput);
    }

    #[test]
    fn fixed_orbit_agrees_with_exact_orbit() {
        let f = params(3, 0, 9, -72, 1);
        let x = point(3, 12, 1); // |12−9|₃ = 3⁻¹ < √α
        let exact = f.orbit(&x, 6, 1 << 20).unwrap();
        let fixed = f.orbit_fixed(&x, 6, 48).unwrap();
        assert_eq!(fixed.termination, OrbitTermination::Completed);
        assert_eq!(exact.radii, fixed.radii);
        for (e, fx) in exact.points.iter().zip(fixed.points.iter()) {
            let want = FixedPadic::from_exact(e, fx.precision()).unwrap();
            assert_eq!(fx.digits(), want.digits());
        }
    }

    #[test]
    fn fixed_orbit_reports_precision_loss_at_the_fixed_point() {
        // Starting exactly at x₀ the difference x − x₀ cancels every digit.
        let f = params(3, 0, 9, -72, 1);
        let orbit = f.orbit_fixed(&point(3, 9, 1), 3, 24).unwrap();
        assert_eq!(orbit.termination, OrbitTermination::PrecisionLoss(0));
    }
}
