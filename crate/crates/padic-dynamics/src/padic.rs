//! Exact p-adic arithmetic over the rationals, plus a fixed-precision
//! digit backend.
//!
//! Everything in this module is exact: values are arbitrary-precision
//! rationals tagged with a prime, valuations are integers, and norms are
//! represented symbolically as powers of `p` so that no floating point is
//! ever involved.
//!
//! ```text
//! For a prime p, every nonzero rational x has a unique canonical form
//!
//!     x = p^γ · (x₀ + x₁·p + x₂·p² + ...),   0 < x₀ ≤ p−1,  0 ≤ xᵢ ≤ p−1,
//!
//! where γ = v_p(x) is the p-adic valuation. The p-adic norm is
//!
//!     |x|_p = p^(−γ),   |0|_p = 0,
//!
//! and it is an ultrametric:
//!
//!     |x·y| = |x|·|y|
//!     |x+y| ≤ max(|x|, |y|),  with equality whenever |x| ≠ |y|.
//! ```
//!
//! The strong triangle equality (“the strongest one wins outright”) is what
//! makes radius dynamics of rational maps computable exactly; the rest of the
//! crate leans on it constantly.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;
use thiserror::Error;

/// Exponent type for radii: a rational number, so that square roots of
/// integer powers of `p` (exponent halving) stay representable.
pub type RadiusExponent = Ratio<i64>;

/// Errors produced by the exact and fixed-precision arithmetic layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PadicError {
    /// The modulus passed as `p` fails the primality check.
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    /// Two operands live over different primes.
    #[error("operands use different primes: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    /// Division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,
    /// Zero has no canonical digit expansion (its valuation is infinite).
    #[error("zero has no canonical digit expansion")]
    ZeroExpansion,
    /// Every known digit cancelled in a subtraction; the result is
    /// indistinguishable from zero at the working precision.
    #[error("insufficient precision: all known digits cancelled")]
    InsufficientPrecision,
    /// A fixed-precision value was requested with zero digits.
    #[error("working precision must be at least one digit")]
    ZeroPrecision,
}

// ── Primality ───────────────────────────────────────────────────────────────

/// Deterministic trial-division primality test.
///
/// Complete for every `u64` input (the divisor loop runs to `√n`), and
/// instant at the scale this crate is meant for (primes below a million).
#[must_use]
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5] {
        if n == small {
            return true;
        }
        if n.is_multiple_of(small) {
            return false;
        }
    }
    // 30-wheel: candidate divisors coprime to 2, 3, 5.
    const WHEEL: [u64; 8] = [1, 7, 11, 13, 17, 19, 23, 29];
    let mut base = 0u64;
    loop {
        for off in WHEEL {
            let d = base + off;
            if d < 7 {
                continue;
            }
            if d.saturating_mul(d) > n {
                return true;
            }
            if n.is_multiple_of(d) {
                return false;
            }
        }
        base += 30;
    }
}

/// Validates a prime modulus, normalising the error.
pub fn check_prime(p: u64) -> Result<(), PadicError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(PadicError::NotPrime(p))
    }
}

// ── Valuation ───────────────────────────────────────────────────────────────

/// The p-adic valuation of a rational number: the (signed) multiplicity of
/// `p`, with `Infinite` reserved for zero.
///
/// Ordered so that `Infinite` is greater than every finite valuation,
/// matching `|0|_p = 0 < p^(−v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    /// v_p(x) for a nonzero x.
    Finite(i64),
    /// v_p(0) = +∞.
    Infinite,
}

impl Valuation {
    /// The finite value, if any.
    #[must_use]
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Multiplicity of `p` in a nonzero big integer.
///
/// Unreduced orbit denominators can carry valuations in the thousands, so
/// stripping one factor per division would dominate distance computations.
/// Instead a ladder of powers `p, p², p⁴, …` is stripped while it divides
/// (doubling the exponent each rung), then walked back down; the number of
/// big divisions is logarithmic in the answer.
pub(crate) fn int_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p_big = BigInt::from(p);
    let (q, r) = n.div_rem(&p_big);
    if !r.is_zero() {
        return 0;
    }
    // Ladder up: ladder[i] = p^(2^i); after k extra rungs 2^(k+1) − 1
    // factors are stripped in total.
    let mut v = 1i64;
    let mut cur = q;
    let mut ladder = vec![p_big];
    loop {
        let top = ladder.last().expect("ladder starts non-empty");
        let next = top * top;
        let (q, r) = cur.div_rem(&next);
        if !r.is_zero() {
            break;
        }
        v += 1i64 << ladder.len();
        cur = q;
        ladder.push(next);
    }
    // Ladder down: what remains is below the first failed rung, so each
    // smaller power divides at most once (binary decomposition).
    for (i, power) in ladder.iter().enumerate().rev() {
        let (q, r) = cur.div_rem(power);
        if r.is_zero() {
            v += 1i64 << i;
            cur = q;
        }
    }
    v
}

/// The p-adic valuation of a rational number.
#[must_use]
pub fn rational_valuation(x: &BigRational, p: u64) -> Valuation {
    if x.is_zero() {
        Valuation::Infinite
    } else {
        Valuation::Finite(int_valuation(x.numer(), p) - int_valuation(x.denom(), p))
    }
}

// ── Radius ──────────────────────────────────────────────────────────────────

/// A p-adic norm value: either `0` or an exact power `p^e` with rational
/// exponent `e`.
///
/// The base prime is *not* stored; a `Radius` is an exponent-level object and
/// all comparisons assume a common base `p ≥ 2` (exponent order equals value
/// order). Rational exponents keep `√(p^e)` representable; spheres at
/// half-integer exponents contain no rational points, which the sampling
/// layer reports explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Radius {
    /// Norm of zero.
    Zero,
    /// `p^e` for the stored exponent `e`.
    Power(RadiusExponent),
}

impl Radius {
    /// `p^e` with an integer exponent.
    #[must_use]
    pub fn int_power(e: i64) -> Self {
        Radius::Power(Ratio::from_integer(e))
    }

    /// `p^0 = 1`.
    #[must_use]
    pub fn one() -> Self {
        Radius::int_power(0)
    }

    /// True for the zero norm.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        matches!(self, Radius::Zero)
    }

    /// The exponent, if the radius is a power of `p`.
    #[must_use]
    pub fn exponent(&self) -> Option<RadiusExponent> {
        match self {
            Radius::Zero => None,
            Radius::Power(e) => Some(*e),
        }
    }

    /// The exponent when it is an integer (i.e. the radius is realised by
    /// rational points).
    #[must_use]
    pub fn integer_exponent(&self) -> Option<i64> {
        match self {
            Radius::Power(e) if e.is_integer() => Some(e.to_integer()),
            _ => None,
        }
    }

    /// Norm corresponding to a valuation: `p^(−v)`, or `0` for `v = ∞`.
    #[must_use]
    pub fn from_valuation(v: Valuation) -> Self {
        match v {
            Valuation::Finite(v) => Radius::int_power(-v),
            Valuation::Infinite => Radius::Zero,
        }
    }

    /// Quotient of two norms; `None` when dividing by the zero norm.
    #[must_use]
    pub fn checked_div(self, other: Radius) -> Option<Radius> {
        match (self, other) {
            (_, Radius::Zero) => None,
            (Radius::Zero, Radius::Power(_)) => Some(Radius::Zero),
            (Radius::Power(a), Radius::Power(b)) => Some(Radius::Power(a - b)),
        }
    }

    /// `r²`.
    #[must_use]
    pub fn square(self) -> Radius {
        self * self
    }

    /// `√r` (exponent halving; exact because exponents are rational).
    #[must_use]
    pub fn sqrt(self) -> Radius {
        match self {
            Radius::Zero => Radius::Zero,
            Radius::Power(e) => Radius::Power(e / 2),
        }
    }

    /// Renders with a concrete base, e.g. `3^-2`, `3^-1/2`, or `0`.
    #[must_use]
    pub fn display_with_base(&self, p: u64) -> String {
        match self {
            Radius::Zero => "0".to_string(),
            Radius::Power(e) => format!("{p}^{e}"),
        }
    }
}

impl PartialOrd for Radius {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Radius {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Radius::Zero, Radius::Zero) => Ordering::Equal,
            (Radius::Zero, Radius::Power(_)) => Ordering::Less,
            (Radius::Power(_), Radius::Zero) => Ordering::Greater,
            (Radius::Power(a), Radius::Power(b)) => a.cmp(b),
        }
    }
}

impl Mul for Radius {
    type Output = Radius;

    /// Product of two norms (`|xy| = |x||y|`).
    // Norms multiply by *adding* exponents: p^a · p^b = p^(a+b).
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, other: Radius) -> Radius {
        match (self, other) {
            (Radius::Zero, _) | (_, Radius::Zero) => Radius::Zero,
            (Radius::Power(a), Radius::Power(b)) => Radius::Power(a + b),
        }
    }
}

impl fmt::Display for Radius {
    /// Symbolic rendering (`p^-3`); use [`Radius::display_with_base`] when the
    /// concrete prime is at hand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radius::Zero => write!(f, "0"),
            Radius::Power(e) => write!(f, "p^{e}"),
        }
    }
}

// ── Exact numbers ───────────────────────────────────────────────────────────

/// An exact element of ℚ viewed inside ℚ_p: an arbitrary-precision rational
/// tagged with its prime.
///
/// All arithmetic is ordinary rational arithmetic; the prime only enters
/// through valuations, norms, and digit expansions. Operations on mismatched
/// primes are rejected rather than coerced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPadic {
    p: u64,
    value: BigRational,
}

impl ExactPadic {
    /// Wraps a rational value over the prime `p`.
    pub fn new(p: u64, value: BigRational) -> Result<Self, PadicError> {
        check_prime(p)?;
        Ok(ExactPadic { p, value })
    }

    /// Convenience constructor from an integer.
    pub fn from_int(p: u64, n: i64) -> Result<Self, PadicError> {
        Self::new(p, BigRational::from_integer(BigInt::from(n)))
    }

    /// The prime.
    #[must_use]
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The underlying rational value.
    #[must_use]
    pub fn value(&self) -> &BigRational {
        &self.value
    }

    /// True when the value is exactly zero.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// p-adic valuation of the value.
    #[must_use]
    pub fn valuation(&self) -> Valuation {
        rational_valuation(&self.value, self.p)
    }

    /// p-adic norm `|x|_p` as an exact power of `p`.
    #[must_use]
    pub fn norm(&self) -> Radius {
        Radius::from_valuation(self.valuation())
    }

    fn check_same_prime(&self, other: &Self) -> Result<(), PadicError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(PadicError::PrimeMismatch(self.p, other.p))
        }
    }

    /// Exact sum.
    pub fn add(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_same_prime(other)?;
        Ok(ExactPadic {
            p: self.p,
            value: &self.value + &other.value,
        })
    }

    /// Exact difference.
    pub fn sub(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_same_prime(other)?;
        Ok(ExactPadic {
            p: self.p,
            value: &self.value - &other.value,
        })
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_same_prime(other)?;
        Ok(ExactPadic {
            p: self.p,
            value: &self.value * &other.value,
        })
    }

    /// Exact quotient; rejects a zero divisor.
    pub fn div(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_same_prime(other)?;
        if other.value.is_zero() {
            return Err(PadicError::DivisionByZero);
        }
        Ok(ExactPadic {
            p: self.p,
            value: &self.value / &other.value,
        })
    }

    /// Canonical digit expansion `x = p^γ·(x₀ + x₁p + …)` with `x₀ > 0`,
    /// truncated to `count` digits. Errors on zero (infinite valuation).
    pub fn digit_expansion(&self, count: usize) -> Result<(i64, Vec<u32>), PadicError> {
        digit_expansion(&self.value, self.p, count)
    }
}

impl fmt::Display for ExactPadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Formats a rational as `num/den` (or just `num` for integers), the exact
/// notation used throughout reports and the CLI.
#[must_use]
pub fn rational_repr(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `num` or `num/den` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_s
        .parse()
        .map_err(|_| format!("invalid integer `{num_s}`"))?;
    let den: BigInt = den_s
        .parse()
        .map_err(|_| format!("invalid integer `{den_s}`"))?;
    if den.is_zero() {
        return Err("denominator must be nonzero".to_string());
    }
    Ok(BigRational::new(num, den))
}

// ── Digit expansion ─────────────────────────────────────────────────────────

/// Splits a nonzero rational into `p^γ · n/m` with `n`, `m` coprime to `p`
/// and `n/m > 0`-free sign carried on `n`.
fn strip_p_power(x: &BigRational, p: u64) -> (i64, BigInt, BigInt) {
    debug_assert!(!x.is_zero());
    let p_big = BigInt::from(p);
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    let mut gamma = 0i64;
    loop {
        let (q, r) = num.div_rem(&p_big);
        if r.is_zero() {
            num = q;
            gamma += 1;
        } else {
            break;
        }
    }
    loop {
        let (q, r) = den.div_rem(&p_big);
        if r.is_zero() {
            den = q;
            gamma -= 1;
        } else {
            break;
        }
    }
    (gamma, num, den)
}

/// Canonical digit expansion of a nonzero rational in ℚ_p.
///
/// Returns `(γ, digits)` with `digits.len() == count`, `digits[0] ≠ 0`, and
/// the defining residual property
///
/// ```text
/// | x − p^γ·Σ digits[i]·p^i |_p  ≤  p^(−γ−count).
/// ```
///
/// Any nonzero rational is accepted: the power of `p` is stripped first, and
/// the remaining p-free denominator is inverted modulo `p^count`.
///
/// # Errors
/// [`PadicError::ZeroExpansion`] for `x = 0`, [`PadicError::ZeroPrecision`]
/// for `count = 0`.
pub fn digit_expansion(
    x: &BigRational,
    p: u64,
    count: usize,
) -> Result<(i64, Vec<u32>), PadicError> {
    check_prime(p)?;
    if x.is_zero() {
        return Err(PadicError::ZeroExpansion);
    }
    if count == 0 {
        return Err(PadicError::ZeroPrecision);
    }
    let (gamma, num, den) = strip_p_power(x, p);
    let modulus = BigUint::from(p).pow(count as u32);
    let residue = unit_residue(&num, &den, &modulus);
    let mut digits = Vec::with_capacity(count);
    let p_big = BigUint::from(p);
    let mut cur = residue;
    for _ in 0..count {
        let (q, r) = cur.div_rem(&p_big);
        digits.push(r.to_u32().expect("digit below p fits in u32"));
        cur = q;
    }
    debug_assert!(digits[0] != 0, "leading digit of a unit must be nonzero");
    Ok((gamma, digits))
}

/// `n·m⁻¹ mod modulus` for `n`, `m` coprime to the modulus (sign folded in).
fn unit_residue(num: &BigInt, den: &BigInt, modulus: &BigUint) -> BigUint {
    let m_big = BigInt::from(modulus.clone());
    let n_mod = num
        .mod_floor(&m_big)
        .to_biguint()
        .expect("mod_floor is nonnegative");
    let d_mod = den
        .mod_floor(&m_big)
        .to_biguint()
        .expect("mod_floor is nonnegative");
    let d_inv = modular_inverse(&d_mod, modulus).expect("denominator is a unit mod p^k");
    (n_mod * d_inv) % modulus
}

/// Modular inverse via the extended Euclidean algorithm; `None` when the
/// inputs are not coprime.
#[must_use]
pub fn modular_inverse(a: &BigUint, modulus: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(modulus.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(
        e.x.mod_floor(&m)
            .to_biguint()
            .expect("mod_floor is nonnegative"),
    )
}

// ── Squares in ℚ_p ──────────────────────────────────────────────────────────

/// Exact square test in ℚ_p.
///
/// A nonzero `x = p^v·u` (with `u` a p-adic unit) is a square iff `v` is even
/// and:
///
/// ```text
/// p odd:  u is a quadratic residue mod p     (Euler criterion),
/// p = 2:  u ≡ 1 (mod 8).
/// ```
///
/// Zero counts as a square (`0 = 0²`).
#[must_use]
pub fn is_square(x: &ExactPadic) -> bool {
    if x.is_zero() {
        return true;
    }
    let p = x.prime();
    let (v, num, den) = strip_p_power(x.value(), p);
    if v.rem_euclid(2) != 0 {
        return false;
    }
    if p == 2 {
        // Unit square test mod 8. The denominator is odd, so (mod 8) it is
        // its own inverse (m² ≡ 1 mod 8 for odd m): u ≡ n·m (mod 8).
        let m8 = BigInt::from(8);
        let u = (num.mod_floor(&m8) * den.mod_floor(&m8)).mod_floor(&m8);
        u == BigInt::from(1)
    } else {
        // Euler criterion on n·m (same residue class as n/m mod p).
        let p_big = BigUint::from(p);
        let nm = num * den;
        let u = nm
            .mod_floor(&BigInt::from(p))
            .to_biguint()
            .expect("nonnegative");
        debug_assert!(!u.is_zero());
        let exp = BigUint::from((p - 1) / 2);
        u.modpow(&exp, &p_big).is_one()
    }
}

/// Exact square root *within the rationals*: `Some(√q)` iff `q` is the square
/// of a rational, taking the nonnegative root.
#[must_use]
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    let num = q.numer().to_biguint().expect("positive");
    let den = q.denom().to_biguint().expect("positive");
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &sn * &sn == num && &sd * &sd == den {
        Some(BigRational::new(BigInt::from(sn), BigInt::from(sd)))
    } else {
        None
    }
}

// ── Fixed-precision backend ─────────────────────────────────────────────────

/// A truncated p-adic number: `p^valuation · unit`, with the unit known
/// modulo `p^precision`.
///
/// ```text
/// value  =  p^v · (u₀ + u₁p + … + u_{N−1}p^{N−1} + unknown·p^N),   u₀ ≠ 0,
/// ```
///
/// so the represented number is known on the absolute digit window
/// `[v, v+N)`. Exact zero is a separate state (every digit known, all zero).
/// Arithmetic tracks how the window shrinks: sums of equal-valuation terms
/// can cancel leading digits, and when *all* known digits cancel the
/// operation fails with [`PadicError::InsufficientPrecision`] rather than
/// fabricating a value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPadic {
    p: u64,
    /// `None` = exact zero; otherwise (valuation, unit residue mod p^precision).
    repr: Option<(i64, BigUint)>,
    /// Number of known base-p digits of the unit part.
    precision: usize,
}

impl FixedPadic {
    /// Exact zero at a given working precision.
    pub fn zero(p: u64, precision: usize) -> Result<Self, PadicError> {
        check_prime(p)?;
        if precision == 0 {
            return Err(PadicError::ZeroPrecision);
        }
        Ok(FixedPadic {
            p,
            repr: None,
            precision,
        })
    }

    /// Truncates an exact rational to `precision` digits.
    pub fn from_exact(x: &ExactPadic, precision: usize) -> Result<Self, PadicError> {
        if precision == 0 {
            return Err(PadicError::ZeroPrecision);
        }
        let p = x.prime();
        if x.is_zero() {
            return Self::zero(p, precision);
        }
        let (gamma, num, den) = strip_p_power(x.value(), p);
        let modulus = BigUint::from(p).pow(precision as u32);
        let unit = unit_residue(&num, &den, &modulus);
        Ok(FixedPadic {
            p,
            repr: Some((gamma, unit)),
            precision,
        })
    }

    /// The prime.
    #[must_use]
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Number of known digits.
    #[must_use]
    pub fn precision(&self) -> usize {
        self.precision
    }

    /// True for exact zero.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.repr.is_none()
    }

    /// Valuation (`Infinite` for exact zero).
    #[must_use]
    pub fn valuation(&self) -> Valuation {
        match &self.repr {
            None => Valuation::Infinite,
            Some((v, _)) => Valuation::Finite(*v),
        }
    }

    /// Norm as an exact power of `p`.
    #[must_use]
    pub fn norm(&self) -> Radius {
        Radius::from_valuation(self.valuation())
    }

    /// Known digits of the unit part (length = precision; leading digit ≠ 0).
    /// Exact zero yields all-zero digits.
    #[must_use]
    pub fn digits(&self) -> Vec<u32> {
        let p_big = BigUint::from(self.p);
        let mut out = Vec::with_capacity(self.precision);
        let mut cur = match &self.repr {
            None => BigUint::zero(),
            Some((_, u)) => u.clone(),
        };
        for _ in 0..self.precision {
            let (q, r) = cur.div_rem(&p_big);
            out.push(r.to_u32().expect("digit fits"));
            cur = q;
        }
        out
    }

    fn modulus(&self, digits: usize) -> BigUint {
        BigUint::from(self.p).pow(digits as u32)
    }

    fn check_same_prime(&self, other: &Self) -> Result<(), PadicError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(PadicError::PrimeMismatch(self.p, other.p))
        }
    }

    /// Normalises a residue known to `known` digits at valuation `v`:
    /// strips leading zero digits (raising the valuation) and fails when no
    /// known nonzero digit remains.
    fn normalise(p: u64, v: i64, residue: BigUint, known: usize) -> Result<Self, PadicError> {
        let p_big = BigUint::from(p);
        let mut cur = residue;
        let mut v = v;
        let mut known = known;
        while known > 0 {
            if cur.is_zero() {
                // All remaining known digits are zero: cannot certify a value.
                return Err(PadicError::InsufficientPrecision);
            }
            let (q, r) = cur.div_rem(&p_big);
            if r.is_zero() {
                cur = q;
                v += 1;
                known -= 1;
            } else {
                return Ok(FixedPadic {
                    p,
                    repr: Some((v, cur)),
                    precision: known,
                });
            }
        }
        Err(PadicError::InsufficientPrecision)
    }

    /// Sum, with precision-window intersection and cancellation tracking.
    pub fn add(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_same_prime(other)?;
        match (&self.repr, &other.repr) {
            (None, None) => Self::zero(self.p, self.precision.min(other.precision)),
            (None, Some(_)) => Ok(other.clone()),
            (Some(_), None) => Ok(self.clone()),
            (Some((va, ua)), Some((vb, ub))) => {
                let (v_lo, u_lo, n_lo, v_hi, u_hi, n_hi) = if va <= vb {
                    (*va, ua, self.precision, *vb, ub, other.precision)
                } else {
                    (*vb, ub, other.precision, *va, ua, self.precision)
                };
                // Absolute known windows: [v_lo, v_lo+n_lo) and [v_hi, v_hi+n_hi).
                let shift = (v_hi - v_lo) as usize;
                let end = (v_lo + n_lo as i64).min(v_hi + n_hi as i64);
                let known = (end - v_lo) as usize;
                if known == 0 {
                    return Err(PadicError::InsufficientPrecision);
                }
                let modulus = self.modulus(known);
                let shifted = if shift >= known {
                    BigUint::zero()
                } else {
                    (u_hi * BigUint::from(self.p).pow(shift as u32)) % &modulus
                };
                let sum = (u_lo % &modulus + shifted) % &modulus;
                Self::normalise(self.p, v_lo, sum, known)
            }
        }
    }

    /// Additive inverse.
    #[must_use]
    pub fn neg(&self) -> Self {
        match &self.repr {
            None => self.clone(),
            Some((v, u)) => {
                let modulus = self.modulus(self.precision);
                let nu = (&modulus - u % &modulus) % &modulus;
                FixedPadic {
                    p: self.p,
                    repr: Some((*v, nu)),
                    precision: self.precision,
                }
            }
        }
    }

    /// Difference (`self + (−other)`).
    pub fn sub(&self, other: &Self) -> Result<Self, PadicError> {
        self.add(&other.neg())
    }

    /// Product: valuations add, units multiply, precision is the minimum of
    /// the operands' (units never cancel digits).
    pub fn mul(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_same_prime(other)?;
        let precision = self.precision.min(other.precision);
        match (&self.repr, &other.repr) {
            (None, _) | (_, None) => Self::zero(self.p, precision),
            (Some((va, ua)), Some((vb, ub))) => {
                let modulus = self.modulus(precision);
                let u = (ua % &modulus) * (ub % &modulus) % &modulus;
                Ok(FixedPadic {
                    p: self.p,
                    repr: Some((va + vb, u)),
                    precision,
                })
            }
        }
    }

    /// Quotient; rejects an exact-zero divisor.
    pub fn div(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_same_prime(other)?;
        let precision = self.precision.min(other.precision);
        match (&self.repr, &other.repr) {
            (_, None) => Err(PadicError::DivisionByZero),
            (None, Some(_)) => Self::zero(self.p, precision),
            (Some((va, ua)), Some((vb, ub))) => {
                let modulus = self.modulus(precision);
                let inv = modular_inverse(&(ub % &modulus), &modulus)
                    .expect("unit residues are invertible");
                let u = (ua % &modulus) * inv % &modulus;
                Ok(FixedPadic {
                    p: self.p,
                    repr: Some((va - vb, u)),
                    precision,
                })
            }
        }
    }
}

impl fmt::Display for FixedPadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            None => write!(f, "0"),
            Some((v, _)) => {
                let digits = self.digits();
                let body: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
                write!(
                    f,
                    "{}^{} * ({} + O({}^{}))",
                    self.p,
                    v,
                    body.join(","),
                    self.p,
                    self.precision
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn xp(p: u64, n: i64, d: i64) -> ExactPadic {
        ExactPadic::new(p, rat(n, d)).unwrap()
    }

    #[test]
    fn primality_small_cases() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(999_983), "largest prime below a million");
        assert!(!is_prime(999_983u64 * 3));
    }

    #[test]
    fn norm_matches_hand_computed_values() {
        // |6/5|_3 = 3^-1 (one factor of 3 upstairs).
        assert_eq!(xp(3, 6, 5).norm(), Radius::int_power(-1));
        // |9/4|_2 = 2^2 (two factors of 2 downstairs).
        assert_eq!(xp(2, 9, 4).norm(), Radius::int_power(2));
        // |0| = 0.
        assert_eq!(xp(5, 0, 1).norm(), Radius::Zero);
        // |1/5|_5 = 5^1.
        assert_eq!(xp(5, 1, 5).norm(), Radius::int_power(1));
    }

    #[test]
    fn valuation_ordering_puts_zero_on_top() {
        assert!(Valuation::Infinite > Valuation::Finite(1_000_000));
        assert!(Valuation::Finite(-3) < Valuation::Finite(2));
    }

    #[test]
    fn integer_valuation_ladder_is_exact_at_every_size() {
        // The ladder strips p, p², p⁴, …; exercise every branch interaction
        // by checking v_p(u·p^v) = v for valuations around the rung
        // boundaries 2^k − 1, 2^k, 2^k + 1 and deep into the thousands.
        let unit = BigInt::from(982_451_653u64); // prime, coprime to 2·3·5
        for p in [2u64, 3, 5] {
            for v in [
                0i64, 1, 2, 3, 4, 6, 7, 8, 15, 16, 17, 31, 100, 1023, 1024, 2500,
            ] {
                let n = &unit * BigInt::from(p).pow(u32::try_from(v).unwrap());
                assert_eq!(int_valuation(&n, p), v, "p={p} v={v}");
                assert_eq!(int_valuation(&(-&n), p), v, "p={p} v={v} (negative)");
            }
        }
    }

    #[test]
    fn radius_ordering_and_algebra() {
        let small = Radius::int_power(-2);
        let big = Radius::int_power(1);
        assert!(Radius::Zero < small && small < big);
        assert_eq!(small * big, Radius::int_power(-1));
        assert_eq!(big.checked_div(small), Some(Radius::int_power(3)));
        assert_eq!(small.checked_div(Radius::Zero), None);
        assert_eq!(
            Radius::int_power(-3).sqrt(),
            Radius::Power(Ratio::new(-3, 2))
        );
        assert_eq!(Radius::int_power(-4).sqrt(), Radius::int_power(-2));
        assert_eq!(small.display_with_base(3), "3^-2");
        assert_eq!(Radius::int_power(-4).sqrt().display_with_base(3), "3^-2");
        assert_eq!(Radius::int_power(-3).sqrt().display_with_base(5), "5^-3/2");
    }

    #[test]
    fn ultrametric_strong_triangle_on_fixed_pairs() {
        // |x+y| = max when norms differ; |x+y| ≤ max when tied.
        let x = xp(3, 9, 1); // norm 3^-2
        let y = xp(3, 1, 3); // norm 3^1
        let s = x.add(&y).unwrap();
        assert_eq!(s.norm(), Radius::int_power(1));
        let a = xp(3, 1, 1);
        let b = xp(3, 2, 1); // both norm 1, sum = 3 has norm 3^-1
        assert_eq!(a.add(&b).unwrap().norm(), Radius::int_power(-1));
        assert!(a.add(&b).unwrap().norm() <= a.norm().max(b.norm()));
    }

    #[test]
    fn digit_expansion_of_seven_base_two() {
        // 7 = 1 + 2 + 4.
        let (gamma, digits) = digit_expansion(&rat(7, 1), 2, 3).unwrap();
        assert_eq!(gamma, 0);
        assert_eq!(digits, vec![1, 1, 1]);
    }

    #[test]
    fn digit_expansion_of_two_base_three() {
        let (gamma, digits) = digit_expansion(&rat(2, 1), 3, 2).unwrap();
        assert_eq!(gamma, 0);
        assert_eq!(digits, vec![2, 0]);
    }

    #[test]
    fn digit_expansion_of_one_third_base_five() {
        // 1/3 ≡ 42 mod 125, and 42 = 2 + 3·5 + 1·25.
        let (gamma, digits) = digit_expansion(&rat(1, 3), 5, 3).unwrap();
        assert_eq!(gamma, 0);
        assert_eq!(digits, vec![2, 3, 1]);
        // Residual oracle: |1/3 − 42|_5 = |−125/3|_5 = 5^-3 ≤ 5^-3.
        let resid = rat(1, 3) - rat(42, 1);
        assert_eq!(rational_valuation(&resid, 5), Valuation::Finite(3));
    }

    #[test]
    fn digit_expansion_strips_p_powers_in_denominator() {
        // 1/5 = 5^-1·(1 + 0·5 + …); γ is negative.
        let (gamma, digits) = digit_expansion(&rat(1, 5), 5, 2).unwrap();
        assert_eq!(gamma, -1);
        assert_eq!(digits, vec![1, 0]);
    }

    #[test]
    fn digit_expansion_rejects_zero() {
        assert_eq!(
            digit_expansion(&rat(0, 1), 3, 4),
            Err(PadicError::ZeroExpansion)
        );
    }

    #[test]
    fn digit_residual_property_on_assorted_inputs() {
        // |x − p^γ·Σ digits·p^i|_p ≤ p^(−γ−count) for a spread of inputs.
        for (n, d) in [
            (37i64, 5i64),
            (-14, 9),
            (22, 7),
            (5, 8),
            (100, 13),
            (-3, 250),
        ] {
            for p in [2u64, 3, 5, 7] {
                let x = rat(n, d);
                if x.is_zero() {
                    continue;
                }
                let count = 6;
                let (gamma, digits) = digit_expansion(&x, p, count).unwrap();
                let mut acc = BigRational::zero();
                let p_rat = rat(p as i64, 1);
                let mut pw = BigRational::one();
                for &dg in &digits {
                    acc += rat(dg as i64, 1) * &pw;
                    pw *= &p_rat;
                }
                let gamma_pow = if gamma >= 0 {
                    p_rat.pow(gamma as i32)
                } else {
                    BigRational::one() / p_rat.pow((-gamma) as i32)
                };
                let resid = x - gamma_pow * acc;
                let bound = Valuation::Finite(gamma + count as i64);
                assert!(
                    rational_valuation(&resid, p) >= bound,
                    "residual too large for {n}/{d} at p={p}"
                );
            }
        }
    }

    #[test]
    fn square_detection_matches_known_classes() {
        assert!(!is_square(&xp(2, 2, 1)), "2 is not a square in Q_2");
        assert!(is_square(&xp(7, 4, 1)), "4 = 2^2 everywhere");
        assert!(is_square(&xp(2, 17, 1)), "17 ≡ 1 mod 8 is a square in Q_2");
        assert!(!is_square(&xp(7, -1, 1)), "-1 is not a residue mod 7");
        assert!(is_square(&xp(5, -1, 1)), "-1 is a residue mod 5");
        assert!(!is_square(&xp(3, 3, 1)), "odd valuation");
        assert!(is_square(&xp(3, 9, 1)));
        assert!(is_square(&xp(5, 0, 1)), "zero is 0^2");
        assert!(
            is_square(&xp(2, 9, 49)),
            "square rational is a square anywhere"
        );
    }

    #[test]
    fn square_detection_brute_force_oracle_mod_p_powers() {
        // A unit u is a square in Z_p iff u is a square mod p (p odd) or
        // mod 8 (p = 2); cross-check Euler/mod-8 logic by brute force.
        for p in [2u64, 3, 5, 7, 11] {
            let modulus = if p == 2 { 64 } else { p * p };
            let squares: std::collections::HashSet<u64> =
                (1..modulus).map(|y| (y * y) % modulus).collect();
            for u in 1..modulus {
                if u % p == 0 {
                    continue;
                }
                let claimed = is_square(&xp(p, u as i64, 1));
                let actual = squares.contains(&u);
                assert_eq!(claimed, actual, "unit {u} mod {p}");
            }
        }
    }

    #[test]
    fn rational_sqrt_exact_cases() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
        assert_eq!(rational_sqrt(&rat(0, 1)), Some(rat(0, 1)));
    }

    #[test]
    fn fixed_from_exact_thirty_seven_fifths_base_two() {
        // 37/5 ≡ 1 mod 16 → digits [1,0,0,0]; residual 32/5 has norm 2^-5.
        let x = xp(2, 37, 5);
        let f = FixedPadic::from_exact(&x, 4).unwrap();
        assert_eq!(f.valuation(), Valuation::Finite(0));
        assert_eq!(f.digits(), vec![1, 0, 0, 0]);
        let resid = rat(37, 5) - rat(1, 1);
        assert!(rational_valuation(&resid, 2) >= Valuation::Finite(4));
    }

    #[test]
    fn fixed_arithmetic_tracks_cancellation() {
        let p = 3;
        let a = FixedPadic::from_exact(&xp(p, 10, 1), 4).unwrap(); // 10 = 1+0·3+1·9
        let b = FixedPadic::from_exact(&xp(p, 8, 1), 4).unwrap();
        let s = a.add(&b).unwrap(); // 18 = 2·9
        assert_eq!(s.valuation(), Valuation::Finite(2));
        assert_eq!(s.precision(), 2, "two leading digits cancelled");
        // Complete cancellation must be refused, not silently zeroed.
        let err = a.sub(&a).unwrap_err();
        assert_eq!(err, PadicError::InsufficientPrecision);
    }

    #[test]
    fn fixed_arithmetic_matches_exact_on_random_expressions() {
        // (a·b + c)/d computed both ways; digits must agree on the shared
        // window. Deterministic LCG so the test is reproducible.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 40) - 20
        };
        for p in [2u64, 3, 5, 7] {
            let mut done = 0;
            while done < 25 {
                let (an, bn, cn, dn) = (next(), next(), next(), next());
                if an == 0 || bn == 0 || cn == 0 || dn == 0 {
                    continue;
                }
                let a = xp(p, an, 1);
                let b = xp(p, bn, 3);
                let c = xp(p, cn, 7);
                let d = xp(p, dn, 1);
                let exact = a.mul(&b).unwrap().add(&c).unwrap().div(&d).unwrap();
                if exact.is_zero() {
                    continue;
                }
                let fa = FixedPadic::from_exact(&a, 24).unwrap();
                let fb = FixedPadic::from_exact(&b, 24).unwrap();
                let fc = FixedPadic::from_exact(&c, 24).unwrap();
                let fd = FixedPadic::from_exact(&d, 24).unwrap();
                let fixed = match fa
                    .mul(&fb)
                    .and_then(|t| t.add(&fc))
                    .and_then(|t| t.div(&fd))
                {
                    Ok(v) => v,
                    Err(PadicError::InsufficientPrecision) => continue,
                    Err(e) => panic!("unexpected error: {e}"),
                };
                assert_eq!(Radius::from_valuation(fixed.valuation()), exact.norm());
                let want = FixedPadic::from_exact(&exact, fixed.precision()).unwrap();
                assert_eq!(fixed.digits(), want.digits(), "p={p} expr mismatch");
                done += 1;
            }
        }
    }

    #[test]
    fn prime_mismatch_is_rejected() {
        let a = xp(3, 1, 1);
        let b = xp(5, 1, 1);
        assert_eq!(a.add(&b).unwrap_err(), PadicError::PrimeMismatch(3, 5));
    }

    #[test]
    fn parse_and_render_rationals() {
        assert_eq!(parse_rational("-72").unwrap(), rat(-72, 1));
        assert_eq!(parse_rational("6291/2178").unwrap(), rat(6291, 2178));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(rational_repr(&rat(-3, 2)), "-3/2");
        assert_eq!(rational_repr(&rat(14, 7)), "2");
    }
}
