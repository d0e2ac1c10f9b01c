//! Exact truth-degree arithmetic.
//!
//! Truth degrees are exact rationals in `[0, 1]`, kept in lowest terms so
//! that equality and ordering are numeric. The finite scale `C_n` is the
//! set `{0, 1/n, ..., n/n}`. Combination functions come in two flavours,
//! Gödel and Zadeh; both use min/max for conjunction/disjunction, which
//! makes them idempotent and licenses exact evaluation of the unbounded
//! temporal operators on lassos.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Signed exact rational, used for conditional weights and world weights.
pub type Rational = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegreeError {
    #[error("degree {0} is outside [0, 1]")]
    OutOfRange(Rational),
    #[error("invalid degree literal `{0}`")]
    BadLiteral(String),
    #[error("zero denominator in degree literal")]
    ZeroDenominator,
}

/// An exact truth degree in `[0, 1]`, stored in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(Rational);

impl Degree {
    pub const fn zero() -> Self {
        Degree(Ratio::new_raw(0, 1))
    }

    pub const fn one() -> Self {
        Degree(Ratio::new_raw(1, 1))
    }

    pub fn new(numer: i64, denom: i64) -> Result<Self, DegreeError> {
        if denom == 0 {
            return Err(DegreeError::ZeroDenominator);
        }
        Self::from_rational(Ratio::new(numer, denom))
    }

    pub fn from_rational(r: Rational) -> Result<Self, DegreeError> {
        if r.is_negative() || r > Rational::one() {
            return Err(DegreeError::OutOfRange(r));
        }
        Ok(Degree(r))
    }

    pub fn as_rational(self) -> Rational {
        self.0
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(self) -> bool {
        self.0.is_one()
    }

    /// `1 - self`; total on `[0, 1]`.
    pub fn complement(self) -> Self {
        Degree(Rational::one() - self.0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rational(f, self.0)
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Degree({})", self)
    }
}

/// Canonical rational text: bare integer when the denominator is 1,
/// `numer/denom` otherwise.
pub fn write_rational(f: &mut fmt::Formatter<'_>, r: Rational) -> fmt::Result {
    if r.denom() == &1 {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Renders a rational in the same canonical form as [`write_rational`].
pub fn rational_to_string(r: Rational) -> String {
    if r.denom() == &1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses a signed rational: `k`, `k/m`, or a decimal like `-0.25`.
pub fn parse_rational(text: &str) -> Result<Rational, DegreeError> {
    let bad = || DegreeError::BadLiteral(text.to_string());
    let s = text.trim();
    let (neg, s) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if s.is_empty() {
        return Err(bad());
    }
    let r = if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.parse().map_err(|_| bad())?;
        let d: i64 = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(DegreeError::ZeroDenominator);
        }
        Ratio::new(n, d)
    } else if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let fnum: i64 = frac.parse().map_err(|_| bad())?;
        let scale = 10i64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
        Ratio::from_integer(int) + Ratio::new(fnum, scale)
    } else {
        Ratio::from_integer(s.parse().map_err(|_| bad())?)
    };
    Ok(if neg { -r } else { r })
}

impl FromStr for Degree {
    type Err = DegreeError;

    /// Accepts `k/m`, decimal (`0.8` parses to the exact rational `4/5`),
    /// and integer forms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Degree::from_rational(parse_rational(s)?)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScaleError {
    #[error("scale denominator must be positive")]
    ZeroScale,
}

/// The finite truth space `C_n = {0, 1/n, ..., n/n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scale {
    n: u32,
}

impl Scale {
    pub fn new(n: u32) -> Result<Self, ScaleError> {
        if n == 0 {
            return Err(ScaleError::ZeroScale);
        }
        Ok(Scale { n })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    /// Number of members, `n + 1`.
    pub fn len(self) -> usize {
        self.n as usize + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }

    /// The member `k/n`; panics if `k > n`.
    pub fn member(self, k: u32) -> Degree {
        assert!(k <= self.n, "scale member index out of range");
        Degree(Ratio::new(k as i64, self.n as i64))
    }

    pub fn members(self) -> impl Iterator<Item = Degree> {
        (0..=self.n).map(move |k| self.member(k))
    }

    pub fn contains(self, d: Degree) -> bool {
        (d.as_rational() * Rational::from_integer(self.n as i64)).is_integer()
    }

    /// Clamps an arbitrary rational into `[0, 1]` and rounds it to the
    /// nearest scale member, ties toward the lower member.
    pub fn round(self, x: Rational) -> Degree {
        let clamped = if x.is_negative() {
            Rational::zero()
        } else if x > Rational::one() {
            Rational::one()
        } else {
            x
        };
        let scaled = clamped * Rational::from_integer(self.n as i64);
        let floor = scaled.floor().to_integer();
        let frac = scaled - Rational::from_integer(floor);
        let half = Ratio::new(1, 2);
        let k = if frac > half { floor + 1 } else { floor };
        self.member(k as u32)
    }
}

/// The two shipped choices of combination functions. Both use min/max for
/// `tnorm`/`snorm`, so both are idempotent; a future non-idempotent
/// algebra must report `idempotent() == false`, which disables the
/// unbounded temporal operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algebra {
    Goedel,
    Zadeh,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::Goedel => "goedel",
            Algebra::Zadeh => "zadeh",
        }
    }

    /// `a ⊗ b = min{a, b}` for both shipped algebras.
    pub fn tnorm(self, a: Degree, b: Degree) -> Degree {
        a.min(b)
    }

    /// `a ⊕ b = max{a, b}` for both shipped algebras.
    pub fn snorm(self, a: Degree, b: Degree) -> Degree {
        a.max(b)
    }

    /// Gödel: `1` if `a ≤ b`, else `b`. Zadeh: `max(1 - a, b)`.
    pub fn implication(self, a: Degree, b: Degree) -> Degree {
        match self {
            Algebra::Goedel => {
                if a <= b {
                    Degree::one()
                } else {
                    b
                }
            }
            Algebra::Zadeh => a.complement().max(b),
        }
    }

    /// Gödel: `1` if `a = 0`, else `0`. Zadeh: `1 - a`.
    pub fn negation(self, a: Degree) -> Degree {
        match self {
            Algebra::Goedel => {
                if a.is_zero() {
                    Degree::one()
                } else {
                    Degree::zero()
                }
            }
            Algebra::Zadeh => a.complement(),
        }
    }

    /// Whether `tnorm`/`snorm` are idempotent. Unbounded temporal
    /// operators are exact on lassos only for idempotent algebras.
    pub fn idempotent(self) -> bool {
        match self {
            Algebra::Goedel | Algebra::Zadeh => true,
        }
    }
}

impl FromStr for Algebra {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "goedel" | "godel" | "g" => Ok(Algebra::Goedel),
            "zadeh" | "z" => Ok(Algebra::Zadeh),
            other => Err(format!("unknown algebra `{other}` (expected goedel or zadeh)")),
        }
    }
}
