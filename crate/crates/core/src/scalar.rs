//! Exact scalars: arbitrary-precision rationals and the extended real line.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A point of `ℝ ∪ {−∞, +∞}`.
///
/// The derived order puts `NegInf` below every finite value and `PosInf`
/// above, which is exactly the order of the extended reals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtReal {
    NegInf,
    Fin(Rational),
    PosInf,
}

impl ExtReal {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Fin(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtReal::Fin(r) => Some(r),
            _ => None,
        }
    }

    pub fn into_finite(self) -> Option<Rational> {
        match self {
            ExtReal::Fin(r) => Some(r),
            _ => None,
        }
    }

    /// Lossy conversion for plotting.
    pub fn to_f64(&self) -> f64 {
        match self {
            ExtReal::NegInf => f64::NEG_INFINITY,
            ExtReal::PosInf => f64::INFINITY,
            ExtReal::Fin(r) => rational_to_f64(r),
        }
    }
}

impl From<Rational> for ExtReal {
    fn from(r: Rational) -> Self {
        ExtReal::Fin(r)
    }
}

impl From<&Rational> for ExtReal {
    fn from(r: &Rational) -> Self {
        ExtReal::Fin(r.clone())
    }
}

impl PartialEq<Rational> for ExtReal {
    fn eq(&self, other: &Rational) -> bool {
        matches!(self, ExtReal::Fin(r) if r == other)
    }
}

impl PartialOrd<Rational> for ExtReal {
    fn partial_cmp(&self, other: &Rational) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering;
        Some(match self {
            ExtReal::NegInf => Ordering::Less,
            ExtReal::PosInf => Ordering::Greater,
            ExtReal::Fin(r) => r.cmp(other),
        })
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::PosInf => f.write_str("+inf"),
            ExtReal::Fin(r) => write!(f, "{r}"),
        }
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| if r.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

/// Parses a numeric literal exactly: an integer (`-3`), a `p/q` fraction, or
/// a decimal with optional exponent (`0.25`, `-1.5e-3`).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("invalid number literal {s:?}"));
    let t = s.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let num: BigInt = p.trim().parse().map_err(|_| bad())?;
        let den: BigInt = q.trim().parse().map_err(|_| bad())?;
        if !den.is_positive() {
            return Err(Error::NonPositiveDenominator(t.to_string()));
        }
        return Ok(Rational::new(num, den));
    }

    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = t[i + 1..].parse().map_err(|_| bad())?;
            (&t[..i], e)
        }
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = format!("{whole}{frac}");
    let mut value = Rational::from_integer(all.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    let factor = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= factor;
    } else {
        value /= factor;
    }
    Ok(if negative { -value } else { value })
}

/// Parses a literal that may also be `-inf`/`+inf`/`inf`.
pub fn parse_ext(s: &str) -> Result<ExtReal, Error> {
    match s.trim() {
        "-inf" => Ok(ExtReal::NegInf),
        "+inf" | "inf" => Ok(ExtReal::PosInf),
        other => parse_rational(other).map(ExtReal::Fin),
    }
}

pub(crate) fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// A finite point strictly inside the open interval `(lo, hi)`, assumed nonempty.
pub(crate) fn interior_point(lo: &ExtReal, hi: &ExtReal) -> Rational {
    match (lo, hi) {
        (ExtReal::Fin(a), ExtReal::Fin(b)) => half(a, b),
        (ExtReal::Fin(a), _) => a + Rational::one(),
        (_, ExtReal::Fin(b)) => b - Rational::one(),
        _ => Rational::zero(),
    }
}
