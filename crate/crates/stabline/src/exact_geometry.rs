//! Exact rational scalars, primal points, and the orientation form that
//! everything else is built on.
//!
//! All arithmetic is on arbitrary-precision rationals kept in canonical
//! form (positive denominator, fully reduced), so equality and ordering
//! are exact and no operation ever rounds.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The universal scalar: an arbitrary-precision rational in lowest terms
/// with positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from an integer numerator/denominator pair.
///
/// Panics if `denom` is zero; use [`parse_rational`] for untrusted input.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational with denominator one.
pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Error produced when a rational string cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    /// The numerator or denominator is not a valid integer.
    MalformedInteger(String),
    /// The denominator is zero.
    ZeroDenominator(String),
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::MalformedInteger(s) => write!(f, "malformed rational `{s}`"),
            ParseRationalError::ZeroDenominator(s) => {
                write!(f, "zero denominator in rational `{s}`")
            }
        }
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `"n"` or `"n/d"` into a canonical rational.
///
/// The denominator may be negative in the input; the result is normalized
/// to a positive denominator in lowest terms. A zero denominator is an
/// error, never a panic.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let malformed = || ParseRationalError::MalformedInteger(text.to_owned());
    let parse_int = |part: &str| part.parse::<BigInt>().map_err(|_| malformed());
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((numer, denom)) => {
            let numer = parse_int(numer)?;
            let denom = parse_int(denom)?;
            if denom.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(text.to_owned()));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Canonical string form: `"n"` for integers, `"n/d"` otherwise (d > 0,
/// lowest terms). Round-trips bit-exactly through [`parse_rational`].
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// A point of the primal plane with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Point {
        Point { x, y }
    }

    /// Point with integer coordinates.
    pub fn from_integers(x: i64, y: i64) -> Point {
        Point::new(integer(x), integer(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Turn direction of an ordered point triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Collinear,
    Clockwise,
}

/// The orientation form of an ordered triple: the determinant of the
/// 3×3 matrix whose rows are all ones, the abscissas, and the ordinates,
/// expanded to `(x_b − x_a)(y_c − y_a) − (x_c − x_a)(y_b − y_a)`.
///
/// Positive for counter-clockwise triples, zero exactly for collinear
/// ones, negative for clockwise. Invariant under translations and
/// rotations, and alternating under argument swaps.
pub fn phi(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&c.x - &a.x) * (&b.y - &a.y)
}

/// Sign classification of [`phi`].
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    let value = phi(a, b, c);
    if value.is_zero() {
        Orientation::Collinear
    } else if value.is_positive() {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

/// Translates a point by the vector `(v.0, v.1)`.
pub fn translate(p: &Point, v: &(Rational, Rational)) -> Point {
    Point::new(&p.x + &v.0, &p.y + &v.1)
}

/// A rotation about the origin with exact rational cosine and sine.
///
/// Only rational points of the unit circle are representable (for example
/// Pythagorean pairs such as (3/5, 4/5)); the constructor rejects any
/// pair with cos² + sin² ≠ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRotation {
    cos: Rational,
    sin: Rational,
}

/// Error for a cos/sin pair that does not lie on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvalidRotation;

impl fmt::Display for InvalidRotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a point of the unit circle: cos² + sin² ≠ 1")
    }
}

impl std::error::Error for InvalidRotation {}

impl RationalRotation {
    pub fn new(cos: Rational, sin: Rational) -> Result<RationalRotation, InvalidRotation> {
        if &cos * &cos + &sin * &sin != Rational::one() {
            return Err(InvalidRotation);
        }
        Ok(RationalRotation { cos, sin })
    }

    /// Rotation built from a Pythagorean parameter pair: for integers
    /// (m, n) ≠ (0, 0), cos = (m² − n²)/(m² + n²) and sin = 2mn/(m² + n²),
    /// which lies on the unit circle identically.
    pub fn from_parameters(m: i64, n: i64) -> Option<RationalRotation> {
        let (m, n) = (BigInt::from(m), BigInt::from(n));
        let norm = &m * &m + &n * &n;
        if norm.is_zero() {
            return None;
        }
        Some(RationalRotation {
            cos: Rational::new(&m * &m - &n * &n, norm.clone()),
            sin: Rational::new(BigInt::from(2) * m * n, norm),
        })
    }

    /// The inverse rotation (same cosine, negated sine).
    pub fn inverse(&self) -> RationalRotation {
        RationalRotation {
            cos: self.cos.clone(),
            sin: -self.sin.clone(),
        }
    }

    pub fn cos(&self) -> &Rational {
        &self.cos
    }

    pub fn sin(&self) -> &Rational {
        &self.sin
    }
}

/// Rotates a point about the origin: `(cos·x − sin·y, sin·x + cos·y)`.
pub fn rotate(p: &Point, r: &RationalRotation) -> Point {
    Point::new(&r.cos * &p.x - &r.sin * &p.y, &r.sin * &p.x + &r.cos * &p.y)
}
