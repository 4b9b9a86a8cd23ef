//! Points of the nonnegative quadrant and the extended nonnegative rationals.
//!
//! Every monoid element and generator is a [`Vec2`]. Slopes `x/y` live in
//! [`ExtRat`], the nonnegative rationals with `+inf` adjoined, which is totally
//! ordered and always kept in lowest terms so that equality is structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A point `(x, y)` of the nonnegative integer quadrant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec2 {
    x: BigInt,
    y: BigInt,
}

/// Shorthand for small literal vectors.
pub fn vec2(x: u64, y: u64) -> Vec2 {
    Vec2 {
        x: BigInt::from(x),
        y: BigInt::from(y),
    }
}

impl Vec2 {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<Self> {
        let (x, y) = (x.into(), y.into());
        if x.is_negative() || y.is_negative() {
            return Err(Error::NegativeCoordinate);
        }
        Ok(Vec2 { x, y })
    }

    pub fn zero() -> Self {
        vec2(0, 0)
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `k * self` for a nonnegative multiplier.
    pub fn scale(&self, k: &BigInt) -> Result<Self> {
        Vec2::new(&self.x * k, &self.y * k)
    }

    /// True when the coordinates are coprime, i.e. no shorter vector has the
    /// same slope.
    pub fn is_phi_minimal(&self) -> bool {
        self.x.gcd(&self.y).is_one()
    }
}

impl Add for &Vec2 {
    type Output = Vec2;

    fn add(self, rhs: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        }
    }
}

impl Add for Vec2 {
    type Output = Vec2;

    fn add(self, rhs: Vec2) -> Vec2 {
        &self + &rhs
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl FromStr for Vec2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::cli::parse_vector(s)
    }
}

/// A nonnegative rational in lowest terms, or `+inf`.
///
/// Infinity is stored as `1/0` and zero as `0/1`, so the representation of
/// every value is unique.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtRat {
    num: BigInt,
    den: BigInt,
}

impl ExtRat {
    /// Builds `num/den` in lowest terms. `den = 0` with `num > 0` is `+inf`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if num.is_negative() || den.is_negative() {
            return Err(Error::NegativeCoordinate);
        }
        if num.is_zero() && den.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = num.gcd(&den);
        Ok(ExtRat {
            num: num / &g,
            den: den / g,
        })
    }

    pub fn zero() -> Self {
        ExtRat {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        ExtRat {
            num: BigInt::one(),
            den: BigInt::one(),
        }
    }

    pub fn infinity() -> Self {
        ExtRat {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// `1/self`, exchanging `0` and `+inf`.
    pub fn recip(&self) -> Self {
        ExtRat {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    /// `|self - other|`. Any infinite operand makes the result infinite,
    /// except that the distance from `+inf` to itself is zero.
    pub fn abs_diff(&self, other: &ExtRat) -> ExtRat {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => ExtRat::zero(),
            (true, false) | (false, true) => ExtRat::infinity(),
            (false, false) => {
                let lhs = &self.num * &other.den;
                let rhs = &other.num * &self.den;
                let diff = (lhs - rhs).abs();
                ExtRat::new(diff, &self.den * &other.den).expect("finite denominators")
            }
        }
    }

    /// Decimal approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            return f64::INFINITY;
        }
        match (self.num.to_f64(), self.den.to_f64()) {
            (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
            _ => f64::NAN,
        }
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiplication also orders 1/0 above every finite value.
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for ExtRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(ExtRat::infinity());
        }
        let bad = |offset: usize| Error::Syntax {
            offset,
            message: format!("expected p/q, p or inf, found {s:?}"),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.trim().parse().map_err(|_| bad(0))?;
        let den: BigInt = den
            .trim()
            .parse()
            .map_err(|_| bad(s.find('/').unwrap_or(0)))?;
        if den.is_zero() {
            return Err(bad(s.find('/').unwrap_or(0)));
        }
        ExtRat::new(num, den)
    }
}

/// The slope map `(x, y) -> x/y`, with `x/0 = +inf`.
pub fn phi(v: &Vec2) -> Result<ExtRat> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    ExtRat::new(v.x.clone(), v.y.clone())
}

/// Component-wise sum. Its slope lies between the slopes of the summands.
pub fn mediant(u: &Vec2, v: &Vec2) -> Vec2 {
    u + v
}

/// Compares `phi(u)` with `phi(v)` by cross-multiplication, without building
/// the fractions. Both vectors must be nonzero.
pub fn slope_cmp(u: &Vec2, v: &Vec2) -> Ordering {
    (&u.x * &v.y).cmp(&(&v.x * &u.y))
}
