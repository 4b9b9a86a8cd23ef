//! Integer linear algebra on matrices with two rows.
//!
//! Provides the extended Euclidean algorithm, a Hermite-style normalization
//! that sends a chosen column to `(0, 1)`, and the determinantal divisors
//! `d1` (gcd of entries) and `d2` (gcd of 2x2 minors).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratq::Vec2;

pub type Column = [BigInt; 2];

/// A 2 x p integer matrix stored by columns, p >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2xP {
    cols: Vec<Column>,
}

impl Mat2xP {
    pub fn new(cols: Vec<Column>) -> Result<Self> {
        if cols.is_empty() {
            return Err(Error::EmbeddingDimension(0));
        }
        Ok(Mat2xP { cols })
    }

    pub fn from_vecs(vs: &[Vec2]) -> Result<Self> {
        Mat2xP::new(vs.iter().map(|v| [v.x().clone(), v.y().clone()]).collect())
    }

    pub fn cols(&self) -> &[Column] {
        &self.cols
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// The matrix with `v` appended as a last column.
    pub fn with_column(&self, v: &Vec2) -> Mat2xP {
        let mut cols = self.cols.clone();
        cols.push([v.x().clone(), v.y().clone()]);
        Mat2xP { cols }
    }

    pub fn left_mul(&self, u: &UniMat2) -> Mat2xP {
        Mat2xP {
            cols: self.cols.iter().map(|c| u.apply(c)).collect(),
        }
    }

    /// Columns as quadrant points, or `None` if any entry is negative.
    pub fn to_vecs(&self) -> Option<Vec<Vec2>> {
        self.cols
            .iter()
            .map(|[x, y]| Vec2::new(x.clone(), y.clone()).ok())
            .collect()
    }
}

/// A 2x2 integer matrix with determinant +1 or -1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniMat2 {
    rows: [[BigInt; 2]; 2],
}

impl UniMat2 {
    pub fn new(rows: [[BigInt; 2]; 2]) -> Option<Self> {
        let m = UniMat2 { rows };
        let det = m.det();
        (det.is_one() || (-det).is_one()).then_some(m)
    }

    pub fn from_i64(rows: [[i64; 2]; 2]) -> Option<Self> {
        UniMat2::new(rows.map(|r| r.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        UniMat2::from_i64([[1, 0], [0, 1]]).unwrap()
    }

    pub fn swap() -> Self {
        UniMat2::from_i64([[0, 1], [1, 0]]).unwrap()
    }

    pub fn rows(&self) -> &[[BigInt; 2]; 2] {
        &self.rows
    }

    pub fn det(&self) -> BigInt {
        let [[a, b], [c, d]] = &self.rows;
        a * d - b * c
    }

    pub fn is_identity(&self) -> bool {
        *self == UniMat2::identity()
    }

    pub fn apply(&self, col: &Column) -> Column {
        let [[a, b], [c, d]] = &self.rows;
        [a * &col[0] + b * &col[1], c * &col[0] + d * &col[1]]
    }

    /// Image of a quadrant point, or `None` when it leaves the quadrant.
    pub fn apply_vec(&self, v: &Vec2) -> Option<Vec2> {
        let [x, y] = self.apply(&[v.x().clone(), v.y().clone()]);
        Vec2::new(x, y).ok()
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &UniMat2) -> UniMat2 {
        let l = &self.rows;
        let r = &rhs.rows;
        let entry = |i: usize, j: usize| &l[i][0] * &r[0][j] + &l[i][1] * &r[1][j];
        UniMat2 {
            rows: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]],
        }
    }

    pub fn inverse(&self) -> UniMat2 {
        let [[a, b], [c, d]] = &self.rows;
        let det = self.det();
        // det is +-1, so dividing by it is multiplying by it
        UniMat2 {
            rows: [[d * &det, -b * &det], [-c * &det, a * &det]],
        }
    }
}

impl fmt::Display for UniMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.rows;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Extended Euclid: returns `(g, s, t)` with `g = gcd(|a|, |b|) > 0` and
/// `s*a + t*b = g`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        Ok((-old_r, -old_s, -old_t))
    } else {
        Ok((old_r, old_s, old_t))
    }
}

/// Finds a unimodular `U'` sending the first column of `m` to `(0, 1)` and
/// keeping every other column inside the nonnegative quadrant.
///
/// `U'` is the row swap composed with a Hermite reduction: the first column
/// is cleared with Bezout coefficients, then the second row gets the
/// smallest shear by the first row that makes it nonnegative. An input
/// whose first column is already `(0, 1)` with nonnegative entries comes
/// back unchanged under the identity.
pub fn row_swapped_hnf(m: &Mat2xP) -> Result<(UniMat2, Mat2xP)> {
    let [p, q] = &m.cols[0];
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (g, s, t) = ext_gcd(p, q)?;
    if !g.is_one() {
        return Err(Error::NotPhiMinimal(format!("{p},{q}")));
    }
    // det [[q, -p], [s, t]] = q*t + p*s = 1
    let clear = UniMat2 {
        rows: [[q.clone(), -p.clone()], [s, t]],
    };
    let cleared = m.left_mul(&clear);

    let mut shear = BigInt::zero();
    for [x, y] in &cleared.cols {
        if x.is_negative() {
            return Err(Error::NegativeResult);
        }
        if y.is_negative() {
            if x.is_zero() {
                return Err(Error::NegativeResult);
            }
            // smallest k with y + k*x >= 0
            let k = (-y).div_ceil(x);
            shear = shear.max(k);
        }
    }
    let u = UniMat2 {
        rows: [[BigInt::one(), BigInt::zero()], [shear, BigInt::one()]],
    }
    .mul(&clear);
    let out = m.left_mul(&u);
    debug_assert!(out.cols[0] == [BigInt::zero(), BigInt::one()]);
    Ok((u, out))
}

/// The determinantal divisors `(d1, d2)`. `d2` is 0 when there are fewer
/// than two columns or every 2x2 minor vanishes.
pub fn det_divisors(m: &Mat2xP) -> (BigInt, BigInt) {
    let d1 = m
        .cols
        .iter()
        .flat_map(|c| c.iter())
        .fold(BigInt::zero(), |g, e| g.gcd(e));
    let mut d2 = BigInt::zero();
    for (i, ci) in m.cols.iter().enumerate() {
        for cj in &m.cols[i + 1..] {
            let minor = &ci[0] * &cj[1] - &cj[0] * &ci[1];
            d2 = d2.gcd(&minor);
        }
    }
    (d1, d2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum D2Verdict {
    Inconclusive,
    NotMember,
}

/// Necessary membership test: appending a member as a column cannot change
/// `d2`. Sound for rejection, silent otherwise.
pub fn d2_test(m: &Mat2xP, s: &Vec2) -> D2Verdict {
    let (_, before) = det_divisors(m);
    let (_, after) = det_divisors(&m.with_column(s));
    if before == after {
        D2Verdict::Inconclusive
    } else {
        D2Verdict::NotMember
    }
}
