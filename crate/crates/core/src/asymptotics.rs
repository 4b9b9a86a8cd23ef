//! Elasticity of the multiples `k*s` of a member `s` of a monoid with
//! `bc - ad = 1`.
//!
//! For `k` in suitable residue classes the elasticity does not depend on `k`
//! at all, and as `k` grows it converges to the same value. That value is a
//! linear fractional function of `(x, y)`, one per side of the middle
//! generator's slope, raised to `tau = sign(c - a - 1)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monoid::CanonicalMonoid3;
use crate::ratq::{ExtRat, Vec2};
use crate::solve3::{elasticity3, member3_star, Branch};

/// `sign(c - a - 1)`: +1 when `t = 0` is the shortest factorization, -1 when
/// it is the longest, 0 when all factorizations have the same length.
pub fn tau(m: &CanonicalMonoid3) -> i8 {
    let step = m.c() - m.a() - BigInt::one();
    match step.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Minus => -1,
    }
}

/// `(x, y) -> ((num_x*x + num_y*y) / (den_x*x + den_y*y))^tau`.
///
/// The fraction is stored as the closed form writes it; for `tau = -1` it is
/// below 1 and evaluation inverts it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitLFT {
    pub num_x: BigInt,
    pub num_y: BigInt,
    pub den_x: BigInt,
    pub den_y: BigInt,
    pub tau: i8,
}

impl LimitLFT {
    /// The map for elements with `x/y <= a/b`:
    /// `(c/a) * (a*y - (b-1)*x) / (c*y - (d-1)*x)`.
    pub fn below(m: &CanonicalMonoid3) -> LimitLFT {
        let (a, b, c, d) = (m.a(), m.b(), m.c(), m.d());
        let one = BigInt::one();
        LimitLFT {
            num_x: -(c * (b - &one)),
            num_y: c * a,
            den_x: -(a * (d - &one)),
            den_y: a * c,
            tau: tau(m),
        }
    }

    /// The map for elements with `x/y >= a/b`:
    /// `c * ((c-a)*y - (d-b)*x) / (c*y - (d-1)*x)`.
    pub fn above(m: &CanonicalMonoid3) -> LimitLFT {
        let (a, b, c, d) = (m.a(), m.b(), m.c(), m.d());
        LimitLFT {
            num_x: -(c * (d - b)),
            num_y: c * (c - a),
            den_x: -(d - BigInt::one()),
            den_y: c.clone(),
            tau: tau(m),
        }
    }

    /// The un-exponentiated fraction at `s`.
    pub fn fraction(&self, s: &Vec2) -> Result<ExtRat> {
        let num = &self.num_x * s.x() + &self.num_y * s.y();
        let den = &self.den_x * s.x() + &self.den_y * s.y();
        if num.is_zero() && den.is_zero() {
            return Err(Error::ZeroElement);
        }
        if num.is_negative() || !den.is_positive() {
            return Err(Error::NotMember);
        }
        ExtRat::new(num, den)
    }

    pub fn evaluate(&self, s: &Vec2) -> Result<ExtRat> {
        let f = self.fraction(s)?;
        Ok(match self.tau {
            0 => ExtRat::one(),
            t if t < 0 => f.recip(),
            _ => f,
        })
    }
}

impl fmt::Display for LimitLFT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({})x + ({})y) / (({})x + ({})y), exponent {}",
            self.num_x, self.num_y, self.den_x, self.den_y, self.tau
        )
    }
}

fn require_star_member(m: &CanonicalMonoid3, s: &Vec2) -> Result<()> {
    if !m.star() {
        return Err(Error::StarRequired);
    }
    if s.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !member3_star(m, s)?.is_member() {
        return Err(Error::NotMember);
    }
    Ok(())
}

fn require_multiple(k: &BigInt, modulus: &BigInt) -> Result<()> {
    if !k.is_positive() {
        return Err(Error::NonPositiveMultiplier);
    }
    if !k.is_multiple_of(modulus) {
        return Err(Error::PeriodicityViolated {
            k: k.to_string(),
            modulus: modulus.to_string(),
        });
    }
    Ok(())
}

/// `rho(k*s)` for `ac | k` and `x/y <= a/b`.
pub fn rho_special_ac(m: &CanonicalMonoid3, s: &Vec2, k: &BigInt) -> Result<ExtRat> {
    require_star_member(m, s)?;
    require_multiple(k, &(m.a() * m.c()))?;
    if Branch::of(m, s) == Branch::Upper {
        return Err(Error::WrongBranch);
    }
    LimitLFT::below(m).evaluate(s)
}

/// `rho(k*s)` for `c | k` and `x/y >= a/b`.
pub fn rho_special_c(m: &CanonicalMonoid3, s: &Vec2, k: &BigInt) -> Result<ExtRat> {
    require_star_member(m, s)?;
    require_multiple(k, m.c())?;
    if Branch::of(m, s) == Branch::Lower {
        return Err(Error::WrongBranch);
    }
    LimitLFT::above(m).evaluate(s)
}

/// `lim rho(k*s)` as `k -> infinity`, together with the map that produced it.
pub fn rho_limit(m: &CanonicalMonoid3, s: &Vec2) -> Result<(LimitLFT, ExtRat)> {
    require_star_member(m, s)?;
    match Branch::of(m, s) {
        Branch::Lower => {
            let lft = LimitLFT::below(m);
            let value = lft.evaluate(s)?;
            Ok((lft, value))
        }
        Branch::Upper => {
            let lft = LimitLFT::above(m);
            let value = lft.evaluate(s)?;
            Ok((lft, value))
        }
        Branch::Boundary => {
            let lft = LimitLFT::below(m);
            let value = lft.evaluate(s)?;
            let other = LimitLFT::above(m).evaluate(s)?;
            assert_eq!(
                value, other,
                "both limit formulas must agree on the boundary slope"
            );
            Ok((lft, value))
        }
    }
}

/// One line of a convergence study.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub k: u64,
    pub rho_exact: ExtRat,
    pub rho_limit: ExtRat,
    pub gap: ExtRat,
}

/// Exact `rho(k*s)` for `k = 1..=k_max` next to the limit, ascending in `k`.
pub fn scan_multiples(m: &CanonicalMonoid3, s: &Vec2, k_max: u64) -> Result<Vec<ScanRow>> {
    if k_max == 0 {
        return Err(Error::NonPositiveMultiplier);
    }
    let (_, limit) = rho_limit(m, s)?;
    (1..=k_max)
        .map(|k| {
            let ks = s.scale(&BigInt::from(k))?;
            let rho_exact = elasticity3(m, &ks)?;
            let gap = rho_exact.abs_diff(&limit);
            Ok(ScanRow {
                k,
                rho_exact,
                rho_limit: limit.clone(),
                gap,
            })
        })
        .collect()
}

pub const SCAN_CSV_HEADER: &str = "k,rho_exact,rho_limit,gap";

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(SCAN_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.k, r.rho_exact, r.rho_limit, r.gap
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratq::vec2;

    fn monoid(a: u64, b: u64, c: u64, d: u64) -> CanonicalMonoid3 {
        CanonicalMonoid3::new(a, b, c, d).unwrap()
    }

    fn q(n: u64, d: u64) -> ExtRat {
        ExtRat::new(n, d).unwrap()
    }

    fn k(n: u64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&monoid(1, 2, 3, 5)), 1);
        assert_eq!(tau(&monoid(1, 1, 2, 1)), 0);
        assert_eq!(tau(&monoid(3, 5, 2, 3)), -1);
    }

    #[test]
    fn special_ac_examples() {
        let m = monoid(1, 2, 3, 5);
        let s = vec2(6, 13);
        assert_eq!(rho_special_ac(&m, &s, &k(3)).unwrap(), q(7, 5));
        assert_eq!(elasticity3(&m, &vec2(18, 39)).unwrap(), q(7, 5));
        assert_eq!(rho_special_ac(&m, &s, &k(6)).unwrap(), q(7, 5));

        let flat = monoid(1, 1, 2, 1);
        assert_eq!(
            rho_special_ac(&flat, &vec2(1, 3), &k(2)).unwrap(),
            ExtRat::one()
        );
    }

    #[test]
    fn special_ac_errors() {
        let m = monoid(1, 2, 3, 5);
        assert!(matches!(
            rho_special_ac(&m, &vec2(6, 13), &k(4)),
            Err(Error::PeriodicityViolated { .. })
        ));
        assert_eq!(
            rho_special_ac(&m, &vec2(6, 11), &k(3)),
            Err(Error::WrongBranch)
        );
        assert_eq!(
            rho_special_ac(&m, &vec2(6, 9), &k(3)),
            Err(Error::NotMember)
        );
        assert_eq!(
            rho_special_ac(&m, &vec2(6, 13), &k(0)),
            Err(Error::NonPositiveMultiplier)
        );
        assert_eq!(
            rho_special_ac(&monoid(11, 10, 10, 3), &vec2(199, 120), &k(110)),
            Err(Error::StarRequired)
        );
    }

    #[test]
    fn special_c_examples() {
        let m = monoid(1, 2, 3, 5);
        let s = vec2(6, 11);
        assert_eq!(rho_special_c(&m, &s, &k(3)).unwrap(), q(4, 3));
        assert_eq!(elasticity3(&m, &vec2(18, 33)).unwrap(), q(4, 3));
        assert_eq!(rho_special_c(&m, &s, &k(30)).unwrap(), q(4, 3));
        assert_eq!(
            rho_special_c(&m, &vec2(6, 13), &k(3)),
            Err(Error::WrongBranch)
        );

        let flat = monoid(1, 1, 2, 1);
        assert_eq!(
            rho_special_c(&flat, &vec2(4, 3), &k(2)).unwrap(),
            ExtRat::one()
        );
        // 3*1 < 4*1 puts (3,4) below the middle slope
        assert_eq!(
            rho_special_c(&flat, &vec2(3, 4), &k(2)),
            Err(Error::WrongBranch)
        );
    }

    #[test]
    fn limit_examples() {
        let m = monoid(1, 2, 3, 5);
        let (lft, value) = rho_limit(&m, &vec2(6, 13)).unwrap();
        assert_eq!(value, q(7, 5));
        assert_eq!(lft.fraction(&vec2(6, 13)).unwrap(), q(21, 15));
        let (_, value) = rho_limit(&m, &vec2(6, 11)).unwrap();
        assert_eq!(value, q(4, 3));
        let (_, value) = rho_limit(&monoid(1, 1, 2, 1), &vec2(3, 4)).unwrap();
        assert_eq!(value, ExtRat::one());
    }

    #[test]
    fn limit_inverts_for_negative_tau() {
        let m = monoid(3, 5, 2, 3);
        let s = vec2(6, 13);
        let (lft, value) = rho_limit(&m, &s).unwrap();
        assert!(lft.fraction(&s).unwrap() < ExtRat::one());
        assert!(value > ExtRat::one());
    }

    #[test]
    fn limit_on_boundary() {
        let m = monoid(1, 2, 3, 5);
        let (_, value) = rho_limit(&m, &vec2(1, 2)).unwrap();
        assert_eq!(value, LimitLFT::above(&m).evaluate(&vec2(1, 2)).unwrap());
    }

    #[test]
    fn scan_examples() {
        let m = monoid(1, 2, 3, 5);
        let s = vec2(6, 13);
        let rows = scan_multiples(&m, &s, 3).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[2].rho_exact, q(7, 5));
        assert_eq!(rows[2].gap, ExtRat::zero());
        let rows = scan_multiples(&m, &s, 1).unwrap();
        assert_eq!(rows[0].rho_exact, elasticity3(&m, &s).unwrap());

        let flat = monoid(1, 1, 2, 1);
        for r in scan_multiples(&flat, &vec2(3, 4), 5).unwrap() {
            assert_eq!(r.rho_exact, ExtRat::one());
            assert_eq!(r.rho_limit, ExtRat::one());
        }
        assert_eq!(scan_multiples(&m, &s, 0), Err(Error::NonPositiveMultiplier));
    }

    #[test]
    fn csv_format() {
        let m = monoid(1, 2, 3, 5);
        let rows = scan_multiples(&m, &vec2(1, 2), 2).unwrap();
        let csv = scan_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("k,rho_exact,rho_limit,gap"));
        assert_eq!(lines.count(), 2);
    }
}
