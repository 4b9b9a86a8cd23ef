//! Embedding dimension 3: `S = <u, v, w>` with `u = (0,1)`, `v = (a,b)`,
//! `w = (c,d)` and `0 < a/b < c/d`.
//!
//! Every factorization of `s = (x, y)` is determined by how `x` splits as
//! `alpha*a + beta*c`: the multiplicity of `u` is then forced to be
//! `delta = y - alpha*b - beta*d`, and the split is usable iff `delta >= 0`.
//! With `bc - ad = 1` membership has a two-condition test and the factorization
//! lengths form an arithmetic progression in a single parameter `t`, so the
//! extreme lengths and the elasticity come out in closed form.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::intlin::ext_gcd;
use crate::monoid::CanonicalMonoid3;
use crate::ratq::{ExtRat, Vec2};

/// The unique split `x = alpha*a + beta*c` with `0 <= alpha < c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalRep {
    pub x: BigInt,
    pub alpha: BigInt,
    pub beta: BigInt,
}

/// Returns `None` when `x` is not in the numerical semigroup `<a, c>`.
pub fn canonical_rep(a: &BigInt, c: &BigInt, x: &BigInt) -> Result<Option<CanonicalRep>> {
    if !a.is_positive() || !c.is_positive() || !a.gcd(c).is_one() {
        return Err(Error::GcdNotOne(a.to_string(), c.to_string()));
    }
    let (_, inv_a, _) = ext_gcd(a, c)?;
    let alpha = (x * inv_a).mod_floor(c);
    let beta = (x - &alpha * a) / c;
    if beta.is_negative() {
        return Ok(None);
    }
    Ok(Some(CanonicalRep {
        x: x.clone(),
        alpha,
        beta,
    }))
}

/// Multiplicity of `(0,1)` forced by the split `x = alpha*a + beta*c`.
/// Negative when the split does not lift to a factorization of `s`.
pub fn delta(m: &CanonicalMonoid3, s: &Vec2, alpha: &BigInt, beta: &BigInt) -> Result<BigInt> {
    if &(alpha * m.a() + beta * m.c()) != s.x() {
        return Err(Error::RepMismatch);
    }
    Ok(s.y() - alpha * m.b() - beta * m.d())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason3 {
    PhiOutOfRange,
    XNotRepresentable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership3 {
    Member(Factorization),
    NotMember(Reason3),
}

impl Membership3 {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership3::Member(_))
    }
}

fn factorization(
    m: &CanonicalMonoid3,
    s: &Vec2,
    ones: BigInt,
    alpha: BigInt,
    beta: BigInt,
) -> Factorization {
    Factorization::new(&m.generators(), vec![ones, alpha, beta], s)
        .expect("closed form is a factorization")
}

/// Membership under `bc - ad = 1`: `s` is a member iff `x/y <= c/d` and
/// `x` is in `<a, c>`. Members come back with the factorization built from
/// the canonical split.
pub fn member3_star(m: &CanonicalMonoid3, s: &Vec2) -> Result<Membership3> {
    if !m.star() {
        return Err(Error::StarRequired);
    }
    if (s.x() * m.d()).cmp(&(s.y() * m.c())) == Ordering::Greater {
        return Ok(Membership3::NotMember(Reason3::PhiOutOfRange));
    }
    let Some(rep) = canonical_rep(m.a(), m.c(), s.x())? else {
        return Ok(Membership3::NotMember(Reason3::XNotRepresentable));
    };
    let ones = delta(m, s, &rep.alpha, &rep.beta)?;
    assert!(
        !ones.is_negative(),
        "bc - ad = 1 guarantees a nonnegative multiplicity of (0,1)"
    );
    Ok(Membership3::Member(factorization(
        m, s, ones, rep.alpha, rep.beta,
    )))
}

/// Every factorization of `s`, with or without `bc - ad = 1`, ordered by
/// increasing multiplicity of `(a,b)`. Empty iff `s` is not a member.
///
/// Splits of `x` step through `alpha + t*c/g, beta - t*a/g` for
/// `g = gcd(a, c)`; the forced multiplicity of `(0,1)` drops by
/// `(bc - ad)/g > 0` per step, so the walk stops at the first negative one.
pub fn member3_general(m: &CanonicalMonoid3, s: &Vec2) -> Vec<Factorization> {
    let (a, c) = (m.a(), m.c());
    let g = a.gcd(c);
    let (xg, rem) = s.x().div_rem(&g);
    if !rem.is_zero() {
        return Vec::new();
    }
    let (ag, cg) = (a / &g, c / &g);
    let rep = canonical_rep(&ag, &cg, &xg).expect("a/g and c/g are coprime");
    let Some(rep) = rep else {
        return Vec::new();
    };
    let (mut alpha, mut beta) = (rep.alpha, rep.beta);
    let mut out = Vec::new();
    loop {
        let ones = delta(m, s, &alpha, &beta).expect("split sums to x");
        if ones.is_negative() {
            break;
        }
        out.push(factorization(m, s, ones, alpha.clone(), beta.clone()));
        if beta < ag {
            break;
        }
        alpha += &cg;
        beta -= &ag;
    }
    out
}

/// Which side of the middle generator's slope `s` lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `x/y < a/b`: the step count is limited by the multiplicity of `(c,d)`.
    Lower,
    /// `x/y = a/b`: both limits coincide.
    Boundary,
    /// `x/y > a/b`: the step count is limited by the multiplicity of `(0,1)`.
    Upper,
}

impl Branch {
    pub fn of(m: &CanonicalMonoid3, s: &Vec2) -> Branch {
        match (s.x() * m.b()).cmp(&(s.y() * m.a())) {
            Ordering::Less => Branch::Lower,
            Ordering::Equal => Branch::Boundary,
            Ordering::Greater => Branch::Upper,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Lower => "below",
            Branch::Boundary => "boundary",
            Branch::Upper => "above",
        }
    }
}

/// The two factorizations of extreme length, at `t = 0` and at the largest
/// admissible `t`, where step `t` moves `a*t` copies of `(c,d)` and `t`
/// copies of `(0,1)` into `c*t` copies of `(a,b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremeFactorizations {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub delta: BigInt,
    pub branch: Branch,
    pub t_max: BigInt,
    pub at_zero: Factorization,
    pub at_t_max: Factorization,
    pub len_at_zero: BigInt,
    pub len_at_t_max: BigInt,
}

impl ExtremeFactorizations {
    pub fn min_length(&self) -> &BigInt {
        (&self.len_at_zero).min(&self.len_at_t_max)
    }

    pub fn max_length(&self) -> &BigInt {
        (&self.len_at_zero).max(&self.len_at_t_max)
    }

    /// The factorization of minimal length.
    pub fn shortest(&self) -> &Factorization {
        if self.len_at_zero <= self.len_at_t_max {
            &self.at_zero
        } else {
            &self.at_t_max
        }
    }

    /// The factorization of maximal length.
    pub fn longest(&self) -> &Factorization {
        if self.len_at_zero <= self.len_at_t_max {
            &self.at_t_max
        } else {
            &self.at_zero
        }
    }
}

fn star_member_rep(m: &CanonicalMonoid3, s: &Vec2) -> Result<(CanonicalRep, BigInt)> {
    if !m.star() {
        return Err(Error::StarRequired);
    }
    if s.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !member3_star(m, s)?.is_member() {
        return Err(Error::NotMember);
    }
    let rep = canonical_rep(m.a(), m.c(), s.x())?.expect("member");
    let ones = delta(m, s, &rep.alpha, &rep.beta)?;
    Ok((rep, ones))
}

pub fn extreme_factorizations(m: &CanonicalMonoid3, s: &Vec2) -> Result<ExtremeFactorizations> {
    let (rep, delta) = star_member_rep(m, s)?;
    let (a, c) = (m.a(), m.c());
    let branch = Branch::of(m, s);
    let t_max = match branch {
        Branch::Lower => rep.beta.div_floor(a),
        Branch::Upper => delta.clone(),
        Branch::Boundary => {
            let (q, r) = rep.beta.div_rem(a);
            assert!(
                r.is_zero() && q == delta,
                "on the boundary slope beta/a must equal delta exactly"
            );
            q
        }
    };
    let step = c - a - BigInt::one();
    let len_at_zero = &delta + &rep.alpha + &rep.beta;
    let len_at_t_max = &len_at_zero + &t_max * &step;
    let at_zero = factorization(m, s, delta.clone(), rep.alpha.clone(), rep.beta.clone());
    let at_t_max = factorization(
        m,
        s,
        &delta - &t_max,
        &rep.alpha + c * &t_max,
        &rep.beta - a * &t_max,
    );
    debug_assert_eq!(at_zero.length(), &len_at_zero);
    debug_assert_eq!(at_t_max.length(), &len_at_t_max);
    Ok(ExtremeFactorizations {
        alpha: rep.alpha,
        beta: rep.beta,
        delta,
        branch,
        t_max,
        at_zero,
        at_t_max,
        len_at_zero,
        len_at_t_max,
    })
}

/// `max L(s) / min L(s)` from the two extreme factorizations.
pub fn elasticity3(m: &CanonicalMonoid3, s: &Vec2) -> Result<ExtRat> {
    let ext = extreme_factorizations(m, s)?;
    ExtRat::new(ext.max_length().clone(), ext.min_length().clone())
}
