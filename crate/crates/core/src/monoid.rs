//! Affine monoids in the plane with two or three generators, and their
//! normalized form `<(0,1), (a,b)>` or `<(0,1), (a,b), (c,d)>`.
//!
//! Normalization sorts generators by slope, then applies a unimodular
//! change of coordinates sending the smallest-slope generator to `(0, 1)`.
//! Membership, factorization multiplicities and lengths are unchanged by the
//! transform; only the target vector has to be carried through it.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intlin::{row_swapped_hnf, Mat2xP, UniMat2};
use crate::ratq::{phi, slope_cmp, Vec2};
use crate::solve2::{member2, Membership2};

/// Generators as given by the user: 2 or 3 distinct nonzero vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawMonoid {
    gens: Vec<Vec2>,
}

impl RawMonoid {
    pub fn new(gens: Vec<Vec2>) -> Result<Self> {
        if !(2..=3).contains(&gens.len()) {
            return Err(Error::EmbeddingDimension(gens.len()));
        }
        let mut seen = HashSet::new();
        for g in &gens {
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            if !seen.insert(g) {
                return Err(Error::DuplicateGenerator(g.to_string()));
            }
        }
        Ok(RawMonoid { gens })
    }

    pub fn gens(&self) -> &[Vec2] {
        &self.gens
    }
}

/// `<(0,1), (a,b)>` with `gcd(a,b) = 1` and `a >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalMonoid2 {
    a: BigInt,
    b: BigInt,
    transform: UniMat2,
    order: Vec<usize>,
}

impl CanonicalMonoid2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        let v = Vec2::new(a.clone(), b.clone())?;
        if a.is_zero() {
            return Err(Error::DuplicatePhi("0".into()));
        }
        if !v.is_phi_minimal() {
            return Err(Error::NotPhiMinimal(v.to_string()));
        }
        Ok(CanonicalMonoid2 {
            a,
            b,
            transform: UniMat2::identity(),
            order: vec![0, 1],
        })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn generators(&self) -> Vec<Vec2> {
        vec![unit(), Vec2::new(self.a.clone(), self.b.clone()).unwrap()]
    }

    pub fn transform(&self) -> &UniMat2 {
        &self.transform
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// `<(0,1), (a,b), (c,d)>` with `0 < a/b < c/d` and both generators
/// phi-minimal. `star` records whether `bc - ad = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalMonoid3 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
    star: bool,
    transform: UniMat2,
    order: Vec<usize>,
}

impl CanonicalMonoid3 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        let v = Vec2::new(a.clone(), b.clone())?;
        let w = Vec2::new(c.clone(), d.clone())?;
        for g in [&v, &w] {
            if !g.is_phi_minimal() {
                return Err(Error::NotPhiMinimal(g.to_string()));
            }
        }
        if a.is_zero() {
            return Err(Error::DuplicatePhi("0".into()));
        }
        if slope_cmp(&v, &w) != Ordering::Less {
            // equal slopes of phi-minimal vectors means equal vectors
            if v == w {
                return Err(Error::DuplicatePhi(phi(&v)?.to_string()));
            }
            return Err(Error::NormalizationEscapesCone);
        }
        let star = &b * &c - &a * &d == BigInt::one();
        Ok(CanonicalMonoid3 {
            a,
            b,
            c,
            d,
            star,
            transform: UniMat2::identity(),
            order: vec![0, 1, 2],
        })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn star(&self) -> bool {
        self.star
    }

    pub fn generators(&self) -> Vec<Vec2> {
        vec![
            unit(),
            Vec2::new(self.a.clone(), self.b.clone()).unwrap(),
            Vec2::new(self.c.clone(), self.d.clone()).unwrap(),
        ]
    }

    pub fn transform(&self) -> &UniMat2 {
        &self.transform
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Either normal form, as produced by [`canonicalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Canonical {
    Dim2(CanonicalMonoid2),
    Dim3(CanonicalMonoid3),
}

impl Canonical {
    pub fn generators(&self) -> Vec<Vec2> {
        match self {
            Canonical::Dim2(m) => m.generators(),
            Canonical::Dim3(m) => m.generators(),
        }
    }

    /// Change of coordinates taking the original generators to the canonical
    /// ones.
    pub fn transform(&self) -> &UniMat2 {
        match self {
            Canonical::Dim2(m) => &m.transform,
            Canonical::Dim3(m) => &m.transform,
        }
    }

    /// `order()[i]` is the index in the original generator list of canonical
    /// generator `i`.
    pub fn order(&self) -> &[usize] {
        match self {
            Canonical::Dim2(m) => &m.order,
            Canonical::Dim3(m) => &m.order,
        }
    }

    pub fn star(&self) -> Option<bool> {
        match self {
            Canonical::Dim2(_) => None,
            Canonical::Dim3(m) => Some(m.star),
        }
    }

    /// Image of an original-coordinates vector. `None` means the image left
    /// the quadrant, so the vector cannot be a member.
    pub fn to_canonical(&self, s: &Vec2) -> Option<Vec2> {
        self.transform().apply_vec(s)
    }

    /// Position of original generator `j` in canonical order, i.e. the
    /// inverse permutation of [`Canonical::order`].
    pub fn original_positions(&self) -> Vec<usize> {
        let order = self.order();
        let mut inv = vec![0; order.len()];
        for (i, &j) in order.iter().enumerate() {
            inv[j] = i;
        }
        inv
    }
}

fn unit() -> Vec2 {
    Vec2::new(0, 1).unwrap()
}

/// Sorts generators by slope and moves the smallest one to `(0, 1)` with a
/// unimodular transform, keeping the rest in the quadrant.
pub fn canonicalize(raw: &RawMonoid) -> Result<Canonical> {
    let gens = raw.gens();
    for g in gens {
        if !g.is_phi_minimal() {
            return Err(Error::NotPhiMinimal(g.to_string()));
        }
    }
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by(|&i, &j| slope_cmp(&gens[i], &gens[j]));
    for w in order.windows(2) {
        if slope_cmp(&gens[w[0]], &gens[w[1]]) == Ordering::Equal {
            return Err(Error::DuplicatePhi(phi(&gens[w[0]])?.to_string()));
        }
    }

    let sorted: Vec<Vec2> = order.iter().map(|&i| gens[i].clone()).collect();
    let m = Mat2xP::from_vecs(&sorted)?;
    let (transform, image) = row_swapped_hnf(&m).map_err(|e| match e {
        Error::NegativeResult => Error::NormalizationEscapesCone,
        e => e,
    })?;
    let image = image.to_vecs().ok_or(Error::NormalizationEscapesCone)?;

    // A determinant -1 transform would flip slope order; ours never does,
    // but the contract is slope-ascending output either way.
    let mut resort: Vec<usize> = (0..image.len()).collect();
    resort.sort_by(|&i, &j| slope_cmp(&image[i], &image[j]));
    let order: Vec<usize> = resort.iter().map(|&i| order[i]).collect();
    let image: Vec<Vec2> = resort.iter().map(|&i| image[i].clone()).collect();
    if image[0] != unit() {
        return Err(Error::NormalizationEscapesCone);
    }

    match image.as_slice() {
        [_, v] => {
            let mut m = CanonicalMonoid2::new(v.x().clone(), v.y().clone())?;
            m.transform = transform;
            m.order = order;
            Ok(Canonical::Dim2(m))
        }
        [_, v, w] => {
            let mut m =
                CanonicalMonoid3::new(v.x().clone(), v.y().clone(), w.x().clone(), w.y().clone())?;
            m.transform = transform;
            m.order = order;
            Ok(Canonical::Dim3(m))
        }
        _ => Err(Error::EmbeddingDimension(image.len())),
    }
}

/// True iff `bc - ad = 1`.
pub fn check_star(m: &CanonicalMonoid3) -> bool {
    &m.b * &m.c - &m.a * &m.d == BigInt::one()
}

/// True iff no generator lies in the monoid generated by the others.
///
/// In normal form `(0,1)` is never redundant (every other generator has a
/// positive first coordinate), and each remaining check is membership in a
/// two-generator normal form, which [`member2`] decides exactly.
pub fn validate_minimal_generation(m: &Canonical) -> bool {
    redundant_generator(m).is_none()
}

/// The first canonical generator that the others already generate, if any.
pub fn redundant_generator(m: &Canonical) -> Option<Vec2> {
    let Canonical::Dim3(m) = m else {
        return None;
    };
    let v = Vec2::new(m.a.clone(), m.b.clone()).unwrap();
    let w = Vec2::new(m.c.clone(), m.d.clone()).unwrap();
    let with_w = CanonicalMonoid2::new(m.c.clone(), m.d.clone()).ok()?;
    if matches!(member2(&with_w, &v), Membership2::Member(_)) {
        return Some(v);
    }
    let with_v = CanonicalMonoid2::new(m.a.clone(), m.b.clone()).ok()?;
    if matches!(member2(&with_v, &w), Membership2::Member(_)) {
        return Some(w);
    }
    None
}

/// `d2` of the canonical generator matrix: `gcd(a, c)` in dimension 3.
pub fn generator_d2(m: &CanonicalMonoid3) -> BigInt {
    m.a.gcd(&m.c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::det_divisors;
    use crate::ratq::vec2;

    fn raw(gs: &[(u64, u64)]) -> RawMonoid {
        RawMonoid::new(gs.iter().map(|&(x, y)| vec2(x, y)).collect()).unwrap()
    }

    fn dim3(c: Canonical) -> CanonicalMonoid3 {
        match c {
            Canonical::Dim3(m) => m,
            other => panic!("expected dimension 3, got {other:?}"),
        }
    }

    #[test]
    fn canonicalize_example_monoid() {
        let m = dim3(canonicalize(&raw(&[(0, 1), (11, 10), (10, 3)])).unwrap());
        assert_eq!(
            (m.a(), m.b(), m.c(), m.d()),
            (&11.into(), &10.into(), &10.into(), &3.into())
        );
        assert!(!m.star());
        assert!(m.transform().is_identity());
    }

    #[test]
    fn canonicalize_two_generators() {
        let c = canonicalize(&raw(&[(2, 1), (3, 1)])).unwrap();
        assert_eq!(c.generators(), vec![vec2(0, 1), vec2(1, 1)]);
        assert_eq!(
            c.transform(),
            &UniMat2::from_i64([[1, -2], [0, 1]]).unwrap()
        );
        assert_eq!(c.star(), None);
    }

    #[test]
    fn canonicalize_star_monoid() {
        let m = dim3(canonicalize(&raw(&[(0, 1), (1, 2), (3, 5)])).unwrap());
        assert_eq!(
            (m.a(), m.b(), m.c(), m.d()),
            (&1.into(), &2.into(), &3.into(), &5.into())
        );
        assert!(m.star());
    }

    #[test]
    fn canonicalize_sorts_and_records_order() {
        let c = canonicalize(&raw(&[(3, 5), (0, 1), (1, 2)])).unwrap();
        assert_eq!(c.order(), &[1, 2, 0]);
        assert_eq!(c.original_positions(), vec![2, 0, 1]);
        assert!(c.transform().is_identity());
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let first = canonicalize(&raw(&[(5, 2), (2, 1), (7, 4)])).unwrap();
        let again = canonicalize(&RawMonoid::new(first.generators()).unwrap()).unwrap();
        assert_eq!(again.generators(), first.generators());
        assert!(again.transform().is_identity());
    }

    #[test]
    fn canonicalize_errors() {
        assert!(matches!(
            canonicalize(&raw(&[(2, 2), (1, 3)])),
            Err(Error::NotPhiMinimal(_))
        ));
        assert_eq!(
            RawMonoid::new(vec![vec2(0, 0), vec2(1, 1)]),
            Err(Error::ZeroGenerator)
        );
        assert!(matches!(
            RawMonoid::new(vec![vec2(1, 1), vec2(1, 1)]),
            Err(Error::DuplicateGenerator(_))
        ));
        assert_eq!(
            RawMonoid::new(vec![vec2(1, 1)]),
            Err(Error::EmbeddingDimension(1))
        );
    }

    #[test]
    fn star_examples() {
        assert!(check_star(&CanonicalMonoid3::new(1, 2, 3, 5).unwrap()));
        assert!(!check_star(&CanonicalMonoid3::new(11, 10, 10, 3).unwrap()));
        assert!(check_star(&CanonicalMonoid3::new(1, 1, 2, 1).unwrap()));
    }

    #[test]
    fn star_forces_unit_d2() {
        for m in [(1, 2, 3, 5), (1, 1, 2, 1), (3, 5, 2, 3)] {
            let m = CanonicalMonoid3::new(m.0, m.1, m.2, m.3).unwrap();
            assert!(m.star());
            let (_, d2) = det_divisors(&Mat2xP::from_vecs(&m.generators()).unwrap());
            assert!(d2.is_one());
            assert_eq!(generator_d2(&m), d2);
        }
        let m = CanonicalMonoid3::new(4, 1, 6, 1).unwrap();
        let (_, d2) = det_divisors(&Mat2xP::from_vecs(&m.generators()).unwrap());
        assert_eq!(generator_d2(&m), d2);
    }

    #[test]
    fn minimality_examples() {
        let ok = Canonical::Dim3(CanonicalMonoid3::new(1, 2, 3, 5).unwrap());
        assert!(validate_minimal_generation(&ok));
        let redundant = canonicalize(&raw(&[(0, 1), (1, 2), (1, 1)])).unwrap();
        assert!(!validate_minimal_generation(&redundant));
        assert_eq!(redundant_generator(&redundant), Some(vec2(1, 2)));
        let two = Canonical::Dim2(CanonicalMonoid2::new(5, 3).unwrap());
        assert!(validate_minimal_generation(&two));
    }
}
