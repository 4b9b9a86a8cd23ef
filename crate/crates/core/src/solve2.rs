//! Embedding dimension 2: `s = (x, y)` lies in `<(0,1), (a,b)>` exactly when
//! `x/y <= a/b` and `a | x`, and then its factorization is unique.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::monoid::CanonicalMonoid2;
use crate::ratq::{ExtRat, Vec2};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason2 {
    PhiOutOfRange,
    DivisibilityFails,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership2 {
    Member(Factorization),
    NotMember(Reason2),
}

pub fn member2(m: &CanonicalMonoid2, s: &Vec2) -> Membership2 {
    let (a, b) = (m.a(), m.b());
    let (x, y) = (s.x(), s.y());
    if (x * b).cmp(&(y * a)) == Ordering::Greater {
        return Membership2::NotMember(Reason2::PhiOutOfRange);
    }
    let (k, rem) = x.div_rem(a);
    if !rem.is_zero() {
        return Membership2::NotMember(Reason2::DivisibilityFails);
    }
    let ones = y - &k * b;
    debug_assert!(ones >= BigInt::zero());
    let f = Factorization::new(&m.generators(), vec![ones, k], s)
        .expect("closed form is a factorization");
    Membership2::Member(f)
}

/// Always 1 on nonzero members: the factorization is unique.
pub fn elasticity2(m: &CanonicalMonoid2, s: &Vec2) -> Result<ExtRat> {
    if s.is_zero() {
        return Err(Error::ZeroElement);
    }
    match member2(m, s) {
        Membership2::Member(_) => Ok(ExtRat::one()),
        Membership2::NotMember(_) => Err(Error::NotMember),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratq::vec2;

    fn mults(v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&k| BigInt::from(k)).collect()
    }

    #[test]
    fn member2_examples() {
        let m = CanonicalMonoid2::new(3, 2).unwrap();
        match member2(&m, &vec2(6, 5)) {
            Membership2::Member(f) => {
                assert_eq!(f.mults(), mults(&[1, 2]).as_slice());
                assert_eq!(f.length(), &BigInt::from(3));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            member2(&m, &vec2(6, 3)),
            Membership2::NotMember(Reason2::PhiOutOfRange)
        );
        assert_eq!(
            member2(&m, &vec2(4, 9)),
            Membership2::NotMember(Reason2::DivisibilityFails)
        );
        match member2(&m, &vec2(0, 7)) {
            Membership2::Member(f) => assert_eq!(f.mults(), mults(&[7, 0]).as_slice()),
            other => panic!("{other:?}"),
        }
        match member2(&m, &Vec2::zero()) {
            Membership2::Member(f) => assert_eq!(f.mults(), mults(&[0, 0]).as_slice()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn vertical_generator() {
        // <(0,1),(1,0)> is the whole quadrant
        let m = CanonicalMonoid2::new(1, 0).unwrap();
        assert!(matches!(member2(&m, &vec2(5, 0)), Membership2::Member(_)));
        assert!(matches!(member2(&m, &vec2(5, 2)), Membership2::Member(_)));
    }

    #[test]
    fn elasticity2_examples() {
        let m = CanonicalMonoid2::new(3, 2).unwrap();
        assert_eq!(elasticity2(&m, &vec2(6, 5)).unwrap(), ExtRat::one());
        assert_eq!(elasticity2(&m, &vec2(0, 7)).unwrap(), ExtRat::one());
        assert_eq!(elasticity2(&m, &Vec2::zero()), Err(Error::ZeroElement));
        assert_eq!(elasticity2(&m, &vec2(4, 9)), Err(Error::NotMember));
    }
}
